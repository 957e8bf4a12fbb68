#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace chevlab {

// Dense square matrix over the integers. Used only while deriving
// representation data and structure constants, never in hot loops.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t dim) : dim_(dim), a_(dim * dim, 0) {}

    static IntMatrix identity(std::size_t dim)
    {
        IntMatrix m(dim);
        for (std::size_t i = 0; i < dim; ++i)
            m(i, i) = 1;
        return m;
    }

    std::size_t dim() const { return dim_; }

    std::int64_t& operator()(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }
    std::int64_t operator()(std::size_t r, std::size_t c) const { return a_[r * dim_ + c]; }

    bool is_zero() const
    {
        for (auto v : a_)
            if (v != 0)
                return false;
        return true;
    }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y)
    {
        IntMatrix r(x.dim_);
        for (std::size_t i = 0; i < x.dim_; ++i)
            for (std::size_t k = 0; k < x.dim_; ++k) {
                auto v = x(i, k);
                if (v == 0)
                    continue;
                for (std::size_t j = 0; j < x.dim_; ++j)
                    r(i, j) += v * y(k, j);
            }
        return r;
    }

    friend IntMatrix operator+(IntMatrix x, const IntMatrix& y)
    {
        for (std::size_t i = 0; i < x.a_.size(); ++i)
            x.a_[i] += y.a_[i];
        return x;
    }

    friend IntMatrix operator-(IntMatrix x, const IntMatrix& y)
    {
        for (std::size_t i = 0; i < x.a_.size(); ++i)
            x.a_[i] -= y.a_[i];
        return x;
    }

    IntMatrix scaled(std::int64_t c) const
    {
        IntMatrix r = *this;
        for (auto& v : r.a_)
            v *= c;
        return r;
    }

    // Exact division; throws if some entry is not divisible.
    IntMatrix divided(std::int64_t c) const
    {
        IntMatrix r = *this;
        for (auto& v : r.a_) {
            if (v % c != 0)
                throw std::domain_error("IntMatrix: non-integral divided power");
            v /= c;
        }
        return r;
    }

private:
    std::size_t dim_ = 0;
    std::vector<std::int64_t> a_;
};

inline IntMatrix bracket(const IntMatrix& x, const IntMatrix& y) { return x * y - y * x; }

// Divided powers E^k/k! of a nilpotent matrix, k = 1 .. until zero.
// x(t) = 1 + sum_k t^k * result[k-1].
inline std::vector<IntMatrix> divided_powers(const IntMatrix& e)
{
    std::vector<IntMatrix> out;
    IntMatrix p = e;
    std::int64_t k = 1;
    while (!p.is_zero()) {
        if (k > static_cast<std::int64_t>(e.dim()))
            throw std::domain_error("divided_powers: matrix is not nilpotent");
        out.push_back(p);
        ++k;
        p = (p * e).divided(k);
    }
    return out;
}

// exp(t*E) evaluated over the integers.
inline IntMatrix int_exp(const std::vector<IntMatrix>& powers, std::int64_t t, std::size_t dim)
{
    IntMatrix r = IntMatrix::identity(dim);
    std::int64_t tk = 1;
    for (const auto& p : powers) {
        tk *= t;
        r = r + p.scaled(tk);
    }
    return r;
}

}  // namespace chevlab
