#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rings.hpp"

namespace chevlab {

/// N x N matrix over a FiniteRing, one residue per byte, row major. The ring
/// itself is not stored; arithmetic goes through a MatrixArith.
template <std::size_t N>
struct Mat {
    static constexpr std::size_t dim = N;
    std::array<Elem, N * N> a{};

    Elem& operator()(std::size_t r, std::size_t c) { return a[r * N + c]; }
    Elem operator()(std::size_t r, std::size_t c) const { return a[r * N + c]; }

    friend bool operator==(const Mat&, const Mat&) = default;

    std::uint64_t hash() const
    {
        // 64-bit FNV-1a over 8-byte words, finished with a murmur mix.
        std::uint64_t h = 0xcbf29ce484222325ull;
        std::size_t i = 0;
        for (; i + 8 <= a.size(); i += 8) {
            std::uint64_t w;
            std::memcpy(&w, a.data() + i, 8);
            h = (h ^ w) * 0x100000001b3ull;
        }
        for (; i < a.size(); ++i)
            h = (h ^ a[i]) * 0x100000001b3ull;
        h ^= h >> 33;
        h *= 0xff51afd7ed558ccdull;
        h ^= h >> 33;
        h *= 0xc4ceb9fe1a85ec53ull;
        h ^= h >> 33;
        return h;
    }
};

template <std::size_t N>
struct MatHash {
    std::size_t operator()(const Mat<N>& m) const { return static_cast<std::size_t>(m.hash()); }
};

/// Matrix arithmetic over one ring. Z/n goes through integer
/// accumulation; other rings through the ring's tables.
template <std::size_t N>
class MatrixArith {
public:
    explicit MatrixArith(RingPtr ring) : ring_(std::move(ring)), modulus_(static_cast<unsigned>(ring_->modulus())) {}

    const RingPtr& ring() const { return ring_; }

    Mat<N> identity() const
    {
        Mat<N> m;
        for (std::size_t i = 0; i < N; ++i)
            m(i, i) = ring_->one();
        return m;
    }

    Mat<N> mul(const Mat<N>& x, const Mat<N>& y) const
    {
        Mat<N> r;
        if (modulus_ != 0) {
            for (std::size_t i = 0; i < N; ++i)
                for (std::size_t j = 0; j < N; ++j) {
                    unsigned s = 0;
                    for (std::size_t k = 0; k < N; ++k)
                        s += static_cast<unsigned>(x(i, k)) * y(k, j);
                    r(i, j) = static_cast<Elem>(s % modulus_);
                }
        } else {
            const auto& R = *ring_;
            for (std::size_t i = 0; i < N; ++i)
                for (std::size_t j = 0; j < N; ++j) {
                    Elem s = 0;
                    for (std::size_t k = 0; k < N; ++k)
                        s = R.add(s, R.mul(x(i, k), y(k, j)));
                    r(i, j) = s;
                }
        }
        return r;
    }

    /// Inverse of an element of finite order: g^{-1} = g^{k-1} with g^k = 1.
    Mat<N> inverse(const Mat<N>& g, std::size_t max_order = 1u << 22) const
    {
        const Mat<N> e = identity();
        Mat<N> prev = e;
        Mat<N> p = g;
        for (std::size_t k = 1; k <= max_order; ++k) {
            if (p == e)
                return prev;
            prev = p;
            p = mul(p, g);
        }
        throw std::domain_error("inverse: element order exceeds limit");
    }

    Mat<N> conjugate(const Mat<N>& c, const Mat<N>& g, const Mat<N>& c_inv) const { return mul(mul(c, g), c_inv); }

    /// [x, y] = x y x^-1 y^-1.
    Mat<N> commutator(const Mat<N>& x, const Mat<N>& y, const Mat<N>& x_inv, const Mat<N>& y_inv) const
    {
        return mul(mul(x, y), mul(x_inv, y_inv));
    }
    Mat<N> commutator(const Mat<N>& x, const Mat<N>& y) const { return commutator(x, y, inverse(x), inverse(y)); }

    /// Determinant by the Leibniz expansion over the ring (N <= 7).
    Elem det(const Mat<N>& m) const
    {
        std::array<std::size_t, N> perm;
        for (std::size_t i = 0; i < N; ++i)
            perm[i] = i;
        const auto& R = *ring_;
        Elem total = 0;
        // Heap's algorithm with sign tracking.
        std::array<std::size_t, N> c{};
        bool odd = false;
        auto term = [&]() {
            Elem t = R.one();
            for (std::size_t i = 0; i < N; ++i)
                t = R.mul(t, m(i, perm[i]));
            total = odd ? R.sub(total, t) : R.add(total, t);
        };
        term();
        std::size_t i = 0;
        while (i < N) {
            if (c[i] < i) {
                if (i % 2 == 0)
                    std::swap(perm[0], perm[i]);
                else
                    std::swap(perm[c[i]], perm[i]);
                odd = !odd;
                term();
                ++c[i];
                i = 0;
            } else {
                c[i] = 0;
                ++i;
            }
        }
        return total;
    }

    bool is_upper_unitriangular(const Mat<N>& m) const
    {
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j <= i; ++j)
                if (m(i, j) != (i == j ? ring_->one() : Elem{0}))
                    return false;
        return true;
    }

    /// True when every entry of m - 1 lies in the ideal.
    bool in_level(const Mat<N>& m, const IdealHandle& ideal) const
    {
        const auto& R = *ring_;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) {
                const Elem e = i == j ? R.sub(m(i, j), R.one()) : m(i, j);
                if (!ideal.contains(e))
                    return false;
            }
        return true;
    }

    /// Ideal generated by the entries of m - 1.
    IdealHandle level(const Mat<N>& m) const
    {
        const auto& R = *ring_;
        std::uint64_t mask = 1u;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) {
                const Elem e = i == j ? R.sub(m(i, j), R.one()) : m(i, j);
                if (e != 0 && !(mask >> e & 1u))
                    mask = R.ideal_join(mask, R.principal_mask(e));
            }
        return IdealHandle(ring_, mask);
    }

    /// Entrywise image under a ring map.
    Mat<N> map_entries(const Mat<N>& m, const QuotientMap& q) const
    {
        Mat<N> r;
        for (std::size_t i = 0; i < N * N; ++i)
            r.a[i] = q(m.a[i]);
        return r;
    }

    std::vector<std::vector<int>> to_rows(const Mat<N>& m) const
    {
        std::vector<std::vector<int>> rows(N, std::vector<int>(N));
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j)
                rows[i][j] = m(i, j);
        return rows;
    }

    std::string format(const Mat<N>& m) const
    {
        std::string s = "[";
        for (std::size_t i = 0; i < N; ++i) {
            if (i)
                s += "; ";
            for (std::size_t j = 0; j < N; ++j) {
                if (j)
                    s += ' ';
                s += ring_->format(m(i, j));
            }
        }
        return s + "]";
    }

private:
    RingPtr ring_;
    unsigned modulus_;
};

}  // namespace chevlab
