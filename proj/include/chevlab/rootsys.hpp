#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "int_matrix.hpp"
#include "kinds.hpp"
#include "rep_data.hpp"

namespace chevlab {

enum class LengthClass { short_root, long_root };

/// A root, written in the basis of simple roots. Unused trailing
/// coordinates (rank 2) are zero.
struct Root {
    Coords coords{};
    LengthClass length = LengthClass::long_root;

    Root operator-() const
    {
        Root r = *this;
        for (auto& c : r.coords)
            c = -c;
        return r;
    }

    int height() const { return coords[0] + coords[1] + coords[2]; }
    bool positive() const { return coords[0] >= 0 && coords[1] >= 0 && coords[2] >= 0; }

    friend bool operator==(const Root& a, const Root& b) { return a.coords == b.coords; }
};

inline std::string format_coords(const Coords& c, int rank)
{
    std::ostringstream os;
    os << '(';
    for (int k = 0; k < rank; ++k) {
        if (k)
            os << ',';
        os << c[static_cast<std::size_t>(k)];
    }
    os << ')';
    return os.str();
}

/// One factor x_{i a + j b}(N a^i b^j) of the Chevalley commutator formula.
struct CommutatorTerm {
    int i;
    int j;
    std::size_t root;  // index into RootSystem::roots()
    int constant;
};

enum class Rank2Type { A1xA1, A2, C2, G2 };

inline std::string_view to_string(Rank2Type t)
{
    switch (t) {
    case Rank2Type::A1xA1: return "A1xA1";
    case Rank2Type::A2: return "A2";
    case Rank2Type::C2: return "C2";
    case Rank2Type::G2: return "G2";
    }
    return "?";
}

/// Root system of type A2, A3, C2 or G2 together with the structure
/// constants of the commutator formula. The sign of every constant is the
/// one realised by the frozen matrices in rep_data.hpp; factors of a
/// commutator are ordered by increasing height of i a + j b (ties by i+j,
/// then by i). Immutable after construction.
class RootSystem {
public:
    explicit RootSystem(RootKind kind) : kind_(kind), rank_(rank_of(kind))
    {
        build_cartan();
        build_roots();
        build_constants();
    }

    RootKind kind() const { return kind_; }
    int rank() const { return rank_; }
    const std::vector<Root>& roots() const { return roots_; }
    std::size_t size() const { return roots_.size(); }
    const Root& root(std::size_t idx) const { return roots_.at(idx); }

    /// Indices of positive roots, increasing height.
    const std::vector<std::size_t>& positive() const { return positive_; }
    const std::vector<std::size_t>& simple() const { return simple_; }
    int cartan(int i, int j) const { return cartan_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

    std::optional<std::size_t> index_of(const Coords& c) const
    {
        for (std::size_t k = 0; k < roots_.size(); ++k)
            if (roots_[k].coords == c)
                return k;
        return std::nullopt;
    }

    std::size_t index_of(const Root& r) const
    {
        auto k = index_of(r.coords);
        if (!k)
            throw std::domain_error("RootSystem: not a root " + format(r));
        return *k;
    }

    std::size_t negative_of(std::size_t idx) const { return index_of(-roots_.at(idx)); }

    std::string format(const Root& r) const { return format_coords(r.coords, rank_); }
    std::string format(std::size_t idx) const { return format(roots_.at(idx)); }

    /// a + b if it is a root.
    std::optional<Root> root_sum(const Root& a, const Root& b) const
    {
        Coords s{};
        for (std::size_t k = 0; k < 3; ++k)
            s[k] = a.coords[k] + b.coords[k];
        auto idx = index_of(s);
        if (!idx)
            return std::nullopt;
        return roots_[*idx];
    }

    /// Factors of [x_a(s), x_b(t)] in their fixed order. Empty when the
    /// roots commute. Domain error for a = -b.
    const std::vector<CommutatorTerm>& commutator_terms(std::size_t a, std::size_t b) const
    {
        if (negative_of(a) == b)
            throw std::domain_error("commutator_terms: a = -b is outside the commutator formula");
        return terms_[a * roots_.size() + b];
    }

    int structure_constant(const Root& a, const Root& b, int i, int j) const
    {
        if (i < 1 || j < 1)
            throw std::domain_error("structure_constant: i, j must be positive");
        const auto ia = index_of(a);
        const auto ib = index_of(b);
        if (ia == negative_of(ib))
            throw std::domain_error("structure_constant: a = -b");
        for (const auto& t : terms_[ia * roots_.size() + ib])
            if (t.i == i && t.j == j)
                return t.constant;
        throw std::domain_error("structure_constant: i a + j b is not a root");
    }

    /// Type of the subsystem of roots in the integer span of a and b.
    Rank2Type rank2_subsystem(const Root& a, const Root& b) const
    {
        if (a == b || a == -b)
            throw std::domain_error("rank2_subsystem: a = +-b");
        std::size_t count = 0;
        for (const auto& r : roots_)
            if (in_integer_span(r.coords, a.coords, b.coords))
                ++count;
        switch (count) {
        case 4: return Rank2Type::A1xA1;
        case 6: return Rank2Type::A2;
        case 8: return Rank2Type::C2;
        case 12: return Rank2Type::G2;
        default: throw std::logic_error("rank2_subsystem: unexpected subsystem size");
        }
    }

private:
    static bool in_integer_span(const Coords& r, const Coords& a, const Coords& b)
    {
        // Solve r = s a + t b using a non-vanishing 2x2 minor, then verify.
        for (std::size_t p = 0; p < 3; ++p)
            for (std::size_t q = p + 1; q < 3; ++q) {
                const long det = static_cast<long>(a[p]) * b[q] - static_cast<long>(a[q]) * b[p];
                if (det == 0)
                    continue;
                const long sn = static_cast<long>(r[p]) * b[q] - static_cast<long>(r[q]) * b[p];
                const long tn = static_cast<long>(a[p]) * r[q] - static_cast<long>(a[q]) * r[p];
                if (sn % det != 0 || tn % det != 0)
                    return false;
                const long s = sn / det, t = tn / det;
                for (std::size_t k = 0; k < 3; ++k)
                    if (s * a[k] + t * b[k] != r[k])
                        return false;
                return true;
            }
        return false;
    }

    void build_cartan()
    {
        cartan_ = {};
        for (int i = 0; i < rank_; ++i)
            cartan_[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
        switch (kind_) {
        case RootKind::A2:
            cartan_[0][1] = cartan_[1][0] = -1;
            break;
        case RootKind::A3:
            cartan_[0][1] = cartan_[1][0] = cartan_[1][2] = cartan_[2][1] = -1;
            break;
        case RootKind::C2:  // a1 short, a2 long
            cartan_[0][1] = -2;
            cartan_[1][0] = -1;
            break;
        case RootKind::G2:  // a1 short, a2 long
            cartan_[0][1] = -3;
            cartan_[1][0] = -1;
            break;
        }
    }

    // Closure of the simple roots under the simple reflections
    // s_i(b) = b - <b, a_i^v> a_i, with <b, a_i^v> = sum_j b_j cartan(i, j).
    void build_roots()
    {
        const bool laced = kind_ == RootKind::A2 || kind_ == RootKind::A3;
        std::vector<Root> found;
        for (int i = 0; i < rank_; ++i) {
            Root r;
            r.coords[static_cast<std::size_t>(i)] = 1;
            r.length = (laced || i == 1) ? LengthClass::long_root : LengthClass::short_root;
            found.push_back(r);
        }
        for (std::size_t pos = 0; pos < found.size(); ++pos) {
            for (int i = 0; i < rank_; ++i) {
                const Root b = found[pos];
                int pairing = 0;
                for (int j = 0; j < rank_; ++j)
                    pairing += b.coords[static_cast<std::size_t>(j)] * cartan(i, j);
                Root img = b;
                img.coords[static_cast<std::size_t>(i)] -= pairing;
                if (std::find(found.begin(), found.end(), img) == found.end())
                    found.push_back(img);
            }
        }
        std::vector<Root> pos;
        for (const auto& r : found)
            if (r.positive())
                pos.push_back(r);
        std::sort(pos.begin(), pos.end(), [](const Root& x, const Root& y) {
            if (x.height() != y.height())
                return x.height() < y.height();
            return x.coords > y.coords;
        });
        roots_ = pos;
        for (const auto& r : pos)
            roots_.push_back(-r);
        if (roots_.size() != found.size())
            throw std::logic_error("RootSystem: positivity split failed");
        for (std::size_t k = 0; k < pos.size(); ++k) {
            positive_.push_back(k);
            if (pos[k].height() == 1)
                simple_.push_back(k);
        }
    }

    // Derive N_{a b i j} from the integer matrices: factor the commutator
    // [x_a(1), x_b(1)] over Z layer by layer in the grading i + j.
    void build_constants()
    {
        const std::size_t n = roots_.size();
        const auto dim = static_cast<std::size_t>(dim_of(kind_));
        std::vector<std::vector<IntMatrix>> powers(n);
        std::vector<IntMatrix> linear(n);
        for (std::size_t k = 0; k < n; ++k) {
            linear[k] = root_vector_matrix(kind_, roots_[k].coords);
            powers[k] = divided_powers(linear[k]);
        }
        auto x = [&](std::size_t k, std::int64_t t) { return int_exp(powers[k], t, dim); };

        terms_.assign(n * n, {});
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                if (roots_[a] == -roots_[b] || a == b)
                    continue;
                std::vector<CommutatorTerm> ts;
                for (int i = 1; i <= 3; ++i)
                    for (int j = 1; j <= 3; ++j) {
                        Coords c{};
                        for (std::size_t q = 0; q < 3; ++q)
                            c[q] = i * roots_[a].coords[q] + j * roots_[b].coords[q];
                        if (auto idx = index_of(c))
                            ts.push_back({i, j, *idx, 0});
                    }
                std::sort(ts.begin(), ts.end(), [&](const CommutatorTerm& u, const CommutatorTerm& v) {
                    const int hu = roots_[u.root].height(), hv = roots_[v.root].height();
                    if (hu != hv)
                        return hu < hv;
                    if (u.i + u.j != v.i + v.j)
                        return u.i + u.j < v.i + v.j;
                    return u.i < v.i;
                });
                const IntMatrix target = x(a, 1) * x(b, 1) * x(a, -1) * x(b, -1);
                auto product = [&]() {
                    IntMatrix p = IntMatrix::identity(dim);
                    for (const auto& t : ts)
                        p = p * x(t.root, t.constant);
                    return p;
                };
                for (int grade = 2; grade <= 6; ++grade) {
                    IntMatrix inv_p = IntMatrix::identity(dim);
                    for (auto it = ts.rbegin(); it != ts.rend(); ++it)
                        inv_p = inv_p * x(it->root, -it->constant);
                    const IntMatrix rest = inv_p * target;
                    for (auto& t : ts) {
                        if (t.i + t.j != grade)
                            continue;
                        const auto [r, c] = probe_position(linear[t.root]);
                        t.constant = static_cast<int>(rest(r, c) * linear[t.root](r, c));
                    }
                }
                if (!(product() == target))
                    throw std::logic_error("RootSystem: commutator formula does not factor");
                terms_[a * n + b] = std::move(ts);
            }
    }

    // An entry of E equal to +-1; present for every root in every
    // representation used here.
    static std::pair<std::size_t, std::size_t> probe_position(const IntMatrix& e)
    {
        for (std::size_t r = 0; r < e.dim(); ++r)
            for (std::size_t c = 0; c < e.dim(); ++c)
                if (e(r, c) == 1 || e(r, c) == -1)
                    return {r, c};
        throw std::logic_error("RootSystem: root matrix has no unit entry");
    }

    RootKind kind_;
    int rank_;
    std::array<std::array<int, 3>, 3> cartan_{};
    std::vector<Root> roots_;
    std::vector<std::size_t> positive_;
    std::vector<std::size_t> simple_;
    std::vector<std::vector<CommutatorTerm>> terms_;
};

inline std::shared_ptr<const RootSystem> roots_of(RootKind kind)
{
    return std::make_shared<const RootSystem>(kind);
}

}  // namespace chevlab
