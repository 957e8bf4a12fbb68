#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdio>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chevgen.hpp"
#include "matrix.hpp"
#include "member_set.hpp"
#include "rings.hpp"

namespace chevlab {

inline constexpr std::size_t default_budget = 20'000'000;

/// Thrown when an enumeration would exceed its element budget.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(std::size_t budget, std::size_t reached, std::size_t frontier)
        : std::runtime_error("budget of " + std::to_string(budget) + " elements exceeded (reached " +
                             std::to_string(reached) + ", frontier " + std::to_string(frontier) + " cosets)"),
          budget_(budget), reached_(reached), frontier_(frontier)
    {
    }
    std::size_t budget() const { return budget_; }
    std::size_t reached() const { return reached_; }
    std::size_t frontier() const { return frontier_; }

private:
    std::size_t budget_, reached_, frontier_;
};

template <std::size_t N>
using RepPtr = std::shared_ptr<const Representation<N>>;

/// A fully enumerated subgroup together with a generating set.
/// `gens` is the list of generators that actually enlarged the group
/// during enumeration, so <gens> = members.
template <std::size_t N>
struct SubgroupSet {
    RepPtr<N> rep;
    MemberSet<N> members;
    std::vector<Mat<N>> gens;
    std::string label;

    std::size_t size() const { return members.size(); }
    bool contains(const Mat<N>& m) const { return members.contains(m); }
};

/// Incremental enumeration of <S>. Each new generator g that is not yet a
/// member extends the current group H to <H, g> by adjoining whole right
/// cosets H t (Dimino's method): a coset representative r is expanded
/// by every generator s, and H r s is added whenever r s is new. Generators
/// that are already members cost one lookup.
template <std::size_t N>
class ClosureBuilder {
public:
    ClosureBuilder(RepPtr<N> rep, std::size_t budget, std::string label = {}) : budget_(budget)
    {
        set_.rep = std::move(rep);
        set_.label = std::move(label);
        set_.members.insert(set_.rep->identity());
    }

    const SubgroupSet<N>& current() const { return set_; }
    bool contains(const Mat<N>& m) const { return set_.members.contains(m); }

    /// Adjoin one generator. Returns true if the group grew.
    bool add(const Mat<N>& g)
    {
        if (set_.members.contains(g))
            return false;
        const auto& A = set_.rep->arith();
        const std::size_t hsize = set_.members.size();
        set_.gens.push_back(g);
        std::vector<Mat<N>> reps{set_.rep->identity()};
        for (std::size_t r = 0; r < reps.size(); ++r) {
            for (std::size_t k = 0; k < set_.gens.size(); ++k) {
                const Mat<N> t = A.mul(reps[r], set_.gens[k]);
                if (set_.members.contains(t))
                    continue;
                if (set_.members.size() + hsize > budget_)
                    throw BudgetExceeded(budget_, set_.members.size(), reps.size() - r);
                for (std::size_t h = 0; h < hsize; ++h) {
                    const Mat<N> e = set_.members[h];
                    set_.members.insert(A.mul(e, t));
                }
                reps.push_back(t);
            }
        }
        return true;
    }

    void add_all(const std::vector<Mat<N>>& gs)
    {
        for (const auto& g : gs)
            add(g);
    }

    /// Enlarge until every conjugate c g c^-1 of every generator by every
    /// conjugator is a member; the result is normalised by <conjugators>.
    void close_under_conjugation(const std::vector<Mat<N>>& conj, const std::vector<Mat<N>>& conj_inv)
    {
        const auto& A = set_.rep->arith();
        for (std::size_t idx = 0; idx < set_.gens.size(); ++idx) {
            const Mat<N> g = set_.gens[idx];
            for (std::size_t c = 0; c < conj.size(); ++c)
                add(A.conjugate(conj[c], g, conj_inv[c]));
        }
    }

    SubgroupSet<N> take() { return std::move(set_); }

private:
    SubgroupSet<N> set_;
    std::size_t budget_;
};

template <std::size_t N>
std::vector<Mat<N>> inverses(const Representation<N>& rep, const std::vector<Mat<N>>& v)
{
    std::vector<Mat<N>> out;
    out.reserve(v.size());
    for (const auto& m : v)
        out.push_back(rep.arith().inverse(m));
    return out;
}

/// <gens>, exhaustively enumerated.
template <std::size_t N>
SubgroupSet<N> closure(RepPtr<N> rep, const std::vector<Mat<N>>& gens, std::size_t budget = default_budget,
                       std::string label = "closure")
{
    ClosureBuilder<N> b(std::move(rep), budget, std::move(label));
    b.add_all(gens);
    return b.take();
}

/// Smallest subgroup containing gens and normalised by every conjugator.
template <std::size_t N>
SubgroupSet<N> normal_closure(RepPtr<N> rep, const std::vector<Mat<N>>& gens, const std::vector<Mat<N>>& conjugators,
                              std::size_t budget = default_budget, std::string label = "normal closure")
{
    const auto conj_inv = inverses(*rep, conjugators);
    ClosureBuilder<N> b(rep, budget, std::move(label));
    b.add_all(gens);
    b.close_under_conjugation(conjugators, conj_inv);
    return b.take();
}

/// Normal closure of {[h, k] : h in gensH, k in gensK} under the
/// conjugators. This is [<gensH>, <gensK>] provided the conjugators
/// generate a group that contains both subgroups and normalises their
/// commutator; gensH together with gensK always qualifies.
template <std::size_t N>
SubgroupSet<N> commutator_subgroup(RepPtr<N> rep, const std::vector<Mat<N>>& gensH, const std::vector<Mat<N>>& gensK,
                                   const std::vector<Mat<N>>& conjugators, std::size_t budget = default_budget,
                                   std::string label = "commutator subgroup")
{
    const auto& A = rep->arith();
    const auto h_inv = inverses(*rep, gensH);
    const auto k_inv = inverses(*rep, gensK);
    const auto conj_inv = inverses(*rep, conjugators);
    ClosureBuilder<N> b(rep, budget, std::move(label));
    for (std::size_t p = 0; p < gensH.size(); ++p)
        for (std::size_t q = 0; q < gensK.size(); ++q)
            b.add(A.commutator(gensH[p], gensK[q], h_inv[p], k_inv[q]));
    b.close_under_conjugation(conjugators, conj_inv);
    return b.take();
}

template <std::size_t N>
std::vector<Mat<N>> concat(std::vector<Mat<N>> a, const std::vector<Mat<N>>& b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

/// Subgroup with the given member list (which must be closed); a small
/// generating set is recovered along the way.
template <std::size_t N>
SubgroupSet<N> subgroup_from_members(RepPtr<N> rep, const std::vector<Mat<N>>& members, std::string label)
{
    ClosureBuilder<N> b(std::move(rep), members.size() + 1, std::move(label));
    try {
        b.add_all(members);
    } catch (const BudgetExceeded&) {
        throw std::invalid_argument("subgroup_from_members: member list is not a group");
    }
    auto s = b.take();
    if (s.size() != members.size())
        throw std::invalid_argument("subgroup_from_members: member list is not a group");
    return s;
}

/// First generator of `sub` that is not in `super`, if any. Both are
/// groups, so none means sub <= super.
template <std::size_t N>
std::optional<Mat<N>> inclusion_witness(const SubgroupSet<N>& sub, const SubgroupSet<N>& super)
{
    for (const auto& g : sub.gens)
        if (!super.contains(g))
            return g;
    return std::nullopt;
}

template <std::size_t N>
bool is_subgroup_of(const SubgroupSet<N>& sub, const SubgroupSet<N>& super)
{
    return !inclusion_witness(sub, super).has_value();
}

template <std::size_t N>
bool same_members(const SubgroupSet<N>& a, const SubgroupSet<N>& b)
{
    return a.size() == b.size() && is_subgroup_of(a, b);
}

/// Representation over R/I together with the reduction map on entries.
template <std::size_t N>
struct Reduction {
    RepPtr<N> quotient;
    QuotientMap map;

    Mat<N> operator()(const Mat<N>& g) const { return quotient->arith().map_entries(g, map); }
};

template <std::size_t N>
Reduction<N> reduction(const Representation<N>& rep, const IdealHandle& I)
{
    auto q = quotient_map(rep.ring(), I);
    auto qrep = std::make_shared<const Representation<N>>(rep.system_ptr(), q.quotient);
    return {std::move(qrep), std::move(q)};
}

/// Image of g under R -> R/I, entrywise.
template <std::size_t N>
Mat<N> reduce(const Representation<N>& rep, const Mat<N>& g, const IdealHandle& I)
{
    return reduction(rep, I)(g);
}

/// Ideal generated by the entries of g - 1; g lies in G(R, I) iff level(g) <= I.
template <std::size_t N>
IdealHandle level(const Representation<N>& rep, const Mat<N>& g)
{
    return rep.arith().level(g);
}

/// {g in ambient : g = 1 mod I}.
template <std::size_t N>
SubgroupSet<N> congruence_subgroup(const SubgroupSet<N>& ambient, const IdealHandle& I)
{
    if (ambient.size() == 0)
        throw std::invalid_argument("congruence_subgroup: ambient group is not enumerated");
    std::vector<Mat<N>> keep;
    for (const auto& g : ambient.members)
        if (ambient.rep->arith().in_level(g, I))
            keep.push_back(g);
    return subgroup_from_members(ambient.rep, keep, "G(" + I.label() + ")");
}

/// Members commuting with every generator of the ambient group.
template <std::size_t N>
SubgroupSet<N> center(const SubgroupSet<N>& ambient)
{
    if (ambient.size() == 0)
        throw std::invalid_argument("center: ambient group is not enumerated");
    const auto& A = ambient.rep->arith();
    std::vector<Mat<N>> keep;
    for (const auto& g : ambient.members) {
        bool central = true;
        for (const auto& s : ambient.gens)
            if (!(A.mul(g, s) == A.mul(s, g))) {
                central = false;
                break;
            }
        if (central)
            keep.push_back(g);
    }
    return subgroup_from_members(ambient.rep, keep, "center");
}

/// {g in ambient : g mod I is central in G(R/I)}, where G(R/I) is
/// generated by all x_a(s) and h_a(u) over R/I.
template <std::size_t N>
SubgroupSet<N> full_congruence_subgroup(const SubgroupSet<N>& ambient, const IdealHandle& I)
{
    if (ambient.size() == 0)
        throw std::invalid_argument("full_congruence_subgroup: ambient group is not enumerated");
    const auto red = reduction(*ambient.rep, I);
    const auto& Q = *red.quotient;
    std::vector<Mat<N>> qgens = generator_set_E(Q, IdealHandle::unit(Q.ring())).matrices();
    const auto torus = generator_set_torus(Q).matrices();
    qgens.insert(qgens.end(), torus.begin(), torus.end());
    std::vector<Mat<N>> keep;
    for (const auto& g : ambient.members) {
        const Mat<N> r = red(g);
        bool central = true;
        for (const auto& s : qgens)
            if (!(Q.mul(r, s) == Q.mul(s, r))) {
                central = false;
                break;
            }
        if (central)
            keep.push_back(g);
    }
    return subgroup_from_members(ambient.rep, keep, "C(" + I.label() + ")");
}

/// Coefficients u_a with u = prod x_a(u_a) over the given positive roots,
/// in the given order. The coefficients are found one height layer at a
/// time: if v is the product with the layers below h filled in, then
/// v^-1 u has no factors below height h and the height-h coefficients can
/// be read off linear entries.
template <std::size_t N>
std::vector<std::pair<std::size_t, Elem>> factor_unipotent(const Representation<N>& rep, const Mat<N>& u,
                                                           const std::vector<std::size_t>& order)
{
    const auto& A = rep.arith();
    const auto& R = *rep.ring();
    const auto& sys = rep.system();
    if (!A.is_upper_unitriangular(u))
        throw std::domain_error("factor_unipotent: matrix is not upper unitriangular");
    std::vector<std::pair<std::size_t, Elem>> coeffs;
    int max_height = 0;
    for (std::size_t a : order) {
        if (!sys.root(a).positive())
            throw std::domain_error("factor_unipotent: order contains a negative root");
        coeffs.emplace_back(a, Elem{0});
        max_height = std::max(max_height, sys.root(a).height());
    }
    auto product = [&]() {
        Mat<N> p = rep.identity();
        for (const auto& [a, c] : coeffs)
            p = A.mul(p, rep.x(a, c));
        return p;
    };
    auto product_inverse = [&]() {
        Mat<N> p = rep.identity();
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
            p = A.mul(p, rep.x(it->first, R.neg(it->second)));
        return p;
    };
    for (int h = 1; h <= max_height; ++h) {
        const Mat<N> rest = A.mul(product_inverse(), u);
        for (auto& [a, c] : coeffs) {
            if (sys.root(a).height() != h)
                continue;
            const auto& pr = rep.probe(a);
            const Elem e = rest(pr.row, pr.col);
            c = pr.sign > 0 ? e : R.neg(e);
        }
    }
    if (!(product() == u))
        throw std::domain_error("factor_unipotent: matrix is not in U for this order");
    return coeffs;
}

// ---------------------------------------------------------------------
// Member-set files: 16-byte header (magic "CHVL", dim u8, ring kind u8,
// ring size u16 LE, count u64 LE), count packed matrices of dim*dim bytes,
// then a u64 LE FNV-1a checksum over everything before it.

class CorruptCache : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {
inline void put_le(std::string& out, std::uint64_t v, int bytes)
{
    for (int i = 0; i < bytes; ++i)
        out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}
inline std::uint64_t get_le(const std::string& in, std::size_t pos, int bytes)
{
    std::uint64_t v = 0;
    for (int i = 0; i < bytes; ++i)
        v |= static_cast<std::uint64_t>(static_cast<unsigned char>(in[pos + static_cast<std::size_t>(i)])) << (8 * i);
    return v;
}
inline std::uint64_t fnv1a(const char* p, std::size_t n)
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::size_t i = 0; i < n; ++i)
        h = (h ^ static_cast<unsigned char>(p[i])) * 0x100000001b3ull;
    return h;
}
}  // namespace detail

template <std::size_t N>
void dump_members(const SubgroupSet<N>& s, const std::string& path)
{
    std::string buf = "CHVL";
    buf.push_back(static_cast<char>(N));
    buf.push_back(static_cast<char>(s.rep->ring()->kind() == FiniteRing::Kind::Zmod ? 0 : 1));
    detail::put_le(buf, static_cast<std::uint64_t>(s.rep->ring()->size()), 2);
    detail::put_le(buf, s.size(), 8);
    buf.reserve(buf.size() + s.size() * N * N + 8);
    for (const auto& m : s.members)
        buf.append(reinterpret_cast<const char*>(m.a.data()), N * N);
    detail::put_le(buf, detail::fnv1a(buf.data(), buf.size()), 8);
    const std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f)
            throw std::runtime_error("cannot write " + tmp);
        f.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cannot rename " + tmp);
}

template <std::size_t N>
SubgroupSet<N> load_members(RepPtr<N> rep, const std::string& path, std::string label = "cached")
{
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot read " + path);
    std::string buf((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    if (buf.size() < 24 || buf.compare(0, 4, "CHVL") != 0)
        throw CorruptCache(path + ": bad magic");
    const std::uint64_t sum = detail::get_le(buf, buf.size() - 8, 8);
    if (sum != detail::fnv1a(buf.data(), buf.size() - 8))
        throw CorruptCache(path + ": checksum mismatch");
    const auto dim = static_cast<unsigned char>(buf[4]);
    const auto kind = static_cast<unsigned char>(buf[5]);
    const auto rsize = detail::get_le(buf, 6, 2);
    const auto count = detail::get_le(buf, 8, 8);
    const bool kind_ok = (kind == 0) == (rep->ring()->kind() == FiniteRing::Kind::Zmod);
    if (dim != N || !kind_ok || rsize != static_cast<std::uint64_t>(rep->ring()->size()))
        throw CorruptCache(path + ": header does not match representation");
    if (buf.size() != 16 + count * N * N + 8)
        throw CorruptCache(path + ": truncated");
    std::vector<Mat<N>> members(count);
    for (std::uint64_t k = 0; k < count; ++k) {
        std::memcpy(members[k].a.data(), buf.data() + 16 + k * N * N, N * N);
        for (auto e : members[k].a)
            if (e >= rep->ring()->size())
                throw CorruptCache(path + ": entry out of range");
    }
    try {
        return subgroup_from_members(std::move(rep), members, std::move(label));
    } catch (const std::invalid_argument&) {
        throw CorruptCache(path + ": member list is not a group");
    }
}

}  // namespace chevlab
