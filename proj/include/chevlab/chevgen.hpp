#pragma once

#include <cstddef>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "int_matrix.hpp"
#include "matrix.hpp"
#include "report.hpp"
#include "rings.hpp"
#include "rootsys.hpp"

namespace chevlab {

/// The fixed faithful representation of the Chevalley group of one type
/// over one ring: A_l in SL_{l+1}, C2 in Sp_4, G2 in dimension 7.
/// All root elements x_a(s) are tabulated on construction.
template <std::size_t N>
class Representation {
public:
    Representation(std::shared_ptr<const RootSystem> system, RingPtr ring)
        : system_(std::move(system)), ring_(std::move(ring)), arith_(ring_)
    {
        if (static_cast<std::size_t>(dim_of(system_->kind())) != N)
            throw std::invalid_argument("Representation: dimension does not match root system");
        const auto& R = *ring_;
        const std::size_t q = static_cast<std::size_t>(R.size());
        table_.resize(system_->size() * q);
        probes_.resize(system_->size());
        for (std::size_t k = 0; k < system_->size(); ++k) {
            const IntMatrix e = root_vector_matrix(system_->kind(), system_->root(k).coords);
            const auto powers = divided_powers(e);
            for (std::size_t s = 0; s < q; ++s) {
                Mat<N> m = arith_.identity();
                Elem sk = R.one();
                for (const auto& p : powers) {
                    sk = R.mul(sk, static_cast<Elem>(s));
                    for (std::size_t r = 0; r < N; ++r)
                        for (std::size_t c = 0; c < N; ++c)
                            if (p(r, c) != 0)
                                m(r, c) = R.add(m(r, c), R.mul(R.from_int(p(r, c)), sk));
                }
                table_[k * q + s] = m;
            }
            probes_[k] = find_probe(e);
        }
    }

    const RootSystem& system() const { return *system_; }
    const std::shared_ptr<const RootSystem>& system_ptr() const { return system_; }
    const RingPtr& ring() const { return ring_; }
    const MatrixArith<N>& arith() const { return arith_; }
    Mat<N> identity() const { return arith_.identity(); }
    Mat<N> mul(const Mat<N>& a, const Mat<N>& b) const { return arith_.mul(a, b); }

    std::string name() const { return std::string(to_string(system_->kind())) + " over " + ring_->name(); }

    /// Root unipotent x_a(s).
    const Mat<N>& x(std::size_t root, Elem s) const
    {
        return table_[root * static_cast<std::size_t>(ring_->size()) + s];
    }
    const Mat<N>& x(const Root& a, Elem s) const { return x(system_->index_of(a), s); }

    /// z_a(s, t) = x_{-a}(t) x_a(s) x_{-a}(-t).
    Mat<N> z(std::size_t root, Elem s, Elem t) const
    {
        const std::size_t neg = system_->negative_of(root);
        return mul(mul(x(neg, t), x(root, s)), x(neg, ring_->neg(t)));
    }

    /// w_a(u) = x_a(u) x_{-a}(-u^-1) x_a(u).
    Mat<N> w(std::size_t root, Elem u) const
    {
        const auto inv = ring_->inverse(u);
        if (!inv)
            throw std::domain_error("w: " + ring_->format(u) + " is not a unit");
        const std::size_t neg = system_->negative_of(root);
        return mul(mul(x(root, u), x(neg, ring_->neg(*inv))), x(root, u));
    }

    /// h_a(u) = w_a(u) w_a(1)^-1, and w_a(1)^-1 = w_a(-1).
    Mat<N> h(std::size_t root, Elem u) const
    {
        return mul(w(root, u), w(root, ring_->neg(ring_->one())));
    }

    /// Position (row, col) where the linear term of x_a has coefficient +-1,
    /// and that coefficient. The entry of x_a(s) there is +-s.
    struct Probe {
        std::size_t row;
        std::size_t col;
        int sign;
    };
    const Probe& probe(std::size_t root) const { return probes_[root]; }

private:
    static Probe find_probe(const IntMatrix& e)
    {
        for (std::size_t r = 0; r < N; ++r)
            for (std::size_t c = 0; c < N; ++c)
                if (e(r, c) == 1 || e(r, c) == -1)
                    return {r, c, static_cast<int>(e(r, c))};
        throw std::logic_error("Representation: root matrix has no unit entry");
    }

    std::shared_ptr<const RootSystem> system_;
    RingPtr ring_;
    MatrixArith<N> arith_;
    std::vector<Mat<N>> table_;
    std::vector<Probe> probes_;
};

/// Exhaustive check of additivity x_a(s+t) = x_a(s) x_a(t) and of the
/// commutator formula for all a != +-b and all s, t in the ring.
template <std::size_t N>
VerdictReport validate_relations(const Representation<N>& rep)
{
    VerdictReport rep_out;
    rep_out.claim = "relations";
    rep_out.phi = std::string(to_string(rep.system().kind()));
    rep_out.ring = rep.ring()->name();
    rep_out.verdict = Verdict::holds;
    const auto& R = *rep.ring();
    const auto& sys = rep.system();
    const auto elems = R.elements();
    std::uint64_t r1 = 0, r2 = 0;

    for (std::size_t a = 0; a < sys.size(); ++a)
        for (Elem s : elems)
            for (Elem t : elems) {
                ++r1;
                if (!(rep.x(a, R.add(s, t)) == rep.mul(rep.x(a, s), rep.x(a, t)))) {
                    rep_out.fail("R1 fails for root " + sys.format(a) + " s=" + R.format(s) + " t=" + R.format(t),
                                 rep.arith().to_rows(rep.x(a, R.add(s, t))));
                    goto done;
                }
            }

    for (std::size_t a = 0; a < sys.size(); ++a)
        for (std::size_t b = 0; b < sys.size(); ++b) {
            if (a == b || sys.negative_of(a) == b)
                continue;
            const auto& terms = sys.commutator_terms(a, b);
            for (Elem s : elems)
                for (Elem t : elems) {
                    ++r2;
                    const Mat<N> lhs = rep.mul(rep.mul(rep.x(a, s), rep.x(b, t)),
                                               rep.mul(rep.x(a, R.neg(s)), rep.x(b, R.neg(t))));
                    Mat<N> rhs = rep.identity();
                    for (const auto& term : terms) {
                        const Elem c = R.mul(R.from_int(term.constant), R.mul(R.pow(s, term.i), R.pow(t, term.j)));
                        rhs = rep.mul(rhs, rep.x(term.root, c));
                    }
                    if (!(lhs == rhs)) {
                        rep_out.fail("R2 fails for roots " + sys.format(a) + ", " + sys.format(b) +
                                         " s=" + R.format(s) + " t=" + R.format(t),
                                     rep.arith().to_rows(lhs));
                        goto done;
                    }
                }
        }
done:
    rep_out.set_size("R1_checks", r1);
    rep_out.set_size("R2_checks", r2);
    return rep_out;
}

/// Where a generator came from.
struct Provenance {
    std::string family;
    std::size_t root;
    std::vector<Elem> params;
};

template <std::size_t N>
struct LabeledElement {
    Mat<N> m;
    std::vector<Provenance> labels;
};

/// Generator list with duplicates merged; first occurrence fixes the order.
template <std::size_t N>
class GeneratorList {
public:
    void add(const Mat<N>& m, Provenance p)
    {
        auto [it, inserted] = index_.try_emplace(m, items_.size());
        if (inserted)
            items_.push_back({m, {}});
        items_[it->second].labels.push_back(std::move(p));
    }

    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    const std::vector<LabeledElement<N>>& items() const { return items_; }
    const LabeledElement<N>& operator[](std::size_t k) const { return items_[k]; }
    bool contains(const Mat<N>& m) const { return index_.count(m) != 0; }

    std::vector<Mat<N>> matrices() const
    {
        std::vector<Mat<N>> v;
        v.reserve(items_.size());
        for (const auto& it : items_)
            v.push_back(it.m);
        return v;
    }

    void append(const GeneratorList& other)
    {
        for (const auto& it : other.items_)
            for (const auto& l : it.labels)
                add(it.m, l);
    }

private:
    std::vector<LabeledElement<N>> items_;
    std::unordered_map<Mat<N>, std::size_t, MatHash<N>> index_;
};

namespace detail {
template <std::size_t N>
void require_rep_ring(const Representation<N>& rep, const IdealHandle& ideal)
{
    if (!(*rep.ring() == *ideal.ring()))
        throw std::domain_error("ideal does not belong to the representation's ring");
}
}  // namespace detail

/// {x_a(s) : a in Phi, s in I}.
template <std::size_t N>
GeneratorList<N> generator_set_E(const Representation<N>& rep, const IdealHandle& I)
{
    detail::require_rep_ring(rep, I);
    GeneratorList<N> out;
    for (std::size_t a = 0; a < rep.system().size(); ++a)
        for (Elem s : I.elements())
            out.add(rep.x(a, s), {"x", a, {s}});
    return out;
}

/// {x_a(s) : a positive, s in I}.
template <std::size_t N>
GeneratorList<N> generator_set_U(const Representation<N>& rep, const IdealHandle& I)
{
    detail::require_rep_ring(rep, I);
    GeneratorList<N> out;
    for (std::size_t a : rep.system().positive())
        for (Elem s : I.elements())
            out.add(rep.x(a, s), {"x", a, {s}});
    return out;
}

/// {z_a(s, t) : a in Phi, s in I, t in R}.
template <std::size_t N>
GeneratorList<N> generator_set_Z(const Representation<N>& rep, const IdealHandle& I)
{
    detail::require_rep_ring(rep, I);
    GeneratorList<N> out;
    const auto elems = rep.ring()->elements();
    for (std::size_t a = 0; a < rep.system().size(); ++a)
        for (Elem s : I.elements())
            for (Elem t : elems)
                out.add(rep.z(a, s, t), {"z", a, {s, t}});
    return out;
}

namespace detail {
// The two commutator families shared by X and Y.
template <std::size_t N>
void add_commutator_families(const Representation<N>& rep, const IdealHandle& I, const IdealHandle& J,
                             GeneratorList<N>& out)
{
    const auto& R = *rep.ring();
    const auto& A = rep.arith();
    const auto elems = R.elements();
    for (std::size_t a = 0; a < rep.system().size(); ++a) {
        const std::size_t neg = rep.system().negative_of(a);
        for (Elem s : I.elements()) {
            const Mat<N>& xs = rep.x(a, s);
            const Mat<N>& xs_inv = rep.x(a, R.neg(s));
            for (Elem u : J.elements())
                for (Elem t : elems) {
                    const Mat<N> zz = rep.z(a, u, t);
                    const Mat<N> zz_inv = rep.z(a, R.neg(u), t);
                    out.add(A.commutator(xs, zz, xs_inv, zz_inv), {"[x,z]", a, {s, u, t}});
                }
            for (Elem u : J.elements())
                out.add(A.commutator(xs, rep.x(neg, u), xs_inv, rep.x(neg, R.neg(u))), {"[x,x-]", a, {s, u}});
        }
    }
}
}  // namespace detail

/// [x_a(s), z_a(u, t)], [x_a(s), x_{-a}(u)], x_a(s u) for s in I, u in J, t in R.
template <std::size_t N>
GeneratorList<N> generator_set_X(const Representation<N>& rep, const IdealHandle& I, const IdealHandle& J)
{
    detail::require_rep_ring(rep, I);
    detail::require_rep_ring(rep, J);
    GeneratorList<N> out;
    detail::add_commutator_families(rep, I, J, out);
    const auto& R = *rep.ring();
    for (std::size_t a = 0; a < rep.system().size(); ++a)
        for (Elem s : I.elements())
            for (Elem u : J.elements())
                out.add(rep.x(a, R.mul(s, u)), {"x", a, {s, u}});
    return out;
}

/// As X, with x_a(s u) replaced by z_a(s u, t).
template <std::size_t N>
GeneratorList<N> generator_set_Y(const Representation<N>& rep, const IdealHandle& I, const IdealHandle& J)
{
    detail::require_rep_ring(rep, I);
    detail::require_rep_ring(rep, J);
    GeneratorList<N> out;
    detail::add_commutator_families(rep, I, J, out);
    const auto& R = *rep.ring();
    const auto elems = R.elements();
    for (std::size_t a = 0; a < rep.system().size(); ++a)
        for (Elem s : I.elements())
            for (Elem u : J.elements())
                for (Elem t : elems)
                    out.add(rep.z(a, R.mul(s, u), t), {"z", a, {s, u, t}});
    return out;
}

/// {h_a(u) : a simple, u a unit}.
template <std::size_t N>
GeneratorList<N> generator_set_torus(const Representation<N>& rep)
{
    GeneratorList<N> out;
    for (std::size_t a : rep.system().simple())
        for (Elem u : rep.ring()->units())
            out.add(rep.h(a, u), {"h", a, {u}});
    return out;
}

}  // namespace chevlab
