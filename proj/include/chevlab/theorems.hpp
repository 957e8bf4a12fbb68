#pragma once

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "report.hpp"
#include "workspace.hpp"

namespace chevlab {

enum class Claim { T1, T2, T3, T4, L2, L3, L5, Cor1, Cor2, T5, Strictness, L7, Identities };

inline const char* to_string(Claim c)
{
    switch (c) {
    case Claim::T1: return "T1";
    case Claim::T2: return "T2";
    case Claim::T3: return "T3";
    case Claim::T4: return "T4";
    case Claim::L2: return "L2";
    case Claim::L3: return "L3";
    case Claim::L5: return "L5";
    case Claim::Cor1: return "COR1";
    case Claim::Cor2: return "COR2";
    case Claim::T5: return "T5";
    case Claim::Strictness: return "STRICTNESS";
    case Claim::L7: return "L7";
    case Claim::Identities: return "IDENTITIES";
    }
    return "?";
}

inline const std::vector<Claim>& all_claims()
{
    static const std::vector<Claim> v{Claim::T1,   Claim::T2,   Claim::T3, Claim::T4,         Claim::L2,
                                      Claim::L3,   Claim::L5,   Claim::Cor1, Claim::Cor2,     Claim::T5,
                                      Claim::Strictness, Claim::L7, Claim::Identities};
    return v;
}

/// Accepts the names printed by to_string (any case) and C1(cor), C2(cor).
inline Claim parse_claim(const std::string& s)
{
    std::string u;
    for (char c : s)
        u.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    if (u == "C1(COR)")
        return Claim::Cor1;
    if (u == "C2(COR)")
        return Claim::Cor2;
    for (Claim c : all_claims())
        if (u == to_string(c))
            return c;
    throw std::invalid_argument("unknown claim '" + s + "'");
}

/// Number of ideal parameters the claim takes.
inline int claim_arity(Claim c)
{
    switch (c) {
    case Claim::T1:
    case Claim::L2:
    case Claim::L5: return 1;
    case Claim::L7:
    case Claim::Identities: return 0;
    default: return 2;
    }
}

/// Ring-theoretic side conditions, always evaluated on the ring itself.
struct Hypotheses {
    bool f2_free = false;
    bool theta = false;
    bool two_unit = false;
};

inline Hypotheses hypotheses_of(const RingPtr& R)
{
    return {!has_F2_residue_field(R), theta_condition(R), two_is_unit(R)};
}

/// Assumptions of Theorems 2, 3, 4 and their corollaries.
inline bool main_hypotheses(RootKind phi, const Hypotheses& h)
{
    switch (phi) {
    case RootKind::C2: return h.f2_free && h.theta;
    case RootKind::G2: return h.f2_free;
    default: return true;
    }
}

/// Assumption of Lemma 2 (E(phi,R,I) is E(phi,R)-perfect).
inline bool perfectness_hypotheses(RootKind phi, const Hypotheses& h)
{
    return (phi != RootKind::C2 && phi != RootKind::G2) || h.f2_free;
}

/// Assumption of Lemma 3: phi is not symplectic, or 2 is a unit.
inline bool lemma3_hypotheses(RootKind phi, const Hypotheses& h) { return phi != RootKind::C2 || h.two_unit; }

inline ordered_json to_json(const Hypotheses& h)
{
    return {{"no_F2_residue_field", h.f2_free}, {"theta_condition", h.theta}, {"two_is_unit", h.two_unit}};
}

namespace detail {

template <std::size_t N, class Body>
VerdictReport run_case(Workspace<N>& ws, Claim claim, const std::string& i, const std::string& j, Body&& body)
{
    VerdictReport r;
    r.claim = to_string(claim);
    r.phi = to_string(ws.rep().system().kind());
    r.ring = ws.ring()->name();
    r.i = i;
    r.j = j;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        r.verdict = Verdict::holds;
        body(r);
    } catch (const BudgetExceeded& e) {
        r.verdict = Verdict::skipped;
        r.reason = e.what();
        r.witness.reset();
    }
    r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

/// When the claim's hypotheses fail the run is exploratory: the observed
/// outcome is kept under details, the verdict becomes skipped.
inline void gate(VerdictReport& r, bool hypotheses_hold)
{
    if (hypotheses_hold || r.verdict == Verdict::skipped)
        return;
    r.exploratory = true;
    r.details["observed"] = to_string(r.verdict);
    r.verdict = Verdict::skipped;
    r.reason = "hypotheses not satisfied; exploratory run";
}

template <std::size_t N>
bool check_inclusion(VerdictReport& r, const SubgroupSet<N>& sub, const std::string& sub_name,
                     const SubgroupSet<N>& super, const std::string& super_name)
{
    if (auto w = inclusion_witness(sub, super)) {
        r.fail("generator of " + sub_name + " not in " + super_name, sub.rep->arith().to_rows(*w));
        return false;
    }
    return true;
}

template <std::size_t N>
bool check_equal(VerdictReport& r, const SubgroupSet<N>& a, const std::string& an, const SubgroupSet<N>& b,
                 const std::string& bn)
{
    return check_inclusion(r, a, an, b, bn) && check_inclusion(r, b, bn, a, an);
}

/// g in H for every g in `elements`; the first outlier becomes the witness.
template <std::size_t N>
bool all_within(VerdictReport& r, const std::vector<Mat<N>>& elements, const SubgroupSet<N>& H,
                const std::string& what)
{
    for (const auto& g : elements)
        if (!H.contains(g)) {
            r.fail(what, H.rep->arith().to_rows(g));
            return false;
        }
    return true;
}

template <std::size_t N>
bool all_within_list(VerdictReport& r, const std::vector<Mat<N>>& elements, const GeneratorList<N>& list,
                     const MatrixArith<N>& A)
{
    for (const auto& g : elements)
        if (!list.contains(g)) {
            r.fail("elementary generator missing from the z-generator list", A.to_rows(g));
            return false;
        }
    return true;
}

template <std::size_t N>
bool members_in_level(const SubgroupSet<N>& H, const IdealHandle& K)
{
    const auto& A = H.rep->arith();
    for (const auto& g : H.members)
        if (!A.in_level(g, K))
            return false;
    return true;
}

/// c g c^-1 in H for every generator g of H and every c.
template <std::size_t N>
std::optional<Mat<N>> normality_witness(const SubgroupSet<N>& H, const std::vector<Mat<N>>& conj)
{
    const auto& A = H.rep->arith();
    for (const auto& c : conj) {
        const Mat<N> ci = A.inverse(c);
        for (const auto& g : H.gens) {
            const Mat<N> h = A.conjugate(c, g, ci);
            if (!H.contains(h))
                return h;
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// E(phi,R,I) = <z_a(s, t) : s in I, t in R>.
template <std::size_t N>
VerdictReport verify_T1(Workspace<N>& ws, const IdealHandle& I)
{
    return detail::run_case(ws, Claim::T1, I.label(), "", [&](VerdictReport& r) {
        if (I.is_unit() && !ws.elementary()) {
            // Z(R) contains every x_a(s) (take t = 0), and every z_a is a
            // product of elementary generators, so both sides are E(phi,R).
            const auto z = generator_set_Z(ws.rep(), I);
            r.details["method"] = "absolute case: both sides equal E(phi,R)";
            detail::all_within_list(r, ws.elementary_gens(), z, ws.rep().arith());
            return;
        }
        const auto A = ws.relative(I);
        const auto B = ws.z_closure(I);
        r.set_size("A", A->size());
        r.set_size("B", B->size());
        detail::check_equal(r, *A, "E(R,I)", *B, "<Z(I)>");
    });
}

template <std::size_t N>
VerdictReport verify_T2(Workspace<N>& ws, const IdealHandle& I, const IdealHandle& J)
{
    const auto phi = ws.rep().system().kind();
    const auto hyp = hypotheses_of(ws.ring());
    return detail::run_case(ws, Claim::T2, I.label(), J.label(), [&](VerdictReport& r) {
        r.details["hypotheses"] = to_json(hyp);
        const auto M = ws.mixed(I, J);
        const auto X = ws.x_normal(I, J);
        r.set_size("M", M->size());
        r.set_size("N", X->size());
        const auto IJ = ideal_product(I, J);
        r.details["M_within_level_IJ"] = detail::members_in_level(*M, IJ);
        r.details["M_normal_in_E"] = !detail::normality_witness(*M, ws.elementary_gens()).has_value();
        detail::check_equal(r, *M, "[E(R,I),E(R,J)]", *X, "<X>^E");
        detail::gate(r, main_hypotheses(phi, hyp));
    });
}

template <std::size_t N>
VerdictReport verify_T3(Workspace<N>& ws, const IdealHandle& I, const IdealHandle& J)
{
    const auto phi = ws.rep().system().kind();
    const auto hyp = hypotheses_of(ws.ring());
    return detail::run_case(ws, Claim::T3, I.label(), J.label(), [&](VerdictReport& r) {
        r.details["hypotheses"] = to_json(hyp);
        const auto M = ws.mixed(I, J);
        const auto P = ws.y_closure(I, J);
        r.set_size("M", M->size());
        r.set_size("P", P->size());
        detail::check_equal(r, *M, "[E(R,I),E(R,J)]", *P, "<Y>");
        detail::gate(r, main_hypotheses(phi, hyp));
    });
}

template <std::size_t N>
VerdictReport verify_T4(Workspace<N>& ws, const IdealHandle& I, const IdealHandle& J)
{
    const auto phi = ws.rep().system().kind();
    const auto hyp = hypotheses_of(ws.ring());
    const bool asserted_left = main_hypotheses(phi, hyp);
    return detail::run_case(ws, Claim::T4, I.label(), J.label(), [&](VerdictReport& r) {
        r.details["hypotheses"] = to_json(hyp);
        const auto IJ = ideal_product(I, J);
        const auto EIJ = ws.relative(IJ);
        const auto D = ws.plain_mixed(I, J);
        const auto M = ws.mixed(I, J);
        r.set_size("E_IJ", EIJ->size());
        r.set_size("D", D->size());
        r.set_size("M", M->size());
        const auto& A = ws.rep().arith();

        ordered_json chain = ordered_json::array();
        bool chain_ok = true;
        bool left_ok = true;
        auto link = [&](const char* from, const char* to, bool ok, const std::string& method, bool asserted) {
            chain.push_back({{"sub", from},
                             {"super", to},
                             {"status", ok ? "holds" : "fails"},
                             {"method", method},
                             {"asserted", asserted}});
        };

        VerdictReport scratch;
        left_ok = detail::check_inclusion(scratch, *EIJ, "E(R,IJ)", *D, "[E(I),E(J)]");
        link("E(R,IJ)", "[E(I),E(J)]", left_ok, "enumerated", asserted_left);
        if (!left_ok)
            r.witness = scratch.witness;

        VerdictReport scratch2;
        const bool l2 = detail::check_inclusion(scratch2, *D, "[E(I),E(J)]", *M, "[E(R,I),E(R,J)]");
        link("[E(I),E(J)]", "[E(R,I),E(R,J)]", l2, "enumerated", true);
        chain_ok = chain_ok && l2;
        if (!l2)
            r.witness = scratch2.witness;

        if (const auto G = ws.ambient()) {
            const auto GI = congruence_subgroup(*G, I);
            const auto GJ = congruence_subgroup(*G, J);
            const auto GG = commutator_subgroup(ws.rep_ptr(), GI.gens, GJ.gens, G->gens, ws.budget(),
                                                "[G(R,I),G(R,J)]");
            r.set_size("G", G->size());
            r.set_size("GG", GG.size());
            VerdictReport s3;
            const bool l3 = detail::check_inclusion(s3, *M, "[E(R,I),E(R,J)]", GG, "[G(R,I),G(R,J)]");
            link("[E(R,I),E(R,J)]", "[G(R,I),G(R,J)]", l3, "enumerated", true);
            const bool l4 = detail::members_in_level(GG, IJ);
            link("[G(R,I),G(R,J)]", "G(R,IJ)", l4, "level filter", true);
            chain_ok = chain_ok && l3 && l4;
            if (!l3)
                r.witness = s3.witness;
        } else {
            // E(R,I) <= G(R,I) follows from the levels of its generators.
            bool l3 = true;
            for (const auto& g : ws.z_gens(I))
                l3 = l3 && A.in_level(g, I);
            for (const auto& g : ws.z_gens(J))
                l3 = l3 && A.in_level(g, J);
            link("[E(R,I),E(R,J)]", "[G(R,I),G(R,J)]", l3, "generator levels (ambient not enumerated)", true);
            // Modulo IJ, g = 1 + a and h = 1 + b with ab = ba = 0, so g and h commute.
            link("[G(R,I),G(R,J)]", "G(R,IJ)", true, "ideal product argument (ambient not enumerated)", true);
            chain_ok = chain_ok && l3;
        }
        r.details["M_within_level_IJ"] = detail::members_in_level(*M, IJ);
        r.details["chain"] = chain;
        r.details["mixed_trivial"] = M->size() == 1;
        if (!chain_ok || !r.details["M_within_level_IJ"].get<bool>()) {
            r.verdict = Verdict::fails;
            if (!r.witness)
                r.witness = Witness{"member of [E(R,I),E(R,J)] outside G(R,IJ)", {}};
            return;
        }
        if (!left_ok)
            r.verdict = Verdict::fails;
        detail::gate(r, asserted_left);
    });
}

template <std::size_t N>
VerdictReport verify_L2(Workspace<N>& ws, const IdealHandle& I)
{
    const auto phi = ws.rep().system().kind();
    const auto hyp = hypotheses_of(ws.ring());
    return detail::run_case(ws, Claim::L2, I.label(), "", [&](VerdictReport& r) {
        r.details["hypotheses"] = to_json(hyp);
        const auto Erel = ws.relative(I);
        const auto zi = ws.z_gens(I);
        const auto L = ws.get("L2_" + I.label(), [&] {
            return commutator_subgroup(ws.rep_ptr(), ws.elementary_gens(), zi, concat(ws.elementary_gens(), zi),
                                       ws.budget(), "[E(R),E(R,I)]");
        });
        r.set_size("E_I", Erel->size());
        r.set_size("E_E_I", L->size());
        if (!detail::check_equal(r, *L, "[E(R),E(R,I)]", *Erel, "E(R,I)")) {
            detail::gate(r, perfectness_hypotheses(phi, hyp));
            return;
        }
        if (const auto G = ws.ambient()) {
            const auto GI = congruence_subgroup(*G, I);
            const auto a = commutator_subgroup(ws.rep_ptr(), zi, G->gens, concat(zi, G->gens), ws.budget(),
                                               "[E(R,I),G(R)]");
            const auto b = commutator_subgroup(ws.rep_ptr(), GI.gens, ws.elementary_gens(),
                                               concat(GI.gens, ws.elementary_gens()), ws.budget(), "[G(R,I),E(R)]");
            r.set_size("G", G->size());
            r.set_size("E_I_G", a.size());
            r.set_size("G_I_E", b.size());
            r.details["ambient_checked"] = true;
            detail::check_equal(r, a, "[E(R,I),G(R)]", *Erel, "E(R,I)") &&
                detail::check_equal(r, b, "[G(R,I),E(R)]", *Erel, "E(R,I)");
        } else {
            r.details["ambient_checked"] = false;
        }
        detail::gate(r, perfectness_hypotheses(phi, hyp));
    });
}

template <std::size_t N>
VerdictReport verify_L3(Workspace<N>& ws, const IdealHandle& I, const IdealHandle& J)
{
    const auto phi = ws.rep().system().kind();
    const auto hyp = hypotheses_of(ws.ring());
    return detail::run_case(ws, Claim::L3, I.label(), J.label(), [&](VerdictReport& r) {
        r.details["hypotheses"] = to_json(hyp);
        const auto IJ = ideal_product(I, J);
        const auto S = ideal_sum(I, J);
        if (S.is_unit() && !ws.elementary()) {
            // E(phi, I+J) = E(phi, R), which contains every relative subgroup.
            r.details["method"] = "I+J = R: E(phi,I+J) = E(phi,R)";
            detail::gate(r, lemma3_hypotheses(phi, hyp));
            return;
        }
        const auto EIJ = ws.relative(IJ);
        const auto P = ws.plain(S);
        r.set_size("E_IJ", EIJ->size());
        r.set_size("E_I_plus_J", P->size());
        detail::check_inclusion(r, *EIJ, "E(R,IJ)", *P, "E(I+J)");
        detail::gate(r, lemma3_hypotheses(phi, hyp));
    });
}

template <std::size_t N>
VerdictReport verify_L5(Workspace<N>& ws, const IdealHandle& I)
{
    return detail::run_case(ws, Claim::L5, I.label(), "", [&](VerdictReport& r) {
        const auto& rep = ws.rep();
        const auto& A = rep.arith();
        const auto& order = rep.system().positive();
        const auto U = ws.get("U", [&] {
            return closure(ws.rep_ptr(), generator_set_U(rep, ws.unit()).matrices(), ws.budget(), "U(R)");
        });
        const auto UI = ws.get("U_" + I.label(), [&] {
            return closure(ws.rep_ptr(), generator_set_U(rep, I).matrices(), ws.budget(), "U(I)");
        });
        std::uint64_t expected = 1;
        for (std::size_t k = 0; k < order.size(); ++k)
            expected *= static_cast<std::uint64_t>(ws.ring()->size());
        r.details["U_order_is_R_to_positive_roots"] = U->size() == expected;
        std::uint64_t in_level = 0;
        for (const auto& u : U->members) {
            if (!A.in_level(u, I))
                continue;
            ++in_level;
            const auto coeffs = factor_unipotent(rep, u, order);
            for (const auto& [a, c] : coeffs)
                if (!I.contains(c)) {
                    r.fail("unipotent of level I with a coefficient outside I", A.to_rows(u));
                    return;
                }
            if (!UI->contains(u)) {
                r.fail("unipotent of level I outside U(I)", A.to_rows(u));
                return;
            }
        }
        r.set_size("U", U->size());
        r.set_size("U_cap_G_I", in_level);
        r.set_size("U_I", UI->size());
    });
}

template <std::size_t N>
VerdictReport verify_Cor1(Workspace<N>& ws, const IdealHandle& I, const IdealHandle& J)
{
    const auto phi = ws.rep().system().kind();
    const auto hyp = hypotheses_of(ws.ring());
    return detail::run_case(ws, Claim::Cor1, I.label(), J.label(), [&](VerdictReport& r) {
        r.details["hypotheses"] = to_json(hyp);
        const auto M = ws.mixed(I, J);
        const auto L = ws.get("C1L_" + I.label() + "_" + J.label(), [&] {
            const auto xi = ws.x_gens(I);
            const auto zj = ws.z_gens(J);
            return commutator_subgroup(ws.rep_ptr(), xi, zj, concat(xi, zj), ws.budget(), "[E(I),E(R,J)]");
        });
        const auto Rt = ws.get("C1R_" + I.label() + "_" + J.label(), [&] {
            const auto zi = ws.z_gens(I);
            const auto xj = ws.x_gens(J);
            return commutator_subgroup(ws.rep_ptr(), zi, xj, concat(zi, xj), ws.budget(), "[E(R,I),E(J)]");
        });
        r.set_size("M", M->size());
        r.set_size("E_I_ER_J", L->size());
        r.set_size("ER_I_E_J", Rt->size());
        detail::check_equal(r, *L, "[E(I),E(R,J)]", *M, "[E(R,I),E(R,J)]") &&
            detail::check_equal(r, *Rt, "[E(R,I),E(J)]", *M, "[E(R,I),E(R,J)]");
        detail::gate(r, main_hypotheses(phi, hyp));
    });
}

template <std::size_t N>
VerdictReport verify_Cor2(Workspace<N>& ws, const IdealHandle& I, const IdealHandle& J)
{
    const auto phi = ws.rep().system().kind();
    const auto hyp = hypotheses_of(ws.ring());
    return detail::run_case(ws, Claim::Cor2, I.label(), J.label(), [&](VerdictReport& r) {
        r.details["hypotheses"] = to_json(hyp);
        const auto D = ws.plain_mixed(I, J);
        r.set_size("D", D->size());
        r.set_size("conjugations", D->gens.size() * ws.elementary_gens().size());
        if (auto w = detail::normality_witness(*D, ws.elementary_gens()))
            r.fail("conjugate of a generator of [E(I),E(J)] outside it", ws.rep().arith().to_rows(*w));
        detail::gate(r, main_hypotheses(phi, hyp));
    });
}

template <std::size_t N>
VerdictReport verify_T5(Workspace<N>& ws, const IdealHandle& I, const IdealHandle& J)
{
    return detail::run_case(ws, Claim::T5, I.label(), J.label(), [&](VerdictReport& r) {
        const auto G = ws.ambient();
        if (!G) {
            r.verdict = Verdict::skipped;
            r.reason = "ambient G(phi,R) exceeds " + std::to_string(ws.ambient_budget()) + " elements";
            return;
        }
        const auto E = ws.elementary();
        const auto C = full_congruence_subgroup(*G, J);
        const auto zi = ws.z_gens(I);
        const auto left = commutator_subgroup(ws.rep_ptr(), zi, C.members.elements(), concat(zi, C.gens),
                                              ws.budget(), "[E(R,I),C(R,J)]");
        const auto M = ws.mixed(I, J);
        r.set_size("G", G->size());
        if (E)
            r.set_size("E", E->size());
        r.set_size("C_J", C.size());
        r.set_size("left", left.size());
        r.set_size("M", M->size());
        if (E)
            r.details["E_equals_G"] = E->size() == G->size();
        detail::check_equal(r, left, "[E(R,I),C(R,J)]", *M, "[E(R,I),E(R,J)]");
    });
}

/// Compares M = [E(R,I),E(R,J)] with E(R,IJ); equality is asserted only for comaximal I, J.
template <std::size_t N>
VerdictReport strictness_probe(Workspace<N>& ws, const IdealHandle& I, const IdealHandle& J)
{
    return detail::run_case(ws, Claim::Strictness, I.label(), J.label(), [&](VerdictReport& r) {
        const bool comaximal = ideal_sum(I, J).is_unit();
        const auto M = ws.mixed(I, J);
        const auto EIJ = ws.relative(ideal_product(I, J));
        r.set_size("M", M->size());
        r.set_size("E_IJ", EIJ->size());
        const bool lower = is_subgroup_of(*EIJ, *M);
        const bool upper = is_subgroup_of(*M, *EIJ);
        std::string relation = lower && upper ? "equal" : lower ? "strict" : upper ? "M smaller" : "incomparable";
        r.details["comaximal"] = comaximal;
        r.details["asserted"] = comaximal;
        r.details["relation"] = relation;
        if (lower)
            r.details["index"] = M->size() / EIJ->size();
        if (comaximal && relation != "equal") {
            auto w = upper ? inclusion_witness(*EIJ, *M) : inclusion_witness(*M, *EIJ);
            r.fail("comaximal ideals with M != E(R,IJ)", ws.rep().arith().to_rows(*w));
        }
    });
}

/// U_r is normalised by L_r = <X_{a_r}, X_{-a_r}> and meets it trivially,
/// for every simple root a_r.
template <std::size_t N>
VerdictReport verify_L7(Workspace<N>& ws)
{
    return detail::run_case(ws, Claim::L7, "", "", [&](VerdictReport& r) {
        const auto& rep = ws.rep();
        const auto& sys = rep.system();
        const auto& A = rep.arith();
        const auto elems = ws.ring()->elements();
        for (std::size_t k = 0; k < sys.simple().size(); ++k) {
            const std::size_t ar = sys.simple()[k];
            std::vector<Mat<N>> lgens, ugens;
            for (Elem s : elems) {
                lgens.push_back(rep.x(ar, s));
                lgens.push_back(rep.x(sys.negative_of(ar), s));
            }
            for (std::size_t b : sys.positive())
                if (b != ar)
                    for (Elem s : elems)
                        ugens.push_back(rep.x(b, s));
            const auto Ur = closure(ws.rep_ptr(), ugens, ws.budget(), "U_r");
            const auto Lr = closure(ws.rep_ptr(), lgens, ws.budget(), "L_r");
            const std::string tag = std::to_string(k + 1);
            r.set_size("U_" + tag, Ur.size());
            r.set_size("L_" + tag, Lr.size());
            std::uint64_t conj = 0;
            for (const auto& l : lgens) {
                const Mat<N> li = A.inverse(l);
                for (const auto& g : Ur.gens) {
                    ++conj;
                    const Mat<N> h = A.conjugate(l, g, li);
                    if (!Ur.contains(h)) {
                        r.fail("conjugate of U_" + tag + " by L_" + tag + " leaves U_" + tag, A.to_rows(h));
                        return;
                    }
                }
            }
            r.set_size("conjugations_" + tag, conj);
            for (const auto& g : Lr.members)
                if (!(g == rep.identity()) && Ur.contains(g)) {
                    r.fail("L_" + tag + " meets U_" + tag + " nontrivially", A.to_rows(g));
                    return;
                }
        }
    });
}

/// The identities C1-C5 on random triples of products of elementary generators.
template <std::size_t N>
VerdictReport check_commutator_identities(Workspace<N>& ws, std::size_t trials = 10'000, std::uint64_t seed = 1)
{
    return detail::run_case(ws, Claim::Identities, "", "", [&](VerdictReport& r) {
        const auto& A = ws.rep().arith();
        const auto& gens = ws.elementary_gens();
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
        auto random_element = [&] {
            Mat<N> g = ws.rep().identity();
            for (int k = 0; k < 8; ++k)
                g = A.mul(g, gens[pick(rng)]);
            return g;
        };
        auto conj = [&](const Mat<N>& c, const Mat<N>& g) { return A.conjugate(c, g, A.inverse(c)); };
        auto comm = [&](const Mat<N>& a, const Mat<N>& b) { return A.commutator(a, b); };
        for (std::size_t t = 0; t < trials; ++t) {
            const Mat<N> x = random_element(), y = random_element(), z = random_element();
            const Mat<N> yi = A.inverse(y);
            const bool c1 = comm(x, A.mul(y, z)) == A.mul(comm(x, y), conj(y, comm(x, z)));
            const bool c2 = comm(A.mul(x, y), z) == A.mul(conj(x, comm(y, z)), comm(x, z));
            const bool c3 = comm(x, conj(y, z)) == conj(y, comm(conj(yi, x), z));
            const bool c4 = comm(conj(y, x), z) == conj(y, comm(x, conj(yi, z)));
            const bool c5 = comm(y, x) == A.inverse(comm(x, y));
            if (!(c1 && c2 && c3 && c4 && c5)) {
                const char* which = !c1 ? "C1" : !c2 ? "C2" : !c3 ? "C3" : !c4 ? "C4" : "C5";
                r.fail(std::string(which) + " fails for x shown", A.to_rows(x));
                return;
            }
        }
        r.set_size("trials", trials);
    });
}

/// Dispatch by claim. Unused ideal arguments are ignored.
template <std::size_t N>
VerdictReport run_claim(Workspace<N>& ws, Claim c, const IdealHandle& I, const IdealHandle& J)
{
    switch (c) {
    case Claim::T1: return verify_T1(ws, I);
    case Claim::T2: return verify_T2(ws, I, J);
    case Claim::T3: return verify_T3(ws, I, J);
    case Claim::T4: return verify_T4(ws, I, J);
    case Claim::L2: return verify_L2(ws, I);
    case Claim::L3: return verify_L3(ws, I, J);
    case Claim::L5: return verify_L5(ws, I);
    case Claim::Cor1: return verify_Cor1(ws, I, J);
    case Claim::Cor2: return verify_Cor2(ws, I, J);
    case Claim::T5: return verify_T5(ws, I, J);
    case Claim::Strictness: return strictness_probe(ws, I, J);
    case Claim::L7: return verify_L7(ws);
    case Claim::Identities: return check_commutator_identities(ws);
    }
    throw std::invalid_argument("run_claim: unknown claim");
}

}  // namespace chevlab
