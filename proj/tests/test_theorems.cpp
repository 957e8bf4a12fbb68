#include <gtest/gtest.h>

#include <random>

#include <chevlab/theorems.hpp>

using namespace chevlab;

namespace {

template <std::size_t N>
Workspace<N> ws_of(RootKind k, const char* ring)
{
    return Workspace<N>(std::make_shared<const Representation<N>>(roots_of(k), FiniteRing::parse(ring)));
}

template <std::size_t N>
IdealHandle id(const Workspace<N>& ws, const char* s)
{
    return IdealHandle::parse(ws.ring(), s);
}

// Closure of random commutators [a, b] with a in H, b in K.
template <std::size_t N>
SubgroupSet<N> sampled_commutators(const Workspace<N>& ws, const SubgroupSet<N>& H, const SubgroupSet<N>& K,
                                   int samples)
{
    const auto& A = ws.rep().arith();
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::size_t> ph(0, H.size() - 1), pk(0, K.size() - 1);
    std::vector<Mat<N>> c;
    for (int s = 0; s < samples; ++s)
        c.push_back(A.commutator(H.members[ph(rng)], K.members[pk(rng)]));
    return closure(ws.rep_ptr(), c);
}

}  // namespace

TEST(Claims, NamesRoundTrip)
{
    for (Claim c : all_claims())
        EXPECT_EQ(parse_claim(to_string(c)), c);
    EXPECT_EQ(parse_claim("t4"), Claim::T4);
    EXPECT_EQ(parse_claim("C1(cor)"), Claim::Cor1);
    EXPECT_EQ(parse_claim("C2(cor)"), Claim::Cor2);
    EXPECT_THROW(parse_claim("T9"), std::invalid_argument);
    EXPECT_EQ(claim_arity(Claim::T1), 1);
    EXPECT_EQ(claim_arity(Claim::Identities), 0);
    EXPECT_EQ(claim_arity(Claim::Strictness), 2);
}

TEST(Hypotheses, Examples)
{
    const auto z4 = hypotheses_of(FiniteRing::zmod(4));
    EXPECT_FALSE(z4.f2_free);
    EXPECT_FALSE(main_hypotheses(RootKind::C2, z4));
    EXPECT_FALSE(main_hypotheses(RootKind::G2, z4));
    EXPECT_TRUE(main_hypotheses(RootKind::A2, z4));
    const auto z27 = hypotheses_of(FiniteRing::zmod(27));
    EXPECT_TRUE(main_hypotheses(RootKind::C2, z27));
    EXPECT_TRUE(z27.two_unit);
    EXPECT_FALSE(lemma3_hypotheses(RootKind::C2, z4));
    EXPECT_TRUE(lemma3_hypotheses(RootKind::A3, z4));
}

TEST(T1, AllIdealsOfA2OverZ8)
{
    auto ws = ws_of<3>(RootKind::A2, "Z/8");
    for (const auto& I : ideals_of(ws.ring())) {
        const auto r = verify_T1(ws, I);
        EXPECT_EQ(r.verdict, Verdict::holds) << I.label();
        if (r.size("A"))
            EXPECT_EQ(r.size("A"), r.size("B"));
    }
}

TEST(T1, UnitIdealUsesStructuralMethodWhenLarge)
{
    auto ws = ws_of<4>(RootKind::C2, "Z/9");
    const auto r = verify_T1(ws, ws.unit());
    EXPECT_EQ(r.verdict, Verdict::holds);
    EXPECT_TRUE(r.details.contains("method"));
}

TEST(T2T3, A2OverZ8)
{
    auto ws = ws_of<3>(RootKind::A2, "Z/8");
    const auto I = id(ws, "2");
    const auto r2 = verify_T2(ws, I, I);
    const auto r3 = verify_T3(ws, I, I);
    EXPECT_EQ(r2.verdict, Verdict::holds);
    EXPECT_EQ(r3.verdict, Verdict::holds);
    EXPECT_EQ(r2.size("M"), 256u);
    EXPECT_EQ(r2.size("N"), 256u);
    EXPECT_EQ(r3.size("P"), 256u);
    EXPECT_TRUE(r2.details["M_within_level_IJ"].get<bool>());
    EXPECT_TRUE(r2.details["M_normal_in_E"].get<bool>());
}

TEST(Mixed, SampledCommutatorOracle)
{
    auto ws = ws_of<3>(RootKind::A2, "Z/8");
    const auto I = id(ws, "2");
    const auto EI = ws.relative(I);
    const auto M = ws.mixed(I, I);
    const auto S = sampled_commutators(ws, *EI, *EI, 500);
    EXPECT_TRUE(is_subgroup_of(S, *M));
    EXPECT_EQ(S.size(), M->size());
}

TEST(Mixed, Symmetric)
{
    auto ws = ws_of<3>(RootKind::A2, "Z/16");
    const auto I = id(ws, "2"), J = id(ws, "4");
    EXPECT_TRUE(same_members(*ws.mixed(I, J), *ws.mixed(J, I)));
}

TEST(Mixed, MonotoneInEachArgument)
{
    auto ws = ws_of<3>(RootKind::A2, "Z/16");
    const auto I2 = id(ws, "2"), I4 = id(ws, "4"), I8 = id(ws, "8");
    EXPECT_TRUE(is_subgroup_of(*ws.mixed(I4, I2), *ws.mixed(I2, I2)));
    EXPECT_TRUE(is_subgroup_of(*ws.mixed(I8, I2), *ws.mixed(I4, I2)));
    EXPECT_TRUE(is_subgroup_of(*ws.mixed(I4, I4), *ws.mixed(I4, I2)));
}

TEST(Mixed, WithinLevelOfProduct)
{
    auto ws = ws_of<4>(RootKind::C2, "Z/27");
    const auto I = id(ws, "3"), J = id(ws, "9");
    const auto IJ = ideal_product(I, J);
    for (const auto& g : ws.mixed(I, I)->members)
        EXPECT_TRUE(ws.rep().arith().in_level(g, ideal_product(I, I)));
    for (const auto& g : ws.mixed(I, J)->members)
        EXPECT_TRUE(ws.rep().arith().in_level(g, IJ));
}

TEST(T4, ChainHolds)
{
    auto ws = ws_of<3>(RootKind::A2, "Z/16");
    const auto r = verify_T4(ws, id(ws, "2"), id(ws, "4"));
    EXPECT_EQ(r.verdict, Verdict::holds);
    ASSERT_EQ(r.details["chain"].size(), 4u);
    for (const auto& link : r.details["chain"])
        EXPECT_EQ(link["status"], "holds");
    EXPECT_EQ(r.size("M"), r.size("E_IJ"));
}

TEST(T4, DegenerateMixedIsTrivial)
{
    auto a2 = ws_of<3>(RootKind::A2, "Z/4");
    const auto r = verify_T4(a2, id(a2, "2"), id(a2, "2"));
    EXPECT_EQ(r.verdict, Verdict::holds);
    EXPECT_EQ(r.size("M"), 1u);
    EXPECT_TRUE(r.details["mixed_trivial"].get<bool>());
    auto dual = ws_of<3>(RootKind::A2, "F3[t]/t2");
    const auto d = verify_T4(dual, id(dual, "t"), id(dual, "t"));
    EXPECT_EQ(d.verdict, Verdict::holds);
    EXPECT_EQ(d.size("M"), 1u);
}

TEST(Gating, FailedHypothesesAreExploratory)
{
    auto ws = ws_of<4>(RootKind::C2, "Z/4");
    const auto r = verify_T2(ws, id(ws, "2"), id(ws, "2"));
    EXPECT_EQ(r.verdict, Verdict::skipped);
    EXPECT_TRUE(r.exploratory);
    EXPECT_TRUE(r.details.contains("observed"));
    EXPECT_TRUE(r.to_json().contains("exploratory"));
}

TEST(Gating, BudgetGivesSkip)
{
    Workspace<3> ws(std::make_shared<const Representation<3>>(roots_of(RootKind::A2), FiniteRing::zmod(16)), 1000);
    const auto r = verify_T2(ws, IdealHandle::parse(ws.ring(), "2"), IdealHandle::parse(ws.ring(), "2"));
    EXPECT_EQ(r.verdict, Verdict::skipped);
    EXPECT_FALSE(r.exploratory);
    EXPECT_FALSE(r.reason.empty());
}

TEST(Corollaries, A2OverZ16)
{
    auto ws = ws_of<3>(RootKind::A2, "Z/16");
    const auto I = id(ws, "2"), J = id(ws, "4");
    EXPECT_EQ(verify_Cor1(ws, I, J).verdict, Verdict::holds);
    EXPECT_EQ(verify_Cor2(ws, I, J).verdict, Verdict::holds);
}

TEST(Lemmas, L2L3L5)
{
    auto ws = ws_of<3>(RootKind::A2, "Z/4");
    for (const auto& I : ideals_of(ws.ring())) {
        EXPECT_EQ(verify_L2(ws, I).verdict, Verdict::holds) << I.label();
        EXPECT_EQ(verify_L5(ws, I).verdict, Verdict::holds) << I.label();
        for (const auto& J : ideals_of(ws.ring()))
            EXPECT_EQ(verify_L3(ws, I, J).verdict, Verdict::holds) << I.label() << " " << J.label();
    }
}

TEST(Lemmas, L7)
{
    auto a2 = ws_of<3>(RootKind::A2, "Z/8");
    EXPECT_EQ(verify_L7(a2).verdict, Verdict::holds);
    auto g2 = ws_of<7>(RootKind::G2, "Z/4");
    EXPECT_EQ(verify_L7(g2).verdict, Verdict::holds);
}

TEST(T5, ComaximalAndNot)
{
    auto z4 = ws_of<3>(RootKind::A2, "Z/4");
    EXPECT_EQ(verify_T5(z4, id(z4, "2"), id(z4, "2")).verdict, Verdict::holds);
    auto z6 = ws_of<3>(RootKind::A2, "Z/6");
    EXPECT_EQ(verify_T5(z6, id(z6, "2"), id(z6, "3")).verdict, Verdict::holds);
}

TEST(Strictness, Relations)
{
    auto z6 = ws_of<3>(RootKind::A2, "Z/6");
    const auto eq = strictness_probe(z6, id(z6, "2"), id(z6, "3"));
    EXPECT_EQ(eq.verdict, Verdict::holds);
    EXPECT_EQ(eq.details["relation"], "equal");
    EXPECT_TRUE(eq.details["asserted"].get<bool>());
    auto z8 = ws_of<3>(RootKind::A2, "Z/8");
    const auto nc = strictness_probe(z8, id(z8, "2"), id(z8, "2"));
    EXPECT_FALSE(nc.details["asserted"].get<bool>());
    EXPECT_EQ(nc.verdict, Verdict::holds);
}

TEST(Identities, HoldOnRandomTriples)
{
    auto ws = ws_of<4>(RootKind::C2, "Z/9");
    const auto r = check_commutator_identities(ws, 500);
    EXPECT_EQ(r.verdict, Verdict::holds);
}

TEST(Reports, DeterministicWithoutTiming)
{
    auto a = ws_of<3>(RootKind::A2, "Z/8");
    auto b = ws_of<3>(RootKind::A2, "Z/8");
    const auto I = id(a, "2");
    EXPECT_EQ(verify_T4(a, I, I).to_json(false).dump(), verify_T4(b, id(b, "2"), id(b, "2")).to_json(false).dump());
}

TEST(Dispatch, RunClaim)
{
    auto ws = ws_of<3>(RootKind::A2, "Z/4");
    const auto I = id(ws, "2");
    for (Claim c : all_claims()) {
        const auto r = run_claim(ws, c, I, I);
        EXPECT_EQ(r.claim, to_string(c));
        EXPECT_NE(r.verdict, Verdict::fails) << to_string(c);
    }
}
