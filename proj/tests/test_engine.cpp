#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <vector>

#include <chevlab/engine.hpp>

using namespace chevlab;

namespace {

template <std::size_t N>
RepPtr<N> make(RootKind k, const char* ring)
{
    return std::make_shared<const Representation<N>>(roots_of(k), FiniteRing::parse(ring));
}

template <std::size_t N>
std::vector<Mat<N>> egens(const RepPtr<N>& rep)
{
    return generator_set_E(*rep, IdealHandle::unit(rep->ring())).matrices();
}

template <std::size_t N>
std::vector<Mat<N>> xgens(const RepPtr<N>& rep, const char* ideal)
{
    return generator_set_E(*rep, IdealHandle::parse(rep->ring(), ideal)).matrices();
}

// Count of 3x3 matrices over F2 with determinant 1, by brute force.
std::size_t count_sl3_f2()
{
    std::size_t n = 0;
    for (unsigned bits = 0; bits < 512; ++bits) {
        int m[3][3];
        for (int k = 0; k < 9; ++k)
            m[k / 3][k % 3] = (bits >> k) & 1;
        const int d = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                      m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                      m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        n += ((d % 2) + 2) % 2 == 1;
    }
    return n;
}

// Count of 4x4 matrices over F2 preserving antidiag(1, 1, 1, 1).
std::size_t count_sp4_f2()
{
    std::size_t n = 0;
    for (unsigned bits = 0; bits < 65536; ++bits) {
        int g[4][4];
        for (int k = 0; k < 16; ++k)
            g[k / 4][k % 4] = (bits >> k) & 1;
        bool ok = true;
        for (int i = 0; i < 4 && ok; ++i)
            for (int j = 0; j < 4 && ok; ++j) {
                int s = 0;
                for (int k = 0; k < 4; ++k)
                    s += g[k][i] * g[3 - k][j];
                ok = s % 2 == (i + j == 3 ? 1 : 0);
            }
        n += ok;
    }
    return n;
}

std::filesystem::path temp_file(const char* name)
{
    return std::filesystem::temp_directory_path() / (std::string("chevlab_test_") + name);
}

}  // namespace

TEST(Closure, SL3OverF2)
{
    const auto rep = make<3>(RootKind::A2, "Z/2");
    EXPECT_EQ(closure(rep, egens(rep)).size(), count_sl3_f2());
    EXPECT_EQ(count_sl3_f2(), 168u);
}

TEST(Closure, Sp4OverF2)
{
    const auto rep = make<4>(RootKind::C2, "Z/2");
    EXPECT_EQ(closure(rep, egens(rep)).size(), count_sp4_f2());
    EXPECT_EQ(count_sp4_f2(), 720u);
}

TEST(Closure, KnownOrders)
{
    const auto a2 = make<3>(RootKind::A2, "Z/4");
    EXPECT_EQ(closure(a2, egens(a2)).size(), 43008u);
    const auto c2 = make<4>(RootKind::C2, "Z/3");
    EXPECT_EQ(closure(c2, egens(c2)).size(), 51840u);
    const auto g2 = make<7>(RootKind::G2, "Z/2");
    EXPECT_EQ(closure(g2, egens(g2)).size(), 12096u);
}

TEST(Closure, EmptyAndIdentity)
{
    const auto rep = make<3>(RootKind::A2, "Z/4");
    EXPECT_EQ(closure(rep, {}).size(), 1u);
    EXPECT_EQ(closure(rep, {rep->identity()}).size(), 1u);
}

TEST(Closure, IsAGroup)
{
    const auto rep = make<3>(RootKind::A2, "Z/4");
    const auto H = closure(rep, xgens(rep, "2"));
    const auto& A = rep->arith();
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> pick(0, H.size() - 1);
    EXPECT_TRUE(H.contains(rep->identity()));
    for (int k = 0; k < 2000; ++k) {
        const auto& g = H.members[pick(rng)];
        const auto& h = H.members[pick(rng)];
        EXPECT_TRUE(H.contains(A.mul(g, h)));
        EXPECT_TRUE(H.contains(A.inverse(g)));
    }
}

TEST(Closure, Idempotent)
{
    const auto rep = make<4>(RootKind::C2, "Z/4");
    const auto H = closure(rep, xgens(rep, "2"));
    const auto again = closure(rep, H.gens);
    EXPECT_TRUE(same_members(H, again));
    std::vector<Mat<4>> all(H.members.begin(), H.members.end());
    EXPECT_TRUE(same_members(H, closure(rep, all)));
}

TEST(Closure, Lagrange)
{
    const auto rep = make<3>(RootKind::A2, "Z/4");
    const auto G = closure(rep, egens(rep));
    for (const char* i : {"0", "2", "1"}) {
        const auto H = closure(rep, xgens(rep, i));
        EXPECT_EQ(G.size() % H.size(), 0u) << i;
        EXPECT_TRUE(is_subgroup_of(H, G));
    }
}

TEST(Closure, BudgetExceeded)
{
    const auto rep = make<3>(RootKind::A2, "Z/4");
    EXPECT_THROW(closure(rep, egens(rep), 1000), BudgetExceeded);
    try {
        closure(rep, egens(rep), 1000);
    } catch (const BudgetExceeded& e) {
        EXPECT_EQ(e.budget(), 1000u);
        EXPECT_GT(e.reached(), 0u);
    }
}

TEST(NormalClosure, RelativeSubgroupMatchesKernel)
{
    const auto rep = make<3>(RootKind::A2, "Z/4");
    const auto R = rep->ring();
    const auto I = IdealHandle::parse(R, "2");
    const auto EI = normal_closure(rep, xgens(rep, "2"), egens(rep));
    EXPECT_EQ(EI.size(), 256u);
    // kernel of reduction mod 2, filtered by hand
    const auto G = closure(rep, egens(rep));
    const auto red = reduction(*rep, I);
    std::size_t kernel = 0;
    for (const auto& g : G.members)
        kernel += red(g) == red.quotient->identity();
    EXPECT_EQ(kernel, 256u);
    EXPECT_TRUE(same_members(EI, congruence_subgroup(G, I)));
}

TEST(NormalClosure, IsNormal)
{
    const auto rep = make<4>(RootKind::C2, "Z/9");
    const auto E = egens(rep);
    const auto EI = normal_closure(rep, xgens(rep, "3"), E);
    const auto& A = rep->arith();
    for (const auto& c : E)
        for (const auto& g : EI.gens)
            EXPECT_TRUE(EI.contains(A.conjugate(c, g, A.inverse(c))));
}

TEST(Commutator, SymmetricInArguments)
{
    const auto rep = make<3>(RootKind::A2, "Z/8");
    const auto H = xgens(rep, "2");
    const auto K = xgens(rep, "4");
    auto both = concat(H, K);
    const auto HK = commutator_subgroup(rep, H, K, both);
    const auto KH = commutator_subgroup(rep, K, H, both);
    EXPECT_TRUE(same_members(HK, KH));
}

TEST(Commutator, DirectlyGeneratedOracle)
{
    // [H, K] is generated by conjugates of [h, k] inside <H, K>; compare
    // with the closure of all [a, b] for a in H, b in K on small groups.
    const auto rep = make<3>(RootKind::A2, "Z/4");
    const auto H = xgens(rep, "2");
    const auto& A = rep->arith();
    const auto Hs = closure(rep, H);
    const auto Es = closure(rep, egens(rep));
    std::vector<Mat<3>> comms;
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::size_t> ph(0, Hs.size() - 1), pe(0, Es.size() - 1);
    for (int k = 0; k < 4000; ++k)
        comms.push_back(A.commutator(Hs.members[ph(rng)], Es.members[pe(rng)]));
    const auto sampled = closure(rep, comms);
    const auto C = commutator_subgroup(rep, H, egens(rep), concat(H, egens(rep)));
    EXPECT_TRUE(is_subgroup_of(sampled, C));
    EXPECT_EQ(C.size(), 256u);
    EXPECT_EQ(sampled.size(), 256u);
}

TEST(Commutator, TrivialWhenOneSideTrivial)
{
    const auto rep = make<3>(RootKind::A2, "Z/8");
    const auto C = commutator_subgroup(rep, xgens(rep, "0"), egens(rep), egens(rep));
    EXPECT_EQ(C.size(), 1u);
}

TEST(Reduce, LevelAndReduction)
{
    const auto rep = make<3>(RootKind::A2, "Z/8");
    const auto R = rep->ring();
    const auto G = closure(rep, xgens(rep, "2"));
    for (const char* i : {"0", "2", "4", "1"}) {
        const auto I = IdealHandle::parse(R, i);
        const auto red = reduction(*rep, I);
        for (const auto& g : G.members) {
            const bool in = rep->arith().in_level(g, I);
            EXPECT_EQ(in, red(g) == red.quotient->identity());
            EXPECT_EQ(in, level(*rep, g).subset_of(I));
            EXPECT_EQ(reduce(*rep, g, I), red(g));
        }
    }
}

TEST(Congruence, KnownSizes)
{
    const auto rep = make<3>(RootKind::A2, "Z/4");
    const auto G = closure(rep, egens(rep));
    EXPECT_EQ(congruence_subgroup(G, IdealHandle::parse(rep->ring(), "2")).size(), 256u);
    EXPECT_EQ(congruence_subgroup(G, IdealHandle::zero(rep->ring())).size(), 1u);
    EXPECT_EQ(congruence_subgroup(G, IdealHandle::unit(rep->ring())).size(), G.size());
    SubgroupSet<3> empty;
    empty.rep = rep;
    EXPECT_THROW(congruence_subgroup(empty, IdealHandle::unit(rep->ring())), std::invalid_argument);
}

TEST(Center, Examples)
{
    const auto a2 = make<3>(RootKind::A2, "Z/2");
    EXPECT_EQ(center(closure(a2, egens(a2))).size(), 1u);
    const auto c2 = make<4>(RootKind::C2, "Z/3");
    const auto Z = center(closure(c2, egens(c2)));
    ASSERT_EQ(Z.size(), 2u);
    for (const auto& g : Z.members)
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                EXPECT_EQ(g(i, j), i == j ? g(0, 0) : 0);
}

TEST(Center, BruteForceOverA2Z7)
{
    // scalar matrices of determinant 1 over Z/7 are the cube roots of unity
    const auto rep = make<3>(RootKind::A2, "Z/7");
    const auto G = closure(rep, egens(rep));
    std::size_t cube_roots = 0;
    for (int u = 1; u < 7; ++u)
        cube_roots += u * u * u % 7 == 1;
    EXPECT_EQ(center(G).size(), cube_roots);
}

TEST(FullCongruence, ContainsCongruence)
{
    const auto rep = make<3>(RootKind::A2, "Z/4");
    const auto I = IdealHandle::parse(rep->ring(), "2");
    const auto E = closure(rep, egens(rep));
    const auto G = congruence_subgroup(E, I);
    const auto C = full_congruence_subgroup(E, I);
    EXPECT_TRUE(is_subgroup_of(G, C));
    // SL3 over F2 has trivial center
    EXPECT_EQ(C.size(), G.size());
}

TEST(FullCongruence, ZeroIdealGivesCenter)
{
    const auto rep = make<3>(RootKind::A2, "Z/7");
    const auto E = closure(rep, egens(rep));
    const auto C = full_congruence_subgroup(E, IdealHandle::zero(rep->ring()));
    EXPECT_TRUE(same_members(C, center(E)));
    EXPECT_EQ(C.size(), 3u);
}

TEST(FactorUnipotent, RecoversCoefficients)
{
    auto check = [](const auto& rep) {
        const auto& R = *rep->ring();
        const auto& order = rep->system().positive();
        std::mt19937_64 rng(11);
        std::uniform_int_distribution<int> pick(0, R.size() - 1);
        for (int trial = 0; trial < 200; ++trial) {
            auto u = rep->identity();
            std::vector<Elem> want;
            for (std::size_t a : order) {
                const auto c = static_cast<Elem>(pick(rng));
                want.push_back(c);
                u = rep->mul(u, rep->x(a, c));
            }
            const auto got = factor_unipotent(*rep, u, order);
            ASSERT_EQ(got.size(), order.size());
            for (std::size_t k = 0; k < order.size(); ++k) {
                EXPECT_EQ(got[k].first, order[k]);
                EXPECT_EQ(got[k].second, want[k]);
            }
        }
    };
    check(make<3>(RootKind::A2, "Z/8"));
    check(make<4>(RootKind::A3, "Z/6"));
    check(make<4>(RootKind::C2, "Z/9"));
    check(make<7>(RootKind::G2, "Z/4"));
    check(make<7>(RootKind::G2, "F3[t]/t2"));
}

TEST(FactorUnipotent, Errors)
{
    const auto rep = make<3>(RootKind::A2, "Z/8");
    const auto& pos = rep->system().positive();
    const auto neg = rep->system().negative_of(pos[0]);
    EXPECT_THROW(factor_unipotent(*rep, rep->x(neg, 1), pos), std::domain_error);
    EXPECT_THROW(factor_unipotent(*rep, rep->identity(), {neg}), std::domain_error);
    // missing root in the order
    const std::vector<std::size_t> partial(pos.begin(), pos.begin() + 1);
    EXPECT_THROW(factor_unipotent(*rep, rep->x(pos[1], 1), partial), std::domain_error);
}

TEST(Cache, RoundTrip)
{
    const auto rep = make<4>(RootKind::C2, "Z/4");
    const auto H = closure(rep, xgens(rep, "2"));
    const auto path = temp_file("roundtrip.chvl");
    dump_members(H, path.string());
    const auto L = load_members(rep, path.string());
    EXPECT_TRUE(same_members(H, L));
    std::filesystem::remove(path);
}

TEST(Cache, CorruptionDetected)
{
    const auto rep = make<3>(RootKind::A2, "Z/4");
    const auto H = closure(rep, xgens(rep, "2"));
    const auto path = temp_file("corrupt.chvl");
    dump_members(H, path.string());
    std::string bytes;
    {
        std::ifstream f(path, std::ios::binary);
        bytes.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
    }
    auto write = [&](const std::string& b) {
        std::ofstream f(path, std::ios::binary | std::ios::trunc);
        f.write(b.data(), static_cast<std::streamsize>(b.size()));
    };
    auto flipped = bytes;
    flipped[40] ^= 1;
    write(flipped);
    EXPECT_THROW(load_members(rep, path.string()), CorruptCache);
    write(bytes.substr(0, bytes.size() - 3));
    EXPECT_THROW(load_members(rep, path.string()), CorruptCache);
    auto magic = bytes;
    magic[0] = 'X';
    write(magic);
    EXPECT_THROW(load_members(rep, path.string()), CorruptCache);
    write(bytes);
    EXPECT_THROW(load_members(make<3>(RootKind::A2, "Z/8"), path.string()), CorruptCache);
    EXPECT_EQ(load_members(rep, path.string()).size(), H.size());
    std::filesystem::remove(path);
}

TEST(SubgroupFromMembers, RejectsNonGroup)
{
    const auto rep = make<3>(RootKind::A2, "Z/4");
    const std::vector<Mat<3>> v{rep->identity(), rep->x(0, 1)};
    EXPECT_THROW(subgroup_from_members(rep, v, "bad"), std::invalid_argument);
}
