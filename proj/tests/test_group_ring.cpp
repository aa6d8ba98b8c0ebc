#include <doctest.h>

#include <random>

#include "gring/catalog.hpp"
#include "gring/center.hpp"
#include "gring/errors.hpp"
#include "gring/group_ring.hpp"
#include "gring/lattice.hpp"

using namespace gring;

static Cyclo rat(long n, long d = 1) { return Cyclo(make_rat(Int(n), Int(d))); }

TEST_CASE("central idempotents e_psi") {
    const auto& S3 = catalog::s3();
    CharacterTable T(S3);

    // trivial character: |G|^{-1} sum_g g
    auto e0 = e_psi(T.at(0));
    for (unsigned g = 0; g < 6; ++g) CHECK(e0.c[g] == rat(1, 6));

    // degree-2 character: (1/3)(2e - (123) - (132))
    auto e2 = e_psi(T.at(2));
    CHECK(e2.c[0] == rat(2, 3));
    for (unsigned g = 1; g < 6; ++g)
        CHECK(e2.c[g] == (S3.element_order(g) == 3 ? rat(-1, 3) : rat(0)));

    // C2 sign character: (1 - g)/2
    CharacterTable T2(catalog::c2());
    auto es = e_psi(T2.at(1));
    CHECK(es.c[0] == rat(1, 2));
    CHECK(es.c[1] == rat(-1, 2));

    // partition of unity and orthogonality; centrality and idempotency
    for (const auto& name : catalog::names()) {
        const auto& G = catalog::by_name(name);
        CAPTURE(name);
        CharacterTable Tt(G);
        auto sum = GroupRingElem::zero(G);
        for (unsigned i = 0; i < Tt.size(); ++i) {
            auto e = e_psi(Tt.at(i));
            CHECK(e.is_idempotent());
            CHECK(e.is_central());
            sum = sum + e;
            for (unsigned j = 0; j < i; ++j)
                CHECK((e * e_psi(Tt.at(j))).is_zero());
        }
        CHECK(sum == GroupRingElem::one(G));
    }
}

TEST_CASE("e_subgroup") {
    const auto& S3 = catalog::s3();
    CharacterTable T(S3);

    CHECK(e_subgroup(S3.trivial_subgroup()) == GroupRingElem::one(S3));
    CHECK(e_subgroup(S3.full_subgroup()) == e_psi(T.at(0)));

    // A3 is generated by a 3-cycle (index 3 in lexicographic order)
    auto A3 = subgroup_closure(S3, {3});
    REQUIRE(A3.order() == 3);
    auto eA3 = e_subgroup(A3);
    CHECK(eA3.is_idempotent());
    // equals e_triv + e_sign by character decomposition
    CHECK(eA3 == e_psi(T.at(0)) + e_psi(T.at(1)));

    // non-normal subgroup rejected when centrality is requested
    auto H = subgroup_closure(S3, {1});
    REQUIRE(!H.is_normal());
    CHECK_THROWS_AS(e_subgroup(H), NonNormalSubgroup);
    CHECK(!e_subgroup(H, false).is_central());
}

TEST_CASE("iota_sharp") {
    const auto& S3 = catalog::s3();
    CharacterTable T(S3);

    auto g = GroupRingElem::unit(S3, 3);
    CHECK(iota_sharp(g) == GroupRingElem::unit(S3, S3.inv(3)));

    auto A3 = subgroup_closure(S3, {3});
    CHECK(iota_sharp(e_subgroup(A3)) == e_subgroup(A3));

    // anti-multiplicative, involution, e_psi -> e_psi-check
    std::mt19937_64 rng(3);
    auto rnd = [&]() {
        auto x = GroupRingElem::zero(S3);
        for (auto& q : x.c) q = rat((long)(rng() % 7) - 3);
        return x;
    };
    for (int rep = 0; rep < 10; ++rep) {
        auto x = rnd(), y = rnd();
        CHECK(iota_sharp(x * y) == iota_sharp(y) * iota_sharp(x));
        CHECK(iota_sharp(iota_sharp(x)) == x);
    }
    for (const auto& name : catalog::names()) {
        const auto& G = catalog::by_name(name);
        CharacterTable Tt(G);
        for (unsigned i = 0; i < Tt.size(); ++i)
            CHECK(iota_sharp(e_psi(Tt.at(i))) == e_psi(Tt.at(Tt.contragredient(i))));
    }
}

TEST_CASE("denominator scans") {
    const auto& C2 = catalog::c2();
    auto x = GroupRingElem::one(C2);
    CHECK(p_power_denominator(x, 2) == 0);
    CHECK(lcm_denominator(x) == 1);

    // (1 - g)/2
    auto y = (GroupRingElem::one(C2) - GroupRingElem::unit(C2, 1)) * rat(1, 2);
    CHECK(p_power_denominator(y, 2) == 1);
    CHECK(p_power_denominator(y, 3) == 0);
    CHECK(lcm_denominator(y) == 2);

    const auto& S3 = catalog::s3();
    CharacterTable T(S3);
    auto e0 = e_psi(T.at(0));
    CHECK(lcm_denominator(e0) == 6);
    // scaling by the lcm gives integer coefficients, and nothing smaller does
    auto scaled = e0 * rat(6);
    for (const auto& q : scaled.c) CHECK(q.rational().get_den() == 1);
    CHECK_THROWS_AS(p_power_denominator(x, 4), InputError);
}

TEST_CASE("center element round trips") {
    const auto& S3 = catalog::s3();
    CharacterTable T(S3);
    RepSet reps = RepSet::build(T);

    for (unsigned i = 0; i < T.size(); ++i) {
        auto e = e_psi(T.at(i));
        auto z = CenterElem::from_group_ring(T, e);
        for (unsigned j = 0; j < T.size(); ++j)
            CHECK(z.comp[j] == (i == j ? Cyclo::one() : Cyclo::zero()));
        CHECK(z.to_group_ring() == e);
        CHECK(z.is_galois_stable());
    }

    // dual matches iota_sharp
    auto x = e_psi(T.at(2)) * rat(3) + e_psi(T.at(1)) * rat(-2);
    auto z = CenterElem::from_group_ring(T, x);
    CHECK(z.dual().to_group_ring() == iota_sharp(x));
}

TEST_CASE("nrd basics") {
    const auto& S3 = catalog::s3();
    CharacterTable T(S3);
    RepSet reps = RepSet::build(T);

    // identity matrix
    std::vector<std::vector<GroupRingElem>> I2{
        {GroupRingElem::one(S3), GroupRingElem::zero(S3)},
        {GroupRingElem::zero(S3), GroupRingElem::one(S3)}};
    CHECK(nrd(reps, I2) == CenterElem::one(T));

    // 1x1 [e + (12)]: components 2 at trivial, 0 at sign, 0 at degree 2
    unsigned transposition = 1;
    REQUIRE(S3.element_order(transposition) == 2);
    std::vector<std::vector<GroupRingElem>> M{
        {GroupRingElem::one(S3) + GroupRingElem::unit(S3, transposition)}};
    auto v = nrd(reps, M);
    CHECK(v.comp[0] == rat(2));
    CHECK(v.comp[1] == rat(0));
    CHECK(v.comp[2] == rat(0));

    // 1x1 [u]: root-of-unity components
    for (unsigned g = 0; g < S3.order(); ++g) {
        auto u = nrd(reps, {{GroupRingElem::unit(S3, g)}});
        for (const auto& c : u.comp) CHECK(c * c.conj() == Cyclo::one());
    }
}

TEST_CASE("nrd multiplicativity on random pairs") {
    std::mt19937_64 rng(17);
    for (const auto& name : {std::string("C4"), std::string("S3"), std::string("Q8")}) {
        const auto& G = catalog::by_name(name);
        CharacterTable T(G);
        RepSet reps = RepSet::build(T);
        auto rnd_mat = [&](unsigned d) {
            std::vector<std::vector<GroupRingElem>> m(
                d, std::vector<GroupRingElem>(d, GroupRingElem::zero(G)));
            for (auto& row : m)
                for (auto& e : row)
                    for (unsigned s = 0; s < 2; ++s)
                        e.c[rng() % G.order()] += rat((long)(rng() % 5) - 2);
            return m;
        };
        for (unsigned d = 1; d <= 3; ++d)
            for (int rep = 0; rep < 6; ++rep) {
                auto A = rnd_mat(d), B = rnd_mat(d);
                std::vector<std::vector<GroupRingElem>> AB(
                    d, std::vector<GroupRingElem>(d, GroupRingElem::zero(G)));
                for (unsigned i = 0; i < d; ++i)
                    for (unsigned j = 0; j < d; ++j)
                        for (unsigned k = 0; k < d; ++k) AB[i][j] = AB[i][j] + A[i][k] * B[k][j];
                CHECK(nrd(reps, AB) == nrd(reps, A) * nrd(reps, B));
            }
    }
}

TEST_CASE("nrd agrees with classical determinant for abelian groups") {
    std::mt19937_64 rng(23);
    const auto& G = catalog::c6();
    CharacterTable T(G);
    RepSet reps = RepSet::build(T);
    for (int rep = 0; rep < 10; ++rep) {
        unsigned d = 1 + rng() % 3;
        std::vector<std::vector<GroupRingElem>> m(
            d, std::vector<GroupRingElem>(d, GroupRingElem::zero(G)));
        for (auto& row : m)
            for (auto& e : row) e.c[rng() % 6] += rat((long)(rng() % 5) - 2);
        // commutative determinant via cofactor expansion in Z[G]
        std::function<GroupRingElem(std::vector<std::vector<GroupRingElem>>)> det =
            [&](std::vector<std::vector<GroupRingElem>> mm) -> GroupRingElem {
            unsigned k = (unsigned)mm.size();
            if (k == 1) return mm[0][0];
            auto acc = GroupRingElem::zero(G);
            for (unsigned j = 0; j < k; ++j) {
                std::vector<std::vector<GroupRingElem>> minor;
                for (unsigned i = 1; i < k; ++i) {
                    std::vector<GroupRingElem> row;
                    for (unsigned jj = 0; jj < k; ++jj)
                        if (jj != j) row.push_back(mm[i][jj]);
                    minor.push_back(row);
                }
                auto term = mm[0][j] * det(minor);
                acc = (j % 2 == 0) ? acc + term : acc - term;
            }
            return acc;
        };
        auto classical = det(m);
        auto v = nrd(reps, m);
        // component at chi must equal chi applied to the classical determinant
        CHECK(v == CenterElem::from_group_ring(T, classical));
    }
}

TEST_CASE("whitehead generators") {
    // abelian: exactly the group elements
    const auto& C4 = catalog::c4();
    CharacterTable T4(C4);
    RepSet r4 = RepSet::build(T4);
    auto w4 = whitehead_generators(r4, 2, 2);
    CHECK(w4.gens.size() == 4);
    CHECK(w4.xi_bound == "exact-abelian");

    // trivial group: {1}
    CharacterTable T1(catalog::c1());
    RepSet r1 = RepSet::build(T1);
    auto w1 = whitehead_generators(r1, 1, 1);
    REQUIRE(w1.gens.size() == 1);
    CHECK(w1.gens[0] == CenterElem::one(T1));

    // S3: the Z-span strictly contains the Z-span of the Nrd(g) singletons
    const auto& S3 = catalog::s3();
    CharacterTable T3(S3);
    RepSet r3 = RepSet::build(T3);
    auto w3 = whitehead_generators(r3, 2, 2, 1, 16);
    IntMat big, small;
    unsigned n = S3.num_classes();
    Int denom(1);
    auto push_coords = [&](IntMat& dst, const CenterElem& z) {
        auto q = z.class_coords();
        // common denominator 6 covers all integral center coords here; scale by 6
        std::vector<Int> col;
        for (auto& x : q) {
            Rat scaled = x * 6;
            REQUIRE(scaled.get_den() == 1);
            col.push_back(scaled.get_num());
        }
        dst.push_back(col);
    };
    (void)denom;
    for (const auto& g : w3.gens) push_coords(big, g);
    for (unsigned g = 0; g < S3.order(); ++g)
        push_coords(small, nrd(r3, {{GroupRingElem::unit(S3, g)}}));
    CHECK(lattice_subset(small, big, n));
    CHECK(!lattice_subset(big, small, n));
}

TEST_CASE("denominator scans on stratum idempotents") {
    const auto& C6 = catalog::c6();
    CharacterTable T(C6);
    // e_triv for |G| = 6: denominators 6, so t = 1 for both p = 2 and p = 3
    auto e0 = e_psi(T.at(0));
    CHECK(p_power_denominator(e0, 2) == 1);
    CHECK(p_power_denominator(e0, 3) == 1);
    CHECK(p_power_denominator(e0, 5) == 0);

    // no proper divisor of the lcm clears the denominators
    std::mt19937_64 rng(29);
    for (int rep = 0; rep < 6; ++rep) {
        auto x = GroupRingElem::zero(C6);
        for (auto& q : x.c)
            q = Cyclo(make_rat(Int((long)(rng() % 9) - 4), Int(1 + rng() % 6)));
        Int l = lcm_denominator(x);
        auto scaled = x * Cyclo(make_rat(l, Int(1)));
        for (const auto& q : scaled.c) CHECK(q.rational().get_den() == 1);
        for (unsigned long d = 1; d < l; ++d) {
            if (l % d != 0 || d == (unsigned long)l.get_ui()) continue;
            auto partial = x * Cyclo(make_rat(Int(d), Int(1)));
            bool integral = true;
            for (const auto& q : partial.c)
                if (q.rational().get_den() != 1) integral = false;
            CHECK(!integral);
        }
    }
}
