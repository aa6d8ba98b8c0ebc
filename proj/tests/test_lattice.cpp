#include <doctest.h>

#include <random>

#include "gring/lattice.hpp"

using namespace gring;

static std::vector<Int> col(std::vector<long> v) {
    return std::vector<Int>(v.begin(), v.end());
}

TEST_CASE("hnf of simple lattices") {
    // columns (2,0) and (3,0) span Z x {0}
    IntMat L{col({2, 0}), col({3, 0})};
    auto H = hnf(L, 2);
    REQUIRE(H.size() == 1);
    CHECK(H[0] == col({1, 0}));

    // full lattice from redundant generators
    IntMat M{col({2, 1}), col({1, 1}), col({4, 3})};
    auto H2 = hnf(M, 2);
    REQUIRE(H2.size() == 2);
    CHECK(hnf_contains(H2, 2, col({1, 0})));
    CHECK(hnf_contains(H2, 2, col({0, 1})));
}

TEST_CASE("membership and subset") {
    IntMat L{col({2, 0, 0}), col({0, 3, 0})};
    auto H = hnf(L, 3);
    CHECK(hnf_contains(H, 3, col({4, 3, 0})));
    CHECK(!hnf_contains(H, 3, col({1, 0, 0})));
    CHECK(!hnf_contains(H, 3, col({0, 0, 1})));

    IntMat sub{col({4, 0, 0}), col({2, 3, 0})};
    CHECK(lattice_subset(sub, L, 3));
    CHECK(!lattice_subset(L, sub, 3));
}

TEST_CASE("index") {
    IntMat Z2{col({1, 0}), col({0, 1})};
    IntMat sub{col({2, 0}), col({0, 3})};
    CHECK(lattice_index(sub, Z2, 2) == 6);
    CHECK(lattice_index(Z2, Z2, 2) == 1);
    // rank mismatch
    IntMat line{col({1, 0})};
    CHECK(lattice_index(line, Z2, 2) == 0);
}

TEST_CASE("random lattice invariants") {
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 20; ++rep) {
        unsigned n = 2 + rng() % 3;
        IntMat L;
        for (unsigned j = 0; j < n + 2; ++j) {
            std::vector<Int> c(n);
            for (auto& x : c) x = (long)(rng() % 11) - 5;
            L.push_back(c);
        }
        auto H = hnf(L, n);
        // every generator is contained in its own HNF
        for (const auto& c : L) CHECK(hnf_contains(H, n, c));
        // the HNF spans no more than the generators: hnf of union equals hnf
        IntMat both = L;
        for (const auto& c : H) both.push_back(c);
        auto H2 = hnf(both, n);
        CHECK(H2.size() == H.size());
        for (const auto& c : H2) CHECK(hnf_contains(H, n, c));
        // doubling the lattice strictly shrinks it (when nonzero)
        if (!H.empty()) {
            IntMat twice;
            for (const auto& c : L) {
                auto d = c;
                for (auto& x : d) x *= 2;
                twice.push_back(d);
            }
            CHECK(lattice_subset(twice, L, n));
        }
    }
}

TEST_CASE("integer solve") {
    // A = [[2,0],[1,1]] columns; solve A y = b
    IntMat A{col({2, 1}), col({0, 1})};
    auto y = solve_integer(A, 2, col({4, 5}));
    REQUIRE(y.has_value());
    CHECK((*y)[0] * 2 + (*y)[1] * 0 == 4);
    CHECK((*y)[0] * 1 + (*y)[1] * 1 == 5);

    // no integral solution
    CHECK(!solve_integer(A, 2, col({1, 0})).has_value());

    // underdetermined system still yields a solution
    IntMat B{col({2, 0}), col({3, 0}), col({0, 5})};
    auto z = solve_integer(B, 2, col({1, 10}));
    REQUIRE(z.has_value());
    CHECK((*z)[0] * 2 + (*z)[1] * 3 == 1);
    CHECK((*z)[2] * 5 == 10);
}
