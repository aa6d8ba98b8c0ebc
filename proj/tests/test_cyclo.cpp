#include <doctest.h>

#include <random>

#include "gring/cyclo.hpp"
#include "gring/errors.hpp"

using namespace gring;

static Cyclo rat(long n, long d = 1) { return Cyclo(make_rat(Int(n), Int(d))); }

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<Int>{Int(-1), Int(1)});
    CHECK(cyclotomic_polynomial(2) == std::vector<Int>{Int(1), Int(1)});
    CHECK(cyclotomic_polynomial(4) == std::vector<Int>{Int(1), Int(0), Int(1)});
    CHECK(cyclotomic_polynomial(3) == std::vector<Int>{Int(1), Int(1), Int(1)});
    CHECK(cyclotomic_polynomial(6) == std::vector<Int>{Int(1), Int(-1), Int(1)});
    CHECK(cyclotomic_polynomial(12) ==
          std::vector<Int>{Int(1), Int(0), Int(-1), Int(0), Int(1)});
}

TEST_CASE("basic identities") {
    Cyclo i = Cyclo::root_of_unity(4, 1);
    CHECK(i * i == rat(-1));

    // 1 + z3 + z3^2 = 0
    Cyclo z3 = Cyclo::root_of_unity(3, 1);
    CHECK(rat(1) + z3 + z3 * z3 == Cyclo::zero());

    // (1 - z5)^{-1} (1 - z5) = 1
    Cyclo z5 = Cyclo::root_of_unity(5, 1);
    Cyclo x = rat(1) - z5;
    CHECK(x.inverse() * x == rat(1));
    CHECK(x / x == rat(1));

    CHECK_THROWS_AS(Cyclo::zero().inverse(), ArithmeticError);
}

TEST_CASE("galois action") {
    Cyclo z4 = Cyclo::root_of_unity(4, 1);
    CHECK(z4.galois(1) == z4);
    CHECK(z4.galois(3) == -z4);

    Cyclo z5 = Cyclo::root_of_unity(5, 1);
    Cyclo x = z5 + Cyclo::root_of_unity(5, 4);
    CHECK(x.galois(2) == Cyclo::root_of_unity(5, 2) + Cyclo::root_of_unity(5, 3));

    CHECK_THROWS_AS(z4.galois(2), ArithmeticError);
}

TEST_CASE("galois composition law") {
    std::mt19937_64 rng(11);
    for (unsigned n : {3u, 4u, 5u, 8u, 12u}) {
        unsigned deg = euler_phi(n);
        std::vector<Rat> c(deg);
        for (auto& q : c) q = make_rat(Int((long)(rng() % 7) - 3), Int(1 + rng() % 4));
        Cyclo x(n, c);
        for (unsigned k = 1; k < n; ++k) {
            if (gcd_long(k, n) != 1) continue;
            for (unsigned k2 = 1; k2 < n; ++k2) {
                if (gcd_long(k2, n) != 1) continue;
                CHECK(x.galois(k).galois(k2) == x.galois((long)(k * k2 % n)));
            }
        }
    }
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(7);
    for (unsigned n : {1u, 2u, 3u, 4u, 5u, 8u, 12u}) {
        unsigned deg = euler_phi(n);
        auto rnd = [&]() {
            std::vector<Rat> c(deg);
            for (auto& q : c) q = make_rat(Int((long)(rng() % 9) - 4), Int(1 + rng() % 3));
            return Cyclo(n, c);
        };
        for (int rep = 0; rep < 8; ++rep) {
            Cyclo a = rnd(), b = rnd(), c = rnd();
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            if (!a.is_zero()) CHECK(a * a.inverse() == Cyclo::one());
        }
    }
}

TEST_CASE("level unification and reduction") {
    Cyclo z3 = Cyclo::root_of_unity(3, 1);
    Cyclo z4 = Cyclo::root_of_unity(4, 1);
    Cyclo prod = z3 * z4;
    CHECK(prod.level() == 12);
    CHECK(prod == Cyclo::root_of_unity(12, 7));

    // z12^2 has level 12 as stored but lives in Q(zeta_6)
    Cyclo x = Cyclo::root_of_unity(12, 2);
    Cyclo red = x.reduced_level();
    CHECK(red.level() == 3);  // zeta_12^2 = zeta_6 generates Q(zeta_3)
    CHECK(red == x);

    Cyclo half = rat(1, 2).at_level(8);
    CHECK(half.reduced_level().level() == 1);
    CHECK(half.is_rational());
    CHECK(half.rational() == make_rat(Int(1), Int(2)));
}

TEST_CASE("numeric embedding") {
    auto z = rat(1, 2).to_complex();
    CHECK(std::abs(z - std::complex<double>(0.5, 0.0)) < 1e-14);

    auto i = Cyclo::root_of_unity(4, 1).to_complex();
    CHECK(std::abs(i - std::complex<double>(0.0, 1.0)) < 1e-12);

    auto w = Cyclo::root_of_unity(3, 1).to_complex();
    CHECK(std::abs(w - std::complex<double>(-0.5, 0.86602540378443865)) < 1e-9);

    // embedding respects multiplication
    Cyclo a = rat(2, 3) + Cyclo::root_of_unity(8, 3);
    Cyclo b = rat(-1, 2) + Cyclo::root_of_unity(8, 1) * rat(3);
    CHECK(std::abs((a * b).to_complex() - a.to_complex() * b.to_complex()) < 1e-10);
}

TEST_CASE("rational reconstruction") {
    CHECK(rational_reconstruct(0.5, 10) == make_rat(Int(1), Int(2)));
    CHECK(rational_reconstruct(0.3333333333, 100) == make_rat(Int(1), Int(3)));
    CHECK(!rational_reconstruct(3.14159265, 10).has_value());
    CHECK(rational_reconstruct(-2.75, 100) == make_rat(Int(-11), Int(4)));

    // round trip for every denominator up to the bound
    for (long q = 1; q <= 50; ++q)
        for (long pnum : {1L, 3L, 7L, -5L}) {
            Rat r = make_rat(Int(pnum), Int(q));
            auto back = rational_reconstruct(r.get_d(), 50);
            REQUIRE(back.has_value());
            CHECK(*back == r);
        }
}
