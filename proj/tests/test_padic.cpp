#include "doctest.h"
#include "epslocal/padic.hpp"

#include <stdexcept>

#include <random>

using namespace epslocal;

TEST_CASE("from_rational basics") {
    auto x = PadicNumber::from_rational(1, 1, 5, 10);
    CHECK(x.valuation() == 0);
    CHECK(x.unit_digits()[0] == 1);
    for (int i = 1; i < 10; ++i) CHECK(x.unit_digits()[i] == 0);

    // 1/2 in Z_7: the digit stream of 2^{-1} mod 7^4 = 1201 = [4,3,3,3]
    auto h = PadicNumber::from_rational(1, 2, 7, 4);
    CHECK(h.valuation() == 0);
    CHECK(h.unit_digits() == std::vector<uint32_t>{4, 3, 3, 3});
    CHECK((h * PadicNumber::from_integer(2, 7, 4)).equals(PadicNumber::from_integer(1, 7, 4)));

    CHECK_THROWS_AS(PadicNumber::from_rational(1, 5, 5, 4), std::invalid_argument);
    auto y = PadicNumber::from_rational(1, 5, 5, 4, true);
    CHECK(y.valuation() == -1);
}

TEST_CASE("from_rational round-trips") {
    std::mt19937 rng(7);
    for (int64_t p : {3, 5, 13}) {
        for (int t = 0; t < 50; ++t) {
            int64_t num = static_cast<int64_t>(rng() % 4000) - 2000;
            int64_t den = static_cast<int64_t>(rng() % 500) + 1;
            if (num == 0 || den % p == 0) continue;
            auto x = PadicNumber::from_rational(num, den, p, 12);
            auto back = x * PadicNumber::from_integer(den, p, 12) - PadicNumber::from_integer(num, p, 12);
            CHECK(back.is_zero());
        }
    }
}

TEST_CASE("ring axioms at stated precision") {
    std::mt19937 rng(11);
    const int64_t p = 7;
    auto rnd = [&]() {
        int64_t n = static_cast<int64_t>(rng() % 100000) - 50000;
        if (n == 0) n = 1;
        return PadicNumber::from_integer(n, p, 9);
    };
    for (int t = 0; t < 200; ++t) {
        auto a = rnd(), b = rnd(), c = rnd();
        CHECK((a + b).equals(b + a));
        CHECK(((a + b) + c).equals(a + (b + c)));
        CHECK((a * b).equals(b * a));
        CHECK(((a * b) * c).equals(a * (b * c)));
        CHECK((a * (b + c)).equals(a * b + a * c));
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("subtraction loses precision but tracks it") {
    const int64_t p = 5;
    auto a = PadicNumber::from_integer(1 + 25, p, 6);
    auto b = PadicNumber::from_integer(1, p, 6);
    auto d = a - b;  // = 25: valuation 2, 4 digits remain
    CHECK(d.valuation() == 2);
    CHECK(d.precision() == 4);
    CHECK(d.known_abs_precision() == 6);
}

TEST_CASE("inverse and division") {
    std::mt19937 rng(13);
    for (int64_t p : {3, 11}) {
        for (int t = 0; t < 60; ++t) {
            int64_t n = static_cast<int64_t>(rng() % 9999) + 1;
            if (n % p == 0) continue;
            auto x = PadicNumber::from_integer(n, p, 10);
            CHECK((x * x.inverse()).equals(PadicNumber::from_integer(1, p, 10)));
        }
    }
}

TEST_CASE("teichmuller lifts") {
    // fixed point 1
    CHECK(teichmuller_lift(1, 7, 8).equals(PadicNumber::from_integer(1, 7, 8)));
    // -1 is its own lift: all digits p-1
    for (int64_t p : {5, 11}) {
        auto m1 = teichmuller_lift(p - 1, p, 6);
        for (auto d : m1.unit_digits()) CHECK(d == static_cast<uint32_t>(p - 1));
    }
    // t^{p-1} = 1, t = u mod p
    auto t = teichmuller_lift(2, 5, 6);
    CHECK(t.unit_digits()[0] == 2);
    CHECK(t.pow(4).equals(PadicNumber::from_integer(1, 5, 6)));

    CHECK_THROWS_AS(teichmuller_lift(0, 5, 4), std::invalid_argument);
}

TEST_CASE("teichmuller multiplicativity") {
    const int64_t p = 11;
    for (int64_t u = 1; u < p; ++u)
        for (int64_t v = 1; v < p; ++v) {
            auto lhs = teichmuller_lift(u, p, 6) * teichmuller_lift(v, p, 6);
            auto rhs = teichmuller_lift(u * v % p, p, 6);
            CHECK(lhs.equals(rhs));
        }
}

TEST_CASE("extension: defining relation and roots of unity") {
    // p = 3: pi^2 = -3 * unit
    {
        auto E = build_extension(3, 12);
        auto sq = E.pi() * E.pi();
        auto u = sq.scaled(PadicNumber::from_integer(-3, 3, 8).inverse());
        CHECK(u.pi_valuation() == 0);
        // unit = 1 + (pi-order >= 1 correction)
        auto dev = u - E.one();
        CHECK(dev.pi_valuation() >= 1);
    }
    // p = 5: zeta_p^5 = 1 and v_pi(p) = 4
    {
        auto E = build_extension(5, 20);
        CHECK(E.zeta_p().pow(5).equals_to(E.one(), 16));
        CHECK(E.from_int(5).pi_valuation() == 4);
        // sum of all p-th roots of unity vanishes
        auto s = E.zero();
        for (int j = 0; j < 5; ++j) s = s + E.zeta_p().pow(j);
        CHECK(s.is_zero_to_precision());
    }
}

TEST_CASE("extension: arithmetic consistency and inverse") {
    auto E = build_extension(5, 20);
    auto a = E.zeta_p() + E.from_int(3);
    auto b = E.pi() * E.pi() - E.from_int(2);
    CHECK((a * b).equals_to(b * a, 16));
    CHECK(((a + b) * a).equals_to(a * a + b * a, 16));
    auto ainv = a.inverse();
    CHECK((a * ainv).equals_to(E.one(), 16));
    // pi-shift round trip
    auto sh = E.pi_shift(a, 3);
    CHECK(E.pi_shift(sh, -3).equals_to(a, 12));
}

TEST_CASE("extension: hensel root of X^{p-1} = -p") {
    for (int64_t p : {3, 5, 7}) {
        auto E = build_extension(p, 10 * (p - 1));
        auto rho = E.hensel_pi_root();
        auto err = rho.pow(p - 1) + E.from_int(p);
        CHECK(err.pi_valuation() >= err.known_pi_precision());
        CHECK((rho - E.pi()).pi_valuation() >= 2);
    }
}

TEST_CASE("extension rejects p = 2") {
    CHECK_THROWS_AS(build_extension(2, 10), std::invalid_argument);
}
