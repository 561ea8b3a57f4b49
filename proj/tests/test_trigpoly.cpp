#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "sinecert/sinepoly.hpp"

using namespace sinecert;

namespace {

const double kPi = 3.14159265358979323846;

Rational gamma_coeff(int k) { return k % 2 == 1 ? Rational(k + 1, k) : Rational(1); }
Rational delta_coeff(int k) { return Rational(2) - Rational(k % 2 == 0 ? 1 : -1, k); }

SinePoly gamma_partial(int n) {
    std::vector<Rational> c;
    for (int k = 1; k <= n; ++k) c.push_back(gamma_coeff(k));
    return SinePoly::from_exact(std::move(c));
}

SinePoly vietoris_partial(int n) {
    std::vector<Rational> c;
    Rational odd(1);
    for (int k = 1; k <= n; ++k) {
        int j = (k + 1) / 2;
        if (k % 2 == 1) {
            if (j > 1) odd *= Rational(2 * j - 3, 2 * j - 2);
            c.push_back(odd);
        } else {
            c.push_back(odd * Rational(2 * j - 1, 2 * j));
        }
    }
    return SinePoly::from_exact(std::move(c));
}

}  // namespace

TEST_CASE("eval on stated points") {
    SinePoly phi3 = gamma_partial(3);
    CHECK(phi3.eval(kPi / 2) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(phi3.eval(0.0) == doctest::Approx(0.0).epsilon(1e-15));
    SinePoly f2 = SinePoly::from_exact({Rational(1), Rational(1, 2)});
    CHECK(f2.eval(kPi / 2) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("to_algebraic small cases") {
    // sin x + sin 3x -> 4 Y^2
    SinePoly s = SinePoly::from_exact({Rational(1), Rational(0), Rational(1)});
    CHECK(s.to_algebraic() == UniPoly({Rational(0), Rational(0), Rational(4)}));
    // sin x + sin(2x)/2 -> 1 + Y
    SinePoly s2 = SinePoly::from_exact({Rational(1), Rational(1, 2)});
    CHECK(s2.to_algebraic() == UniPoly({Rational(1), Rational(1)}));
    CHECK_THROWS_AS(SinePoly::from_numeric({1.0}).to_algebraic(), std::logic_error);
}

TEST_CASE("to_algebraic matches the integer quartic template up to 2/15") {
    // 2a sin x + a sin 2x + (4/3) sin 3x + sin 4x + (6/5) sin 5x reduces to
    // (2/15) (144 Y^4 + 60 Y^3 - 68 Y^2 + (15a-30) Y + (15a-1))
    for (Rational a : {Rational(0), Rational(2), Rational(3913, 5000)}) {
        SinePoly sp = SinePoly::from_exact(
            {Rational(2) * a, a, Rational(4, 3), Rational(1), Rational(6, 5)});
        UniPoly expected({Rational(15) * a - Rational(1), Rational(15) * a - Rational(30),
                          Rational(-68), Rational(60), Rational(144)});
        CHECK(Rational(15, 2) * sp.to_algebraic() == expected);
    }
}

TEST_CASE("eval agrees with the algebraic reduction (property)") {
    // The reduced polynomial has Chebyshev-sized coefficients (~2^n), so it
    // is evaluated exactly at a rational cosine value; only the final sine
    // factors are floating point.
    std::mt19937 rng(415411);
    std::uniform_int_distribution<int> terms(1, 25), num(-9, 9), den(1, 9), cnum(-97, 97);
    for (int it = 0; it < 200; ++it) {
        int n = terms(rng);
        std::vector<Rational> c;
        for (int k = 0; k < n; ++k) c.emplace_back(num(rng), den(rng));
        SinePoly sp = SinePoly::from_exact(std::move(c));
        UniPoly p = sp.to_algebraic();
        for (int j = 0; j < 50; ++j) {
            Rational cosv(cnum(rng), 100);
            double x = std::acos(cosv.to_double());
            double lhs = sp.eval(x);
            double rhs = std::sin(x) * p.eval(cosv).to_double();
            CHECK(std::abs(lhs - rhs) <= 1e-11);
        }
    }
}

TEST_CASE("phi and theta blocks") {
    SinePoly p2 = phi_block(2);
    CHECK(p2.coeff_q(1) == Rational(1));
    CHECK(p2.coeff_q(2) == Rational(1, 2));
    SinePoly t4 = theta_block(4);
    CHECK(t4.coeff_q(1) == Rational(0));
    CHECK(t4.coeff_q(2) == Rational(0));
    CHECK(t4.coeff_q(3) == Rational(1));
    CHECK(t4.coeff_q(4) == Rational(-3, 4));
    CHECK_THROWS_AS(phi_block(1), std::invalid_argument);

    // 2 phi_2 + (4/3) phi_4 expands to the 4-term extremal sum {2, 1, 4/3, 1}
    SinePoly s = Rational(2) * phi_block(2) + Rational(4, 3) * phi_block(4);
    for (int k = 1; k <= 4; ++k) CHECK(s.coeff_q(k) == gamma_coeff(k));
}

TEST_CASE("block_decompose structure and round trip") {
    BlockForm b4 = block_decompose(4, BlockFamily::phi);
    REQUIRE(b4.blocks.size() == 2);
    CHECK(b4.blocks[0] == std::pair<int, Rational>(2, Rational(2)));
    CHECK(b4.blocks[1] == std::pair<int, Rational>(4, Rational(4, 3)));
    CHECK_FALSE(b4.trailing.has_value());

    BlockForm b5 = block_decompose(5, BlockFamily::phi);
    REQUIRE(b5.trailing.has_value());
    CHECK(*b5.trailing == Rational(6, 5));

    BlockForm b1 = block_decompose(1, BlockFamily::phi);
    CHECK(b1.blocks.empty());
    REQUIRE(b1.trailing.has_value());
    CHECK(*b1.trailing == Rational(2));
    CHECK(b1.expand().coeff_q(1) == Rational(2));

    // expansion reproduces the coefficient families exactly for n = 1..40
    for (int n = 1; n <= 40; ++n) {
        SinePoly phi = block_decompose(n, BlockFamily::phi).expand();
        SinePoly theta = block_decompose(n, BlockFamily::theta).expand();
        for (int k = 1; k <= n; ++k) {
            CHECK(phi.coeff_q(k) == gamma_coeff(k));
            Rational want = k % 2 == 1 ? gamma_coeff(k) : -gamma_coeff(k);
            CHECK(theta.coeff_q(k) == want);
        }
    }
}

TEST_CASE("reflect") {
    SinePoly phi3 = gamma_partial(3);
    SinePoly r = phi3.reflect();
    CHECK(r.coeff_q(1) == Rational(2));
    CHECK(r.coeff_q(2) == Rational(-1));
    CHECK(r.coeff_q(3) == Rational(4, 3));

    SinePoly v4 = vietoris_partial(4).reflect();
    CHECK(v4.coeff_q(1) == Rational(1));
    CHECK(v4.coeff_q(2) == Rational(-1, 2));
    CHECK(v4.coeff_q(3) == Rational(1, 2));
    CHECK(v4.coeff_q(4) == Rational(-3, 8));

    std::mt19937 rng(5);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_real_distribution<double> xs(0.0, kPi);
    for (int it = 0; it < 30; ++it) {
        std::vector<Rational> c;
        for (int k = 0; k < 9; ++k) c.emplace_back(num(rng), 7);
        SinePoly sp = SinePoly::from_exact(std::move(c));
        SinePoly rr = sp.reflect().reflect();
        for (int k = 1; k <= 9; ++k) CHECK(rr.coeff_q(k) == sp.coeff_q(k));
        double x = xs(rng);
        CHECK(sp.reflect().eval(x) == doctest::Approx(sp.eval(kPi - x)).epsilon(1e-12));
    }
}

TEST_CASE("closed-form identity suite") {
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> xs(0.05, kPi - 0.05);
    for (auto id : {TrigIdentity::odd_sine_sum, TrigIdentity::full_sine_sum,
                    TrigIdentity::odd_cosine_sum, TrigIdentity::alt_cosine_sum}) {
        for (int n = 1; n <= 30; ++n) {
            int tested = 0;
            while (tested < 20) {
                double x = xs(rng);
                std::pair<double, double> v;
                try {
                    v = closed_form(id, n, x);
                } catch (const std::domain_error&) {
                    continue;
                }
                CHECK(std::abs(v.first - v.second) <= 1e-11);
                ++tested;
            }
        }
    }
    CHECK_THROWS_AS(closed_form(TrigIdentity::odd_sine_sum, 3, kPi), std::domain_error);
    CHECK_THROWS_AS(closed_form(TrigIdentity::alt_cosine_sum, 3, kPi), std::domain_error);

    // double-angle special case of the odd cosine sum
    auto [l, r] = closed_form(TrigIdentity::odd_cosine_sum, 1, 0.83);
    CHECK(l == doctest::Approx(std::cos(0.83)).epsilon(1e-14));
    CHECK(r == doctest::Approx(std::cos(0.83)).epsilon(1e-14));
}

TEST_CASE("odd-harmonic comb satisfies 2 sin(x) C(n) = 1 - cos(2nx)") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> xs(0.0, kPi);
    for (int n = 1; n <= 30; ++n) {
        std::vector<Rational> c(static_cast<size_t>(2 * n - 1), Rational(0));
        for (int j = 1; j <= n; ++j) c[static_cast<size_t>(2 * j - 2)] = Rational(1);
        SinePoly comb = SinePoly::from_exact(std::move(c));
        for (int t = 0; t < 20; ++t) {
            double x = xs(rng);
            double lhs = 2.0 * std::sin(x) * comb.eval(x);
            double rhs = 1.0 - std::cos(2.0 * n * x);
            CHECK(std::abs(lhs - rhs) <= 1e-11);
        }
    }
}

TEST_CASE("coefficient identities between the extremal families") {
    // 2 Phi = F + Phi2 termwise, k = 1..40
    for (int k = 1; k <= 40; ++k) {
        Rational lhs = Rational(2) * gamma_coeff(k);
        Rational rhs = Rational(1, k) + delta_coeff(k);
        CHECK(lhs == rhs);
    }
    // Phi = 2(1-t) phi_2 + Phi_1(t) as an identity in a free rational t
    for (Rational t : {Rational(0), Rational(1, 3), Rational(7827, 10000), Rational(-2, 5)}) {
        SinePoly phi1_head = SinePoly::from_exact({Rational(2) * t, t, Rational(4, 3),
                                                   Rational(1), Rational(6, 5)});
        SinePoly lhs = Rational(2) * (Rational(1) - t) * phi_block(2) + phi1_head;
        for (int k = 1; k <= 5; ++k) CHECK(lhs.coeff_q(k) == gamma_coeff(k));
    }
}
