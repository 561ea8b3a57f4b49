#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "sinecert/certify.hpp"

using namespace sinecert;

namespace {

const double kPi = 3.14159265358979323846;

SinePoly head_plus_tail(int n) {
    // gamma partial of length 5 plus (6/n) sin(nx)
    std::vector<Rational> c = {Rational(2), Rational(1), Rational(4, 3), Rational(1), Rational(6, 5)};
    c.resize(static_cast<size_t>(n), Rational(0));
    c.back() = Rational(6, n);
    return SinePoly::from_exact(std::move(c));
}

}  // namespace

TEST_CASE("certify_nonneg_exact on single polynomials") {
    // sin x + sin(5x)/5
    SinePoly s = SinePoly::from_exact(
        {Rational(1), Rational(0), Rational(0), Rational(0), Rational(1, 5)});
    Certificate good = certify_nonneg_exact(s);
    CHECK(good.verdict == Verdict::exact_nonneg);
    REQUIRE(good.algebraic.has_value());  // payload re-checkable
    CHECK(is_nonneg_on(*good.algebraic, Rational(-1), Rational(1)).nonneg);

    // 5-term extremal head + (6/8) sin 8x: negative dip, exact witness
    Certificate bad = certify_nonneg_exact(head_plus_tail(8));
    CHECK(bad.verdict == Verdict::violation);
    REQUIRE(bad.witness_y.has_value());
    REQUIRE(bad.algebraic.has_value());
    CHECK(bad.algebraic->sign_at(*bad.witness_y) < 0);   // re-checkable in Y space
    CHECK(bad.witness_value < 0.0);                      // and numerically in x space
    CHECK(bad.witness_x > 0.0);
    CHECK(bad.witness_x < kPi);

    // same construction with sin 12x is nonnegative again
    CHECK(certify_nonneg_exact(head_plus_tail(12)).verdict == Verdict::exact_nonneg);

    CHECK_THROWS_AS(certify_nonneg_exact(SinePoly::from_numeric({1.0})), std::logic_error);

    // zero polynomial is trivially nonnegative
    CHECK(certify_nonneg_exact(SinePoly::from_exact({Rational(0)})).verdict ==
          Verdict::exact_nonneg);
}

TEST_CASE("numeric_min") {
    // sin x: minimum 0 at the endpoints
    NumericMin m = numeric_min(SinePoly::from_exact({Rational(1)}));
    CHECK(m.min_value >= -1e-15);
    CHECK(m.min_value <= 1e-12);

    // 2 sin x + sin 2x + (1 + sqrt(3)/2) sin 3x stays nonnegative
    SinePoly po1 = SinePoly::from_numeric({2.0, 1.0, 1.0 + std::sqrt(3.0) / 2.0});
    CHECK(numeric_min(po1).min_value >= -1e-9);

    // 3 sin x + sin 2x + (3/2 + sqrt 2) sin 3x stays nonnegative
    SinePoly po2 = SinePoly::from_numeric({3.0, 1.0, 1.5 + std::sqrt(2.0)});
    CHECK(numeric_min(po2).min_value >= -1e-9);

    // the violating tail construction dips well below zero inside (0, pi)
    NumericMin v = numeric_min(head_plus_tail(8));
    CHECK(v.min_value < -0.2);
    CHECK(v.argmin > 0.1);
    CHECK(v.argmin < kPi - 0.1);
    CHECK(v.certified_lower <= v.min_value);
    CHECK(v.deriv_bound > 0.0);

    // restricted interval option
    NumericMinOptions opts;
    opts.lo = 0.0;
    opts.hi = kPi / 8;
    CHECK(numeric_min(head_plus_tail(8), opts).min_value >= -1e-12);
}

TEST_CASE("certify_ps over families") {
    PSReport g = certify_ps(CoeffSeq::gamma(), 12);
    CHECK(g.all_nonneg());
    for (const auto& c : g.certs) CHECK(c.verdict == Verdict::exact_nonneg);

    PSReport d = certify_ps(CoeffSeq::delta(), 12, 2);
    CHECK(d.all_nonneg());

    // the sharpened head family: below the critical constant only n = 5 fails
    PSReport p = certify_ps(CoeffSeq::phi1_max(Rational(3913, 5000)), 8);
    REQUIRE(p.first_violation.has_value());
    CHECK(*p.first_violation == 5);
    for (int n = 1; n <= 8; ++n)
        CHECK((p.certs[static_cast<size_t>(n - 1)].verdict == Verdict::violation) == (n == 5));

    // just above it, n = 5 certifies
    PSReport q = certify_ps(CoeffSeq::phi1_max(Rational(7827, 10000)), 5);
    CHECK(q.all_nonneg());

    // numeric family path
    PSReport s = certify_ps(CoeffSeq::power_phi(0.30), 10);
    CHECK(s.all_nonneg());
    for (const auto& c : s.certs) CHECK(c.verdict == Verdict::numeric_evidence);
}

TEST_CASE("exact and numeric verdicts agree in sign") {
    std::vector<SinePoly> cases;
    cases.push_back(head_plus_tail(8));            // violation
    cases.push_back(head_plus_tail(10));           // violation
    cases.push_back(head_plus_tail(12));           // nonneg
    cases.push_back(CoeffSeq::gamma().partial(9));   // nonneg
    cases.push_back(CoeffSeq::delta().partial(11));  // nonneg
    for (const auto& sp : cases) {
        Certificate e = certify_nonneg_exact(sp);
        NumericMin m = numeric_min(sp);
        if (e.verdict == Verdict::exact_nonneg) {
            CHECK(m.min_value >= -1e-9);
        } else {
            CHECK(m.min_value < 0.0);
            CHECK(e.witness_value < 0.0);
        }
    }
}

TEST_CASE("theta blocks are nonnegative up to sigma/k") {
    const double sigma = 4.4934094579090642;
    for (int k = 2; k <= 60; ++k) {
        NumericMinOptions opts;
        opts.hi = sigma / k;
        opts.grid = 4000;
        NumericMin m = numeric_min(theta_block(k), opts);
        CHECK(m.min_value >= -1e-11);
    }
}

TEST_CASE("extremal partial sums are nonnegative on the endpoint intervals") {
    for (int n = 2; n <= 40; ++n) {
        SinePoly phi = CoeffSeq::gamma().partial(n);
        for (auto [lo, hi] : {std::pair{0.0, kPi / n}, std::pair{kPi - kPi / n, kPi}}) {
            NumericMinOptions opts;
            opts.lo = lo;
            opts.hi = hi;
            opts.grid = 4000;
            CHECK(numeric_min(phi, opts).min_value >= -1e-11);
        }
    }
}

TEST_CASE("alternating endpoint sums stay nonnegative for certified families") {
    for (const CoeffSeq& fam : {CoeffSeq::gamma(), CoeffSeq::delta(), CoeffSeq::vietoris_c()}) {
        PSReport rep = certify_ps(fam, 12);
        REQUIRE(rep.all_nonneg());
        for (int n = 1; n <= 12; ++n) CHECK(belov_partial(fam, n) >= Rational(0));
    }
}

TEST_CASE("comparison principle consistency at small scale") {
    // any sequence dominated by a certified-PS family is itself certified PS
    std::mt19937 rng(90210);
    std::uniform_int_distribution<int> num(1, 5), den(1, 5);
    const int N = 12;
    for (const CoeffSeq& top : {CoeffSeq::gamma(), CoeffSeq::delta(), CoeffSeq::vietoris_c()}) {
        REQUIRE(certify_ps(top, N).all_nonneg());
        for (int it = 0; it < 8; ++it) {
            Rational r(num(rng), 1);
            std::vector<Rational> b;
            for (int k = 1; k <= N; ++k) {
                if (k > 1) {
                    int d = den(rng);
                    r *= Rational(d, d + num(rng));
                }
                b.push_back(top.coeff_q(k) * r);
            }
            CoeffSeq dominated = CoeffSeq::custom(std::move(b));
            REQUIRE(dominates(top, dominated, N));
            CHECK(certify_ps(dominated, N).all_nonneg());
        }
    }
}

TEST_CASE("scan: power family failing set at the sub-threshold exponent") {
    // at exponent 0.23 both the 5- and 6-term partial sums dip below zero
    std::vector<int> fails = failing_partials(CoeffSeq::power_phi(0.23), 20);
    CHECK(fails == std::vector<int>{5, 6});
    // the 6-term sum recovers first (near 0.232), the 5-term one near 0.2365
    CHECK(failing_partials(CoeffSeq::power_phi(0.234), 20) == std::vector<int>{5});
    CHECK(failing_partials(CoeffSeq::power_phi(0.24), 20).empty());
    CHECK(failing_partials(CoeffSeq::power_phi(0.26), 20).empty());
}

TEST_CASE("scan: shifted sqrt family boundary") {
    // the 4-term partial sum is tangent at shift 23/13: the reduced cubic is
    // (6Y-1)^2 (Y+1)/7 at the critical ratio 6/7
    SinePoly tangent = SinePoly::from_exact({Rational(1), Rational(1, 2), Rational(6, 7),
                                             Rational(9, 14)});
    CHECK(certify_nonneg_exact(tangent).verdict == Verdict::exact_nonneg);
    SinePoly past = SinePoly::from_exact({Rational(1), Rational(1, 2), Rational(62, 70),
                                          Rational(3, 4) * Rational(62, 70)});
    CHECK(certify_nonneg_exact(past).verdict == Verdict::violation);

    ScanResult sr = scan_threshold(ScanParam::sqrt_shift, 1.70, 1.76, 12, 1e-9, 4);
    REQUIRE(sr.boundaries.size() == 1);
    CHECK(sr.boundaries[0] == doctest::Approx(1.7331572).epsilon(1e-4));
    CHECK(sr.rows.front().first_fail_n == 0);
    CHECK(sr.rows.back().first_fail_n == 5);
}

TEST_CASE("cosine analog fails at the reflection endpoint") {
    CHECK(cosine_analog_check(40));
    CHECK_THROWS_AS(cosine_analog_check(3), std::invalid_argument);
    // the first pair already witnesses it: gamma_2 - gamma_3 = -1/3 < 0,
    // delta_2 - delta_3 = -5/6 < 0
    CHECK(CoeffSeq::gamma().coeff_q(2) - CoeffSeq::gamma().coeff_q(3) == Rational(-1, 3));
    CHECK(CoeffSeq::delta().coeff_q(2) - CoeffSeq::delta().coeff_q(3) == Rational(-5, 6));
}
