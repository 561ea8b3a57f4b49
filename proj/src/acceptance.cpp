#include "sinecert/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "sinecert/analysis.hpp"
#include "sinecert/certify.hpp"

namespace sinecert::acceptance {

namespace {

const double kPi = 3.14159265358979323846;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void clause(CriterionResult& c, const std::string& name, bool pass, bool expected = true,
            const std::string& note = "") {
    c.clauses.push_back({name, pass, expected, note});
}

bool all_exact_nonneg(const PSReport& rep) {
    for (const auto& cert : rep.certs)
        if (cert.verdict != Verdict::exact_nonneg) return false;
    return true;
}

std::string join_ints(const std::vector<int>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

CriterionResult criterion1(int threads) {
    CriterionResult c{1, "exact certification of both maximal families, n = 1..30", {}, 0};
    auto t0 = Clock::now();
    PSReport g = certify_ps(CoeffSeq::gamma(), 30, threads);
    PSReport d = certify_ps(CoeffSeq::delta(), 30, threads);
    double secs = seconds_since(t0);
    clause(c, "gamma partial sums 1..30 all exact_nonneg", all_exact_nonneg(g));
    clause(c, "delta partial sums 1..30 all exact_nonneg", all_exact_nonneg(d));
    clause(c, "runtime under 2 minutes", secs < 120.0,
           true, "took " + std::to_string(secs) + " s");
    return c;
}

CriterionResult criterion2(int threads) {
    CriterionResult c{2, "criticality of the first-ratio constant", {}, 0};
    PSReport above = certify_ps(CoeffSeq::phi1_max(Rational(7827, 10000)), 5, threads);
    clause(c, "n = 5 certifies exact_nonneg just above the constant",
           above.certs[4].verdict == Verdict::exact_nonneg);
    PSReport below = certify_ps(CoeffSeq::phi1_max(Rational(3913, 5000)), 20, threads);
    bool only5 = true;
    for (int n = 1; n <= 20; ++n) {
        bool viol = below.certs[static_cast<size_t>(n - 1)].verdict == Verdict::violation;
        if (viol != (n == 5)) only5 = false;
    }
    clause(c, "just below it, exactly n = 5 yields a violation (n <= 20)", only5);
    return c;
}

CriterionResult criterion3(int) {
    CriterionResult c{3, "discriminant pipeline for the critical constant", {}, 0};
    bool pipeline = false;
    try {
        pipeline = alpha_pipeline_check();
    } catch (const std::exception&) {
        pipeline = false;
    }
    clause(c, "primitive discriminant equals the reference quartic exactly", pipeline);
    AlgebraicReal alpha = critical_alpha();
    double a = alpha.to_double();
    clause(c, "second-largest root = 0.78265213271 within 1e-9",
           std::abs(a - 0.78265213271) <= 1e-9);
    clause(c, "3a/4 = 0.5869890995 within 1e-9", std::abs(0.75 * a - 0.5869890995) <= 1e-9);
    auto roots = critical_quartic_roots();
    bool four = roots.size() == 4 && std::abs(roots[0] + 0.17) <= 5e-3 &&
                std::abs(roots[1] - 0.30) <= 5e-3 && std::abs(roots[2] - 0.78) <= 5e-3 &&
                std::abs(roots[3] - 43.76) <= 5e-3;
    clause(c, "four real roots near -0.17, 0.30, 0.78, 43.76 (5e-3)", four);
    return c;
}

CriterionResult criterion4(int) {
    CriterionResult c{4, "first positive zero of sin z - z cos z", {}, 0};
    ProofConstant s = sigma_constant();
    clause(c, "value = 4.493409458 within 1e-8", std::abs(s.value - 4.493409458) <= 1e-8);
    clause(c, "residual |sin s - s cos s| <= 1e-11", s.residual <= 1e-11);
    return c;
}

CriterionResult criterion5(int) {
    CriterionResult c{5, "tail envelope numerator in T = tan(x/4)", {}, 0};
    TailPolyCheck d = tail_polynomial_data();
    clause(c, "reconstruction matches the reference coefficient table exactly", d.match,
           /*expected=*/false,
           "the reference table encodes a tan-term coefficient 36771/103909 where the "
           "defining expression has 1/2; the exact reconstruction differs in the five "
           "odd-degree coefficients");
    clause(c, "reconstructed numerator: no roots in (0,1), positive endpoints",
           d.reconstructed_positive);
    clause(c, "reference table: no roots in (0,1), positive endpoints", d.printed_positive);
    return c;
}

CriterionResult criterion6(int) {
    CriterionResult c{6, "sine kernel integral suite", {}, 0};
    clause(c, "f(4, pi/2) = 2/3 exactly (1e-14)",
           std::abs(sine_kernel_integral(4, kPi / 2) - 2.0 / 3.0) <= 1e-14);
    double f20 = sine_kernel_integral(20, kPi / 10.0);
    double exact = 2.0 / 15.0 + (1580.0 / 4641.0) * std::cos(kPi / 5.0) +
                   (1820.0 / 1881.0) * std::cos(2.0 * kPi / 5.0);
    clause(c, "f(20, x2) matches its cosine closed form to 1e-10",
           std::abs(f20 - exact) <= 1e-10);
    clause(c, "f(20, x2) exceeds 73542/103909", f20 > 73542.0 / 103909.0);
    bool chain = true;
    double prev = 0.0;
    for (int n = 4; n <= 100; ++n) {
        double v = sine_kernel_integral(n, 2.0 * kPi / n);
        if (n > 4 && v <= prev) chain = false;
        prev = v;
    }
    clause(c, "first-minimum values strictly increase for n = 4..100", chain);
    bool within = true;
    for (int n = 4; n <= 100; ++n) within = within && sine_kernel_minima(n).increasing;
    clause(c, "within each n the even-critical-point values increase", within);
    return c;
}

CriterionResult criterion7(int) {
    CriterionResult c{7, "cosine kernel bounds", {}, 0};
    double d12 = cosine_kernel_integral(43, cosine_kernel_critical_point(43, 1)) -
                 cosine_kernel_integral(43, cosine_kernel_critical_point(43, 2));
    clause(c, "first difference = 0.21731814075 within 1e-8",
           std::abs(d12 - 0.21731814075) <= 1e-8);
    double d56 = cosine_kernel_integral(43, cosine_kernel_critical_point(43, 5)) -
                 cosine_kernel_integral(43, cosine_kernel_critical_point(43, 6));
    clause(c, "fifth difference = 0.059552923006 within 1e-8",
           std::abs(d56 - 0.059552923006) <= 1e-8);
    auto checks = tail_bound_checks();
    clause(c, "kernel bounded by 0.22 on [0, pi/2] for odd orders 43..201", checks[3].ok);
    clause(c, "kernel bounded by 0.06 on [0, 11/9] for odd orders 43..201", checks[4].ok);
    bool reflect_ok = true;
    for (int m : {43, 45, 47})
        for (double y : {0.1, 0.5, 1.0, 1.5})
            reflect_ok = reflect_ok &&
                         std::abs(cosine_kernel_integral(m, y) - cosine_kernel_quadrature(m, y)) <=
                             1e-9;
    clause(c, "reflection closed form vs direct quadrature to 1e-9", reflect_ok);
    return c;
}

SinePoly head_plus_tail(int n) {
    std::vector<Rational> coeffs = {Rational(2), Rational(1), Rational(4, 3), Rational(1),
                                    Rational(6, 5)};
    coeffs.resize(static_cast<size_t>(n), Rational(0));
    coeffs.back() = Rational(6, n);
    return SinePoly::from_exact(std::move(coeffs));
}

CriterionResult criterion8(int) {
    CriterionResult c{8, "alternating-sum-compatible counterexamples", {}, 0};
    for (int n : {8, 10}) {
        SinePoly sp = head_plus_tail(n);
        Certificate cert = certify_nonneg_exact(sp);
        bool belov_ok = true;
        CoeffSeq seq = CoeffSeq::custom(sp.coeffs_q());
        for (int m = 1; m <= n; ++m) belov_ok = belov_ok && belov_partial(seq, m) >= Rational(0);
        clause(c, "tail at sin(" + std::to_string(n) + "x): violation",
               cert.verdict == Verdict::violation);
        clause(c, "tail at sin(" + std::to_string(n) + "x): alternating sums stay >= 0",
               belov_ok);
    }
    bool evens_ok = true;
    for (int n = 12; n <= 30; n += 2)
        evens_ok = evens_ok && certify_nonneg_exact(head_plus_tail(n)).verdict ==
                                   Verdict::exact_nonneg;
    clause(c, "tails at sin(nx), even n = 12..30: exact_nonneg", evens_ok);
    return c;
}

CriterionResult criterion9(int) {
    CriterionResult c{9, "elementary nonnegative constructions", {}, 0};
    std::mt19937 rng(99177);
    std::uniform_real_distribution<double> xs(0.0, kPi);
    bool comb_ok = true;
    for (int n = 1; n <= 30 && comb_ok; ++n) {
        double comb_c = 0.0;
        for (int t = 0; t < 20; ++t) {
            double x = xs(rng);
            double lhs = 0.0;
            for (int j = 1; j <= n; ++j) lhs += std::sin((2 * j - 1) * x);
            comb_c = std::max(comb_c, std::abs(2.0 * std::sin(x) * lhs - (1.0 - std::cos(2.0 * n * x))));
        }
        comb_ok = comb_c <= 1e-11;
    }
    clause(c, "odd-harmonic comb identity 2 sin(x) C(n) = 1 - cos(2nx) to 1e-11", comb_ok, true,
           "identity holds with the sine factor; the cosine-factor transcription is "
           "refuted numerically");
    SinePoly po1 = SinePoly::from_numeric({2.0, 1.0, 1.0 + std::sqrt(3.0) / 2.0});
    SinePoly po2 = SinePoly::from_numeric({3.0, 1.0, 1.5 + std::sqrt(2.0)});
    clause(c, "both 3-term sample polynomials have numeric min >= -1e-9",
           numeric_min(po1).min_value >= -1e-9 && numeric_min(po2).min_value >= -1e-9);
    bool share_ok = true;
    for (int m = 2; m <= 40; ++m) {
        std::vector<Rational> coeffs(static_cast<size_t>(m), Rational(0));
        coeffs[0] = Rational(1);
        coeffs[static_cast<size_t>(m - 1)] = Rational(1, m);
        share_ok = share_ok && certify_nonneg_exact(SinePoly::from_exact(std::move(coeffs)))
                                       .verdict == Verdict::exact_nonneg;
    }
    clause(c, "sin x + sin(mx)/m exact_nonneg for m = 2..40", share_ok);
    return c;
}

CriterionResult criterion10(int threads) {
    CriterionResult c{10, "condition equalities, dominance matrix, comparison principle", {}, 0};
    auto vg = check_condition(Condition::v, CoeffSeq::gamma(), 40);
    auto kvg = check_condition(Condition::kv, CoeffSeq::gamma(), 40);
    clause(c, "gamma attains equality everywhere in v and kv",
           vg.ok && kvg.ok && vg.equality_at.size() == 20 && kvg.equality_at.size() == 19);
    auto vd = check_condition(Condition::v, CoeffSeq::delta(), 40);
    auto kv2d = check_condition(Condition::kv2, CoeffSeq::delta(), 40);
    clause(c, "delta attains equality everywhere in v and kv2",
           vd.ok && kv2d.ok && vd.equality_at.size() == 20 && kv2d.equality_at.size() == 19);

    AlgebraicReal alpha = critical_alpha();
    DominanceMatrix m = odd_sequence_dominance(alpha.to_double());
    // expected matrix: row dominates column; order vietoris, sqrt, first-ratio,
    // second-ratio, ones
    const bool expected[5][5] = {
        {true, false, false, false, false},
        {true, true, false, false, false},
        {true, true, true, false, false},
        {true, true, false, true, false},
        {true, true, true, true, true},
    };
    bool matrix_ok = true;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) matrix_ok = matrix_ok && m.ge[i][j] == expected[i][j];
    clause(c, "dominance matrix of the extremal odd subsequences reproduced", matrix_ok, true,
           "the sqrt sequence dominates the classical one (their stated order is "
           "reversed relative to the ordering definition); all other relations as stated");

    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> num(1, 5), den(1, 5), pick(0, 2);
    const int N = 12;
    const CoeffSeq bases[3] = {CoeffSeq::vietoris_c(), CoeffSeq::gamma(), CoeffSeq::delta()};
    bool cp_ok = true;
    for (int it = 0; it < 100 && cp_ok; ++it) {
        const CoeffSeq& top = bases[pick(rng)];
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
        cp_ok = dominates(top, dominated, N) && certify_ps(dominated, N, threads).all_nonneg();
    }
    clause(c, "comparison principle: 100 random dominated sequences certify at N = 12", cp_ok);
    return c;
}

CriterionResult criterion11(int) {
    CriterionResult c{11, "example-family thresholds", {}, 0};
    Thresholds th = thresholds();
    clause(c, "sqrt-shift feasibility bound = 1.64393 within 1e-4",
           std::abs(th.sqrt_shift_star - 1.64393) <= 1e-4);
    clause(c, "first exponent threshold = 0.2599 within 1e-3",
           std::abs(th.exponent_first - 0.2599) <= 1e-3);
    clause(c, "second exponent threshold = 0.36257 within 1e-3",
           std::abs(th.exponent_second - 0.36257) <= 1e-3);
    std::vector<int> fails = failing_partials(CoeffSeq::power_phi(0.23), 60);
    clause(c, "exponent 0.23 scan: exactly one failing partial sum (the sixth)",
           fails == std::vector<int>{6},
           /*expected=*/false,
           "found failing indices {" + join_ints(fails) +
               "}: the 5-term sum also dips below zero at this exponent (its own "
               "recovery threshold is ~0.2365, above the 6-term one at ~0.232)");
    return c;
}

// test-local brute-force root scan, independent of the Sturm path
int scan_roots(const UniPoly& p, const UniPoly& dp, const Rational& lo, const Rational& hi,
               int cells, int depth) {
    int found = 0;
    int last = p.sign_at(lo);
    Rational prev_x = lo;
    auto deriv_flips = [&dp](const Rational& a, const Rational& b) {
        int prev = 0;
        for (int i = 0; i <= 8; ++i) {
            Rational x = a + Rational(i) * (b - a) / Rational(8);
            int s = dp.sign_at(x);
            if (s == 0) continue;
            if (prev != 0 && s != prev) return true;
            prev = s;
        }
        return false;
    };
    for (int i = 1; i <= cells; ++i) {
        Rational x = (i == cells) ? hi : lo + Rational(i) * (hi - lo) / Rational(cells);
        int s = p.sign_at(x);
        if (s == 0) {
            ++found;
            last = 0;
            prev_x = x;
            continue;
        }
        if (last == 0) {
            last = s;
        } else if (s != last) {
            ++found;
            last = s;
        } else if (depth > 0 && deriv_flips(prev_x, x)) {
            found += scan_roots(p, dp, prev_x, x, 8, depth - 1);
        }
        prev_x = x;
    }
    return found;
}

CriterionResult criterion12(int, double elapsed_so_far, Clock::time_point t0) {
    CriterionResult c{12, "property suites and total runtime", {}, 0};
    (void)elapsed_so_far;

    std::mt19937 rng(1234321);
    std::uniform_real_distribution<double> xs(0.05, kPi - 0.05);
    bool ids_ok = true;
    for (auto id : {TrigIdentity::odd_sine_sum, TrigIdentity::full_sine_sum,
                    TrigIdentity::odd_cosine_sum, TrigIdentity::alt_cosine_sum}) {
        for (int n = 1; n <= 30 && ids_ok; ++n) {
            int tested = 0;
            while (tested < 20) {
                double x = xs(rng);
                try {
                    auto [lhs, rhs] = closed_form(id, n, x);
                    ids_ok = ids_ok && std::abs(lhs - rhs) <= 1e-11;
                    ++tested;
                } catch (const std::domain_error&) {
                }
            }
        }
    }
    clause(c, "trigonometric identity suite to 1e-11", ids_ok);

    std::uniform_int_distribution<int> deg(1, 6), coef(-5, 5);
    bool oracle_ok = true;
    int done = 0;
    while (done < 120) {
        int d = deg(rng);
        std::vector<Rational> co(static_cast<size_t>(d) + 1);
        for (auto& x : co) x = Rational(coef(rng));
        UniPoly p(std::move(co));
        if (p.degree() < 1) continue;
        UniPoly dp = p.derivative();
        UniPoly g = gcd(p, dp);
        if (g.degree() > 0) continue;  // oracle only counts odd-multiplicity roots
        Rational lo(-8), hi(8);
        if (p.sign_at(lo) == 0 || p.sign_at(hi) == 0) continue;
        oracle_ok = oracle_ok && count_real_roots(p, lo, hi) == scan_roots(p, dp, lo, hi, 512, 9);
        ++done;
    }
    clause(c, "Sturm count agrees with the sign-scan oracle (120 random polynomials)",
           oracle_ok);

    bool refl_ok = true;
    std::uniform_int_distribution<int> rnum(-9, 9);
    for (int it = 0; it < 30; ++it) {
        std::vector<Rational> co;
        for (int k = 0; k < 11; ++k) co.emplace_back(rnum(rng), 5);
        SinePoly sp = SinePoly::from_exact(std::move(co));
        SinePoly rr = sp.reflect().reflect();
        for (int k = 1; k <= 11; ++k) refl_ok = refl_ok && rr.coeff_q(k) == sp.coeff_q(k);
        double x = xs(rng);
        refl_ok = refl_ok && std::abs(sp.reflect().eval(x) - sp.eval(kPi - x)) <= 1e-11;
    }
    clause(c, "reflection is an involution and mirrors evaluation", refl_ok);

    const double sigma = sigma_constant().value;
    bool theta_ok = true;
    for (int k = 2; k <= 60; ++k) {
        NumericMinOptions opts;
        opts.hi = sigma / k;
        opts.grid = 4000;
        theta_ok = theta_ok && numeric_min(theta_block(k), opts).min_value >= -1e-11;
    }
    clause(c, "theta blocks nonnegative on [0, sigma/k] for k = 2..60", theta_ok);

    bool endpoint_ok = true;
    for (int n = 2; n <= 40; ++n) {
        SinePoly phi = CoeffSeq::gamma().partial(n);
        for (auto [lo, hi] : {std::pair{0.0, kPi / n}, std::pair{kPi - kPi / n, kPi}}) {
            NumericMinOptions opts;
            opts.lo = lo;
            opts.hi = hi;
            opts.grid = 4000;
            endpoint_ok = endpoint_ok && numeric_min(phi, opts).min_value >= -1e-11;
        }
    }
    clause(c, "extremal partial sums nonnegative on the endpoint intervals (n <= 40)",
           endpoint_ok);

    KernelMonotonicity mono = kernel_difference_monotonicity(4, 50);
    clause(c, "kernel difference positive and increasing for n = 4..50",
           mono.positive && mono.increasing && mono.slope_nonneg);

    clause(c, "alternating even-length sums negative for both families (length <= 40)",
           cosine_analog_check(40));

    bool ph_ok = true;
    for (int k = 1; k <= 40; ++k) {
        Rational gk = CoeffSeq::gamma().coeff_q(k);
        ph_ok = ph_ok && Rational(2) * gk == Rational(1, k) + CoeffSeq::delta().coeff_q(k);
    }
    clause(c, "doubled extremal coefficients split into 1/k plus the second family", ph_ok);

    double total = seconds_since(t0);
    clause(c, "full suite under 10 minutes", total < 600.0, true,
           "took " + std::to_string(total) + " s");
    return c;
}

}  // namespace

bool CriterionResult::pass() const {
    for (const auto& cl : clauses)
        if (!cl.pass) return false;
    return true;
}

bool CriterionResult::as_expected() const {
    for (const auto& cl : clauses)
        if (cl.pass != cl.expected_pass) return false;
    return true;
}

std::vector<CriterionResult> run_all(int threads) {
    auto t0 = Clock::now();
    std::vector<CriterionResult> out;
    auto timed = [&](CriterionResult c, Clock::time_point start) {
        c.seconds = seconds_since(start);
        out.push_back(std::move(c));
    };
    auto run = [&](auto fn) {
        auto start = Clock::now();
        timed(fn(threads), start);
    };
    run(criterion1);
    run(criterion2);
    run(criterion3);
    run(criterion4);
    run(criterion5);
    run(criterion6);
    run(criterion7);
    run(criterion8);
    run(criterion9);
    run(criterion10);
    run(criterion11);
    {
        auto start = Clock::now();
        timed(criterion12(threads, seconds_since(t0), t0), start);
    }
    return out;
}

bool all_as_expected(const std::vector<CriterionResult>& results) {
    for (const auto& r : results)
        if (!r.as_expected()) return false;
    return true;
}

}  // namespace sinecert::acceptance
