#include "sinecert/analysis.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "sinecert/coeffseq.hpp"

namespace sinecert {

namespace {

const double kPi = 3.14159265358979323846;

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double fa,
                        double fb, double fm, double eps, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * eps) return left + right + delta / 15.0;
    return adaptive_simpson(f, a, m, fa, fm, flm, eps / 2.0, depth - 1) +
           adaptive_simpson(f, m, b, fm, fb, frm, eps / 2.0, depth - 1);
}

/// Integrates f over [a, b] splitting into `panels` smooth pieces first.
double integrate(const std::function<double(double)>& f, double a, double b, int panels,
                 double eps) {
    if (a == b) return 0.0;
    panels = std::max(panels, 1);
    double total = 0.0;
    for (int i = 0; i < panels; ++i) {
        double x0 = a + (b - a) * i / panels;
        double x1 = a + (b - a) * (i + 1) / panels;
        double xm = 0.5 * (x0 + x1);
        total += adaptive_simpson(f, x0, x1, f(x0), f(x1), f(xm), eps / panels, 48);
    }
    return total;
}

}  // namespace

ProofConstant sigma_constant() {
    auto f = [](double z) { return std::sin(z) - z * std::cos(z); };
    double lo = kPi, hi = 1.5 * kPi;  // f(pi) = pi > 0, f(3pi/2) = -1 < 0
    for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
        double mid = 0.5 * (lo + hi);
        if (f(mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    ProofConstant c;
    c.name = "sigma";
    c.value = 0.5 * (lo + hi);
    c.residual = std::abs(f(c.value));
    c.bracket = {lo, hi};
    return c;
}

UniPoly critical_quartic() {
    return UniPoly({Rational(-96429), Rational(-115424), Rational(2182800), Rational(-2442195),
                    Rational(54675)});
}

AlgebraicReal critical_alpha() {
    auto roots = real_roots_of(critical_quartic());
    if (roots.size() != 4)
        throw std::logic_error("critical_alpha: expected four real roots");
    return refine_root(roots[2], Rational::pow10(-12));
}

std::vector<double> critical_quartic_roots() {
    auto roots = real_roots_of(critical_quartic());
    std::vector<double> out;
    for (auto& r : roots) out.push_back(refine_root(r, Rational::pow10(-12)).to_double());
    return out;
}

ParamPoly head_quartic_template() {
    return {
        UniPoly({Rational(-1), Rational(15)}),
        UniPoly({Rational(-30), Rational(15)}),
        UniPoly::constant(Rational(-68)),
        UniPoly::constant(Rational(60)),
        UniPoly::constant(Rational(144)),
    };
}

bool alpha_pipeline_check() {
    ParamPoly tmpl = head_quartic_template();
    UniPoly disc = discriminant_in_y(tmpl).primitive_int_poslc();
    UniPoly expected = critical_quartic();
    if (!(disc == expected))
        throw std::runtime_error("alpha_pipeline_check: discriminant mismatch: got " +
                                 disc.to_string("a") + ", expected " + expected.to_string("a"));
    // large a keeps the quartic positive on [-1, 1]; a = 0 crosses
    if (!is_nonneg_on(substitute_param(tmpl, Rational(2)), Rational(-1), Rational(1)).nonneg)
        throw std::runtime_error("alpha_pipeline_check: template not nonnegative at a = 2");
    if (count_real_roots(substitute_param(tmpl, Rational(0)), Rational(-1), Rational(1)) < 1)
        throw std::runtime_error("alpha_pipeline_check: template has no crossing at a = 0");
    return true;
}

TailPolyCheck tail_polynomial_data() {
    TailPolyCheck out;
    // numerator of  73542/103909 - T/2 - (4347/1250) T (1-T^2)^3/(1+T^2)^4
    // over (1+T^2)^4, cleared to coprime integer coefficients
    UniPoly t({Rational(0), Rational(1)});
    UniPoly one_plus = UniPoly({Rational(1), Rational(0), Rational(1)});   // 1 + T^2
    UniPoly one_minus = UniPoly({Rational(1), Rational(0), Rational(-1)}); // 1 - T^2
    UniPoly op4 = one_plus * one_plus * one_plus * one_plus;
    UniPoly om3 = one_minus * one_minus * one_minus;
    UniPoly num = Rational(73542, 103909) * op4 - Rational(1, 2) * (t * op4) -
                  Rational(4347, 1250) * (t * om3);
    out.reconstructed = num.positive_scaled();
    out.printed = UniPoly({Rational(91927500), Rational(-497656173), Rational(367710000),
                           Rational(1171222269), Rational(551565000), Rational(-1630859769),
                           Rational(367710000), Rational(267837423), Rational(91927500),
                           Rational(-45963750)});
    out.match = out.reconstructed == out.printed;
    auto positivity = [](const UniPoly& p, int& roots01) {
        roots01 = count_real_roots(p, Rational(0), Rational(1));
        return roots01 == 0 && p.sign_at(Rational(0)) > 0 && p.sign_at(Rational(1)) > 0;
    };
    out.reconstructed_positive = positivity(out.reconstructed, out.reconstructed_roots01);
    out.printed_positive = positivity(out.printed, out.printed_roots01);
    return out;
}

bool tail_polynomial_check() {
    TailPolyCheck d = tail_polynomial_data();
    if (!d.match)
        throw std::runtime_error("tail_polynomial_check: reconstruction mismatch: got " +
                                 d.reconstructed.to_string("T") + ", reference " +
                                 d.printed.to_string("T"));
    return d.reconstructed_positive;
}

double sine_kernel_integral(double n, double x) {
    if (x < 0.0 || x > kPi + 1e-15)
        throw std::invalid_argument("sine_kernel_integral: x must lie in [0, pi]");
    double rounded = std::round(n);
    if (n > 0.5 && std::abs(n - rounded) < 1e-12) {
        long ni = static_cast<long>(rounded);
        double s = 0.0, comp = 0.0;
        auto add = [&](double term) {
            double y = term - comp;
            double tt = s + y;
            comp = (tt - s) - y;
            s = tt;
        };
        if (ni % 2 == 0) {
            // sum of sin((2j-1)x)/(2j-1), j = 1..n/2
            for (long j = 1; j <= ni / 2; ++j) add(std::sin((2 * j - 1) * x) / (2 * j - 1));
        } else {
            // x/2 + sum of sin(2kx)/(2k), k = 1..(n-1)/2
            add(x / 2.0);
            for (long k = 1; k <= (ni - 1) / 2; ++k) add(std::sin(2 * k * x) / (2 * k));
        }
        return s;
    }
    auto integrand = [n](double s) {
        if (std::abs(s) < 1e-14) return n / 2.0;
        return std::sin(n * s) / (2.0 * std::sin(s));
    };
    int panels = static_cast<int>(std::ceil(n * x / kPi)) + 1;
    return integrate(integrand, 0.0, x, panels, 1e-12);
}

CriticalProfile sine_kernel_minima(int n) {
    if (n < 4) throw std::invalid_argument("sine_kernel_minima: n must be >= 4");
    CriticalProfile prof;
    prof.order = n;
    for (int j = 2;; j += 2) {
        double xj = j * kPi / n;
        if (xj > kPi / 2.0 + 1e-15) break;
        prof.points.push_back(xj);
        prof.values.push_back(sine_kernel_integral(n, xj));
    }
    prof.increasing = true;
    for (size_t i = 0; i + 1 < prof.values.size(); ++i)
        prof.increasing = prof.increasing && prof.values[i] < prof.values[i + 1];
    return prof;
}

double cosine_kernel_integral(int m, double y) {
    if (m < 3 || m % 2 == 0)
        throw std::invalid_argument("cosine_kernel_integral: m must be odd and >= 3");
    if (y < 0.0 || y > kPi / 2.0 + 1e-15)
        throw std::invalid_argument("cosine_kernel_integral: y must lie in [0, pi/2]");
    // reflection: g(m, y) = f(m, pi/2 - y) - f(m, pi/2), and for odd m the
    // closed form collapses to -y/2 + sum (-1)^{k+1} sin(2ky)/(2k)
    double s = -y / 2.0, comp = 0.0;
    for (long k = 1; k <= (m - 1) / 2; ++k) {
        double term = std::sin(2 * k * y) / (2 * k);
        if (k % 2 == 0) term = -term;
        double yy = term - comp;
        double tt = s + yy;
        comp = (tt - s) - yy;
        s = tt;
    }
    return s;
}

double cosine_kernel_quadrature(int m, double y) {
    if (m < 3 || m % 2 == 0)
        throw std::invalid_argument("cosine_kernel_quadrature: m must be odd and >= 3");
    auto integrand = [m](double t) { return std::cos(m * t) / (2.0 * std::cos(t)); };
    int panels = static_cast<int>(std::ceil(m * y / kPi)) + 1;
    double v = integrate(integrand, 0.0, y, panels, 1e-12);
    return ((m + 1) / 2) % 2 == 0 ? v : -v;
}

double cosine_kernel_critical_point(int m, int i) {
    if (i < 1 || i > (m - 1) / 2)
        throw std::invalid_argument("cosine_kernel_critical_point: index out of range");
    return (m - 2 * i) * kPi / (2.0 * m);
}

std::vector<BoundCheck> tail_bound_checks() {
    std::vector<BoundCheck> out;

    {  // lower envelope 73542/103909 - tan(x/4)/2 - 0.4347 (sin x + sin(2x)/2)
        BoundCheck b;
        b.name = "tail_envelope_nonneg_[0,pi]";
        const double c0 = 73542.0 / 103909.0, c1 = 4347.0 / 10000.0;
        double worst = 1e300, at = 0.0;
        const int n = 31416;
        for (int i = 0; i <= n; ++i) {
            double x = kPi * i / n;
            double v = c0 - std::tan(x / 4.0) / 2.0 - c1 * (std::sin(x) + std::sin(2 * x) / 2.0);
            if (v < worst) { worst = v; at = x; }
        }
        b.worst = worst;
        b.worst_at = at;
        b.ok = worst >= 0.0;
        out.push_back(b);
    }
    {  // tan(x/4) <= 0.32 x on [0, pi]
        BoundCheck b;
        b.name = "tan_quarter_le_0.32x_[0,pi]";
        double worst = 1e300, at = 0.0;
        const int n = 31416;
        for (int i = 0; i <= n; ++i) {
            double x = kPi * i / n;
            double margin = 0.32 * x - std::tan(x / 4.0);
            if (margin < worst) { worst = margin; at = x; }
        }
        b.worst = worst;
        b.worst_at = at;
        b.ok = worst >= 0.0;
        out.push_back(b);
    }
    {  // 1/cos t <= 1.06 on [0, 1/3]
        BoundCheck b;
        b.name = "sec_le_1.06_[0,1/3]";
        double worst = 1e300, at = 0.0;
        const int n = 3334;
        for (int i = 0; i <= n; ++i) {
            double t = (1.0 / 3.0) * i / n;
            double margin = 1.06 - 1.0 / std::cos(t);
            if (margin < worst) { worst = margin; at = t; }
        }
        b.worst = worst;
        b.worst_at = at;
        b.ok = worst >= 0.0;
        out.push_back(b);
    }
    {  // g(m, .) <= 0.22 on [0, pi/2] and <= 0.06 on [0, 11/9], odd m 43..201;
       // extrema of g sit exactly at the critical points, so those plus the
       // interval endpoints give the true maxima
        BoundCheck bh, bi;
        bh.name = "osc_kernel_le_0.22_[0,pi/2]";
        bi.name = "osc_kernel_le_0.06_[0,11/9]";
        double mh = -1e300, mi = -1e300, ah = 0, ai = 0;
        for (int m = 43; m <= 201; m += 2) {
            auto consider = [&](double y) {
                double v = cosine_kernel_integral(m, y);
                if (v > mh) { mh = v; ah = y; }
                if (y <= 11.0 / 9.0 && v > mi) { mi = v; ai = y; }
            };
            for (int i = 1; i <= (m - 1) / 2; ++i) consider(cosine_kernel_critical_point(m, i));
            consider(kPi / 2.0);
            consider(11.0 / 9.0);
            consider(0.0);
        }
        bh.worst = mh;
        bh.worst_at = ah;
        bh.ok = mh <= 0.22;
        bi.worst = mi;
        bi.worst_at = ai;
        bi.ok = mi <= 0.06;
        out.push_back(bh);
        out.push_back(bi);
    }
    return out;
}

KernelMonotonicity kernel_difference_monotonicity(int n_lo, int n_hi) {
    if (n_lo < 4 || n_hi < n_lo)
        throw std::invalid_argument("kernel_difference_monotonicity: need 4 <= n_lo <= n_hi");
    KernelMonotonicity rep;
    rep.positive = rep.increasing = rep.slope_nonneg = true;
    rep.worst_gap = 1e300;
    const int grid = 20000;
    for (int n = n_lo; n <= n_hi; ++n) {
        // extended precision: the difference of the two cosecant terms
        // cancels heavily for small t
        auto h = [n](long double t) {
            long double a = 1.0L / (2.0L * n * std::sin(t / n));
            long double b = 1.0L / (2.0L * (n + 1) * std::sin(t / (n + 1)));
            return a - b;
        };
        long double prev = 0.0L;
        for (int i = 1; i <= grid; ++i) {
            long double t = 2.0L * kPi * i / grid;
            long double v = h(t);
            if (v <= 0.0L) rep.positive = false;
            if (i > 1 && v + 1e-18L < prev) rep.increasing = false;
            if (i > 1) rep.worst_gap = std::min(rep.worst_gap, static_cast<double>(v - prev));
            prev = v;
        }
        // slope factor 3 sin u - 2u cos u with u = t/n, t in [0, 2pi]
        for (int i = 0; i <= 2000; ++i) {
            double u = 2.0 * kPi * i / 2000 / n;
            if (3.0 * std::sin(u) - 2.0 * u * std::cos(u) < -1e-12) rep.slope_nonneg = false;
        }
    }
    // value at zero of the as-displayed auxiliary form (recorded, not asserted)
    rep.xi_display_at_zero = 2.0;
    return rep;
}

Thresholds thresholds() {
    Thresholds th;
    AlgebraicReal alpha = critical_alpha();
    double a = alpha.to_double();
    th.sqrt_shift_star = (8.0 - 9.0 * a * a) / (9.0 * a * a - 4.0);

    // smallest exponent for which the hypothesis set holds through N = 60;
    // the predicates are monotone in the exponent
    const int N = 60;
    auto first_set = [&](double g) {
        CoeffSeq fam = CoeffSeq::power_phi(g);
        if (!check_condition(Condition::v, fam, N).ok) return false;
        if (!check_condition(Condition::first_alpha, fam, N, &alpha).ok) return false;
        // the relaxed even/odd step applies from the second block onward
        for (int j = 2; 2 * j + 1 <= N; ++j) {
            double lhs = fam.coeff_d(2 * j);
            double rhs = static_cast<double>(2 * j + 1) / (2 * j + 2) * fam.coeff_d(2 * j + 1);
            if (lhs < rhs - 1e-15) return false;
        }
        return true;
    };
    auto second_set = [&](double g) {
        CoeffSeq fam = CoeffSeq::power_phi(g);
        return check_condition(Condition::v, fam, N).ok &&
               check_condition(Condition::kv2, fam, N).ok;
    };
    auto bisect = [](const std::function<bool(double)>& pred, double lo, double hi) {
        for (int it = 0; it < 60; ++it) {
            double mid = 0.5 * (lo + hi);
            if (pred(mid))
                hi = mid;
            else
                lo = mid;
        }
        return 0.5 * (lo + hi);
    };
    th.exponent_first = bisect(first_set, 0.0, 1.0);
    th.exponent_second = bisect(second_set, 0.0, 1.0);
    return th;
}

}  // namespace sinecert
