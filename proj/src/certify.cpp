#include "sinecert/certify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace sinecert {

namespace {
const double kPi = 3.14159265358979323846;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::exact_nonneg: return "exact_nonneg";
        case Verdict::numeric_evidence: return "numeric_evidence";
        case Verdict::violation: return "violation";
    }
    return "?";
}

Certificate certify_nonneg_exact(const SinePoly& sp) {
    if (!sp.exact()) throw std::logic_error("certify_nonneg_exact: exact coefficients required");
    Certificate cert;
    UniPoly p = sp.to_algebraic();
    if (p.is_zero()) {
        cert.verdict = Verdict::exact_nonneg;
        cert.algebraic = p;
        return cert;
    }
    // sin(x) >= 0 on [0, pi], so the sum is NN iff p(Y) >= 0 on [-1, 1]
    NonnegResult r = is_nonneg_on(p, Rational(-1), Rational(1));
    if (r.nonneg) {
        cert.verdict = Verdict::exact_nonneg;
        cert.algebraic = p;
        return cert;
    }
    cert.verdict = Verdict::violation;
    cert.algebraic = p;
    cert.witness_y = *r.witness;
    cert.witness_x = std::acos(r.witness->to_double());
    cert.witness_value = sp.eval(cert.witness_x);
    return cert;
}

NumericMin numeric_min(const SinePoly& sp, NumericMinOptions opts) {
    NumericMin out;
    const int n = sp.terms();
    int grid = opts.grid > 0 ? opts.grid : std::max(2000, 20 * n * n);
    const double lo = opts.lo, hi = opts.hi;
    const double h = (hi - lo) / grid;
    out.grid_step = h;
    out.deriv_bound = sp.derivative_bound();

    // grid pass
    std::vector<double> vals(static_cast<size_t>(grid) + 1);
    double best = std::numeric_limits<double>::infinity();
    int best_i = 0;
    for (int i = 0; i <= grid; ++i) {
        double x = lo + i * h;
        double v = sp.eval(x);
        vals[static_cast<size_t>(i)] = v;
        if (v < best) {
            best = v;
            best_i = i;
        }
    }
    out.certified_lower = best - out.deriv_bound * h / 2.0;

    // refine around the lowest local minima by golden-section search
    struct Cand { double v; int i; };
    std::vector<Cand> cands;
    for (int i = 1; i < grid; ++i)
        if (vals[i] <= vals[i - 1] && vals[i] <= vals[i + 1]) cands.push_back({vals[i], i});
    cands.push_back({vals[static_cast<size_t>(best_i)], best_i});
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) { return a.v < b.v; });
    if (cands.size() > 8) cands.resize(8);

    const double gr = 0.6180339887498949;
    double min_v = best, min_x = lo + best_i * h;
    for (const auto& c : cands) {
        double a = lo + std::max(0, c.i - 1) * h;
        double b = lo + std::min(grid, c.i + 1) * h;
        double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
        double f1 = sp.eval(x1), f2 = sp.eval(x2);
        for (int it = 0; it < opts.refine_iters; ++it) {
            if (f1 < f2) {
                b = x2; x2 = x1; f2 = f1;
                x1 = b - gr * (b - a);
                f1 = sp.eval(x1);
            } else {
                a = x1; x1 = x2; f1 = f2;
                x2 = a + gr * (b - a);
                f2 = sp.eval(x2);
            }
        }
        double xm = 0.5 * (a + b), fm = sp.eval(xm);
        if (fm < min_v) { min_v = fm; min_x = xm; }
    }
    out.min_value = min_v;
    out.argmin = min_x;
    return out;
}

namespace {

Certificate certify_numeric(const SinePoly& sp) {
    Certificate cert;
    NumericMin m = numeric_min(sp);
    cert.min_value = m.min_value;
    cert.argmin = m.argmin;
    cert.grid_step = m.grid_step;
    cert.deriv_bound = m.deriv_bound;
    cert.certified_lower = m.certified_lower;
    if (m.min_value >= -kNumericTol) {
        cert.verdict = Verdict::numeric_evidence;
    } else {
        cert.verdict = Verdict::violation;
        cert.witness_x = m.argmin;
        cert.witness_value = m.min_value;
    }
    return cert;
}

template <class Fn>
void parallel_over(int count, int threads, Fn fn) {
    if (threads <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    threads = std::min(threads, count);
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    for (auto& th : pool) th.join();
}

}  // namespace

PSReport certify_ps(const CoeffSeq& family, int N, int threads) {
    if (N < 1) throw std::invalid_argument("certify_ps: N must be >= 1");
    PSReport rep;
    rep.family_id = family.id();
    rep.n_min = 1;
    rep.n_max = N;
    rep.certs.resize(static_cast<size_t>(N));
    const bool exact = family.exact();
    parallel_over(N, threads, [&](int i) {
        SinePoly sp = family.partial(i + 1);
        rep.certs[static_cast<size_t>(i)] = exact ? certify_nonneg_exact(sp) : certify_numeric(sp);
    });
    for (int i = 0; i < N; ++i) {
        if (rep.certs[static_cast<size_t>(i)].verdict == Verdict::violation) {
            rep.first_violation = i + 1;
            break;
        }
    }
    return rep;
}

std::vector<int> failing_partials(const CoeffSeq& family, int N, double tol) {
    std::vector<int> out;
    for (int n = 1; n <= N; ++n) {
        NumericMinOptions opts;
        opts.grid = std::max(2000, 120 * n);
        NumericMin m = numeric_min(family.partial(n), opts);
        if (m.min_value < -tol) out.push_back(n);
    }
    return out;
}

CoeffSeq scan_family(ScanParam param, double value) {
    return param == ScanParam::power_exponent ? CoeffSeq::power_phi(value)
                                              : CoeffSeq::shifted_sqrt_phi(value);
}

ScanResult scan_threshold(ScanParam param, double lo, double hi, int N, double tol,
                          int grid_points) {
    if (!(lo < hi)) throw std::invalid_argument("scan_threshold: empty range");
    if (grid_points < 2) grid_points = 2;
    ScanResult res;

    auto evaluate = [&](double v) {
        ScanRow row;
        row.param = v;
        row.worst_min = std::numeric_limits<double>::infinity();
        CoeffSeq fam = scan_family(param, v);
        for (int n = 1; n <= N; ++n) {
            NumericMinOptions opts;
            opts.grid = std::max(2000, 120 * n);
            NumericMin m = numeric_min(fam.partial(n), opts);
            row.worst_min = std::min(row.worst_min, m.min_value);
            if (row.first_fail_n == 0 && m.min_value < -tol) row.first_fail_n = n;
        }
        return row;
    };

    for (int i = 0; i < grid_points; ++i) {
        double v = lo + (hi - lo) * i / (grid_points - 1);
        res.rows.push_back(evaluate(v));
    }
    for (size_t i = 0; i + 1 < res.rows.size(); ++i) {
        bool pass_a = res.rows[i].first_fail_n == 0;
        bool pass_b = res.rows[i + 1].first_fail_n == 0;
        if (pass_a == pass_b) continue;
        double a = res.rows[i].param, b = res.rows[i + 1].param;
        for (int it = 0; it < 25; ++it) {
            double mid = 0.5 * (a + b);
            bool mid_pass = evaluate(mid).first_fail_n == 0;
            if (mid_pass == pass_a)
                a = mid;
            else
                b = mid;
        }
        res.boundaries.push_back(0.5 * (a + b));
    }
    return res;
}

bool cosine_analog_check(int N) {
    if (N < 4 || N % 2 != 0)
        throw std::invalid_argument("cosine_analog_check: N must be even and >= 4");
    for (const CoeffSeq& fam : {CoeffSeq::gamma(), CoeffSeq::delta()}) {
        // value of the alternating tail a_2 - a_3 + a_4 - ... at even lengths
        Rational sum(0);
        for (int len = 1; len <= N; ++len) {
            int k = len + 1;
            Rational t = fam.coeff_q(k);
            sum += (len % 2 == 1) ? t : -t;
            if (len % 2 == 0 && sum >= Rational(0)) return false;
        }
    }
    return true;
}

}  // namespace sinecert
