#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sinecert/coeffseq.hpp"
#include "sinecert/sinepoly.hpp"
#include "sinecert/sturm.hpp"

namespace sinecert {

enum class Verdict { exact_nonneg, numeric_evidence, violation };

std::string to_string(Verdict v);

/// Outcome of a nonnegativity check over [0, pi].
/// exact_nonneg: the sine-factored algebraic image is certified >= 0 on
///   [-1, 1]; the polynomial is kept so the certificate can be re-checked.
/// numeric_evidence: grid/refinement minimum stayed above the tolerance.
/// violation: a point with a negative value, exact in Y-space when the
///   Sturm path produced it.
struct Certificate {
    Verdict verdict = Verdict::exact_nonneg;

    std::optional<UniPoly> algebraic;

    double min_value = 0.0;
    double argmin = 0.0;
    double grid_step = 0.0;
    double deriv_bound = 0.0;
    double certified_lower = 0.0;

    std::optional<Rational> witness_y;
    double witness_x = 0.0;
    double witness_value = 0.0;
};

/// Per-n certificates for the partial sums of a coefficient family.
struct PSReport {
    std::string family_id;
    int n_min = 1, n_max = 0;
    std::vector<Certificate> certs;  ///< index i holds n = n_min + i
    std::optional<int> first_violation;

    bool all_nonneg() const { return !first_violation.has_value(); }
};

/// Exact certification of sum a_k sin(kx) >= 0 on [0, pi] through the
/// algebraic image p(Y) on [-1, 1]. Exact flavor required.
Certificate certify_nonneg_exact(const SinePoly& sp);

struct NumericMinOptions {
    int grid = 0;             ///< 0: choose from the term count
    int refine_iters = 40;    ///< golden-section steps around the lowest samples
    double lo = 0.0;
    double hi = 3.14159265358979323846;
};

struct NumericMin {
    double min_value = 0.0;
    double argmin = 0.0;
    double grid_step = 0.0;
    double deriv_bound = 0.0;
    double certified_lower = 0.0;  ///< grid minimum minus L h / 2
};

/// Grid scan plus local refinement; the reported lower bound uses the
/// derivative bound L = sum k |a_k|.
NumericMin numeric_min(const SinePoly& sp, NumericMinOptions opts = {});

/// Numeric nonnegativity tolerance used by the evidence path.
inline constexpr double kNumericTol = 1e-9;

/// Certifies every partial sum n = 1..N. Exact families go through the
/// Sturm path, numeric ones through the minimum scan. Per-n jobs are
/// independent; threads > 1 runs them in parallel with a deterministic
/// merge.
PSReport certify_ps(const CoeffSeq& family, int N, int threads = 1);

/// Indices n <= N whose partial sum scans below -tol.
std::vector<int> failing_partials(const CoeffSeq& family, int N, double tol = kNumericTol);

enum class ScanParam { power_exponent, sqrt_shift };

struct ScanRow {
    double param = 0.0;
    int first_fail_n = 0;  ///< 0 when every partial sum passes
    double worst_min = 0.0;
};

struct ScanResult {
    std::vector<ScanRow> rows;
    /// Bisected parameter values where the all-partial-sums-pass predicate
    /// flips between adjacent grid rows.
    std::vector<double> boundaries;
};

/// Sweeps the parameter over [lo, hi] and bisects every pass/fail
/// transition of "all partial sums n <= N have numeric min >= -tol".
ScanResult scan_threshold(ScanParam param, double lo, double hi, int N, double tol = kNumericTol,
                          int grid_points = 11);

CoeffSeq scan_family(ScanParam param, double value);

/// Checks that every even-length alternating sum a_2 - a_3 + a_4 - ...
/// of the gamma and delta families is negative up to length N: the value
/// of the would-be cosine series at pi, where its positivity fails.
bool cosine_analog_check(int N);

}  // namespace sinecert
