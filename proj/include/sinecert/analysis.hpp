#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sinecert/discriminant.hpp"
#include "sinecert/sturm.hpp"

namespace sinecert {

/// A named constant from the verification suite, with whatever exact
/// backing it has (isolated algebraic root, rational, or a bracketed
/// numeric root of a transcendental equation).
struct ProofConstant {
    std::string name;
    double value = 0.0;
    double residual = 0.0;                 ///< defining-equation residual at value
    std::pair<double, double> bracket{0, 0};
};

/// First positive zero of sin z - z cos z, bisected over [pi, 3pi/2].
/// Transcendental: carried as a bracketed numeric value.
ProofConstant sigma_constant();

/// Integer quartic 54675 a^4 - 2442195 a^3 + 2182800 a^2 - 115424 a - 96429
/// whose second-largest real root is the critical first-ratio constant.
UniPoly critical_quartic();

/// The critical constant itself, isolated to width 1e-12.
AlgebraicReal critical_alpha();

/// All four real roots of the critical quartic, refined to 1e-12.
std::vector<double> critical_quartic_roots();

/// Quartic template p_a(Y) = 144 Y^4 + 60 Y^3 - 68 Y^2 + (15a-30) Y + (15a-1)
/// associated with the 5-term sharpened head (2a, a, 4/3, 1, 6/5).
ParamPoly head_quartic_template();

/// Rebuilds the critical quartic from the template: disc_Y as a polynomial
/// in a, integer-primitive with positive leading coefficient, compared
/// against critical_quartic(). Also checks the two sanity substitutions
/// (a = 2 nonnegative, a = 0 crossing). Throws with both polynomials
/// rendered when the comparison fails.
bool alpha_pipeline_check();

/// Tail lower-envelope numerator data in T = tan(x/4). `reconstructed` is
/// computed exactly from
///   73542/103909 - T/2 - (4347/1250) T (1-T^2)^3 / (1+T^2)^4
/// over the common denominator (1+T^2)^4; `printed` carries the reference
/// integer coefficients this check is asked to match.
struct TailPolyCheck {
    UniPoly reconstructed;
    UniPoly printed;
    bool match = false;
    bool reconstructed_positive = false;  ///< no roots in (0,1), positive at 0 and 1
    bool printed_positive = false;
    int reconstructed_roots01 = 0;
    int printed_roots01 = 0;
};

TailPolyCheck tail_polynomial_data();

/// Strict form of the check: throws on reconstruction mismatch, otherwise
/// returns the positivity verdict.
bool tail_polynomial_check();

/// f(n, x) = integral_0^x sin(n s) / (2 sin s) ds for x in [0, pi].
/// Integer n uses the exact trigonometric closed forms; real n falls back
/// to adaptive quadrature (absolute tolerance 1e-12).
double sine_kernel_integral(double n, double x);

/// Critical-point profile of the kernel integral on [pi/n, pi/2]: the
/// even-order points 2pi j / n are the local minima; their values must
/// increase with j.
struct CriticalProfile {
    double order = 0.0;
    std::vector<double> points;
    std::vector<double> values;
    bool increasing = false;
};

CriticalProfile sine_kernel_minima(int n);

/// g(m, y) = (-1)^{(m+1)/2} integral_0^y cos(m t) / (2 cos t) dt for odd m,
/// evaluated through the reflection closed form
/// g(m, y) = f(m, pi/2 - y) - f(m, pi/2).
double cosine_kernel_integral(int m, double y);

/// Direct adaptive quadrature of the same integral (cross-check path).
double cosine_kernel_quadrature(int m, double y);

/// Critical points of g(m, .), numbered from the right:
/// y_i = (m - 2i) pi / (2m), i = 1 .. (m-1)/2.
double cosine_kernel_critical_point(int m, int i);

struct BoundCheck {
    std::string name;
    bool ok = false;
    double worst = 0.0;     ///< extremal margin or value, see name
    double worst_at = 0.0;
};

/// Grid/critical-point verification of the scalar bounds used by the tail
/// arguments: the lower envelope F1 >= 0 on [0,pi]; tan(x/4) <= 0.32 x on
/// [0,pi]; sec t <= 1.06 on [0,1/3]; g(m,.) <= 0.22 on [0,pi/2] and <= 0.06
/// on [0,11/9] for odd m = 43..201.
std::vector<BoundCheck> tail_bound_checks();

struct KernelMonotonicity {
    bool positive = false;       ///< h_n > 0 on (0, 2pi]
    bool increasing = false;     ///< h_n nondecreasing on (0, 2pi]
    bool slope_nonneg = false;   ///< auxiliary 3 sin u - 2u cos u >= 0 on [0, 2pi/n]
    double xi_display_at_zero = 0.0;
    double worst_gap = 0.0;
};

/// h_n(t) = 1/(2n sin(t/n)) - 1/(2(n+1) sin(t/(n+1))) over n in
/// [n_lo, n_hi]: positivity and monotone increase on (0, 2pi], checked on a
/// dense grid in extended precision (the difference cancels near 0).
KernelMonotonicity kernel_difference_monotonicity(int n_lo, int n_hi);

struct Thresholds {
    double sqrt_shift_star = 0.0;      ///< (8 - 9 a^2)/(9 a^2 - 4) at the critical constant
    double exponent_first = 0.0;       ///< power-family feasibility threshold, first hypothesis set
    double exponent_second = 0.0;      ///< same for the second hypothesis set
};

/// Hypothesis-feasibility thresholds for the two parameterized example
/// families, computed by bisecting the condition predicates themselves.
Thresholds thresholds();

}  // namespace sinecert
