#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sinecert/unipoly.hpp"

namespace sinecert {

/// Finite sine polynomial sum a_k sin(kx), k = 1..n. Exact flavor carries
/// rational coefficients and supports the algebraic reduction; numeric
/// flavor only evaluates.
class SinePoly {
public:
    enum class Flavor { exact, numeric };

    SinePoly() : flavor_(Flavor::exact) {}
    static SinePoly from_exact(std::vector<Rational> coeffs);
    static SinePoly from_numeric(std::vector<double> coeffs);

    Flavor flavor() const { return flavor_; }
    bool exact() const { return flavor_ == Flavor::exact; }
    int terms() const { return static_cast<int>(d_.size()); }

    /// k is 1-based; zero outside the stored range.
    Rational coeff_q(int k) const;
    double coeff_d(int k) const;
    const std::vector<Rational>& coeffs_q() const;

    /// Compensated (Kahan) summation with per-term sin.
    double eval(double x) const;

    /// p with sum a_k sin(kx) = sin(x) p(cos x), via the second-kind
    /// Chebyshev recurrence. Exact flavor only.
    UniPoly to_algebraic() const;

    /// Coefficients b_k = (-1)^{k+1} a_k; eval(reflect, x) == eval(*this, pi - x).
    SinePoly reflect() const;

    /// sum k |a_k|, a global derivative bound.
    double derivative_bound() const;

    friend SinePoly operator+(const SinePoly& a, const SinePoly& b);
    friend SinePoly operator*(const Rational& s, const SinePoly& p);

private:
    Flavor flavor_;
    std::vector<Rational> q_;  // exact flavor only
    std::vector<double> d_;    // always mirrors the coefficients
};

/// Two-term bundle sin((k-1)x) + ((k-1)/k) sin(kx), k >= 2.
SinePoly phi_block(int k);
/// Two-term bundle sin((k-1)x) - ((k-1)/k) sin(kx), k >= 2.
SinePoly theta_block(int k);

enum class BlockFamily { phi, theta };

/// Weighted block representation of the extremal partial sums: blocks
/// (2j, 2j/(2j-1)) for j = 1..floor(n/2) plus, for odd n, a trailing
/// sin(nx) term of weight (2t+2)/(2t+1), t = floor(n/2).
struct BlockForm {
    BlockFamily family;
    int n = 0;
    std::vector<std::pair<int, Rational>> blocks;  ///< (even index 2j, weight)
    std::optional<Rational> trailing;              ///< weight of sin(nx), odd n only

    SinePoly expand() const;
};

BlockForm block_decompose(int n, BlockFamily family);

/// Closed-form trigonometric identities used by the verification layer,
/// returned as (lhs, rhs) for consistency testing.
enum class TrigIdentity {
    odd_sine_sum,   ///< sum_{j<=n} sin((2j-1)x)        = (1 - cos 2nx) / (2 sin x)
    full_sine_sum,  ///< sum_{k<=n} sin(kx)             = (cos(x/2) - cos((2n+1)x/2)) / (2 sin(x/2))
    odd_cosine_sum, ///< sum_{j<=n} cos((2j-1)x)        = sin(2nx) / (2 sin x)
    alt_cosine_sum  ///< sum_{k<=n} (-1)^{k+1} cos(kx)  = 1/2 + (-1)^{n+1} cos((2n+1)x/2) / (2 cos(x/2))
};

std::pair<double, double> closed_form(TrigIdentity id, int n, double x);

}  // namespace sinecert
