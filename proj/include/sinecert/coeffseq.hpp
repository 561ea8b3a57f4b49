#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sinecert/sinepoly.hpp"
#include "sinecert/sturm.hpp"

namespace sinecert {

/// Closed-form coefficient family: produces a_k for any k >= 1. Exact
/// families yield rationals; the square-root and power families are
/// numeric. The *_odd families are the odd-index subsequences used for
/// dominance comparisons, indexed by j (a_j = original a_{2j-1}).
class CoeffSeq {
public:
    enum class Family {
        vietoris_c,
        sqrt_c,
        gamma,
        delta,
        phi1_max,
        odd_comb,
        power_phi,
        shifted_sqrt_phi,
        custom,
        ones,
        vietoris_odd,
        sqrtc_odd,
        phi1_odd,
        delta_odd,
    };

    static CoeffSeq vietoris_c();
    static CoeffSeq sqrt_c();
    static CoeffSeq gamma();
    static CoeffSeq delta();
    static CoeffSeq phi1_max(Rational a);
    static CoeffSeq odd_comb(CoeffSeq base);
    static CoeffSeq power_phi(double exponent);
    static CoeffSeq shifted_sqrt_phi(double shift);
    static CoeffSeq custom(std::vector<Rational> coeffs);
    static CoeffSeq ones();
    static CoeffSeq vietoris_odd();
    static CoeffSeq sqrtc_odd();
    static CoeffSeq phi1_odd(double alpha_value);
    static CoeffSeq delta_odd();

    /// Parses a family id as used by the CLI; param (rational or float
    /// literal) is required by the parameterized families.
    static std::optional<CoeffSeq> parse(const std::string& id,
                                         const std::string& param = "",
                                         const std::string& base = "");

    Family family() const { return family_; }
    bool exact() const;
    std::string id() const;

    Rational coeff_q(int k) const;  ///< exact families only
    double coeff_d(int k) const;

    SinePoly partial(int n) const;  ///< sum of the first n terms as a SinePoly

private:
    Family family_;
    Rational rat_param_{0};
    double real_param_ = 0.0;
    std::vector<Rational> list_;
    std::shared_ptr<CoeffSeq> base_;
};

/// Coefficient hypotheses. Equality always counts as satisfied.
enum class Condition {
    v,            ///< a_{2j-1} >= (2j/(2j-1)) a_{2j}
    kv,           ///< a_{2j}   >= ((2j+1)/(2j+2)) a_{2j+1}
    kv2,          ///< a_{2j}   >= ((2j+1)(4j-1)/(2j(4j+3))) a_{2j+1}
    first_alpha,  ///< a_2 >= (3 alpha / 4) a_3 with the critical algebraic alpha
    sqrt_step,    ///< a_{2j}   >= ((2j-1) sqrt(j+1) / (2j sqrt(j))) a_{2j+1}
};

struct ConditionResult {
    bool ok = true;
    int first_fail_j = 0;            ///< 0 when ok
    std::vector<int> equality_at;    ///< j values attaining equality
};

/// Checks a hypothesis for all applicable indices up to N. first_alpha
/// requires the isolated algebraic constant; comparisons against it are
/// exact (interval refinement, or a defining-polynomial sign test when the
/// ratio hits the root).
ConditionResult check_condition(Condition cond, const CoeffSeq& seq, int N,
                                const AlgebraicReal* alpha = nullptr);

/// Alternating endpoint sum  sum_{k<=n} (-1)^{k-1} k a_k  (exact families).
Rational belov_partial(const CoeffSeq& seq, int n);
double belov_partial_num(const CoeffSeq& seq, int n);

/// Dominance order: a_k = 0 forces b_k = 0, and b_k/a_k is non-increasing
/// over the indices with a_k != 0, checked through N. (The limit->0 part of
/// the order is not decidable at finite N and is deliberately not tested.)
bool dominates(const CoeffSeq& a, const CoeffSeq& b, int N);

struct DominanceMatrix {
    std::vector<std::string> names;
    std::vector<std::vector<bool>> ge;  ///< ge[i][j]: sequence i dominates sequence j
    int N = 0;
};

DominanceMatrix dominance_matrix(const std::vector<CoeffSeq>& seqs, int N);

/// The four extremal odd-coefficient subsequences plus the all-ones upper
/// bound, in comparison order.
std::vector<CoeffSeq> extremal_odd_sequences(double alpha_value);

/// Pairwise dominance among extremal_odd_sequences at N = 50.
DominanceMatrix odd_sequence_dominance(double alpha_value);

/// Endpoint necessary-condition sums: (sum (-1)^{k-1} k a_k, sum k a_k),
/// governing nonnegativity near pi and near 0 respectively.
std::pair<double, double> endpoint_sums(const SinePoly& sp);

}  // namespace sinecert
