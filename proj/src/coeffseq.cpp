#include "sinecert/coeffseq.hpp"

#include <cmath>
#include <stdexcept>

namespace sinecert {

namespace {

Rational gamma_at(int k) { return k % 2 == 1 ? Rational(k + 1, k) : Rational(1); }
Rational delta_at(int k) { return Rational(2) - Rational(k % 2 == 0 ? 1 : -1, k); }

// c_1 = 1, c_{2j} = c_{2j-1} (2j-1)/(2j), c_{2j+1} = c_{2j}
Rational vietoris_at(int k) {
    Rational odd(1);
    int j = (k + 1) / 2;
    for (int i = 2; i <= j; ++i) odd *= Rational(2 * i - 3, 2 * i - 2);
    if (k % 2 == 1) return odd;
    return odd * Rational(2 * j - 1, 2 * j);
}

}  // namespace

CoeffSeq CoeffSeq::vietoris_c() { CoeffSeq s; s.family_ = Family::vietoris_c; return s; }
CoeffSeq CoeffSeq::sqrt_c() { CoeffSeq s; s.family_ = Family::sqrt_c; return s; }
CoeffSeq CoeffSeq::gamma() { CoeffSeq s; s.family_ = Family::gamma; return s; }
CoeffSeq CoeffSeq::delta() { CoeffSeq s; s.family_ = Family::delta; return s; }
CoeffSeq CoeffSeq::phi1_max(Rational a) {
    CoeffSeq s;
    s.family_ = Family::phi1_max;
    s.rat_param_ = std::move(a);
    return s;
}
CoeffSeq CoeffSeq::odd_comb(CoeffSeq base) {
    CoeffSeq s;
    s.family_ = Family::odd_comb;
    s.base_ = std::make_shared<CoeffSeq>(std::move(base));
    return s;
}
CoeffSeq CoeffSeq::power_phi(double exponent) {
    CoeffSeq s;
    s.family_ = Family::power_phi;
    s.real_param_ = exponent;
    return s;
}
CoeffSeq CoeffSeq::shifted_sqrt_phi(double shift) {
    CoeffSeq s;
    s.family_ = Family::shifted_sqrt_phi;
    s.real_param_ = shift;
    return s;
}
CoeffSeq CoeffSeq::custom(std::vector<Rational> coeffs) {
    CoeffSeq s;
    s.family_ = Family::custom;
    s.list_ = std::move(coeffs);
    return s;
}
CoeffSeq CoeffSeq::ones() { CoeffSeq s; s.family_ = Family::ones; return s; }
CoeffSeq CoeffSeq::vietoris_odd() { CoeffSeq s; s.family_ = Family::vietoris_odd; return s; }
CoeffSeq CoeffSeq::sqrtc_odd() { CoeffSeq s; s.family_ = Family::sqrtc_odd; return s; }
CoeffSeq CoeffSeq::phi1_odd(double alpha_value) {
    CoeffSeq s;
    s.family_ = Family::phi1_odd;
    s.real_param_ = alpha_value;
    return s;
}
CoeffSeq CoeffSeq::delta_odd() { CoeffSeq s; s.family_ = Family::delta_odd; return s; }

bool CoeffSeq::exact() const {
    switch (family_) {
        case Family::sqrt_c:
        case Family::power_phi:
        case Family::shifted_sqrt_phi:
        case Family::sqrtc_odd:
        case Family::phi1_odd:
            return false;
        case Family::odd_comb:
            return base_->exact();
        default:
            return true;
    }
}

std::string CoeffSeq::id() const {
    switch (family_) {
        case Family::vietoris_c: return "vietoris_c";
        case Family::sqrt_c: return "sqrt_c";
        case Family::gamma: return "gamma";
        case Family::delta: return "delta";
        case Family::phi1_max: return "phi1_max(" + rat_param_.to_string() + ")";
        case Family::odd_comb: return "odd_comb(" + base_->id() + ")";
        case Family::power_phi: return "power_phi(" + std::to_string(real_param_) + ")";
        case Family::shifted_sqrt_phi:
            return "shifted_sqrt_phi(" + std::to_string(real_param_) + ")";
        case Family::custom: return "custom";
        case Family::ones: return "ones";
        case Family::vietoris_odd: return "vietoris_odd";
        case Family::sqrtc_odd: return "sqrtc_odd";
        case Family::phi1_odd: return "phi1_odd";
        case Family::delta_odd: return "delta_odd";
    }
    return "?";
}

Rational CoeffSeq::coeff_q(int k) const {
    if (k < 1) throw std::invalid_argument("CoeffSeq: k must be >= 1");
    switch (family_) {
        case Family::vietoris_c: return vietoris_at(k);
        case Family::gamma: return gamma_at(k);
        case Family::delta: return delta_at(k);
        case Family::phi1_max:
            if (k == 1) return Rational(2) * rat_param_;
            if (k == 2) return rat_param_;
            return gamma_at(k);
        case Family::odd_comb:
            if (k % 2 == 0) return Rational(0);
            return base_->coeff_q((k + 1) / 2);
        case Family::custom:
            return k <= static_cast<int>(list_.size()) ? list_[static_cast<size_t>(k - 1)]
                                                       : Rational(0);
        case Family::ones: return Rational(1);
        case Family::vietoris_odd: return vietoris_at(2 * k - 1);
        case Family::delta_odd: return delta_at(2 * k - 1);
        default:
            throw std::logic_error("CoeffSeq: family is not exact");
    }
}

double CoeffSeq::coeff_d(int k) const {
    if (k < 1) throw std::invalid_argument("CoeffSeq: k must be >= 1");
    switch (family_) {
        case Family::sqrt_c: {
            int j = (k + 1) / 2;
            double v = 1.0 / std::sqrt(static_cast<double>(j));
            if (k % 2 == 0) v *= static_cast<double>(2 * j - 1) / (2 * j);
            return v;
        }
        case Family::power_phi: {
            int j = (k + 1) / 2;
            double v = std::pow(static_cast<double>(j), -real_param_);
            if (k % 2 == 0) v *= static_cast<double>(2 * j - 1) / (2 * j);
            return v;
        }
        case Family::shifted_sqrt_phi: {
            int j = (k + 1) / 2;
            double v = 1.0 / std::sqrt(real_param_ + static_cast<double>(j));
            if (k % 2 == 0) v *= static_cast<double>(2 * j - 1) / (2 * j);
            return v;
        }
        case Family::sqrtc_odd: return 1.0 / std::sqrt(static_cast<double>(k));
        case Family::phi1_odd:
            return k == 1 ? 2.0 * real_param_ : static_cast<double>(2 * k) / (2 * k - 1);
        case Family::odd_comb:
            if (k % 2 == 0) return 0.0;
            return base_->coeff_d((k + 1) / 2);
        default:
            return coeff_q(k).to_double();
    }
}

SinePoly CoeffSeq::partial(int n) const {
    if (n < 1) throw std::invalid_argument("CoeffSeq: partial length must be >= 1");
    if (exact()) {
        std::vector<Rational> c;
        c.reserve(static_cast<size_t>(n));
        for (int k = 1; k <= n; ++k) c.push_back(coeff_q(k));
        return SinePoly::from_exact(std::move(c));
    }
    std::vector<double> c;
    c.reserve(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) c.push_back(coeff_d(k));
    return SinePoly::from_numeric(std::move(c));
}

std::optional<CoeffSeq> CoeffSeq::parse(const std::string& id, const std::string& param,
                                        const std::string& base) {
    try {
        if (id == "vietoris_c") return vietoris_c();
        if (id == "sqrt_c") return sqrt_c();
        if (id == "gamma") return gamma();
        if (id == "delta") return delta();
        if (id == "ones") return ones();
        if (id == "vietoris_odd") return vietoris_odd();
        if (id == "sqrtc_odd") return sqrtc_odd();
        if (id == "delta_odd") return delta_odd();
        if (id == "phi1_max") {
            if (param.empty()) return std::nullopt;
            return phi1_max(Rational::from_string(param));
        }
        if (id == "power_phi") {
            if (param.empty()) return std::nullopt;
            return power_phi(std::stod(param));
        }
        if (id == "shifted_sqrt_phi") {
            if (param.empty()) return std::nullopt;
            return shifted_sqrt_phi(std::stod(param));
        }
        if (id == "phi1_odd") {
            // default: critical constant to double precision
            return phi1_odd(param.empty() ? 0.7826521329521820 : std::stod(param));
        }
        if (id == "odd_comb") {
            auto b = parse(base.empty() ? "vietoris_odd" : base, param);
            if (!b) return std::nullopt;
            return odd_comb(*b);
        }
    } catch (const std::exception&) {
        return std::nullopt;
    }
    return std::nullopt;
}

namespace {

struct Pairwise {
    // one row of a hypothesis check: lhs >= rhs at index j
    bool exact;
    Rational ql, qr;
    double dl = 0, dr = 0;

    bool holds() const {
        if (exact) return ql >= qr;
        return dl >= dr - 1e-13 * std::max({1.0, std::abs(dl), std::abs(dr)});
    }
    bool equal() const {
        if (exact) return ql == qr;
        return std::abs(dl - dr) <= 1e-12 * std::max({1.0, std::abs(dl), std::abs(dr)});
    }
};

}  // namespace

ConditionResult check_condition(Condition cond, const CoeffSeq& seq, int N,
                                const AlgebraicReal* alpha) {
    if (N < 2) throw std::invalid_argument("check_condition: N must be >= 2");
    ConditionResult res;
    const bool ex = seq.exact();

    if (cond == Condition::first_alpha) {
        if (N < 3) return res;
        if (ex) {
            if (alpha == nullptr)
                throw std::invalid_argument("check_condition: first_alpha needs the algebraic constant");
            Rational a2 = seq.coeff_q(2), a3 = seq.coeff_q(3);
            // a2 >= (3 alpha/4) a3  <=>  4 a2 / (3 a3) >= alpha  (a3 > 0)
            if (a3.is_zero()) {
                res.ok = a2 >= Rational(0);
            } else {
                Rational r = Rational(4) * a2 / (Rational(3) * a3);
                int cmp = alpha->compare(r);  // sign of (alpha - r)
                res.ok = cmp <= 0;
                if (cmp == 0) res.equality_at.push_back(1);
            }
        } else {
            double av = alpha != nullptr ? alpha->to_double() : 0.7826521329521820;
            Pairwise p{false, Rational(0), Rational(0), seq.coeff_d(2), 0.75 * av * seq.coeff_d(3)};
            res.ok = p.holds();
            if (res.ok && p.equal()) res.equality_at.push_back(1);
        }
        if (!res.ok) res.first_fail_j = 1;
        return res;
    }

    for (int j = 1;; ++j) {
        int k_hi = (cond == Condition::v) ? 2 * j : 2 * j + 1;
        if (k_hi > N) break;
        Pairwise p;
        p.exact = ex;
        if (cond == Condition::v) {
            if (ex) {
                p.ql = seq.coeff_q(2 * j - 1);
                p.qr = Rational(2 * j, 2 * j - 1) * seq.coeff_q(2 * j);
            } else {
                p.dl = seq.coeff_d(2 * j - 1);
                p.dr = static_cast<double>(2 * j) / (2 * j - 1) * seq.coeff_d(2 * j);
            }
        } else if (cond == Condition::kv) {
            if (ex) {
                p.ql = seq.coeff_q(2 * j);
                p.qr = Rational(2 * j + 1, 2 * j + 2) * seq.coeff_q(2 * j + 1);
            } else {
                p.dl = seq.coeff_d(2 * j);
                p.dr = static_cast<double>(2 * j + 1) / (2 * j + 2) * seq.coeff_d(2 * j + 1);
            }
        } else if (cond == Condition::kv2) {
            if (ex) {
                p.ql = seq.coeff_q(2 * j);
                p.qr = Rational((2 * j + 1) * (4 * j - 1), 2 * j * (4 * j + 3)) * seq.coeff_q(2 * j + 1);
            } else {
                p.dl = seq.coeff_d(2 * j);
                p.dr = static_cast<double>((2 * j + 1) * (4 * j - 1)) /
                       (static_cast<double>(2 * j) * (4 * j + 3)) * seq.coeff_d(2 * j + 1);
            }
        } else {  // sqrt_step
            if (ex) {
                // compare squares: both sides are nonnegative for the
                // families of interest
                Rational l = seq.coeff_q(2 * j), r = seq.coeff_q(2 * j + 1);
                if (l < Rational(0))
                    throw std::invalid_argument("check_condition: sqrt_step needs nonnegative terms");
                p.ql = Rational(4 * j * j) * Rational(j) * l * l;
                p.qr = Rational((2 * j - 1) * (2 * j - 1)) * Rational(j + 1) * r * r;
            } else {
                p.dl = seq.coeff_d(2 * j);
                p.dr = static_cast<double>(2 * j - 1) * std::sqrt(j + 1.0) /
                       (static_cast<double>(2 * j) * std::sqrt(static_cast<double>(j))) *
                       seq.coeff_d(2 * j + 1);
            }
        }
        if (!p.holds()) {
            res.ok = false;
            res.first_fail_j = j;
            return res;
        }
        if (p.equal()) res.equality_at.push_back(j);
    }
    return res;
}

Rational belov_partial(const CoeffSeq& seq, int n) {
    if (n < 1) throw std::invalid_argument("belov_partial: n must be >= 1");
    Rational s(0);
    for (int k = 1; k <= n; ++k) {
        Rational t = Rational(k) * seq.coeff_q(k);
        s += (k % 2 == 1) ? t : -t;
    }
    return s;
}

double belov_partial_num(const CoeffSeq& seq, int n) {
    if (n < 1) throw std::invalid_argument("belov_partial: n must be >= 1");
    double s = 0;
    for (int k = 1; k <= n; ++k) {
        double t = k * seq.coeff_d(k);
        s += (k % 2 == 1) ? t : -t;
    }
    return s;
}

bool dominates(const CoeffSeq& a, const CoeffSeq& b, int N) {
    if (N < 1) throw std::invalid_argument("dominates: N must be >= 1");
    if (a.exact() && b.exact()) {
        bool have_prev = false;
        Rational prev(0);
        for (int k = 1; k <= N; ++k) {
            Rational ak = a.coeff_q(k), bk = b.coeff_q(k);
            if (ak.is_zero()) {
                if (!bk.is_zero()) return false;
                continue;
            }
            Rational r = bk / ak;
            if (have_prev && r > prev) return false;
            prev = r;
            have_prev = true;
        }
        return true;
    }
    bool have_prev = false;
    double prev = 0;
    for (int k = 1; k <= N; ++k) {
        double ak = a.coeff_d(k), bk = b.coeff_d(k);
        if (ak == 0.0) {
            if (bk != 0.0) return false;
            continue;
        }
        double r = bk / ak;
        if (have_prev && r > prev * (1 + 1e-12)) return false;
        prev = r;
        have_prev = true;
    }
    return true;
}

DominanceMatrix dominance_matrix(const std::vector<CoeffSeq>& seqs, int N) {
    DominanceMatrix m;
    m.N = N;
    for (const auto& s : seqs) m.names.push_back(s.id());
    m.ge.assign(seqs.size(), std::vector<bool>(seqs.size(), false));
    for (size_t i = 0; i < seqs.size(); ++i)
        for (size_t j = 0; j < seqs.size(); ++j) m.ge[i][j] = dominates(seqs[i], seqs[j], N);
    return m;
}

std::vector<CoeffSeq> extremal_odd_sequences(double alpha_value) {
    return {CoeffSeq::vietoris_odd(), CoeffSeq::sqrtc_odd(), CoeffSeq::phi1_odd(alpha_value),
            CoeffSeq::delta_odd(), CoeffSeq::ones()};
}

DominanceMatrix odd_sequence_dominance(double alpha_value) {
    return dominance_matrix(extremal_odd_sequences(alpha_value), 50);
}

std::pair<double, double> endpoint_sums(const SinePoly& sp) {
    double at_pi = 0, at_zero = 0;
    for (int k = 1; k <= sp.terms(); ++k) {
        double t = k * sp.coeff_d(k);
        at_zero += t;
        at_pi += (k % 2 == 1) ? t : -t;
    }
    return {at_pi, at_zero};
}

}  // namespace sinecert
