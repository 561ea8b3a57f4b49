#include "sinecert/sinepoly.hpp"

#include <cmath>
#include <stdexcept>

namespace sinecert {

SinePoly SinePoly::from_exact(std::vector<Rational> coeffs) {
    SinePoly sp;
    sp.flavor_ = Flavor::exact;
    sp.d_.reserve(coeffs.size());
    for (const auto& c : coeffs) sp.d_.push_back(c.to_double());
    sp.q_ = std::move(coeffs);
    return sp;
}

SinePoly SinePoly::from_numeric(std::vector<double> coeffs) {
    SinePoly sp;
    sp.flavor_ = Flavor::numeric;
    sp.d_ = std::move(coeffs);
    return sp;
}

Rational SinePoly::coeff_q(int k) const {
    if (flavor_ != Flavor::exact) throw std::logic_error("SinePoly: exact coefficients required");
    if (k < 1 || k > static_cast<int>(q_.size())) return Rational(0);
    return q_[static_cast<size_t>(k - 1)];
}

double SinePoly::coeff_d(int k) const {
    if (k < 1 || k > static_cast<int>(d_.size())) return 0.0;
    return d_[static_cast<size_t>(k - 1)];
}

const std::vector<Rational>& SinePoly::coeffs_q() const {
    if (flavor_ != Flavor::exact) throw std::logic_error("SinePoly: exact coefficients required");
    return q_;
}

double SinePoly::eval(double x) const {
    double s = 0.0, comp = 0.0;
    for (size_t i = 0; i < d_.size(); ++i) {
        if (d_[i] == 0.0) continue;
        double term = d_[i] * std::sin(static_cast<double>(i + 1) * x);
        double y = term - comp;
        double t = s + y;
        comp = (t - s) - y;
        s = t;
    }
    return s;
}

UniPoly SinePoly::to_algebraic() const {
    if (flavor_ != Flavor::exact) throw std::logic_error("exact coefficients required");
    // sum a_k sin(kx) = sin(x) sum a_k U_{k-1}(cos x),
    // U_k(Y) = 2Y U_{k-1}(Y) - U_{k-2}(Y)
    UniPoly acc;
    UniPoly u_prev;                                 // U_{-1} = 0
    UniPoly u_cur = UniPoly::constant(Rational(1)); // U_0
    UniPoly two_y({Rational(0), Rational(2)});
    for (size_t i = 0; i < q_.size(); ++i) {
        if (!q_[i].is_zero()) acc = acc + q_[i] * u_cur;
        UniPoly u_next = two_y * u_cur - u_prev;
        u_prev = std::move(u_cur);
        u_cur = std::move(u_next);
    }
    return acc;
}

SinePoly SinePoly::reflect() const {
    if (flavor_ == Flavor::exact) {
        std::vector<Rational> r(q_);
        for (size_t i = 0; i < r.size(); ++i)
            if (i % 2 == 1) r[i] = -r[i];
        return from_exact(std::move(r));
    }
    std::vector<double> r(d_);
    for (size_t i = 0; i < r.size(); ++i)
        if (i % 2 == 1) r[i] = -r[i];
    return from_numeric(std::move(r));
}

double SinePoly::derivative_bound() const {
    double b = 0.0;
    for (size_t i = 0; i < d_.size(); ++i) b += static_cast<double>(i + 1) * std::abs(d_[i]);
    return b;
}

SinePoly operator+(const SinePoly& a, const SinePoly& b) {
    if (a.exact() && b.exact()) {
        std::vector<Rational> r(std::max(a.q_.size(), b.q_.size()), Rational(0));
        for (size_t i = 0; i < a.q_.size(); ++i) r[i] += a.q_[i];
        for (size_t i = 0; i < b.q_.size(); ++i) r[i] += b.q_[i];
        return SinePoly::from_exact(std::move(r));
    }
    std::vector<double> r(std::max(a.d_.size(), b.d_.size()), 0.0);
    for (size_t i = 0; i < a.d_.size(); ++i) r[i] += a.d_[i];
    for (size_t i = 0; i < b.d_.size(); ++i) r[i] += b.d_[i];
    return SinePoly::from_numeric(std::move(r));
}

SinePoly operator*(const Rational& s, const SinePoly& p) {
    if (p.exact()) {
        std::vector<Rational> r(p.q_);
        for (auto& c : r) c *= s;
        return SinePoly::from_exact(std::move(r));
    }
    std::vector<double> r(p.d_);
    for (auto& c : r) c *= s.to_double();
    return SinePoly::from_numeric(std::move(r));
}

SinePoly phi_block(int k) {
    if (k < 2) throw std::invalid_argument("phi_block: k must be >= 2");
    std::vector<Rational> c(static_cast<size_t>(k), Rational(0));
    c[static_cast<size_t>(k - 2)] = Rational(1);
    c[static_cast<size_t>(k - 1)] = Rational(k - 1, k);
    return SinePoly::from_exact(std::move(c));
}

SinePoly theta_block(int k) {
    if (k < 2) throw std::invalid_argument("theta_block: k must be >= 2");
    std::vector<Rational> c(static_cast<size_t>(k), Rational(0));
    c[static_cast<size_t>(k - 2)] = Rational(1);
    c[static_cast<size_t>(k - 1)] = Rational(-(k - 1), k);
    return SinePoly::from_exact(std::move(c));
}

BlockForm block_decompose(int n, BlockFamily family) {
    if (n < 1) throw std::invalid_argument("block_decompose: n must be >= 1");
    BlockForm bf;
    bf.family = family;
    bf.n = n;
    int half = n / 2;
    for (int j = 1; j <= half; ++j) bf.blocks.emplace_back(2 * j, Rational(2 * j, 2 * j - 1));
    if (n % 2 == 1) bf.trailing = Rational(2 * half + 2, 2 * half + 1);
    return bf;
}

SinePoly BlockForm::expand() const {
    std::vector<Rational> c(static_cast<size_t>(n), Rational(0));
    SinePoly acc = SinePoly::from_exact(std::move(c));
    for (const auto& [idx, w] : blocks)
        acc = acc + w * (family == BlockFamily::phi ? phi_block(idx) : theta_block(idx));
    if (trailing) {
        std::vector<Rational> t(static_cast<size_t>(n), Rational(0));
        t.back() = *trailing;
        acc = acc + SinePoly::from_exact(std::move(t));
    }
    return acc;
}

std::pair<double, double> closed_form(TrigIdentity id, int n, double x) {
    if (n < 1) throw std::invalid_argument("closed_form: n must be >= 1");
    const double eps = 1e-9;
    double lhs = 0.0, rhs = 0.0;
    switch (id) {
        case TrigIdentity::odd_sine_sum: {
            if (std::abs(std::sin(x)) < eps) throw std::domain_error("identity singular here");
            for (int j = 1; j <= n; ++j) lhs += std::sin((2 * j - 1) * x);
            rhs = (1.0 - std::cos(2.0 * n * x)) / (2.0 * std::sin(x));
            break;
        }
        case TrigIdentity::full_sine_sum: {
            if (std::abs(std::sin(x / 2)) < eps) throw std::domain_error("identity singular here");
            for (int k = 1; k <= n; ++k) lhs += std::sin(k * x);
            rhs = (std::cos(x / 2) - std::cos((2 * n + 1) * x / 2)) / (2.0 * std::sin(x / 2));
            break;
        }
        case TrigIdentity::odd_cosine_sum: {
            if (std::abs(std::sin(x)) < eps) throw std::domain_error("identity singular here");
            for (int j = 1; j <= n; ++j) lhs += std::cos((2 * j - 1) * x);
            rhs = std::sin(2.0 * n * x) / (2.0 * std::sin(x));
            break;
        }
        case TrigIdentity::alt_cosine_sum: {
            if (std::abs(std::cos(x / 2)) < eps) throw std::domain_error("identity singular here");
            double sgn = 1.0;
            for (int k = 1; k <= n; ++k, sgn = -sgn) lhs += sgn * std::cos(k * x);
            double tail = (n % 2 == 0 ? -1.0 : 1.0);
            rhs = 0.5 + tail * std::cos((2 * n + 1) * x / 2) / (2.0 * std::cos(x / 2));
            break;
        }
    }
    return {lhs, rhs};
}

}  // namespace sinecert
