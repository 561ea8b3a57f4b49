#include "sinecert/unipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sinecert {

namespace {
const Rational kZero(0);
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::constant(Rational c) {
    std::vector<Rational> v;
    if (!c.is_zero()) v.push_back(std::move(c));
    return UniPoly(std::move(v));
}

UniPoly UniPoly::monomial(Rational c, int deg) {
    if (c.is_zero()) return UniPoly();
    std::vector<Rational> v(static_cast<size_t>(deg) + 1, Rational(0));
    v.back() = std::move(c);
    return UniPoly(std::move(v));
}

const Rational& UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(i)];
}

const Rational& UniPoly::lc() const {
    if (c_.empty()) throw std::invalid_argument("UniPoly: zero polynomial has no leading coefficient");
    return c_.back();
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double UniPoly::eval_d(double x) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_double();
    return acc;
}

int UniPoly::sign_at(const Rational& x) const {
    if (c_.empty()) return 0;
    // Clear denominators, then evaluate sum z_i u^i v^{d-i} over the integers.
    mpz_class den(1);
    for (const auto& c : c_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.den().get_mpz_t());
    const mpz_class u = x.num(), v = x.den();
    mpz_class acc(0), vpow(1);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        mpz_class z = it->num() * (den / it->den());
        acc = acc * u + z * vpow;
        if (it + 1 != c_.rend()) vpow *= v;
    }
    return sgn(acc);
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rational> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rational(static_cast<long>(i)) * c_[i];
    return UniPoly(std::move(d));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return UniPoly(std::move(r));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return UniPoly(std::move(r));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(r));
}

UniPoly operator*(const Rational& s, const UniPoly& p) {
    std::vector<Rational> r(p.c_);
    for (auto& c : r) c *= s;
    return UniPoly(std::move(r));
}

UniPoly operator-(const UniPoly& a) { return Rational(-1) * a; }

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("UniPoly: division by zero polynomial");
    if (a.degree() < b.degree()) return {UniPoly(), a};
    std::vector<Rational> rem(a.c_);
    std::vector<Rational> quo(static_cast<size_t>(a.degree() - b.degree()) + 1, Rational(0));
    const Rational& blc = b.lc();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        Rational q = rem[static_cast<size_t>(k + b.degree())] / blc;
        quo[static_cast<size_t>(k)] = q;
        if (q.is_zero()) continue;
        for (int i = 0; i <= b.degree(); ++i)
            rem[static_cast<size_t>(k + i)] -= q * b.c_[static_cast<size_t>(i)];
    }
    return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::exact_div(const UniPoly& b) const {
    auto [q, r] = divmod(*this, b);
    if (!r.is_zero()) throw std::logic_error("UniPoly: division is not exact");
    return q;
}

Rational UniPoly::content() const {
    if (c_.empty()) return Rational(0);
    mpz_class g(0), l(1);
    for (const auto& c : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.num().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    }
    return Rational(g, l);  // positive: gcd of |numerators| over lcm of denominators
}

UniPoly UniPoly::positive_scaled() const {
    if (c_.empty()) return UniPoly();
    Rational c = content();
    std::vector<Rational> r(c_);
    for (auto& x : r) x /= c;
    return UniPoly(std::move(r));
}

UniPoly UniPoly::primitive_int_poslc() const {
    UniPoly p = positive_scaled();
    if (!p.is_zero() && p.lc().sign() < 0) p = -p;
    return p;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a.is_zero() ? UniPoly() : a.positive_scaled();
    UniPoly y = b.is_zero() ? UniPoly() : b.positive_scaled();
    while (!y.is_zero()) {
        UniPoly r = UniPoly::divmod(x, y).second;
        x = std::move(y);
        y = r.is_zero() ? UniPoly() : r.positive_scaled();
    }
    return x.is_zero() ? UniPoly() : x.primitive_int_poslc();
}

UniPoly UniPoly::squarefree_part() const {
    if (is_zero()) throw std::invalid_argument("UniPoly: squarefree part of zero polynomial");
    if (degree() <= 1) return *this;
    UniPoly g = gcd(*this, derivative());
    if (g.degree() <= 0) return *this;
    return exact_div(g);
}

std::string UniPoly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[static_cast<size_t>(i)];
        if (c.is_zero()) continue;
        if (!first) os << (c.sign() > 0 ? " + " : " - ");
        else if (c.sign() < 0) os << "-";
        first = false;
        Rational ac = abs(c);
        if (i == 0 || ac != Rational(1)) os << ac.to_string();
        if (i > 0) {
            if (ac != Rational(1)) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace sinecert
