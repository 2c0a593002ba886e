#include "semifree/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace semifree {

std::int64_t to_int64(const Rational& q) {
    if (!is_integer(q)) throw std::domain_error("rational " + q.str() + " is not an integer");
    const Integer n = boost::multiprecision::numerator(q);
    if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("integer " + n.str() + " exceeds int64");
    return static_cast<std::int64_t>(n);
}

Polynomial::Polynomial(const Rational& constant) : coeffs_{constant} { trim(); }

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<std::int64_t> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (auto c : coeffs) coeffs_.emplace_back(c);
    trim();
}

Polynomial Polynomial::x() { return Polynomial({0, 1}); }

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

Rational Polynomial::operator()(const Rational& at) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    std::vector<Rational> out;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(coeffs_[i] * static_cast<long long>(i));
    return Polynomial(std::move(out));
}

Polynomial Polynomial::antiderivative() const {
    std::vector<Rational> out(coeffs_.size() + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + 1] = coeffs_[i] / static_cast<long long>(i + 1);
    return Polynomial(std::move(out));
}

Rational Polynomial::integrate(const Rational& lo, const Rational& hi) const {
    const Polynomial anti = antiderivative();
    return anti(hi) - anti(lo);
}

Polynomial Polynomial::compose_affine(const Rational& scale, const Rational& shift) const {
    const Polynomial inner(std::vector<Rational>{shift, scale});
    Polynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + Polynomial(*it);
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

void Polynomial::divmod(const Polynomial& num, const Polynomial& den, Polynomial& quot, Polynomial& rem) {
    if (den.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> q(static_cast<std::size_t>(std::max(0, num.degree() - den.degree() + 1)));
    Polynomial r = num;
    while (!r.is_zero() && r.degree() >= den.degree()) {
        const int shift = r.degree() - den.degree();
        const Rational factor = r.leading() / den.leading();
        q[static_cast<std::size_t>(shift)] = factor;
        std::vector<Rational> term(static_cast<std::size_t>(shift) + 1);
        term.back() = factor;
        r -= Polynomial(std::move(term)) * den;
    }
    quot = Polynomial(std::move(q));
    rem = std::move(r);
}

std::string Polynomial::str(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = (mag == 1);
        if (!unit || i == 0) {
            if (is_integer(mag)) os << mag.str();
            else os << "(" << mag.str() << ")";
        }
        if (i >= 1) os << var;
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

Polynomial pow(const Polynomial& p, unsigned n) {
    Polynomial out(1);
    for (unsigned i = 0; i < n; ++i) out *= p;
    return out;
}

}  // namespace semifree
