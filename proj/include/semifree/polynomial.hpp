// Dense univariate polynomials over the rationals.
#pragma once

#include "semifree/rational.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace semifree {

/// p(x) = sum_i coeffs[i] x^i, stored without trailing zeros.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
    Polynomial(std::int64_t constant) : Polynomial(Rational(constant)) {}  // NOLINT
    Polynomial(int constant) : Polynomial(Rational(constant)) {}  // NOLINT
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<std::int64_t> coeffs);

    /// The monomial x.
    static Polynomial x();

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    /// Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    Rational coeff(int i) const;
    Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

    Rational operator()(const Rational& at) const;

    Polynomial derivative() const;
    /// Antiderivative with zero constant term.
    Polynomial antiderivative() const;
    Rational integrate(const Rational& lo, const Rational& hi) const;
    /// p(scale * x + shift).
    Polynomial compose_affine(const Rational& scale, const Rational& shift) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& s);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
    Polynomial operator-() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    /// Quotient and remainder of euclidean division; divisor must be nonzero.
    static void divmod(const Polynomial& num, const Polynomial& den, Polynomial& quot, Polynomial& rem);

    /// Human form in variable `var`, highest degree first, e.g. "-7x^3 + 6x^2 + 12x".
    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

Polynomial pow(const Polynomial& p, unsigned n);

}  // namespace semifree
