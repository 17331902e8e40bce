#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "vinberg/matrix.hpp"
#include "vinberg/scalar.hpp"

namespace vinberg {

/// Univariate polynomial over the rationals, coefficients in ascending
/// degree. The leading coefficient is nonzero except for the zero
/// polynomial, which has no coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Scalar> ascending);

  static Poly constant(const Scalar& c);
  static Poly monomial(const Scalar& c, std::size_t degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of x^i, zero beyond the degree.
  Scalar coefficient(std::size_t i) const;
  const std::vector<Scalar>& coefficients() const { return coeffs_; }
  Scalar leading() const;

  Scalar operator()(const Scalar& x) const;
  /// Matrix substitution p(A) by Horner's rule.
  Matrix operator()(const Matrix& a) const;

  Poly derivative() const;
  Poly monic() const;
  /// p(x^k).
  Poly substitute_power(unsigned k) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Scalar& s);
  friend bool operator==(const Poly& a, const Poly& b) = default;

  std::string str(char var = 'x') const;
  friend std::ostream& operator<<(std::ostream& os, const Poly& p);

 private:
  void trim();
  std::vector<Scalar> coeffs_;
};

/// Quotient and remainder of a by a nonzero b.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// Monic greatest common divisor (zero only when both inputs are zero).
Poly gcd(Poly a, Poly b);

bool is_squarefree(const Poly& p);

/// det(xI - a), computed with the division-free Berkowitz recursion.
/// Throws DimensionError on non-square input.
Poly charpoly(const Matrix& a);

/// Monic minimal polynomial, found as the first linear dependency among
/// I, a, a^2, ...
Poly minimal_polynomial(const Matrix& a);

}  // namespace vinberg
