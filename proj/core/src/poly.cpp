#include "vinberg/poly.hpp"

#include <ostream>
#include <sstream>

#include "vinberg/error.hpp"

namespace vinberg {

Poly::Poly(std::vector<Scalar> ascending) : coeffs_(std::move(ascending)) { trim(); }

Poly Poly::constant(const Scalar& c) { return Poly({c}); }

Poly Poly::monomial(const Scalar& c, std::size_t degree) {
  std::vector<Scalar> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar Poly::coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar(); }

Scalar Poly::leading() const { return coeffs_.empty() ? Scalar() : coeffs_.back(); }

Scalar Poly::operator()(const Scalar& x) const {
  Scalar acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Matrix Poly::operator()(const Matrix& a) const {
  if (!a.is_square()) throw DimensionError("polynomial substitution needs a square matrix");
  Matrix acc(a.rows(), a.cols());
  const Matrix id = Matrix::identity(a.rows());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = mat_mul(acc, a) + id * *it;
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly();
  std::vector<Scalar> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Scalar(static_cast<long>(i));
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * (Scalar(1) / leading());
}

Poly Poly::substitute_power(unsigned k) const {
  if (k == 0) return Poly::constant((*this)(Scalar(1)));
  if (is_zero()) return Poly();
  std::vector<Scalar> v((coeffs_.size() - 1) * k + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * k] = coeffs_[i];
  return Poly(std::move(v));
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Scalar> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Poly(std::move(v));
}

Poly operator*(Poly a, const Scalar& s) {
  for (auto& c : a.coeffs_) c *= s;
  a.trim();
  return a;
}

std::string Poly::str(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Scalar& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    const Scalar mag = neg ? -c : c;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    if (i == 0 || mag != Scalar(1)) os << mag;
    if (i > 0) os << var;
    if (i > 1) os << '^' << i;
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  Poly rem = a;
  if (rem.degree() < b.degree()) return {Poly(), rem};
  std::vector<Scalar> quot(static_cast<std::size_t>(rem.degree() - b.degree() + 1));
  const Scalar lead = b.leading();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const auto shift = static_cast<std::size_t>(rem.degree() - b.degree());
    const Scalar factor = rem.leading() / lead;
    quot[shift] = factor;
    rem -= Poly::monomial(factor, shift) * b;
  }
  return {Poly(std::move(quot)), rem};
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

bool is_squarefree(const Poly& p) {
  if (p.degree() <= 0) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

Poly charpoly(const Matrix& a) {
  if (!a.is_square()) throw DimensionError("charpoly of a non-square matrix");
  const std::size_t n = a.rows();
  // Descending coefficient vector of the charpoly of the leading r x r block.
  std::vector<Scalar> c{Scalar(1)};
  for (std::size_t r = 0; r < n; ++r) {
    // Toeplitz column t_0 = 1, t_1 = -a_rr, t_k = -R M^{k-2} S, where M is
    // the leading r x r block, R the row and S the column bordering it.
    std::vector<Scalar> t(r + 2);
    t[0] = 1;
    t[1] = -a(r, r);
    Vector s(r);
    for (std::size_t i = 0; i < r; ++i) s[i] = a(i, r);
    for (std::size_t k = 2; k < r + 2; ++k) {
      Scalar dot;
      for (std::size_t i = 0; i < r; ++i)
        if (!a(r, i).is_zero() && !s[i].is_zero()) dot += a(r, i) * s[i];
      t[k] = -dot;
      if (k + 1 < r + 2) {
        Vector next(r);
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j)
            if (!a(i, j).is_zero() && !s[j].is_zero()) next[i] += a(i, j) * s[j];
        s = std::move(next);
      }
    }
    std::vector<Scalar> next(r + 2);
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= r && j <= i; ++j)
        if (!t[i - j].is_zero() && !c[j].is_zero()) next[i] += t[i - j] * c[j];
    c = std::move(next);
  }
  std::vector<Scalar> ascending(c.rbegin(), c.rend());
  return Poly(std::move(ascending));
}

Poly minimal_polynomial(const Matrix& a) {
  if (!a.is_square()) throw DimensionError("minimal polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return Poly::constant(1);
  std::vector<Vector> powers{flatten(Matrix::identity(n))};
  Matrix current = Matrix::identity(n);
  for (std::size_t d = 1; d <= n; ++d) {
    current = mat_mul(current, a);
    powers.push_back(flatten(current));
    const auto kernel = kernel_basis(from_columns(powers, n * n));
    if (kernel.empty()) continue;
    // Exactly one dependency appears at the first degree where one exists.
    const Vector& rel = kernel.front();
    return Poly(rel).monic();
  }
  throw CertificationError("minimal polynomial degree exceeds matrix size");
}

}  // namespace vinberg
