#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace vinberg {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Thin value wrapper over GMP's mpq_class.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : q_(static_cast<long>(v)) {}
  Scalar(long v) : q_(v) {}
  Scalar(long long v) : q_(static_cast<long>(v)) {}
  Scalar(std::int64_t num, std::int64_t den);
  explicit Scalar(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "p", "-p" or "p/q". Throws ValidationError on malformed text
  /// or a zero denominator.
  static Scalar parse(std::string_view text);

  const mpq_class& get() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  bool fits_int64() const;
  /// Only meaningful when is_integer() && fits_int64().
  std::int64_t to_int64() const;

  std::string str() const { return q_.get_str(); }

  Scalar operator-() const { return Scalar(mpq_class(-q_), raw_tag{}); }
  Scalar& operator+=(const Scalar& o) { q_ += o.q_; return *this; }
  Scalar& operator-=(const Scalar& o) { q_ -= o.q_; return *this; }
  Scalar& operator*=(const Scalar& o) { q_ *= o.q_; return *this; }
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

 private:
  struct raw_tag {};
  Scalar(mpq_class q, raw_tag) : q_(std::move(q)) {}

  mpq_class q_;
};

Scalar pow(const Scalar& base, unsigned exponent);
Scalar abs(const Scalar& s);

}  // namespace vinberg
