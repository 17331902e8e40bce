#include "vinberg/scalar.hpp"

#include <limits>
#include <ostream>

#include "vinberg/error.hpp"

namespace vinberg {

Scalar::Scalar(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ValidationError("zero denominator");
  q_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  q_.canonicalize();
}

Scalar Scalar::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ValidationError("empty rational literal");
  const auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw ValidationError("malformed rational '" + s + "'");
  mpz_class n(num[0] == '+' ? num.substr(1) : num, 10);
  mpz_class d(den[0] == '+' ? den.substr(1) : den, 10);
  if (d == 0) throw ValidationError("zero denominator in '" + s + "'");
  return Scalar(mpq_class(n, d));
}

bool Scalar::fits_int64() const {
  return is_integer() && q_.get_num().fits_slong_p();
}

std::int64_t Scalar::to_int64() const { return q_.get_num().get_si(); }

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Scalar pow(const Scalar& base, unsigned exponent) {
  Scalar result(1);
  Scalar b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

Scalar abs(const Scalar& s) { return s.sign() < 0 ? -s : s; }

}  // namespace vinberg
