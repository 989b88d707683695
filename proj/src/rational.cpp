#include "hitchin/rational.hpp"

#include <ostream>

namespace hitchin {

Rational::Rational(long num, long den) {
  require(den != 0, "zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
  require(sgn(v_.get_den()) != 0, "zero denominator");
  v_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
  auto slash = s.find('/');
  mpz_class num, den = 1;
  auto read = [](const std::string& part, mpz_class& out) {
    if (part.empty() || out.set_str(part, 10) != 0)
      throw domain_error("malformed rational: '" + part + "'");
  };
  if (slash == std::string::npos) {
    read(s, num);
  } else {
    read(s.substr(0, slash), num);
    read(s.substr(slash + 1), den);
  }
  require(sgn(den) != 0, "zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(std::move(q));
}

Rational& Rational::operator/=(const Rational& o) {
  require(!o.is_zero(), "division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::inv() const {
  require(!is_zero(), "division by zero");
  return Rational(mpq_class(1) / v_);
}

Rational Rational::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  mpq_class acc(1), base(v_);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return Rational(std::move(acc));
}

bool Rational::exact_sqrt(Rational& out) const {
  if (sign() < 0) return false;
  if (!mpz_perfect_square_p(num().get_mpz_t()) || !mpz_perfect_square_p(den().get_mpz_t()))
    return false;
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), num().get_mpz_t());
  mpz_sqrt(d.get_mpz_t(), den().get_mpz_t());
  out = Rational(mpq_class(n, d));
  return true;
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace hitchin
