#include "mocklie/rational.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mocklie {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  v_ = mpq_class((signed long)num, (signed long)den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::invalid_argument("division by zero");
  return Rational(mpq_class(1) / v_);
}

std::optional<Rational> Rational::parse(const std::string& text) {
  // strict grammar: -?digits(/digits)?  with a nonzero denominator
  auto digits = [](const std::string& s, size_t from, size_t to) {
    if (from >= to) return false;
    for (size_t i = from; i < to; ++i)
      if (!std::isdigit((unsigned char)s[i])) return false;
    return true;
  };
  if (text.empty()) return std::nullopt;
  size_t start = text[0] == '-' ? 1 : 0;
  size_t slash = text.find('/');
  if (slash == std::string::npos) {
    if (!digits(text, start, text.size())) return std::nullopt;
  } else {
    if (!digits(text, start, slash)) return std::nullopt;
    if (!digits(text, slash + 1, text.size())) return std::nullopt;
  }
  mpq_class v;
  if (v.set_str(text, 10) != 0) return std::nullopt;
  if (v.get_den() == 0) return std::nullopt;
  v.canonicalize();
  return Rational(v);
}

std::string Rational::str() const {
  return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

bool is_zero(const Vec& v) {
  for (const auto& c : v)
    if (!c.is_zero()) return false;
  return true;
}

Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec operator*(const Rational& c, const Vec& v) {
  Vec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

Vec zero_vec(int n) { return Vec(n, Rational(0)); }

Vec basis_vec(int n, int i) {
  Vec v = zero_vec(n);
  v[i] = Rational(1);
  return v;
}

std::string vec_str(const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << ")";
  return os.str();
}

}  // namespace mocklie
