#include "lorentz/arith.hpp"

#include <sstream>

namespace lorentz {

RatVec to_rational(std::span<const Integer> v) {
  RatVec out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

IntVec make_intvec(std::initializer_list<long> values) {
  IntVec out;
  for (long v : values) out.emplace_back(v);
  return out;
}

RatVec make_ratvec(std::initializer_list<long> values) {
  RatVec out;
  for (long v : values) out.emplace_back(v);
  return out;
}

bool is_integral(std::span<const Rational> v) {
  for (const auto& x : v)
    if (x.get_den() != 1) return false;
  return true;
}

bool is_integral(const RatMatrix& m) { return is_integral(std::span<const Rational>(m.data())); }

IntVec to_integer(std::span<const Rational> v) {
  IntVec out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (x.get_den() != 1) throw DomainError("non-integral entry " + to_string(x));
    out.push_back(x.get_num());
  }
  return out;
}

IntMatrix to_integer(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1) throw DomainError("non-integral matrix entry " + to_string(m(i, j)));
      out(i, j) = m(i, j).get_num();
    }
  return out;
}

Integer gcd_of(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

bool is_zero(std::span<const Integer> v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

bool is_zero(std::span<const Rational> v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

bool is_primitive(std::span<const Integer> v) { return gcd_of(v) == 1; }

IntVec primitive_part(std::span<const Integer> v) {
  Integer g = gcd_of(v);
  IntVec out(v.begin(), v.end());
  if (g > 1)
    for (auto& x : out) x /= g;
  return out;
}

IntVec primitive_on_ray(std::span<const Rational> v) {
  Integer l = 1;
  for (const auto& x : v) l = lcm(l, x.get_den());
  IntVec out;
  out.reserve(v.size());
  for (const auto& x : v) {
    Rational y = x * l;
    out.push_back(y.get_num());
  }
  return primitive_part(out);
}

Integer sum(std::span<const Integer> v) {
  Integer s = 0;
  for (const auto& x : v) s += x;
  return s;
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: length mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVec add(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != b.size()) throw DimensionMismatch("add: length mismatch");
  IntVec out(a.begin(), a.end());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

IntVec sub(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != b.size()) throw DimensionMismatch("sub: length mismatch");
  IntVec out(a.begin(), a.end());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

IntVec scale(std::span<const Integer> a, const Integer& k) {
  IntVec out(a.begin(), a.end());
  for (auto& x : out) x *= k;
  return out;
}

IntVec negate(std::span<const Integer> a) { return scale(a, Integer(-1)); }

RatVec add(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw DimensionMismatch("add: length mismatch");
  RatVec out(a.begin(), a.end());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

RatVec scale(std::span<const Rational> a, const Rational& k) {
  RatVec out(a.begin(), a.end());
  for (auto& x : out) x *= k;
  return out;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer floor_of(const Rational& r) { return floor_div(r.get_num(), r.get_den()); }
Integer ceil_of(const Rational& r) { return ceil_div(r.get_num(), r.get_den()); }

Integer floor_sqrt(const Rational& r) {
  if (r < 0) throw DomainError("floor_sqrt of a negative rational");
  // floor(sqrt(p/q)) = floor(sqrt(floor(p*q/q^2))) = floor(isqrt(p*q) / q)
  Integer pq = r.get_num() * r.get_den();
  Integer s = sqrt(pq);
  return floor_div(s, r.get_den());
}

bool rational_sqrt(const Rational& r, Rational& root) {
  if (r < 0) return false;
  if (!mpz_perfect_square_p(r.get_num().get_mpz_t()) || !mpz_perfect_square_p(r.get_den().get_mpz_t()))
    return false;
  root = Rational(sqrt(r.get_num()), sqrt(r.get_den()));
  root.canonicalize();
  return true;
}

std::string to_string(const Integer& v) { return v.get_str(); }
std::string to_string(const Rational& v) { return v.get_str(); }

std::string to_string(std::span<const Integer> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ')';
  return os.str();
}

std::string to_string(std::span<const Rational> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ')';
  return os.str();
}

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0 || r.get_den() == 0)
    throw std::invalid_argument("not a rational number: '" + text + "'");
  r.canonicalize();
  return r;
}

}  // namespace lorentz
