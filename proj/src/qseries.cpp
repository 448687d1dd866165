#include "lorentz/qseries.hpp"

#include <algorithm>

namespace lorentz::qs {

PowerSeries::PowerSeries(std::size_t n) : c_(n + 1, Integer(0)) {}

PowerSeries::PowerSeries(std::vector<Integer> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw DomainError("power series needs at least one coefficient");
}

PowerSeries PowerSeries::one(std::size_t n) {
  PowerSeries p(n);
  p.c_[0] = 1;
  return p;
}

namespace {
void same_truncation(const PowerSeries& a, const PowerSeries& b) {
  if (a.truncation() != b.truncation()) throw DimensionMismatch("power series truncations differ");
}
}  // namespace

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  same_truncation(a, b);
  PowerSeries out(a.truncation());
  for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = a.c_[i] + b.c_[i];
  return out;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  same_truncation(a, b);
  PowerSeries out(a.truncation());
  for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = a.c_[i] - b.c_[i];
  return out;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  same_truncation(a, b);
  const std::size_t n = a.truncation();
  PowerSeries out(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return out;
}

PowerSeries PowerSeries::inverse() const {
  const Integer& c0 = c_[0];
  if (c0 != 1 && c0 != -1) throw DomainError("power series inverse needs constant term +-1");
  const std::size_t n = truncation();
  PowerSeries out(n);
  out.c_[0] = c0;  // 1/c0 = c0 for a unit
  for (std::size_t k = 1; k <= n; ++k) {
    Integer s = 0;
    for (std::size_t j = 1; j <= k; ++j) s += c_[j] * out.c_[k - j];
    out.c_[k] = -c0 * s;
  }
  return out;
}

PowerSeries PowerSeries::pow(long e) const {
  PowerSeries base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1 : static_cast<unsigned long>(e);
  PowerSeries out = one(truncation());
  while (k) {
    if (k & 1) out = out * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return out;
}

namespace {

// p *= (1 - q^k)^e via the binomial series.
void multiply_factor(std::vector<Integer>& p, std::size_t k, const Integer& e) {
  const std::size_t n = p.size() - 1;
  if (k > n || e == 0) return;
  std::vector<Integer> c{Integer(1)};
  for (std::size_t j = 1; j * k <= n; ++j) {
    Integer b;
    if (e > 0) {
      if (e < static_cast<unsigned long>(j)) break;
      mpz_bin_ui(b.get_mpz_t(), e.get_mpz_t(), j);
      if (j % 2) b = -b;
    } else {
      Integer top = -e + static_cast<unsigned long>(j) - 1;
      mpz_bin_ui(b.get_mpz_t(), top.get_mpz_t(), j);
    }
    c.push_back(b);
  }
  for (std::size_t d = n + 1; d-- > 0;) {
    Integer acc = 0;
    for (std::size_t j = 0; j < c.size() && j * k <= d; ++j) acc += c[j] * p[d - j * k];
    p[d] = acc;
  }
}

}  // namespace

PowerSeries eta_power(long e, std::size_t n) {
  std::vector<Integer> p(n + 1, Integer(0));
  p[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) multiply_factor(p, k, Integer(e));
  return PowerSeries(std::move(p));
}

std::vector<Integer> ramanujan_tau(std::size_t n) {
  if (n == 0) return {};
  return eta_power(24, n - 1).coefficients();
}

std::vector<Integer> cusp_identity(Direction direction, std::span<const Integer> input, std::size_t n) {
  if (input.size() < n) throw DimensionMismatch("cusp_identity: input shorter than the truncation");
  std::vector<Integer> out(n);
  if (direction == Direction::TauToM) {
    std::vector<Integer> p(n + 1, Integer(0));
    p[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) multiply_factor(p, k, input[k - 1]);
    for (std::size_t t = 1; t <= n; ++t) out[t - 1] = -p[t];
    return out;
  }
  // Unitriangular: the coefficient of q^t in prod_{k<t} is fixed, and the
  // factor (1-q^t)^{tau(t)} contributes -tau(t) there.
  std::vector<Integer> p(n + 1, Integer(0));
  p[0] = 1;
  for (std::size_t t = 1; t <= n; ++t) {
    Integer tau = p[t] + input[t - 1];  // p[t] - tau = -m(t)
    out[t - 1] = tau;
    multiply_factor(p, t, tau);
  }
  return out;
}

RayMultiset build_H_ray(std::span<const Integer> tau, std::span<const Integer> a0, std::size_t n) {
  if (tau.size() < n) throw DimensionMismatch("build_H_ray: tau shorter than the truncation");
  RayMultiset out;
  out.a0.assign(a0.begin(), a0.end());
  for (std::size_t t = 1; t <= n; ++t)
    if (tau[t - 1] != 0) out.entries.push_back({static_cast<long>(t), tau[t - 1]});
  return out;
}

bool corrected_denominator_ray_check(std::span<const Integer> tau, std::span<const Integer> m, std::size_t n) {
  if (m.size() < n) throw DimensionMismatch("corrected_denominator_ray_check: m shorter than the truncation");
  auto expect = cusp_identity(Direction::TauToM, tau, n);
  return std::equal(expect.begin(), expect.end(), m.begin());
}

}  // namespace lorentz::qs
