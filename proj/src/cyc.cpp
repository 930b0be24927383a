#include "fermatlines/cyc.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <string>

#include "fermatlines/errors.hpp"

namespace fermatlines::cyc {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw InvariantError("cyclotomic coefficient overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_sub_overflow(a, b, &r)) throw InvariantError("cyclotomic coefficient overflow");
  return r;
}

// Exact quotient of a by monic b.
std::vector<std::int64_t> exact_div(std::vector<std::int64_t> a, const std::vector<std::int64_t>& b) {
  const std::size_t n = b.size() - 1;
  std::vector<std::int64_t> quo(a.size() - n, 0);
  for (std::size_t i = a.size(); i-- > n;) {
    const std::int64_t c = a[i];
    quo[i - n] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= n; ++j) a[i - n + j] -= c * b[j];
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != 0) throw InvariantError("inexact cyclotomic division");
  }
  return quo;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_poly(std::uint32_t d) {
  if (d == 0) throw PreconditionError("cyclotomic polynomial needs d >= 1");
  static std::mutex mu;
  static std::map<std::uint32_t, std::vector<std::int64_t>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(d); it != cache.end()) return it->second;
  }
  std::vector<std::int64_t> poly(d + 1, 0);
  poly[0] = -1;
  poly[d] = 1;
  for (std::uint32_t e = 1; e < d; ++e) {
    if (d % e == 0) poly = exact_div(std::move(poly), cyclotomic_poly(e));
  }
  std::lock_guard lock(mu);
  return cache.emplace(d, std::move(poly)).first->second;
}

std::uint32_t euler_phi(std::uint32_t d) {
  return static_cast<std::uint32_t>(cyclotomic_poly(d).size() - 1);
}

CycElt::CycElt(std::uint32_t d) : counts_(d, 0) {
  if (d == 0) throw PreconditionError("cyclotomic order must be positive");
}

CycElt CycElt::integer(std::uint32_t d, std::int64_t m) {
  CycElt out(d);
  out.counts_[0] = m;
  return out;
}

CycElt CycElt::root(std::uint32_t d, std::int64_t e) {
  CycElt out(d);
  out.add_term(e, 1);
  return out;
}

CycElt CycElt::from_counts(std::vector<std::int64_t> counts) {
  CycElt out(static_cast<std::uint32_t>(counts.size()));
  out.counts_ = std::move(counts);
  return out;
}

void CycElt::accumulate(std::optional<std::uint32_t> e) {
  if (e) ++counts_[*e % order()];
}

void CycElt::add_term(std::int64_t e, std::int64_t multiplicity) {
  counts_[mod_floor(e, order())] += multiplicity;
}

CycElt& CycElt::operator+=(const CycElt& other) {
  if (other.order() != order()) throw PreconditionError("mismatched cyclotomic orders");
  for (std::size_t j = 0; j < counts_.size(); ++j) counts_[j] += other.counts_[j];
  return *this;
}

CycElt& CycElt::operator-=(const CycElt& other) {
  if (other.order() != order()) throw PreconditionError("mismatched cyclotomic orders");
  for (std::size_t j = 0; j < counts_.size(); ++j) counts_[j] -= other.counts_[j];
  return *this;
}

CycElt& CycElt::operator*=(std::int64_t m) {
  for (auto& c : counts_) c = checked_mul(c, m);
  return *this;
}

CycElt CycElt::operator*(const CycElt& other) const {
  if (other.order() != order()) throw PreconditionError("mismatched cyclotomic orders");
  const std::size_t d = order();
  CycElt out(order());
  for (std::size_t i = 0; i < d; ++i) {
    if (counts_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      out.counts_[(i + j) % d] += checked_mul(counts_[i], other.counts_[j]);
    }
  }
  return out;
}

std::vector<std::int64_t> CycElt::canon() const {
  const auto& phi = cyclotomic_poly(order());
  const std::size_t n = phi.size() - 1;
  std::vector<std::int64_t> r = counts_;
  for (std::size_t i = r.size(); i-- > n;) {
    const std::int64_t c = r[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= n; ++j) {
      if (phi[j] != 0) r[i - n + j] = checked_sub(r[i - n + j], checked_mul(c, phi[j]));
    }
  }
  r.resize(n);
  return r;
}

bool operator==(const CycElt& a, const CycElt& b) {
  return a.order() == b.order() && a.canon() == b.canon();
}

std::optional<std::int64_t> CycElt::as_integer() const {
  const auto c = canon();
  for (std::size_t j = 1; j < c.size(); ++j) {
    if (c[j] != 0) return std::nullopt;
  }
  return c.empty() ? 0 : c[0];
}

bool CycElt::equals_integer(std::int64_t m) const {
  const auto v = as_integer();
  return v && *v == m;
}

CycElt CycElt::galois_apply(std::int64_t u) const {
  const std::int64_t d = order();
  const std::int64_t uu = mod_floor(u, d);
  if (std::gcd(uu, d) != 1) {
    throw PreconditionError("Galois exponent " + std::to_string(u) + " is not a unit mod " +
                            std::to_string(d));
  }
  CycElt out(order());
  for (std::int64_t j = 0; j < d; ++j) out.counts_[(j * uu) % d] += counts_[j];
  return out;
}

std::vector<std::int64_t> CycElt::mod_ideal_class(std::int64_t m) const {
  if (m < 2) throw PreconditionError("ideal modulus must be at least 2");
  auto c = canon();
  for (auto& x : c) x = mod_floor(x, m);
  return c;
}

}  // namespace fermatlines::cyc
