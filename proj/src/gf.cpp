#include "fermatlines/gf.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "fermatlines/errors.hpp"

namespace fermatlines::gf {

namespace {

using Poly = std::vector<std::uint32_t>;  // low degree first, over F_p

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod f for monic f.
Poly poly_mod(Poly a, const Poly& f, std::uint32_t p) {
  trim(a);
  const std::size_t n = f.size() - 1;
  while (a.size() > n) {
    const std::uint64_t c = a.back();
    const std::size_t shift = a.size() - 1 - n;
    for (std::size_t i = 0; i <= n; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * f[i]) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  return poly_mod(std::move(r), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint32_t p) {
  Poly r{1};
  base = poly_mod(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a, e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    const std::uint32_t li = inv_mod(b.back(), p);
    for (auto& c : b) c = static_cast<std::uint32_t>(std::uint64_t{c} * li % p);
    a = poly_mod(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Rabin's test for monic f of degree n over F_p.
bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t n = f.size() - 1;
  const Poly x{0, 1};
  std::vector<Poly> frob(n + 1);  // frob[j] = x^(p^j) mod f
  frob[0] = poly_mod(x, f, p);
  for (std::size_t j = 1; j <= n; ++j) frob[j] = poly_powmod(frob[j - 1], p, f, p);
  if (frob[n] != poly_mod(x, f, p)) return false;
  for (const auto r : prime_factors(n)) {
    Poly h = frob[n / r];
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = (h[1] + p - 1) % p;
    const Poly g = poly_gcd(h, f, p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

FieldCtx FieldCtx::make(std::uint32_t p, std::uint32_t k, std::uint64_t size_cap) {
  if (!is_prime(p)) throw PreconditionError("p = " + std::to_string(p) + " is not prime");
  if (p < 5) throw PreconditionError("characteristic must be at least 5");
  if (k < 1) throw PreconditionError("k must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q * q > size_cap) {
      throw PreconditionError("field size q^2 exceeds the size cap " + std::to_string(size_cap));
    }
  }

  FieldCtx ctx;
  ctx.p_ = p;
  ctx.k_ = k;
  ctx.q_ = static_cast<std::uint32_t>(q);
  ctx.size_ = static_cast<std::uint32_t>(q * q);
  const std::uint32_t n = 2 * k;
  ctx.pow_p_.resize(n + 1);
  ctx.pow_p_[0] = 1;
  for (std::uint32_t j = 1; j <= n; ++j) ctx.pow_p_[j] = ctx.pow_p_[j - 1] * p;

  // Smallest monic irreducible, comparing c_0 first, then c_1, ...
  Poly f(n + 1, 0);
  f[n] = 1;
  bool found = false;
  for (std::uint64_t idx = 0; idx < ctx.size_ && !found; ++idx) {
    std::uint64_t rest = idx;
    for (std::uint32_t j = n; j-- > 0;) {
      f[j] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    if (f[0] != 0 && is_irreducible(f, p)) found = true;
  }
  if (!found) throw InvariantError("no irreducible polynomial found");
  ctx.modulus_ = f;

  auto to_poly = [&](std::uint32_t code) {
    Poly a(n, 0);
    for (std::uint32_t j = 0; j < n; ++j) {
      a[j] = code % p;
      code /= p;
    }
    trim(a);
    return a;
  };
  auto to_code = [&](const Poly& a) {
    std::uint32_t code = 0;
    for (std::size_t j = a.size(); j-- > 0;) code = code * p + a[j];
    return code;
  };

  // Smallest code of full multiplicative order.
  const std::uint64_t order = ctx.size_ - 1;
  const auto factors = prime_factors(order);
  std::uint32_t gen = 0;
  for (std::uint32_t code = 2; code < ctx.size_; ++code) {
    const Poly a = to_poly(code);
    bool primitive = true;
    for (const auto r : factors) {
      if (poly_powmod(a, order / r, f, p) == Poly{1}) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      gen = code;
      break;
    }
  }
  if (gen == 0) throw InvariantError("no multiplicative generator found");

  ctx.exp_.resize(order);
  ctx.log_.assign(ctx.size_, 0);
  std::vector<bool> seen(ctx.size_, false);
  const Poly g = to_poly(gen);
  Poly cur{1};
  for (std::uint64_t m = 0; m < order; ++m) {
    const std::uint32_t code = to_code(cur);
    if (code == 0 || seen[code]) throw InvariantError("generator table is not a bijection");
    seen[code] = true;
    ctx.exp_[m] = FqElem{code};
    ctx.log_[code] = static_cast<std::uint32_t>(m);
    cur = poly_mulmod(cur, g, f, p);
  }
  ctx.chi_.resize(ctx.size_);
  ctx.chi_[0] = kNoChi;
  for (std::uint32_t code = 1; code < ctx.size_; ++code) ctx.chi_[code] = ctx.log_[code] % ctx.d();
  return ctx;
}

FqElem FieldCtx::from_int(std::int64_t n) const {
  const std::int64_t r = ((n % p_) + p_) % p_;
  return FqElem{static_cast<std::uint32_t>(r)};
}

FqElem FieldCtx::from_coeffs(std::span<const std::int64_t> coeffs) const {
  if (coeffs.size() > degree()) {
    throw PreconditionError("element has more than " + std::to_string(degree()) + " coordinates");
  }
  std::uint32_t code = 0;
  for (std::size_t j = coeffs.size(); j-- > 0;) {
    const std::int64_t r = ((coeffs[j] % p_) + p_) % p_;
    code = code * p_ + static_cast<std::uint32_t>(r);
  }
  return FqElem{code};
}

std::vector<std::uint32_t> FieldCtx::coeffs(FqElem x) const {
  std::vector<std::uint32_t> out(degree());
  std::uint32_t code = x.code;
  for (auto& c : out) {
    c = code % p_;
    code /= p_;
  }
  return out;
}

std::uint32_t FieldCtx::digit(FqElem x, std::uint32_t j) const {
  return (x.code / pow_p_[j]) % p_;
}

FqElem FieldCtx::add(FqElem x, FqElem y) const {
  std::uint32_t a = x.code, b = y.code, r = 0;
  for (std::uint32_t j = 0; j < degree() && (a | b); ++j) {
    std::uint32_t s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    r += s * pow_p_[j];
    a /= p_;
    b /= p_;
  }
  return FqElem{r};
}

FqElem FieldCtx::neg(FqElem x) const {
  std::uint32_t a = x.code, r = 0;
  for (std::uint32_t j = 0; j < degree() && a; ++j) {
    const std::uint32_t c = a % p_;
    if (c) r += (p_ - c) * pow_p_[j];
    a /= p_;
  }
  return FqElem{r};
}

FqElem FieldCtx::sub(FqElem x, FqElem y) const { return add(x, neg(y)); }

FqElem FieldCtx::mul(FqElem x, FqElem y) const {
  if (x.code == 0 || y.code == 0) return zero();
  std::uint64_t m = std::uint64_t{log_[x.code]} + log_[y.code];
  if (m >= group_order()) m -= group_order();
  return exp_[m];
}

FqElem FieldCtx::inv(FqElem x) const {
  if (x.code == 0) throw PreconditionError("inverse of zero");
  const std::uint32_t m = log_[x.code];
  return exp_[m == 0 ? 0 : group_order() - m];
}

FqElem FieldCtx::pow(FqElem x, std::int64_t e) const {
  if (x.code == 0) {
    if (e < 0) throw PreconditionError("negative power of zero");
    return e == 0 ? one() : zero();
  }
  const std::int64_t n = group_order();
  std::int64_t m = (static_cast<std::int64_t>(log_[x.code]) * (e % n)) % n;
  if (m < 0) m += n;
  return exp_[m];
}

std::uint32_t FieldCtx::dlog(FqElem x) const {
  if (x.code == 0) throw PreconditionError("discrete log of zero");
  return log_[x.code];
}

FqElem FieldCtx::exp(std::int64_t m) const {
  const std::int64_t n = group_order();
  m %= n;
  if (m < 0) m += n;
  return exp_[m];
}

FqElem FieldCtx::frobenius(FqElem x) const {
  if (x.code == 0) return x;
  return exp_[(std::uint64_t{log_[x.code]} * q_) % group_order()];
}

bool FieldCtx::in_mu_d(FqElem x) const {
  if (x.code == 0) throw PreconditionError("0 is not a root of unity");
  return log_[x.code] % (q_ - 1) == 0;
}

ChiExp FieldCtx::chi_exp(FqElem x, std::uint32_t i) const {
  if (x.code == 0) return std::nullopt;
  const std::uint64_t e = log_[x.code] % d();
  return static_cast<std::uint32_t>(e * (i % d()) % d());
}

std::uint32_t FieldCtx::mu_d_index(FqElem x) const {
  if (x.code == 0 || log_[x.code] % (q_ - 1) != 0) {
    throw PreconditionError("element is not a d-th root of unity");
  }
  return log_[x.code] / (q_ - 1);
}

FqElem FieldCtx::mu_d_element(std::int64_t j) const {
  const std::int64_t dd = d();
  j %= dd;
  if (j < 0) j += dd;
  return exp_[static_cast<std::uint64_t>(j) * (q_ - 1)];
}

FqElem FieldCtx::primitive_root_of_unity(std::uint32_t m) const {
  if (m == 0 || group_order() % m != 0) {
    throw PreconditionError(std::to_string(m) + " does not divide q^2 - 1");
  }
  return exp(group_order() / m);
}

std::uint32_t FieldCtx::multiplicative_order(FqElem x) const {
  if (x.code == 0) throw PreconditionError("0 has no multiplicative order");
  const std::uint32_t n = group_order();
  const std::uint32_t m = log_[x.code];
  return n / std::gcd(n, m == 0 ? n : m);
}

std::vector<FqElem> FieldCtx::subfield_elements() const {
  std::vector<FqElem> out;
  out.reserve(q_);
  out.push_back(zero());
  for (std::uint32_t j = 0; j + 1 < q_; ++j) out.push_back(exp_[std::uint64_t{j} * (q_ + 1)]);
  return out;
}

bool FieldCtx::is_subfield_square(FqElem c) const {
  if (!in_subfield(c)) throw PreconditionError("element is not in F_q");
  if (c.code == 0) return true;
  return (log_[c.code] / (q_ + 1)) % 2 == 0;
}

std::vector<std::pair<FqElem, FqElem>> FieldCtx::find_ab_pairs() const {
  std::vector<std::pair<FqElem, FqElem>> out;
  for (const FqElem a : subfield_elements()) {
    const FqElem c = add(mul(a, a), one());
    if (c.code == 0) continue;
    const std::uint32_t m = log_[c.code];
    const std::uint32_t half = m / 2;  // m is a multiple of q+1, hence even
    if (half % (q_ + 1) == 0) continue;  // square root lies in F_q
    const FqElem b0 = exp_[half];
    out.emplace_back(a, b0);
    out.emplace_back(a, neg(b0));
  }
  std::sort(out.begin(), out.end(), [this](const auto& x, const auto& y) {
    const auto kx = std::pair{log_[x.first.code], log_[x.second.code]};
    const auto ky = std::pair{log_[y.first.code], log_[y.second.code]};
    return kx < ky;
  });
  return out;
}

}  // namespace fermatlines::gf
