#pragma once

// Generic polynomial rings, simple algebraic extensions and the long
// Weierstrass group law, written once against a small "field object"
// interface so the same code runs over F_{q^2}(t) and over towers above it.

#include <concepts>
#include <cstdint>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "fermatlines/errors.hpp"

namespace fermatlines::algebra {

template <class F>
concept FieldObject = requires(const F& f, const typename F::Elem& a) {
  { f.zero() } -> std::convertible_to<typename F::Elem>;
  { f.one() } -> std::convertible_to<typename F::Elem>;
  { f.add(a, a) } -> std::convertible_to<typename F::Elem>;
  { f.sub(a, a) } -> std::convertible_to<typename F::Elem>;
  { f.neg(a) } -> std::convertible_to<typename F::Elem>;
  { f.mul(a, a) } -> std::convertible_to<typename F::Elem>;
  { f.inv(a) } -> std::convertible_to<typename F::Elem>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.equal(a, a) } -> std::convertible_to<bool>;
};

template <FieldObject F>
typename F::Elem from_int(const F& f, std::int64_t n) {
  typename F::Elem out = f.zero();
  typename F::Elem unit = n < 0 ? f.neg(f.one()) : f.one();
  for (std::int64_t k = n < 0 ? -n : n; k > 0; --k) out = f.add(out, unit);
  return out;
}

template <FieldObject F>
typename F::Elem power(const F& f, typename F::Elem x, std::uint64_t e) {
  typename F::Elem r = f.one();
  while (e) {
    if (e & 1) r = f.mul(r, x);
    e >>= 1;
    if (e) x = f.mul(x, x);
  }
  return r;
}

// Dense polynomials over F, low degree first, no trailing zeros.
template <FieldObject F>
class PolyRing {
 public:
  using Elem = typename F::Elem;
  using Poly = std::vector<Elem>;

  explicit PolyRing(F f) : f_(std::move(f)) {}
  const F& base() const { return f_; }

  void trim(Poly& a) const {
    while (!a.empty() && f_.is_zero(a.back())) a.pop_back();
  }
  int degree(const Poly& a) const { return static_cast<int>(a.size()) - 1; }
  Poly constant(const Elem& c) const {
    Poly p{c};
    trim(p);
    return p;
  }
  Poly monomial(const Elem& c, std::size_t deg) const {
    if (f_.is_zero(c)) return {};
    Poly p(deg + 1, f_.zero());
    p[deg] = c;
    return p;
  }

  bool equal(const Poly& a, const Poly& b) const {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!f_.equal(a[i], b[i])) return false;
    }
    return true;
  }

  Poly add(const Poly& a, const Poly& b) const {
    Poly out(std::max(a.size(), b.size()), f_.zero());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = f_.add(out[i], b[i]);
    trim(out);
    return out;
  }
  Poly neg(const Poly& a) const {
    Poly out;
    out.reserve(a.size());
    for (const auto& c : a) out.push_back(f_.neg(c));
    return out;
  }
  Poly sub(const Poly& a, const Poly& b) const { return add(a, neg(b)); }
  Poly scale(const Poly& a, const Elem& c) const {
    if (f_.is_zero(c)) return {};
    Poly out;
    out.reserve(a.size());
    for (const auto& x : a) out.push_back(f_.mul(x, c));
    trim(out);
    return out;
  }
  Poly mul(const Poly& a, const Poly& b) const {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, f_.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (f_.is_zero(a[i])) continue;
      for (std::size_t j = 0; j < b.size(); ++j) {
        out[i + j] = f_.add(out[i + j], f_.mul(a[i], b[j]));
      }
    }
    trim(out);
    return out;
  }

  std::pair<Poly, Poly> divmod(Poly a, const Poly& b) const {
    if (b.empty()) throw PreconditionError("polynomial division by zero");
    if (a.size() < b.size()) return {Poly{}, std::move(a)};
    const Elem lead_inv = f_.inv(b.back());
    Poly quo(a.size() - b.size() + 1, f_.zero());
    for (std::size_t i = a.size(); i-- > b.size() - 1;) {
      if (f_.is_zero(a[i])) continue;
      const Elem c = f_.mul(a[i], lead_inv);
      const std::size_t shift = i + 1 - b.size();
      quo[shift] = c;
      for (std::size_t j = 0; j < b.size(); ++j) {
        a[shift + j] = f_.sub(a[shift + j], f_.mul(c, b[j]));
      }
    }
    a.resize(b.size() - 1);
    trim(a);
    trim(quo);
    return {std::move(quo), std::move(a)};
  }
  Poly rem(const Poly& a, const Poly& b) const { return divmod(a, b).second; }
  Poly quo(const Poly& a, const Poly& b) const { return divmod(a, b).first; }

  Poly monic(const Poly& a) const {
    if (a.empty()) return a;
    return scale(a, f_.inv(a.back()));
  }

  // Monic gcd; gcd(0, 0) = 0.
  Poly gcd(Poly a, Poly b) const {
    while (!b.empty()) {
      Poly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }

  // (g, u, v) with u a + v b = g and g monic.
  std::tuple<Poly, Poly, Poly> gcdext(Poly a, Poly b) const {
    Poly u0 = constant(f_.one()), u1{};
    Poly v0{}, v1 = constant(f_.one());
    while (!b.empty()) {
      auto [q, r] = divmod(a, b);
      a = std::move(b);
      b = std::move(r);
      Poly u2 = sub(u0, mul(q, u1));
      Poly v2 = sub(v0, mul(q, v1));
      u0 = std::move(u1);
      u1 = std::move(u2);
      v0 = std::move(v1);
      v1 = std::move(v2);
    }
    if (a.empty()) return {a, u0, v0};
    const Elem li = f_.inv(a.back());
    return {scale(a, li), scale(u0, li), scale(v0, li)};
  }

  Poly derivative(const Poly& a) const {
    Poly out;
    for (std::size_t i = 1; i < a.size(); ++i) {
      out.push_back(f_.mul(from_int(f_, static_cast<std::int64_t>(i)), a[i]));
    }
    trim(out);
    return out;
  }

  // Evaluation at a point of any F-algebra G, given the embedding F -> G.
  template <FieldObject G, class Embed>
  typename G::Elem eval(const G& g, const Poly& a, const typename G::Elem& x, Embed&& embed) const {
    typename G::Elem r = g.zero();
    for (std::size_t i = a.size(); i-- > 0;) r = g.add(g.mul(r, x), embed(a[i]));
    return r;
  }

 private:
  F f_;
};

// F[s]/(m) for monic m of degree n >= 1. Elements are coefficient vectors of
// length n. inv() throws InvariantError on a zero divisor, which can only
// happen when m is reducible.
template <FieldObject F>
class ExtField {
 public:
  using BaseElem = typename F::Elem;
  using Poly = std::vector<BaseElem>;
  using Elem = std::vector<BaseElem>;

  ExtField(F base, Poly modulus) : ring_(std::move(base)), modulus_(std::move(modulus)) {
    ring_.trim(modulus_);
    if (modulus_.size() < 2) throw PreconditionError("extension modulus must have degree >= 1");
    if (!ring_.base().equal(modulus_.back(), ring_.base().one())) {
      throw PreconditionError("extension modulus must be monic");
    }
  }

  const F& base() const { return ring_.base(); }
  const PolyRing<F>& ring() const { return ring_; }
  const Poly& modulus() const { return modulus_; }
  std::size_t degree() const { return modulus_.size() - 1; }

  Elem zero() const { return Elem(degree(), base().zero()); }
  Elem one() const { return embed(base().one()); }
  Elem embed(const BaseElem& c) const {
    Elem out = zero();
    out[0] = c;
    return out;
  }
  // The class of s.
  Elem generator() const { return from_poly(ring_.monomial(base().one(), 1)); }
  Elem from_poly(const Poly& p) const {
    Poly r = ring_.rem(p, modulus_);
    Elem out = zero();
    for (std::size_t i = 0; i < r.size(); ++i) out[i] = r[i];
    return out;
  }
  Poly to_poly(const Elem& e) const {
    Poly p = e;
    ring_.trim(p);
    return p;
  }

  Elem add(const Elem& a, const Elem& b) const {
    Elem out(degree(), base().zero());
    for (std::size_t i = 0; i < degree(); ++i) out[i] = base().add(a[i], b[i]);
    return out;
  }
  Elem sub(const Elem& a, const Elem& b) const {
    Elem out(degree(), base().zero());
    for (std::size_t i = 0; i < degree(); ++i) out[i] = base().sub(a[i], b[i]);
    return out;
  }
  Elem neg(const Elem& a) const {
    Elem out(degree(), base().zero());
    for (std::size_t i = 0; i < degree(); ++i) out[i] = base().neg(a[i]);
    return out;
  }
  Elem mul(const Elem& a, const Elem& b) const { return from_poly(ring_.mul(to_poly(a), to_poly(b))); }
  Elem inv(const Elem& a) const {
    auto [g, u, v] = ring_.gcdext(to_poly(a), modulus_);
    if (g.size() != 1) throw InvariantError("inverting a zero divisor in a field extension");
    return from_poly(u);
  }
  bool is_zero(const Elem& a) const {
    for (const auto& c : a) {
      if (!base().is_zero(c)) return false;
    }
    return true;
  }
  bool equal(const Elem& a, const Elem& b) const {
    for (std::size_t i = 0; i < degree(); ++i) {
      if (!base().equal(a[i], b[i])) return false;
    }
    return true;
  }
  // Whether a lies in the image of the base field.
  bool in_base(const Elem& a) const {
    for (std::size_t i = 1; i < degree(); ++i) {
      if (!base().is_zero(a[i])) return false;
    }
    return true;
  }

 private:
  PolyRing<F> ring_;
  Poly modulus_;
};

// y^2 + a1 x y + a3 y = x^3 (a2 = a4 = a6 = 0) over F.
template <FieldObject F>
class Curve {
 public:
  using Elem = typename F::Elem;
  using Point = std::optional<std::pair<Elem, Elem>>;  // nullopt is O

  Curve(F f, Elem a1, Elem a3) : f_(std::move(f)), a1_(std::move(a1)), a3_(std::move(a3)) {}

  const F& field() const { return f_; }
  const Elem& a1() const { return a1_; }
  const Elem& a3() const { return a3_; }

  // y^2 + a1 x y + a3 y - x^3.
  Elem equation(const Elem& x, const Elem& y) const {
    const Elem lhs = f_.add(f_.mul(y, y), f_.add(f_.mul(a1_, f_.mul(x, y)), f_.mul(a3_, y)));
    return f_.sub(lhs, f_.mul(x, f_.mul(x, x)));
  }
  bool on_curve(const Point& P) const { return !P || f_.is_zero(equation(P->first, P->second)); }

  Point neg(const Point& P) const {
    if (!P) return P;
    const auto& [x, y] = *P;
    return std::pair{x, f_.sub(f_.neg(y), f_.add(f_.mul(a1_, x), a3_))};
  }

  Point add(const Point& P, const Point& Q) const {
    if (!P) return Q;
    if (!Q) return P;
    const auto& [x1, y1] = *P;
    const auto& [x2, y2] = *Q;
    Elem lambda, nu;
    if (f_.equal(x1, x2)) {
      const Elem s = f_.add(f_.add(y1, y2), f_.add(f_.mul(a1_, x2), a3_));
      if (f_.is_zero(s)) return std::nullopt;
      const Elem den = f_.inv(f_.add(f_.add(f_.add(y1, y1), f_.mul(a1_, x1)), a3_));
      const Elem xx = f_.mul(x1, x1);
      lambda = f_.mul(f_.sub(f_.add(f_.add(xx, xx), xx), f_.mul(a1_, y1)), den);
      nu = f_.mul(f_.neg(f_.add(f_.mul(xx, x1), f_.mul(a3_, y1))), den);
    } else {
      const Elem den = f_.inv(f_.sub(x2, x1));
      lambda = f_.mul(f_.sub(y2, y1), den);
      nu = f_.mul(f_.sub(f_.mul(y1, x2), f_.mul(y2, x1)), den);
    }
    const Elem x3 = f_.sub(f_.add(f_.mul(lambda, lambda), f_.mul(a1_, lambda)), f_.add(x1, x2));
    const Elem y3 = f_.sub(f_.neg(f_.mul(f_.add(lambda, a1_), x3)), f_.add(nu, a3_));
    return std::pair{x3, y3};
  }

  Point multiply(const Point& P, std::int64_t n) const {
    Point base = n < 0 ? neg(P) : P;
    Point acc;
    for (std::uint64_t k = n < 0 ? -static_cast<std::uint64_t>(n) : n; k; k >>= 1) {
      if (k & 1) acc = add(acc, base);
      if (k > 1) base = add(base, base);
    }
    return acc;
  }

 private:
  F f_;
  Elem a1_;
  Elem a3_;
};

}  // namespace fermatlines::algebra
