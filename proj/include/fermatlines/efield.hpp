#pragma once

// The rational function field K = F_{q^2}(t), the curve
// E_d: y^2 + x y - t^d y = x^3 over it, and the point obtained from a line
// on the Fermat surface by summing its three conjugates over a cubic
// extension of K.

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fermatlines/algebra.hpp"
#include "fermatlines/fermat.hpp"
#include "fermatlines/gf.hpp"

namespace fermatlines::efield {

using Poly = std::vector<gf::FqElem>;

class GfField {
 public:
  using Elem = gf::FqElem;
  explicit GfField(const gf::FieldCtx& ctx) : ctx_(&ctx) {}
  const gf::FieldCtx& ctx() const { return *ctx_; }

  Elem zero() const { return ctx_->zero(); }
  Elem one() const { return ctx_->one(); }
  Elem add(Elem a, Elem b) const { return ctx_->add(a, b); }
  Elem sub(Elem a, Elem b) const { return ctx_->sub(a, b); }
  Elem neg(Elem a) const { return ctx_->neg(a); }
  Elem mul(Elem a, Elem b) const { return ctx_->mul(a, b); }
  Elem inv(Elem a) const { return ctx_->inv(a); }
  bool is_zero(Elem a) const { return a == ctx_->zero(); }
  bool equal(Elem a, Elem b) const { return a == b; }

 private:
  const gf::FieldCtx* ctx_;
};

// num / den with gcd(num, den) = 1 and den monic.
struct RatFunc {
  Poly num;
  Poly den;

  friend bool operator==(const RatFunc&, const RatFunc&) = default;
};

class RatFuncField {
 public:
  using Elem = RatFunc;
  explicit RatFuncField(const gf::FieldCtx& ctx) : ring_(GfField(ctx)) {}
  const gf::FieldCtx& ctx() const { return ring_.base().ctx(); }
  const algebra::PolyRing<GfField>& ring() const { return ring_; }

  // Reduces to canonical form. Throws PreconditionError for den = 0.
  RatFunc make(Poly num, Poly den) const;
  RatFunc from_poly(Poly p) const { return make(std::move(p), Poly{ctx().one()}); }
  RatFunc constant(gf::FqElem c) const { return from_poly(ring_.constant(c)); }
  // c t^k.
  RatFunc monomial(gf::FqElem c, std::size_t k) const { return from_poly(ring_.monomial(c, k)); }

  RatFunc zero() const { return RatFunc{{}, {ctx().one()}}; }
  RatFunc one() const { return constant(ctx().one()); }
  RatFunc add(const RatFunc& a, const RatFunc& b) const;
  RatFunc sub(const RatFunc& a, const RatFunc& b) const { return add(a, neg(b)); }
  RatFunc neg(const RatFunc& a) const { return RatFunc{ring_.neg(a.num), a.den}; }
  RatFunc mul(const RatFunc& a, const RatFunc& b) const;
  RatFunc inv(const RatFunc& a) const;
  bool is_zero(const RatFunc& a) const { return a.num.empty(); }
  bool equal(const RatFunc& a, const RatFunc& b) const { return a == b; }

  // t -> zeta t.
  RatFunc scale_variable(const RatFunc& a, gf::FqElem zeta) const;

 private:
  algebra::PolyRing<GfField> ring_;
};

using CurvePoint = algebra::Curve<RatFuncField>::Point;

// E_d over F_{q^2}(t): a1 = 1, a3 = -t^d.
algebra::Curve<RatFuncField> curve_E(const gf::FieldCtx& ctx);

bool on_curve(const gf::FieldCtx& ctx, const CurvePoint& P);
// Throw PreconditionError if an input is not on E_d.
CurvePoint curve_add(const gf::FieldCtx& ctx, const CurvePoint& P, const CurvePoint& Q);
CurvePoint curve_neg(const gf::FieldCtx& ctx, const CurvePoint& P);

// Substitutes t -> zeta t. Throws PreconditionError unless zeta is in mu_d.
CurvePoint mu_d_translate(const gf::FieldCtx& ctx, const CurvePoint& P, gf::FqElem zeta);

// c0 + c1 s.
struct LinearForm {
  gf::FqElem c0;
  gf::FqElem c1;
};

struct PointConstruction {
  CurvePoint point;
  // m(s) = (x0 x1 x2 - t) / lead, monic cubic over K, low degree first.
  std::array<RatFunc, 4> cubic;
  // The quadratic cofactor of m splits over K(s0), i.e. disc(m) is a square.
  bool galois = false;
  std::array<bool, 3> conjugates_on_curve{};
  bool vieta_ok = false;
};

// Affine chart x3 = 1 of a line on the Fermat surface given by x_j = forms[j](s).
// Builds the point (x, y) = (-x0^d x2^d, -x0^{2d} x2^d) over K(s0) with
// t = x0 x1 x2 and sums its three conjugates. Throws PreconditionError if
// x0 x1 x2 is not a cubic in s, InvariantError if the sum fails to descend
// to K or misses the curve.
PointConstruction construct_from_forms(const gf::FieldCtx& ctx, const std::array<LinearForm, 3>& forms);

// x0 = s, x1 = alpha s + beta, x2 = -alpha - beta s.
std::array<LinearForm, 3> line_forms(const gf::FieldCtx& ctx, const fermat::Line& L);
PointConstruction construct_point(const gf::FieldCtx& ctx, const fermat::Line& L);

// Square root in F_{q^2}[t], if one exists.
std::optional<Poly> poly_sqrt(const gf::FieldCtx& ctx, const Poly& a);

}  // namespace fermatlines::efield
