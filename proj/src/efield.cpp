#include "fermatlines/efield.hpp"

#include "fermatlines/errors.hpp"

namespace fermatlines::efield {

using gf::FieldCtx;
using gf::FqElem;

RatFunc RatFuncField::make(Poly num, Poly den) const {
  ring_.trim(num);
  ring_.trim(den);
  if (den.empty()) throw PreconditionError("rational function with zero denominator");
  if (num.empty()) return zero();
  const Poly g = ring_.gcd(num, den);
  if (g.size() > 1) {
    num = ring_.quo(num, g);
    den = ring_.quo(den, g);
  }
  const FqElem li = ctx().inv(den.back());
  return RatFunc{ring_.scale(num, li), ring_.scale(den, li)};
}

RatFunc RatFuncField::add(const RatFunc& a, const RatFunc& b) const {
  if (is_zero(a)) return b;
  if (is_zero(b)) return a;
  if (a.den == b.den) return make(ring_.add(a.num, b.num), a.den);
  return make(ring_.add(ring_.mul(a.num, b.den), ring_.mul(b.num, a.den)), ring_.mul(a.den, b.den));
}

RatFunc RatFuncField::mul(const RatFunc& a, const RatFunc& b) const {
  if (is_zero(a) || is_zero(b)) return zero();
  return make(ring_.mul(a.num, b.num), ring_.mul(a.den, b.den));
}

RatFunc RatFuncField::inv(const RatFunc& a) const {
  if (is_zero(a)) throw PreconditionError("inverse of the zero rational function");
  return make(a.den, a.num);
}

RatFunc RatFuncField::scale_variable(const RatFunc& a, FqElem zeta) const {
  auto scale = [&](Poly p) {
    FqElem z = ctx().one();
    for (auto& c : p) {
      c = ctx().mul(c, z);
      z = ctx().mul(z, zeta);
    }
    return p;
  };
  return make(scale(a.num), scale(a.den));
}

algebra::Curve<RatFuncField> curve_E(const FieldCtx& ctx) {
  RatFuncField K(ctx);
  return algebra::Curve<RatFuncField>(K, K.one(), K.monomial(ctx.from_int(-1), ctx.d()));
}

bool on_curve(const FieldCtx& ctx, const CurvePoint& P) { return curve_E(ctx).on_curve(P); }

CurvePoint curve_add(const FieldCtx& ctx, const CurvePoint& P, const CurvePoint& Q) {
  const auto E = curve_E(ctx);
  if (!E.on_curve(P) || !E.on_curve(Q)) throw PreconditionError("point is not on E_d");
  return E.add(P, Q);
}

CurvePoint curve_neg(const FieldCtx& ctx, const CurvePoint& P) {
  const auto E = curve_E(ctx);
  if (!E.on_curve(P)) throw PreconditionError("point is not on E_d");
  return E.neg(P);
}

CurvePoint mu_d_translate(const FieldCtx& ctx, const CurvePoint& P, FqElem zeta) {
  if (zeta == ctx.zero() || !ctx.in_mu_d(zeta)) {
    throw PreconditionError("translation needs a d-th root of unity");
  }
  if (!P) return P;
  RatFuncField K(ctx);
  return std::pair{K.scale_variable(P->first, zeta), K.scale_variable(P->second, zeta)};
}

std::optional<Poly> poly_sqrt(const FieldCtx& ctx, const Poly& a) {
  if (a.empty()) return Poly{};
  if (a.size() % 2 == 0) return std::nullopt;
  const std::uint32_t lead_log = ctx.dlog(a.back());
  if (lead_log % 2 != 0) return std::nullopt;
  const std::size_t n = (a.size() - 1) / 2;
  Poly r(n + 1, ctx.zero());
  r[n] = ctx.exp(lead_log / 2);
  const FqElem inv_two_lead = ctx.inv(ctx.add(r[n], r[n]));
  // Fix coefficients from the top: the t^(n+k) coefficient of r^2 involves
  // r_k linearly through 2 r_n r_k.
  for (std::size_t k = n; k-- > 0;) {
    FqElem c = a[n + k];
    for (std::size_t i = k + 1; i <= n; ++i) {
      const std::size_t j = n + k - i;
      if (j > n || j <= k) continue;
      c = ctx.sub(c, ctx.mul(r[i], r[j]));
    }
    r[k] = ctx.mul(c, inv_two_lead);
  }
  const algebra::PolyRing<GfField> ring{GfField(ctx)};
  if (ring.mul(r, r) != a) return std::nullopt;
  return r;
}

std::array<LinearForm, 3> line_forms(const FieldCtx& ctx, const fermat::Line& L) {
  return {LinearForm{ctx.zero(), ctx.one()}, LinearForm{L.beta, L.alpha},
          LinearForm{ctx.neg(L.alpha), ctx.neg(L.beta)}};
}

namespace {

template <class G, class Embed>
typename algebra::Curve<G>::Point conjugate_point(const G& g, const std::array<LinearForm, 3>& forms,
                                                  const typename G::Elem& root, std::uint32_t d,
                                                  Embed&& embed) {
  const auto x0 = g.add(embed(forms[0].c0), g.mul(embed(forms[0].c1), root));
  const auto x2 = g.add(embed(forms[2].c0), g.mul(embed(forms[2].c1), root));
  const auto x0d = algebra::power(g, x0, d);
  const auto x2d = algebra::power(g, x2, d);
  const auto x = g.neg(g.mul(x0d, x2d));
  const auto y = g.mul(x, x0d);
  return std::pair{x, y};
}

}  // namespace

PointConstruction construct_from_forms(const FieldCtx& ctx, const std::array<LinearForm, 3>& forms) {
  using L1 = algebra::ExtField<RatFuncField>;
  using L2 = algebra::ExtField<L1>;
  const std::uint32_t d = ctx.d();
  const GfField F(ctx);
  const algebra::PolyRing<GfField> Fs(F);
  const RatFuncField K(ctx);

  Poly c = Fs.constant(ctx.one());
  for (const auto& f : forms) c = Fs.mul(c, Fs.add(Fs.constant(f.c0), Fs.monomial(f.c1, 1)));
  if (c.size() != 4) throw PreconditionError("x0 x1 x2 must be a cubic in s");
  const FqElem li = ctx.inv(c[3]);
  PointConstruction out;
  out.cubic = {K.sub(K.constant(ctx.mul(c[0], li)), K.monomial(li, 1)), K.constant(ctx.mul(c[1], li)),
               K.constant(ctx.mul(c[2], li)), K.one()};
  const RatFunc& C = out.cubic[0];
  const RatFunc& B = out.cubic[1];
  const RatFunc& A = out.cubic[2];

  // disc(s^3 + A s^2 + B s + C) = A^2B^2 - 4B^3 - 4A^3C - 27C^2 + 18ABC.
  auto k = [&](std::int64_t n) { return K.constant(ctx.from_int(n)); };
  const RatFunc AB = K.mul(A, B);
  RatFunc disc = K.mul(AB, AB);
  disc = K.sub(disc, K.mul(k(4), K.mul(B, K.mul(B, B))));
  disc = K.sub(disc, K.mul(k(4), K.mul(K.mul(A, K.mul(A, A)), C)));
  disc = K.sub(disc, K.mul(k(27), K.mul(C, C)));
  disc = K.add(disc, K.mul(k(18), K.mul(AB, C)));
  if (disc.den != Poly{ctx.one()}) throw InvariantError("discriminant of m is not a polynomial");
  const auto delta = poly_sqrt(ctx, disc.num);
  out.galois = delta.has_value();

  const L1 l1(K, std::vector<RatFunc>(out.cubic.begin(), out.cubic.end()));
  const auto E1 = algebra::Curve<L1>(l1, l1.one(), l1.embed(K.monomial(ctx.from_int(-1), d)));
  const auto s0 = l1.generator();
  auto embed1 = [&](FqElem x) { return l1.embed(K.constant(x)); };
  const auto Q1 = l1.add(l1.embed(A), s0);
  const auto Q0 = l1.add(l1.embed(B), l1.mul(s0, Q1));
  const auto P1 = conjugate_point(l1, forms, s0, d, embed1);
  const auto minus_c = l1.embed(K.neg(C));

  auto descend1 = [&](const L1::Elem& e) {
    if (!l1.in_base(e)) throw InvariantError("trace did not descend to F_{q^2}(t)");
    return e[0];
  };

  if (out.galois) {
    // sqrt(disc(Q)) = delta / m'(s0).
    const auto mprime = l1.add(l1.add(l1.mul(l1.embed(k(3)), l1.mul(s0, s0)),
                                      l1.mul(l1.embed(K.add(A, A)), s0)),
                               l1.embed(B));
    const auto sigma = l1.mul(l1.embed(K.from_poly(*delta)), l1.inv(mprime));
    const auto half = l1.embed(K.inv(k(2)));
    const auto r2 = l1.mul(l1.sub(sigma, Q1), half);
    const auto r3 = l1.mul(l1.neg(l1.add(sigma, Q1)), half);
    if (!l1.is_zero(l1.add(l1.mul(r2, l1.add(r2, Q1)), Q0))) {
      throw InvariantError("quadratic cofactor root check failed");
    }
    out.vieta_ok = l1.equal(l1.mul(s0, l1.mul(r2, r3)), minus_c);
    const auto P2 = conjugate_point(l1, forms, r2, d, embed1);
    const auto P3 = conjugate_point(l1, forms, r3, d, embed1);
    out.conjugates_on_curve = {E1.on_curve(P1), E1.on_curve(P2), E1.on_curve(P3)};
    const auto sum = E1.add(E1.add(P1, P2), P3);
    if (sum) out.point = std::pair{descend1(sum->first), descend1(sum->second)};
  } else {
    const L2 l2(l1, {Q0, Q1, l1.one()});
    auto embed2 = [&](FqElem x) { return l2.embed(embed1(x)); };
    const auto E2 = algebra::Curve<L2>(l2, l2.one(), l2.embed(E1.a3()));
    const auto r = l2.generator();
    const auto r_conj = l2.sub(l2.neg(l2.embed(Q1)), r);
    out.vieta_ok = l2.equal(l2.mul(l2.embed(s0), l2.mul(r, r_conj)), l2.embed(minus_c));
    const L2::Elem s0_2 = l2.embed(s0);
    const auto P1e = conjugate_point(l2, forms, s0_2, d, embed2);
    const auto P2 = conjugate_point(l2, forms, r, d, embed2);
    const auto P3 = conjugate_point(l2, forms, r_conj, d, embed2);
    out.conjugates_on_curve = {E1.on_curve(P1), E2.on_curve(P2), E2.on_curve(P3)};
    const auto sum = E2.add(E2.add(P1e, P2), P3);
    auto descend2 = [&](const L2::Elem& e) {
      if (!l2.in_base(e)) throw InvariantError("trace did not descend to F_{q^2}(t)");
      return descend1(e[0]);
    };
    if (sum) out.point = std::pair{descend2(sum->first), descend2(sum->second)};
  }
  if (!curve_E(ctx).on_curve(out.point)) throw InvariantError("traced point is not on E_d");
  return out;
}

PointConstruction construct_point(const FieldCtx& ctx, const fermat::Line& L) {
  return construct_from_forms(ctx, line_forms(ctx, L));
}

}  // namespace fermatlines::efield
