#include "fermatlines/fermat.hpp"

#include <algorithm>
#include <string>

#include "fermatlines/errors.hpp"

namespace fermatlines::fermat {

using charsum::ExponentTuple;
using gf::FieldCtx;
using gf::FqElem;

Line Line::make(const FieldCtx& ctx, FqElem a, FqElem b) {
  if (!ctx.in_subfield(a)) throw PreconditionError("line parameter a must lie in F_q");
  if (ctx.in_subfield(b)) throw PreconditionError("line parameter b must not lie in F_q");
  if (ctx.add(ctx.mul(a, a), ctx.one()) != ctx.mul(b, b)) {
    throw PreconditionError("line parameters must satisfy a^2 + 1 = b^2");
  }
  const FqElem beta = ctx.inv(a);
  return Line{a, b, ctx.neg(ctx.mul(beta, b)), beta};
}

std::array<FqElem, 4> Line::point(const FieldCtx& ctx, FqElem u, FqElem v) const {
  return {u, v, ctx.add(ctx.mul(a, u), ctx.mul(b, v)), ctx.add(ctx.mul(a, v), ctx.mul(b, u))};
}

bool Line::contains(const FieldCtx& ctx, const std::array<FqElem, 4>& x) const {
  return x[2] == ctx.add(ctx.mul(a, x[0]), ctx.mul(b, x[1])) &&
         x[3] == ctx.add(ctx.mul(b, x[0]), ctx.mul(a, x[1]));
}

TorusElt TorusElt::from_coords(const FieldCtx& ctx, const std::array<FqElem, 4>& t) {
  TorusElt out;
  for (const FqElem x : t) {
    if (x == ctx.zero() || !ctx.in_mu_d(x)) {
      throw InvariantError("torus coordinate is not a d-th root of unity");
    }
  }
  const std::uint32_t d = ctx.d();
  const std::uint32_t e3 = ctx.mu_d_index(t[3]);
  for (int j = 0; j < 3; ++j) out.e[j] = (ctx.mu_d_index(t[j]) + d - e3) % d;
  return out;
}

std::array<FqElem, 4> TorusElt::coords(const FieldCtx& ctx) const {
  return {ctx.mu_d_element(e[0]), ctx.mu_d_element(e[1]), ctx.mu_d_element(e[2]), ctx.one()};
}

TorusElt TorusElt::inverse(std::uint32_t d) const {
  TorusElt out;
  for (int j = 0; j < 3; ++j) out.e[j] = (d - e[j]) % d;
  return out;
}

std::uint32_t TorusElt::dual_exponent(const ExponentTuple& t) const {
  const std::uint64_t d = t.d;
  const std::uint64_t s = (std::uint64_t{t.i[0]} * e[0] + std::uint64_t{t.i[1]} * e[1] +
                           std::uint64_t{t.i[2]} * e[2]) % d;
  return static_cast<std::uint32_t>((d - s) % d);
}

IntersectionSet build_intersections(const FieldCtx& ctx, const Line& L) {
  const std::uint32_t d = ctx.d();
  IntersectionSet out;
  out.three_entry.reserve(4 * (d - 1));
  for (std::uint32_t pos = 0; pos < 4; ++pos) {
    for (std::uint32_t j = 1; j < d; ++j) {
      TorusElt t;
      if (pos < 3) {
        t.e[pos] = j;
      } else {
        t.e = {d - j, d - j, d - j};
      }
      out.three_entry.push_back(t);
    }
  }

  const std::uint32_t qm1 = ctx.q() - 1;
  out.gamma_indexed.reserve(ctx.size() - ctx.q());
  for (std::uint32_t code = 0; code < ctx.size(); ++code) {
    const FqElem g{code};
    if (ctx.add(g, ctx.frobenius(g)) == ctx.zero()) continue;
    const FqElem ag_b = ctx.add(ctx.mul(L.a, g), L.b);
    const FqElem a_bg = ctx.add(L.a, ctx.mul(L.b, g));
    const std::array<FqElem, 4> inv_coords{ctx.neg(ctx.pow(g, qm1)), ctx.one(),
                                           ctx.neg(ctx.pow(ag_b, qm1)), ctx.pow(a_bg, qm1)};
    out.gamma_indexed.push_back({g, TorusElt::from_coords(ctx, inv_coords).inverse(d)});
  }
  if (out.gamma_indexed.size() != std::size_t{ctx.size()} - ctx.q()) {
    throw InvariantError("expected q^2 - q elements of nonzero trace");
  }

  std::vector<std::uint64_t> keys;
  keys.reserve(out.size());
  for (const auto& t : out.three_entry) keys.push_back(t.key(d));
  for (const auto& [g, t] : out.gamma_indexed) keys.push_back(t.key(d));
  std::sort(keys.begin(), keys.end());
  if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) {
    throw InvariantError("intersection set has a repeated torus element");
  }
  if (keys.front() == 0) throw InvariantError("intersection set contains the identity");
  return out;
}

GeometricMeeting geometric_intersection_oracle(const FieldCtx& ctx, const Line& L,
                                               const TorusElt& t) {
  const auto tc = t.coords(ctx);
  GeometricMeeting out;
  auto ratio = [&](FqElem x0, FqElem x1) -> std::optional<FqElem> {
    if (x1 == ctx.zero()) return std::nullopt;
    return ctx.div(x0, x1);
  };
  auto visit = [&](FqElem u, FqElem v) {
    auto P = L.point(ctx, u, v);
    for (int j = 0; j < 4; ++j) P[j] = ctx.mul(P[j], tc[j]);
    if (!L.contains(ctx, P)) return;
    if (++out.points == 1) out.params = std::array{ratio(u, v), ratio(P[0], P[1])};
  };
  for (std::uint32_t code = 0; code < ctx.size(); ++code) visit(FqElem{code}, ctx.one());
  visit(ctx.one(), ctx.zero());
  out.self = out.points == static_cast<int>(ctx.size()) + 1;
  if (out.points > 0 && !out.self) {
    out.distinct_params = (*out.params)[0] == (*out.params)[1] ? 1 : 2;
  }
  return out;
}

std::vector<ExponentTuple> w_tuples(std::uint32_t d) {
  if (d < 2) throw PreconditionError("w_tuples needs d >= 2");
  std::vector<ExponentTuple> out{ExponentTuple::trivial(d)};
  for (std::uint32_t i = 1; i < d; ++i) {
    if ((3 * std::uint64_t{i}) % d != 0) out.push_back(ExponentTuple::w_type(d, i));
  }
  return out;
}

Rational InnerProduct::rational() const {
  const auto n = numerator.as_integer();
  if (!n) throw InvariantError("inner product is not rational");
  return Rational(*n, denominator);
}

namespace {

std::int64_t d_cubed(const FieldCtx& ctx) {
  const std::int64_t d = ctx.d();
  return d * d * d;
}

void require_tuple(const FieldCtx& ctx, const ExponentTuple& t) {
  if (t.d != ctx.d()) throw PreconditionError("tuple modulus does not match the field's d");
}

}  // namespace

cyc::CycElt three_entry_sum(const FieldCtx& ctx, const IntersectionSet& I, const ExponentTuple& t) {
  require_tuple(ctx, t);
  cyc::CycElt s(ctx.d());
  for (const auto& x : I.three_entry) s.add_term(x.dual_exponent(t), 1);
  return s;
}

InnerProduct inner_product_direct(const FieldCtx& ctx, const IntersectionSet& I,
                                  const ExponentTuple& t) {
  require_tuple(ctx, t);
  const std::int64_t d = ctx.d();
  cyc::CycElt s = cyc::CycElt::integer(ctx.d(), 2 - d);
  s += three_entry_sum(ctx, I, t);
  for (const auto& [g, x] : I.gamma_indexed) s.add_term(x.dual_exponent(t), 1);
  return InnerProduct{std::move(s), d_cubed(ctx)};
}

InnerProduct inner_product_direct(const FieldCtx& ctx, const Line& L, const ExponentTuple& t) {
  return inner_product_direct(ctx, build_intersections(ctx, L), t);
}

InnerProduct inner_product_via_charsum(const FieldCtx& ctx, const Line& L, const ExponentTuple& t) {
  require_tuple(ctx, t);
  if (!t.all_nonzero()) throw PreconditionError("the character-sum formula needs an all-nonzero tuple");
  cyc::CycElt s = charsum::sum_S(ctx, ctx.mul(L.b, L.b), t).value;
  s -= cyc::CycElt::integer(ctx.d(), 2 * static_cast<std::int64_t>(ctx.q()));
  return InnerProduct{std::move(s), d_cubed(ctx)};
}

}  // namespace fermatlines::fermat
