#include <random>
#include <vector>

#include "doctest.h"
#include "fermatlines/efield.hpp"
#include "fermatlines/errors.hpp"

using fermatlines::PreconditionError;
using fermatlines::gf::FieldCtx;
using fermatlines::gf::FqElem;
using namespace fermatlines::efield;
namespace algebra = fermatlines::algebra;

namespace {

RatFunc from_ints(const FieldCtx& f, const std::vector<int>& num, const std::vector<int>& den) {
  Poly n, d;
  for (int c : num) n.push_back(f.from_int(c));
  for (int c : den) d.push_back(f.from_int(c));
  return RatFuncField(f).make(n, d);
}

// The point printed for q = 7, a = b^2 = 3, coefficients from t^0 upwards.
// The leading minus sign of P_y is folded into its numerator.
std::pair<RatFunc, RatFunc> printed_point(const FieldCtx& f) {
  const RatFunc px = from_ints(f, {2, 2, 3, -3, -1, 2, 0, -1, 0, 1, 0, 1, 3, -2, -2},
                               {-1, -1, -2, -3, 1, 3, 3, 2, -2});
  const RatFunc py = from_ints(
      f, {1, 0, -1, 2, -2, 0, -1, 1, 2, -2, -1, -2, 0, 3, -2, -2, 1, 0, -2, 1, -1, -1},
      {1, -2, -1, 2, -1, 0, 1, 0, 3, 2, -1, 2, 1});
  return {px, py};
}

fermatlines::fermat::Line example_line(const FieldCtx& f, FqElem b) {
  return fermatlines::fermat::Line::make(f, f.from_int(3), b);
}

Poly random_poly(std::mt19937_64& rng, const FieldCtx& f, int deg) {
  std::uniform_int_distribution<std::uint32_t> dist(0, f.size() - 1);
  Poly p;
  for (int i = 0; i <= deg; ++i) p.push_back(FqElem{dist(rng)});
  return p;
}

}  // namespace

TEST_CASE("rational functions are kept in canonical form") {
  const auto f = FieldCtx::make(7, 1);
  const RatFuncField K(f);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const Poly common = random_poly(rng, f, 2);
    const Poly n = random_poly(rng, f, 3), d = random_poly(rng, f, 2);
    if (K.ring().degree(common) < 0 || K.ring().degree(d) < 0) continue;
    const RatFunc a = K.make(K.ring().mul(n, common), K.ring().mul(d, common));
    CHECK(a == K.make(n, d));
    CHECK(a.den.back() == f.one());
    CHECK(K.ring().gcd(a.num, a.den).size() <= 1);
    const RatFunc b = K.make(random_poly(rng, f, 4), random_poly(rng, f, 3));
    CHECK(K.sub(K.add(a, b), b) == a);
    if (!K.is_zero(b)) {
      CHECK(K.mul(K.mul(a, b), K.inv(b)) == a);
      CHECK(K.mul(b, K.inv(b)) == K.one());
    }
  }
  CHECK_THROWS_AS(K.make({f.one()}, {}), PreconditionError);
  CHECK_THROWS_AS(K.inv(K.zero()), PreconditionError);
}

TEST_CASE("polynomial square roots") {
  const auto f = FieldCtx::make(7, 1);
  const algebra::PolyRing<GfField> R{GfField(f)};
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    Poly r = random_poly(rng, f, trial % 4);
    R.trim(r);
    const Poly sq = R.mul(r, r);
    const auto got = poly_sqrt(f, sq);
    REQUIRE(got.has_value());
    CHECK(R.mul(*got, *got) == sq);
  }
  CHECK_FALSE(poly_sqrt(f, {f.zero(), f.one()}).has_value());
  CHECK_FALSE(poly_sqrt(f, {f.one(), f.zero(), f.generator()}).has_value());
}

TEST_CASE("extension fields invert and multiply consistently") {
  const auto f = FieldCtx::make(5, 1);
  const GfField F(f);
  // s^3 + s + 1 has no root in F_25: check directly.
  const Poly m{f.one(), f.one(), f.zero(), f.one()};
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    const FqElem e{x};
    CHECK(f.add(f.add(f.pow(e, 3), e), f.one()) != f.zero());
  }
  const algebra::ExtField<GfField> E(F, m);
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<std::uint32_t> dist(0, f.size() - 1);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<FqElem> a{FqElem{dist(rng)}, FqElem{dist(rng)}, FqElem{dist(rng)}};
    std::vector<FqElem> b{FqElem{dist(rng)}, FqElem{dist(rng)}, FqElem{dist(rng)}};
    if (E.is_zero(a)) continue;
    CHECK(E.equal(E.mul(a, E.inv(a)), E.one()));
    CHECK(E.equal(E.mul(E.mul(a, b), E.inv(a)), b));
  }
  // Order of the multiplicative group is 25^3 - 1.
  const auto s = E.generator();
  CHECK(E.equal(algebra::power(E, s, 15624), E.one()));
}

TEST_CASE("group law over F_{q^2}(t)") {
  const auto f = FieldCtx::make(7, 1);
  const auto pc = construct_point(f, example_line(f, FqElem{14}));
  const CurvePoint P = pc.point;
  REQUIRE(P.has_value());
  CHECK(on_curve(f, P));
  CHECK(curve_add(f, P, std::nullopt) == P);
  CHECK(curve_add(f, std::nullopt, P) == P);
  CHECK_FALSE(curve_add(f, P, curve_neg(f, P)).has_value());
  const FqElem g_d = f.mu_d_generator();
  const CurvePoint Q = mu_d_translate(f, P, g_d);
  const CurvePoint R = mu_d_translate(f, P, f.pow(g_d, 3));
  CHECK(curve_add(f, curve_add(f, P, Q), R) == curve_add(f, P, curve_add(f, Q, R)));
  CHECK(curve_add(f, P, Q) == curve_add(f, Q, P));
  const CurvePoint twoP = curve_add(f, P, P);
  CHECK(on_curve(f, twoP));
  CHECK(curve_add(f, twoP, curve_neg(f, P)) == P);
  CHECK(curve_E(f).multiply(P, 3) == curve_add(f, twoP, P));
  CHECK_THROWS_AS(curve_add(f, std::pair{P->first, P->first}, P), PreconditionError);
}

TEST_CASE("printed example point") {
  const auto f = FieldCtx::make(7, 1);
  const auto [px, py] = printed_point(f);
  CHECK(px.num.size() == 15);
  CHECK(px.den.size() == 9);
  CHECK(py.num.size() == 22);
  CHECK(py.den.size() == 13);
  CHECK(on_curve(f, std::pair{px, py}));

  int matches = 0;
  for (const FqElem b : {FqElem{14}, f.neg(FqElem{14})}) {
    const auto pc = construct_point(f, example_line(f, b));
    REQUIRE(pc.point.has_value());
    CHECK(pc.vieta_ok);
    CHECK(pc.conjugates_on_curve == std::array{true, true, true});
    if (pc.point->first == px && pc.point->second == py) ++matches;
    CHECK(pc.point->first.den.size() == 9);
    CHECK(pc.point->first.num.size() == 15);
    CHECK(pc.point->second.den.size() == 13);
    CHECK(pc.point->second.num.size() == 22);
  }
  CHECK(matches == 2);
}

TEST_CASE("mu_d translates") {
  const auto f = FieldCtx::make(7, 1);
  const CurvePoint P = construct_point(f, example_line(f, FqElem{14})).point;
  CHECK(mu_d_translate(f, P, f.one()) == P);
  CHECK_FALSE(mu_d_translate(f, std::nullopt, f.mu_d_generator()).has_value());
  std::vector<CurvePoint> seen;
  for (std::uint32_t j = 0; j < f.d(); ++j) {
    const CurvePoint Q = mu_d_translate(f, P, f.mu_d_element(j));
    CHECK(on_curve(f, Q));
    seen.push_back(Q);
  }
  CHECK(seen.size() == 8);
  CHECK(mu_d_translate(f, mu_d_translate(f, P, f.mu_d_element(3)), f.mu_d_element(5)) == P);
  CHECK_THROWS_AS(mu_d_translate(f, P, f.generator()), PreconditionError);
}

TEST_CASE("torus equivariance of the construction") {
  const auto f = FieldCtx::make(5, 1);
  const auto [a, b] = f.find_ab_pairs().front();
  const auto L = fermatlines::fermat::Line::make(f, a, b);
  const auto forms = line_forms(f, L);
  const CurvePoint P = construct_from_forms(f, forms).point;
  CHECK(on_curve(f, P));
  for (std::uint32_t e0 = 0; e0 < f.d(); e0 += 1) {
    for (std::uint32_t e1 = 0; e1 < f.d(); e1 += 2) {
      const std::array<FqElem, 3> t{f.mu_d_element(e0), f.mu_d_element(e1),
                                    f.mu_d_element(-std::int64_t(e0 + e1))};
      auto scaled = forms;
      for (int j = 0; j < 3; ++j) {
        scaled[j].c0 = f.mul(scaled[j].c0, t[j]);
        scaled[j].c1 = f.mul(scaled[j].c1, t[j]);
      }
      CHECK(construct_from_forms(f, scaled).point == P);
    }
  }
  // Scaling x0 alone by zeta replaces t by zeta t.
  for (std::uint32_t e = 1; e < f.d(); ++e) {
    auto scaled = forms;
    scaled[0].c1 = f.mul(scaled[0].c1, f.mu_d_element(e));
    CHECK(construct_from_forms(f, scaled).point == mu_d_translate(f, P, f.mu_d_element(-std::int64_t(e))));
  }
}

TEST_CASE("construction over several fields") {
  for (std::uint32_t p : {5u, 11u, 13u}) {
    const auto f = FieldCtx::make(p, 1);
    auto pairs = f.find_ab_pairs();
    if (p == 13) pairs.resize(2);
    for (const auto& [a, b] : pairs) {
      const auto pc = construct_point(f, fermatlines::fermat::Line::make(f, a, b));
      CHECK(on_curve(f, pc.point));
      CHECK(pc.vieta_ok);
      CHECK(pc.conjugates_on_curve == std::array{true, true, true});
    }
  }
  const auto f = FieldCtx::make(5, 1);
  CHECK_THROWS_AS(construct_from_forms(f, {LinearForm{f.one(), f.zero()}, LinearForm{f.zero(), f.one()},
                                           LinearForm{f.one(), f.one()}}),
                  PreconditionError);
}
