#pragma once

// Lines on the Fermat surface x0^d + x1^d + x2^d + x3^d = 0 over F_{q^2},
// the diagonal torus T = mu_d^4 / mu_d acting on them, and the inner
// products of character projections of a line.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include <boost/rational.hpp>

#include "fermatlines/charsum.hpp"
#include "fermatlines/cyc.hpp"
#include "fermatlines/gf.hpp"

namespace fermatlines::fermat {

using Rational = boost::rational<std::int64_t>;

// [u:v] -> [u : v : a u + b v : a v + b u].
struct Line {
  gf::FqElem a;
  gf::FqElem b;
  gf::FqElem alpha;  // -b/a
  gf::FqElem beta;   // 1/a

  // Throws PreconditionError unless a is in F_q, b is not, and a^2 + 1 = b^2.
  static Line make(const gf::FieldCtx& ctx, gf::FqElem a, gf::FqElem b);

  std::array<gf::FqElem, 4> point(const gf::FieldCtx& ctx, gf::FqElem u, gf::FqElem v) const;
  bool contains(const gf::FieldCtx& ctx, const std::array<gf::FqElem, 4>& x) const;
};

// [t0 : t1 : t2 : 1], each coordinate stored as its index in mu_d with
// respect to the fixed generator g^(q-1).
struct TorusElt {
  std::array<std::uint32_t, 3> e{};

  static TorusElt from_coords(const gf::FieldCtx& ctx, const std::array<gf::FqElem, 4>& t);
  std::array<gf::FqElem, 4> coords(const gf::FieldCtx& ctx) const;
  TorusElt inverse(std::uint32_t d) const;
  bool is_identity() const { return e == std::array<std::uint32_t, 3>{}; }
  bool in_TE(std::uint32_t d) const { return (std::uint64_t{e[0]} + e[1] + e[2]) % d == 0; }
  std::uint64_t key(std::uint32_t d) const {
    return e[0] + std::uint64_t{d} * (e[1] + std::uint64_t{d} * e[2]);
  }
  // Exponent of lambda^-1(t) as a power of zeta_d.
  std::uint32_t dual_exponent(const charsum::ExponentTuple& t) const;

  friend auto operator<=>(const TorusElt&, const TorusElt&) = default;
};

struct GammaEntry {
  gf::FqElem gamma;
  TorusElt t;
};

// Torus elements t != 1 with tL meeting L.
struct IntersectionSet {
  std::vector<TorusElt> three_entry;  // 4(d-1) elements
  std::vector<GammaEntry> gamma_indexed;  // q^2 - q elements, by gamma code

  std::size_t size() const { return three_entry.size() + gamma_indexed.size(); }
};

// Throws InvariantError if the enumeration repeats an element or a
// coordinate leaves mu_d.
IntersectionSet build_intersections(const gf::FieldCtx& ctx, const Line& L);

// Result of scanning every [u:v] in P^1(F_{q^2}) for points P of L with tP
// on L. `params` holds the parameter of P and of tP for the common point,
// each as a ratio u/v (nullopt for [1:0]).
struct GeometricMeeting {
  bool self = false;
  int points = 0;  // number of [u:v] with tP on L
  int distinct_params = 0;  // 1 if P and tP share a parameter, 2 if not
  std::optional<std::array<std::optional<gf::FqElem>, 2>> params;
};
GeometricMeeting geometric_intersection_oracle(const gf::FieldCtx& ctx, const Line& L,
                                               const TorusElt& t);

// The trivial tuple plus (i, i, i, d - 3i) for i, 3i != 0 mod d.
std::vector<charsum::ExponentTuple> w_tuples(std::uint32_t d);

// d^3 <v_lambda, v_lambda> as an element of Z[zeta_d], with the value
// itself being numerator / d^3.
struct InnerProduct {
  cyc::CycElt numerator;
  std::int64_t denominator = 0;

  // Throws InvariantError if the numerator is not an integer.
  Rational rational() const;
  bool is_zero() const { return numerator.equals_integer(0); }
};

// 2 - d + sum over I_L of lambda^-1(t), over d^3.
InnerProduct inner_product_direct(const gf::FieldCtx& ctx, const Line& L,
                                  const charsum::ExponentTuple& t);
InnerProduct inner_product_direct(const gf::FieldCtx& ctx, const IntersectionSet& I,
                                  const charsum::ExponentTuple& t);
// (-2q + S_{b^2, t}) / d^3 for all-nonzero t.
InnerProduct inner_product_via_charsum(const gf::FieldCtx& ctx, const Line& L,
                                       const charsum::ExponentTuple& t);

// Sum of lambda^-1 over the three-entry part of I_L.
cyc::CycElt three_entry_sum(const gf::FieldCtx& ctx, const IntersectionSet& I,
                            const charsum::ExponentTuple& t);

}  // namespace fermatlines::fermat
