#pragma once

// Character sums S_{c,i} = sum over x in F_{q^2} of
// chi(x^{i0} (x+1)^{i1} (x+c)^{i2}) and the identities they satisfy.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "fermatlines/cyc.hpp"
#include "fermatlines/gf.hpp"

namespace fermatlines::charsum {

// A character of T = mu_d^4 / mu_d, as exponents mod d summing to 0.
struct ExponentTuple {
  std::uint32_t d = 0;
  std::array<std::uint32_t, 4> i{};

  // Reduces entries mod d; throws PreconditionError if they do not sum to 0.
  static ExponentTuple make(std::uint32_t d, std::int64_t i0, std::int64_t i1, std::int64_t i2,
                            std::int64_t i3);
  // (i, i, i, d - 3i).
  static ExponentTuple w_type(std::uint32_t d, std::int64_t i);
  static ExponentTuple trivial(std::uint32_t d) { return w_type(d, 0); }

  bool all_nonzero() const;
  bool is_w_type() const { return i[0] == i[1] && i[1] == i[2]; }
  bool is_trivial() const { return i == std::array<std::uint32_t, 4>{}; }
  ExponentTuple scaled(std::int64_t k) const;

  friend auto operator<=>(const ExponentTuple&, const ExponentTuple&) = default;
};

struct SumRecord {
  gf::FqElem c;
  ExponentTuple tuple;
  cyc::CycElt value;
  std::optional<std::int64_t> as_integer;
};

// Exact S_{c,t}. Factors whose exponent is 0 mod d are omitted; a term is
// dropped when a factor with nonzero exponent vanishes. Throws
// PreconditionError if c is not in F_q, InvariantError if an all-nonzero
// tuple yields an integer outside the Weil range [-2q, 2q].
SumRecord sum_S(const gf::FieldCtx& ctx, gf::FqElem c, const ExponentTuple& t);

// hist[e] = #{x : x(x+1)(x+c) != 0, chi(x(x+1)(x+c)) = zeta_d^e}. Every
// w-type sum at this c is a relabelling of the histogram.
std::vector<std::int64_t> cubic_histogram(const gf::FieldCtx& ctx, gf::FqElem c);
cyc::CycElt w_type_sum(const std::vector<std::int64_t>& hist, std::int64_t i);

struct QuadraticReport {
  std::uint32_t order = 0;
  std::int64_t expected = 0;
  std::uint64_t checked = 0;
  std::uint64_t passed = 0;
  std::vector<std::pair<gf::FqElem, gf::FqElem>> failures;  // (beta, gamma)
};

// Sums chi(x^2 + beta x + gamma) for every separable monic quadratic over
// F_q, chi of exact order `order` (a divisor of d greater than 1), against
// q (order > 2) or -1 (order 2).
QuadraticReport quadratic_identity_check(const gf::FieldCtx& ctx, std::uint32_t order);

// Sum of S_{c,t} over c in F_q, for all-nonzero t.
cyc::CycElt sum_over_c(const gf::FieldCtx& ctx, const ExponentTuple& t);
// q(q-3) if i0 + i1 != 0 mod d, else (q-1)^2.
std::int64_t sum_over_c_closed_form(std::uint32_t q, const ExponentTuple& t);

// {c, 1/c, 1-c, 1-1/c, 1/(1-c), 1/(1-1/c)} ordered by dlog.
std::vector<gf::FqElem> orbit(const gf::FieldCtx& ctx, gf::FqElem c);

bool is_admissible(const gf::FieldCtx& ctx, gf::FqElem c);
// Admissible c in F_q ordered by dlog.
std::vector<gf::FqElem> admissible_values(const gf::FieldCtx& ctx);

struct SurveyRow {
  gf::FqElem c;
  cyc::CycElt value;
  std::optional<std::int64_t> as_integer;
  bool hit_upper = false;
  bool hit_lower = false;
};

struct Survey {
  std::uint32_t order = 0;
  std::int64_t n_upper = 0;  // N
  std::int64_t bound_numerator = 0;  // 3q - 9; N <= bound_numerator / 4
  std::vector<gf::FqElem> hits;
  std::vector<gf::FqElem> lower_hits;
  std::vector<SurveyRow> rows;  // one per c, ordered by dlog

  bool within_bound() const { return 4 * n_upper <= bound_numerator; }
};

// Sweeps c over F_q for f = x(x+1)(x+c) with chi of exact order `order`
// (realized as chi^(d/order)). Throws PreconditionError for invalid orders.
Survey survey_N(const gf::FieldCtx& ctx, std::uint32_t order, unsigned threads = 1);

// For q = 7 mod 12 and c a primitive 6th root of unity in F_q: whether
// S_{c,t} = 1 mod 3 Z[zeta_d].
bool mod3_test(const gf::FieldCtx& ctx, gf::FqElem c, const ExponentTuple& t);

}  // namespace fermatlines::charsum
