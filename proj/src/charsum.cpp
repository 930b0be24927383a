#include "fermatlines/charsum.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "fermatlines/errors.hpp"
#include "fermatlines/parallel.hpp"

namespace fermatlines::charsum {

using gf::FieldCtx;
using gf::FqElem;

namespace {

std::uint32_t mod_d(std::int64_t v, std::uint32_t d) {
  const std::int64_t r = v % static_cast<std::int64_t>(d);
  return static_cast<std::uint32_t>(r < 0 ? r + d : r);
}

// Visits every x in code order and hands fn the codes of x + shift[s].
// Digits of the shifted values are advanced alongside an odometer over x,
// so no division happens inside the loop.
template <std::size_t N, class Fn>
void walk_shifts(const FieldCtx& ctx, const std::array<FqElem, N>& shifts, Fn&& fn) {
  const std::uint32_t n = ctx.degree();
  const std::uint32_t p = ctx.p();
  const auto pw = ctx.power_table();
  std::vector<std::uint32_t> xd(n, 0);
  std::array<std::vector<std::uint32_t>, N> sd;
  std::array<std::uint32_t, N> scode{};
  for (std::size_t s = 0; s < N; ++s) {
    sd[s] = ctx.coeffs(shifts[s]);
    scode[s] = shifts[s].code;
  }
  const std::uint32_t size = ctx.size();
  for (std::uint32_t code = 0; code < size; ++code) {
    fn(code, scode);
    for (std::uint32_t j = 0; j < n; ++j) {
      for (std::size_t s = 0; s < N; ++s) {
        if (sd[s][j] == p - 1) {
          sd[s][j] = 0;
          scode[s] -= (p - 1) * pw[j];
        } else {
          ++sd[s][j];
          scode[s] += pw[j];
        }
      }
      if (++xd[j] < p) break;
      xd[j] = 0;
    }
  }
}

void require_subfield(const FieldCtx& ctx, FqElem c) {
  if (!ctx.in_subfield(c)) throw PreconditionError("c must lie in F_q");
}

void require_tuple(const FieldCtx& ctx, const ExponentTuple& t) {
  if (t.d != ctx.d()) {
    throw PreconditionError("tuple is defined mod " + std::to_string(t.d) + ", field has d = " +
                            std::to_string(ctx.d()));
  }
}

}  // namespace

ExponentTuple ExponentTuple::make(std::uint32_t d, std::int64_t i0, std::int64_t i1,
                                  std::int64_t i2, std::int64_t i3) {
  if (d < 2) throw PreconditionError("tuples need d >= 2");
  ExponentTuple t;
  t.d = d;
  t.i = {mod_d(i0, d), mod_d(i1, d), mod_d(i2, d), mod_d(i3, d)};
  const std::uint64_t s = std::uint64_t{t.i[0]} + t.i[1] + t.i[2] + t.i[3];
  if (s % d != 0) throw PreconditionError("tuple entries must sum to 0 mod d");
  return t;
}

ExponentTuple ExponentTuple::w_type(std::uint32_t d, std::int64_t i) {
  return make(d, i, i, i, -3 * i);
}

bool ExponentTuple::all_nonzero() const {
  return std::all_of(i.begin(), i.end(), [](std::uint32_t x) { return x != 0; });
}

ExponentTuple ExponentTuple::scaled(std::int64_t k) const {
  return make(d, k * i[0], k * i[1], k * i[2], k * i[3]);
}

SumRecord sum_S(const FieldCtx& ctx, FqElem c, const ExponentTuple& t) {
  require_subfield(ctx, c);
  require_tuple(ctx, t);
  const std::uint32_t d = ctx.d();
  const auto chi = ctx.chi_table();
  const std::uint64_t i0 = t.i[0], i1 = t.i[1], i2 = t.i[2];
  std::vector<std::int64_t> counts(d, 0);
  walk_shifts<2>(ctx, {ctx.one(), c}, [&](std::uint32_t x, const std::array<std::uint32_t, 2>& s) {
    std::uint64_t e = 0;
    if (i0) {
      if (chi[x] == FieldCtx::kNoChi) return;
      e += i0 * chi[x];
    }
    if (i1) {
      if (chi[s[0]] == FieldCtx::kNoChi) return;
      e += i1 * chi[s[0]];
    }
    if (i2) {
      if (chi[s[1]] == FieldCtx::kNoChi) return;
      e += i2 * chi[s[1]];
    }
    ++counts[e % d];
  });
  SumRecord rec{c, t, cyc::CycElt::from_counts(std::move(counts)), std::nullopt};
  rec.as_integer = rec.value.as_integer();
  if (rec.as_integer && t.all_nonzero()) {
    const std::int64_t bound = 2 * static_cast<std::int64_t>(ctx.q());
    if (*rec.as_integer < -bound || *rec.as_integer > bound) {
      throw InvariantError("character sum " + std::to_string(*rec.as_integer) +
                           " violates the Weil bound");
    }
  }
  return rec;
}

std::vector<std::int64_t> cubic_histogram(const FieldCtx& ctx, FqElem c) {
  require_subfield(ctx, c);
  const std::uint32_t d = ctx.d();
  const auto chi = ctx.chi_table();
  std::vector<std::int64_t> hist(d, 0);
  walk_shifts<2>(ctx, {ctx.one(), c}, [&](std::uint32_t x, const std::array<std::uint32_t, 2>& s) {
    const std::uint32_t a = chi[x], b = chi[s[0]], e = chi[s[1]];
    if (a == FieldCtx::kNoChi || b == FieldCtx::kNoChi || e == FieldCtx::kNoChi) return;
    ++hist[(std::uint64_t{a} + b + e) % d];
  });
  return hist;
}

cyc::CycElt w_type_sum(const std::vector<std::int64_t>& hist, std::int64_t i) {
  const auto d = static_cast<std::uint32_t>(hist.size());
  cyc::CycElt out(d);
  const std::int64_t ii = mod_d(i, d);
  for (std::uint32_t e = 0; e < d; ++e) {
    if (hist[e]) out.add_term(ii * e, hist[e]);
  }
  return out;
}

QuadraticReport quadratic_identity_check(const FieldCtx& ctx, std::uint32_t order) {
  const std::uint32_t d = ctx.d();
  if (order < 2 || d % order != 0) {
    throw PreconditionError("character order must be a divisor of d greater than 1");
  }
  const std::uint64_t power = d / order;
  const auto chi = ctx.chi_table();
  QuadraticReport rep;
  rep.order = order;
  rep.expected = order > 2 ? static_cast<std::int64_t>(ctx.q()) : -1;
  const auto fq = ctx.subfield_elements();
  const FqElem four = ctx.from_int(4);
  // x^2 for every x, indexed by code.
  std::vector<FqElem> squares(ctx.size());
  for (std::uint32_t x = 0; x < ctx.size(); ++x) squares[x] = ctx.mul(FqElem{x}, FqElem{x});
  for (const FqElem beta : fq) {
    for (const FqElem gamma : fq) {
      const FqElem disc = ctx.sub(ctx.mul(beta, beta), ctx.mul(four, gamma));
      if (disc.code == 0) continue;
      std::vector<std::int64_t> counts(d, 0);
      for (std::uint32_t x = 0; x < ctx.size(); ++x) {
        const FqElem fx = ctx.add(ctx.add(squares[x], ctx.mul(beta, FqElem{x})), gamma);
        if (chi[fx.code] == FieldCtx::kNoChi) continue;
        ++counts[(power * chi[fx.code]) % d];
      }
      ++rep.checked;
      if (cyc::CycElt::from_counts(std::move(counts)).equals_integer(rep.expected)) {
        ++rep.passed;
      } else {
        rep.failures.emplace_back(beta, gamma);
      }
    }
  }
  return rep;
}

cyc::CycElt sum_over_c(const FieldCtx& ctx, const ExponentTuple& t) {
  require_tuple(ctx, t);
  if (!t.all_nonzero()) throw PreconditionError("sum over c needs an all-nonzero tuple");
  cyc::CycElt total(ctx.d());
  for (const FqElem c : ctx.subfield_elements()) total += sum_S(ctx, c, t).value;
  return total;
}

std::int64_t sum_over_c_closed_form(std::uint32_t q, const ExponentTuple& t) {
  const std::int64_t qq = q;
  if ((std::uint64_t{t.i[0]} + t.i[1]) % t.d != 0) return qq * (qq - 3);
  return (qq - 1) * (qq - 1);
}

std::vector<FqElem> orbit(const FieldCtx& ctx, FqElem c) {
  require_subfield(ctx, c);
  if (c == ctx.zero() || c == ctx.one()) throw PreconditionError("orbit needs c not in {0, 1}");
  const FqElem one = ctx.one();
  const FqElem ci = ctx.inv(c);
  std::vector<FqElem> out{c,
                          ci,
                          ctx.sub(one, c),
                          ctx.sub(one, ci),
                          ctx.inv(ctx.sub(one, c)),
                          ctx.inv(ctx.sub(one, ci))};
  std::sort(out.begin(), out.end(),
            [&](FqElem x, FqElem y) { return ctx.dlog(x) < ctx.dlog(y); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_admissible(const FieldCtx& ctx, FqElem c) {
  require_subfield(ctx, c);
  if (c == ctx.zero()) return false;
  return !ctx.is_subfield_square(c) && ctx.is_subfield_square(ctx.sub(c, ctx.one()));
}

std::vector<FqElem> admissible_values(const FieldCtx& ctx) {
  std::vector<FqElem> out;
  for (const FqElem c : ctx.subfield_elements()) {
    if (is_admissible(ctx, c)) out.push_back(c);
  }
  return out;
}

Survey survey_N(const FieldCtx& ctx, std::uint32_t order, unsigned threads) {
  const std::uint32_t d = ctx.d();
  if (order <= 2 || d % order != 0) {
    throw PreconditionError("survey order must divide d and exceed 2");
  }
  const std::int64_t q = ctx.q();
  const std::int64_t power = d / order;
  const auto fq = ctx.subfield_elements();
  Survey out;
  out.order = order;
  out.bound_numerator = 3 * q - 9;
  out.rows.resize(fq.size(), SurveyRow{ctx.zero(), cyc::CycElt(d), std::nullopt});
  parallel_for(fq.size(), threads, [&](std::size_t idx) {
    SurveyRow row{fq[idx], w_type_sum(cubic_histogram(ctx, fq[idx]), power), std::nullopt};
    row.as_integer = row.value.as_integer();
    row.hit_upper = row.as_integer == 2 * q;
    row.hit_lower = row.as_integer == -2 * q;
    out.rows[idx] = std::move(row);
  });
  for (const auto& row : out.rows) {
    if (row.hit_upper) {
      ++out.n_upper;
      out.hits.push_back(row.c);
    }
    if (row.hit_lower) out.lower_hits.push_back(row.c);
  }
  return out;
}

bool mod3_test(const FieldCtx& ctx, FqElem c, const ExponentTuple& t) {
  if (ctx.q() % 12 != 7) throw PreconditionError("mod 3 test needs q = 7 mod 12");
  require_subfield(ctx, c);
  if (c == ctx.zero() || ctx.multiplicative_order(c) != 6) {
    throw PreconditionError("c must be a primitive 6th root of unity");
  }
  require_tuple(ctx, t);
  if (!t.is_w_type() || t.i[0] == 0) throw PreconditionError("mod 3 test needs a nontrivial w-type tuple");
  const auto cls = sum_S(ctx, c, t).value.mod_ideal_class(3);
  if (cls.empty() || cls[0] != 1) return false;
  return std::all_of(cls.begin() + 1, cls.end(), [](std::int64_t v) { return v == 0; });
}

}  // namespace fermatlines::charsum
