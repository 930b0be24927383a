#include "fermatlines/certify.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "fermatlines/errors.hpp"
#include "fermatlines/parallel.hpp"

namespace fermatlines::certify {

using gf::FieldCtx;
using gf::FqElem;

std::string to_string(Verdict v) {
  return v == Verdict::FullRankCertified ? "FULL_RANK_CERTIFIED" : "NOT_CERTIFIED";
}

std::string to_string(Method m) {
  switch (m) {
    case Method::ModThree:
      return "mod3";
    case Method::OrbitScan:
      return "orbit_scan";
    case Method::Exhaustive:
      return "exhaustive";
  }
  return "unknown";
}

std::int64_t expected_rank(std::int64_t q) {
  switch (q % 3) {
    case 1:
      return q;
    case 2:
      return q - 2;
    default:
      throw PreconditionError("q must not be divisible by 3");
  }
}

std::size_t divisor_count(std::uint64_t n) {
  std::size_t count = 0;
  for (std::uint64_t k = 1; k * k <= n; ++k) {
    if (n % k == 0) count += k * k == n ? 1 : 2;
  }
  return count;
}

std::vector<std::vector<std::uint32_t>> unit_orbits(std::uint32_t d) {
  std::map<std::uint32_t, std::vector<std::uint32_t>> by_gcd;
  for (std::uint32_t i = 1; i < d; ++i) {
    if ((3 * std::uint64_t{i}) % d == 0) continue;
    by_gcd[std::gcd(i, d)].push_back(i);
  }
  std::vector<std::vector<std::uint32_t>> out;
  for (auto& [g, members] : by_gcd) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

Certificate start(const FieldCtx& ctx, Method method) {
  Certificate cert;
  cert.q = ctx.q();
  cert.expected_rank = expected_rank(ctx.q());
  cert.method = method;
  cert.orbits = unit_orbits(ctx.d());
  for (const auto& t : fermat::w_tuples(ctx.d())) cert.coverage.push_back(Coverage{t, {}, {}, false});
  // The trivial character pairs to 1/d with any line.
  cert.coverage.front().nonzero = true;
  return cert;
}

void finish(const FieldCtx& ctx, Certificate& cert) {
  std::vector<FqElem> used;
  for (const auto& cov : cert.coverage) {
    if (cov.c && std::find(used.begin(), used.end(), *cov.c) == used.end()) used.push_back(*cov.c);
  }
  const auto pairs = ctx.find_ab_pairs();
  for (const FqElem c : used) {
    const auto it = std::find_if(pairs.begin(), pairs.end(),
                                 [&](const auto& ab) { return ctx.mul(ab.second, ab.second) == c; });
    if (it == pairs.end()) throw InvariantError("no line realizes an admissible value");
    cert.lines.push_back({c, fermat::Line::make(ctx, it->first, it->second)});
  }
  const bool all = std::all_of(cert.coverage.begin(), cert.coverage.end(),
                               [](const Coverage& c) { return c.nonzero; });
  cert.verdict = all ? Verdict::FullRankCertified : Verdict::NotCertified;
}

// Cubic histograms for every admissible c, in admissible_values order.
std::vector<std::vector<std::int64_t>> histograms(const FieldCtx& ctx, const std::vector<FqElem>& cs,
                                                  unsigned threads) {
  std::vector<std::vector<std::int64_t>> out(cs.size());
  parallel_for(cs.size(), threads, [&](std::size_t j) { out[j] = charsum::cubic_histogram(ctx, cs[j]); });
  return out;
}

std::int64_t two_q(const FieldCtx& ctx) { return 2 * static_cast<std::int64_t>(ctx.q()); }

}  // namespace

fermat::Line mod3_line(const FieldCtx& ctx) {
  if (ctx.q() % 12 != 7) throw PreconditionError("the single-line certificate needs q = 7 mod 12");
  std::optional<FqElem> a;
  for (std::uint32_t code = 1; code < ctx.size() && !a; ++code) {
    const FqElem x{code};
    if (ctx.in_subfield(x) && ctx.multiplicative_order(x) == 6) a = x;
  }
  std::optional<FqElem> b;
  for (std::uint32_t m = 0; m < ctx.group_order() && !b; ++m) {
    if (ctx.mul(ctx.exp(m), ctx.exp(m)) == *a) b = ctx.exp(m);
  }
  return fermat::Line::make(ctx, *a, *b);
}

Certificate certify_thm1(const FieldCtx& ctx) {
  const fermat::Line line = mod3_line(ctx);
  Certificate cert = start(ctx, Method::ModThree);
  const FqElem c = ctx.mul(line.b, line.b);
  const auto hist = charsum::cubic_histogram(ctx, c);
  for (auto& cov : cert.coverage) {
    if (cov.tuple.is_trivial()) continue;
    if (!charsum::mod3_test(ctx, c, cov.tuple)) {
      throw InvariantError("character sum is not 1 mod 3 for q = 7 mod 12");
    }
    cov.c = c;
    cov.S = charsum::w_type_sum(hist, cov.tuple.i[0]);
    cov.nonzero = !cov.S->equals_integer(two_q(ctx));
    if (!cov.nonzero) throw InvariantError("S = 2q despite S = 1 mod 3");
  }
  finish(ctx, cert);
  return cert;
}

Certificate certify_thm2(const FieldCtx& ctx, unsigned threads) {
  if (ctx.q() % 4 != 1) throw PreconditionError("the orbit certificate needs q = 1 mod 4");
  Certificate cert = start(ctx, Method::OrbitScan);
  const std::uint32_t d = ctx.d();
  const auto cs = charsum::admissible_values(ctx);
  const auto hists = histograms(ctx, cs, threads);
  std::map<std::uint32_t, std::size_t> index_of;
  for (std::size_t k = 0; k < cert.coverage.size(); ++k) {
    if (!cert.coverage[k].tuple.is_trivial()) index_of[cert.coverage[k].tuple.i[0]] = k;
  }
  for (const auto& orbit : cert.orbits) {
    const std::uint32_t rep = orbit.front();
    std::optional<std::size_t> hit;
    for (std::size_t j = 0; j < cs.size() && !hit; ++j) {
      if (!charsum::w_type_sum(hists[j], rep).equals_integer(two_q(ctx))) hit = j;
    }
    if (!hit) throw InvariantError("every admissible c gives S = 2q for i = " + std::to_string(rep));
    const cyc::CycElt rep_sum = charsum::w_type_sum(hists[*hit], rep);
    const std::uint32_t g = std::gcd(rep, d);
    for (const std::uint32_t i : orbit) {
      // i = u * rep with u a unit mod d.
      std::uint32_t u = 0;
      for (std::uint32_t cand = 1; cand < d; ++cand) {
        if (std::gcd(cand, d) == 1 && (std::uint64_t{cand} * rep) % d == i) {
          u = cand;
          break;
        }
      }
      if (u == 0 || std::gcd(i, d) != g) throw InvariantError("orbit bookkeeping failed");
      const cyc::CycElt direct = charsum::w_type_sum(hists[*hit], i);
      if (!(direct == rep_sum.galois_apply(u))) throw InvariantError("Galois consistency failed");
      auto& cov = cert.coverage[index_of.at(i)];
      cov.c = cs[*hit];
      cov.S = direct;
      cov.nonzero = !direct.equals_integer(two_q(ctx));
      if (!cov.nonzero) throw InvariantError("Galois image hit 2q");
    }
  }
  finish(ctx, cert);
  return cert;
}

Certificate certify_general(const FieldCtx& ctx, unsigned threads) {
  Certificate cert = start(ctx, Method::Exhaustive);
  const auto cs = charsum::admissible_values(ctx);
  const auto hists = histograms(ctx, cs, threads);
  for (auto& cov : cert.coverage) {
    if (cov.tuple.is_trivial()) continue;
    for (std::size_t j = 0; j < cs.size(); ++j) {
      cyc::CycElt s = charsum::w_type_sum(hists[j], cov.tuple.i[0]);
      if (!s.equals_integer(two_q(ctx))) {
        cov.c = cs[j];
        cov.S = std::move(s);
        cov.nonzero = true;
        break;
      }
    }
    if (!cov.nonzero && !cs.empty()) cov.S = charsum::w_type_sum(hists.back(), cov.tuple.i[0]);
  }
  finish(ctx, cert);
  return cert;
}

Certificate certify(const FieldCtx& ctx, unsigned threads) {
  if (ctx.q() % 12 == 7) return certify_thm1(ctx);
  if (ctx.q() % 4 == 1) return certify_thm2(ctx, threads);
  return certify_general(ctx, threads);
}

}  // namespace fermatlines::certify
