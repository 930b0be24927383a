#pragma once

// Full-rank certificates: every w-type character must have a nonzero
// projection for some line, which for nontrivial characters means
// S_{c,(i,i,i,d-3i)} != 2q for some admissible c = b^2.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fermatlines/charsum.hpp"
#include "fermatlines/cyc.hpp"
#include "fermatlines/fermat.hpp"
#include "fermatlines/gf.hpp"

namespace fermatlines::certify {

enum class Verdict { FullRankCertified, NotCertified };
enum class Method { ModThree, OrbitScan, Exhaustive };

std::string to_string(Verdict v);
std::string to_string(Method m);

// q if q = 1 mod 3, q - 2 if q = 2 mod 3.
std::int64_t expected_rank(std::int64_t q);
std::size_t divisor_count(std::uint64_t n);

struct Coverage {
  charsum::ExponentTuple tuple;
  std::optional<gf::FqElem> c;  // nullopt for the trivial tuple or an uncovered one
  std::optional<cyc::CycElt> S;
  bool nonzero = false;
};

struct LineUse {
  gf::FqElem c;
  fermat::Line line;
};

struct Certificate {
  std::uint32_t q = 0;
  std::int64_t expected_rank = 0;
  Method method = Method::Exhaustive;
  Verdict verdict = Verdict::NotCertified;
  std::vector<Coverage> coverage;  // one per w_tuples(d) entry, same order
  std::vector<LineUse> lines;  // distinct lines used, in order of first use
  std::vector<std::vector<std::uint32_t>> orbits;  // nontrivial i grouped by gcd(i, d)

  std::size_t lines_used() const { return lines.size(); }
};

// Orbits of {i : i, 3i != 0 mod d} under multiplication by units mod d,
// each sorted, ordered by smallest member.
std::vector<std::vector<std::uint32_t>> unit_orbits(std::uint32_t d);

// a = the primitive 6th root of unity in F_q with the smallest code, b the
// square root of a with the smaller dlog. Throws PreconditionError unless
// q = 7 mod 12.
fermat::Line mod3_line(const gf::FieldCtx& ctx);

// q = 7 mod 12: the single line with b a primitive 12th root of unity and
// a = b^2, every nontrivial tuple checked with the mod 3 congruence. Throws
// PreconditionError off that class, InvariantError if a congruence fails.
Certificate certify_thm1(const gf::FieldCtx& ctx);
// q = 1 mod 4: one representative per unit orbit, admissible c scanned by
// ascending dlog until S != 2q. Throws PreconditionError off that class,
// InvariantError if a scan is exhausted or Galois consistency fails.
Certificate certify_thm2(const gf::FieldCtx& ctx, unsigned threads = 1);
// Every nontrivial tuple against every admissible c.
Certificate certify_general(const gf::FieldCtx& ctx, unsigned threads = 1);
// thm1, thm2 or general by the residue of q.
Certificate certify(const gf::FieldCtx& ctx, unsigned threads = 1);

}  // namespace fermatlines::certify
