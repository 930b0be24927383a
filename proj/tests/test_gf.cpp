#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "fermatlines/errors.hpp"
#include "fermatlines/gf.hpp"

using fermatlines::PreconditionError;
using fermatlines::gf::FieldCtx;
using fermatlines::gf::FqElem;

namespace {

// Smallest monic irreducible quadratic over F_p in (c0, c1) order, found by
// checking for roots directly.
std::vector<std::uint32_t> brute_force_quadratic_modulus(std::uint32_t p) {
  for (std::uint32_t c0 = 0; c0 < p; ++c0) {
    for (std::uint32_t c1 = 0; c1 < p; ++c1) {
      bool has_root = false;
      for (std::uint32_t x = 0; x < p && !has_root; ++x) {
        has_root = (x * x + c1 * x + c0) % p == 0;
      }
      if (!has_root) return {c0, c1, 1};
    }
  }
  return {};
}

FqElem naive_pow(const FieldCtx& f, FqElem x, std::uint64_t e) {
  FqElem r = f.one();
  for (std::uint64_t i = 0; i < e; ++i) r = f.mul(r, x);
  return r;
}

}  // namespace

TEST_CASE("make_field picks the smallest irreducible modulus") {
  const auto f7 = FieldCtx::make(7, 1);
  CHECK(f7.modulus() == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(f7.modulus() == brute_force_quadratic_modulus(7));
  for (std::uint32_t p : {5u, 11u, 13u, 17u}) {
    CHECK(FieldCtx::make(p, 1).modulus() == brute_force_quadratic_modulus(p));
  }
}

TEST_CASE("make_field sizes") {
  const auto f5 = FieldCtx::make(5, 1);
  CHECK(f5.q() == 5);
  CHECK(f5.d() == 6);
  CHECK(f5.size() == 25);
  const auto f343 = FieldCtx::make(7, 3);
  CHECK(f343.q() == 343);
  CHECK(f343.d() == 344);
  CHECK(f343.degree() == 6);
}

TEST_CASE("make_field rejects bad parameters") {
  CHECK_THROWS_AS(FieldCtx::make(9, 1), PreconditionError);
  CHECK_THROWS_AS(FieldCtx::make(3, 1), PreconditionError);
  CHECK_THROWS_AS(FieldCtx::make(2, 1), PreconditionError);
  CHECK_THROWS_AS(FieldCtx::make(7, 0), PreconditionError);
  CHECK_THROWS_AS(FieldCtx::make(7, 5), PreconditionError);  // 7^10 > cap
  CHECK_THROWS_AS(FieldCtx::make(101, 1, 1000), PreconditionError);
}

TEST_CASE("make_field is deterministic") {
  const auto a = FieldCtx::make(13, 1);
  const auto b = FieldCtx::make(13, 1);
  CHECK(a.generator() == b.generator());
  CHECK(std::equal(a.dlog_table().begin(), a.dlog_table().end(), b.dlog_table().begin()));
}

TEST_CASE("generator and discrete log tables") {
  for (auto [p, k] : {std::pair{5u, 1u}, {7u, 1u}, {5u, 2u}, {13u, 1u}}) {
    const auto f = FieldCtx::make(p, k);
    const FqElem g = f.generator();
    CHECK(f.pow(g, f.group_order()) == f.one());
    for (std::uint32_t m = 1; m < f.group_order(); ++m) {
      if (f.group_order() % m == 0) CHECK(f.pow(g, m) != f.one());
    }
    for (std::uint32_t m = 0; m < f.group_order(); ++m) CHECK(f.dlog(f.exp(m)) == m);
    for (std::uint32_t x = 1; x < f.size(); ++x) {
      for (std::uint32_t y = 1; y < f.size(); y += 3) {
        const auto lhs = f.dlog(f.mul(FqElem{x}, FqElem{y}));
        CHECK(lhs == (f.dlog(FqElem{x}) + f.dlog(FqElem{y})) % f.group_order());
      }
    }
  }
}

TEST_CASE("field arithmetic against the polynomial definition") {
  const auto f = FieldCtx::make(7, 1);
  // w^2 = -1 in F_7[w]/(w^2+1)
  const FqElem w{7};
  CHECK(f.mul(w, w) == f.from_int(-1));
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    CHECK(f.add(FqElem{x}, f.neg(FqElem{x})) == f.zero());
    if (x) CHECK(f.mul(FqElem{x}, f.inv(FqElem{x})) == f.one());
    // (a + bw)(c + dw) = (ac - bd) + (ad + bc)w
    const std::uint32_t a = x % 7, b = x / 7;
    for (std::uint32_t y = 0; y < f.size(); ++y) {
      const std::uint32_t c = y % 7, dd = y / 7;
      const std::uint32_t re = (a * c + 7 * 7 - b * dd) % 7;
      const std::uint32_t im = (a * dd + b * c) % 7;
      CHECK(f.mul(FqElem{x}, FqElem{y}) == FqElem{re + 7 * im});
    }
  }
  CHECK_THROWS_AS(f.inv(f.zero()), PreconditionError);
  CHECK_THROWS_AS(f.dlog(f.zero()), PreconditionError);
}

TEST_CASE("frobenius") {
  const auto f = FieldCtx::make(7, 1);
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    const FqElem e{x};
    CHECK(f.frobenius(f.frobenius(e)) == e);
    CHECK(f.frobenius(e) == naive_pow(f, e, 7));
    if (x < 7) CHECK(f.frobenius(e) == e);
  }
  // b = 2w has b^2 = 3 in F_7 and b not in F_7.
  const FqElem b{14};
  CHECK(f.in_subfield(f.mul(b, b)));
  CHECK(f.frobenius(b) == f.neg(b));

  const auto f25 = FieldCtx::make(5, 2);
  int fixed = 0;
  for (std::uint32_t x = 0; x < f25.size(); ++x) {
    const FqElem e{x};
    CHECK(f25.frobenius(f25.frobenius(e)) == e);
    if (f25.in_subfield(e)) ++fixed;
  }
  CHECK(fixed == 25);
  CHECK(f25.subfield_elements().size() == 25);
}

TEST_CASE("x^d = x * frobenius(x) and mu_d membership") {
  for (auto [p, k] : {std::pair{7u, 1u}, {5u, 2u}}) {
    const auto f = FieldCtx::make(p, k);
    int count = 0;
    for (std::uint32_t x = 1; x < f.size(); ++x) {
      const FqElem e{x};
      CHECK(f.pow(e, f.d()) == f.mul(e, f.frobenius(e)));
      const bool via_power = f.pow(e, f.d()) == f.one();
      const bool via_frob = f.mul(f.frobenius(e), e) == f.one();
      CHECK(f.in_mu_d(e) == via_power);
      CHECK(via_power == via_frob);
      if (via_power) ++count;
    }
    CHECK(count == static_cast<int>(f.d()));
  }
  const auto f = FieldCtx::make(7, 1);
  CHECK(f.in_mu_d(f.one()));
  CHECK_FALSE(f.in_mu_d(f.generator()));
  CHECK_THROWS_AS(f.in_mu_d(f.zero()), PreconditionError);
}

TEST_CASE("chi_exp") {
  const auto f = FieldCtx::make(7, 1);
  const std::uint32_t d = f.d();
  for (std::uint32_t c = 1; c < 7; ++c) {
    for (std::uint32_t i = 0; i < d; ++i) CHECK(f.chi_exp(FqElem{c}, i) == 0u);
  }
  CHECK(f.chi_exp(FqElem{14}, 1) == d / 2);  // b = 2w
  CHECK_FALSE(f.chi_exp(f.zero(), 1).has_value());

  std::uint32_t kernel = 0;
  for (std::uint32_t x = 1; x < f.size(); ++x) {
    if (*f.chi_exp(FqElem{x}, 1) == 0) ++kernel;
    for (std::uint32_t y = 1; y < f.size(); ++y) {
      const auto lhs = (*f.chi_exp(FqElem{x}, 3) + *f.chi_exp(FqElem{y}, 3)) % d;
      CHECK(lhs == *f.chi_exp(f.mul(FqElem{x}, FqElem{y}), 3));
    }
  }
  CHECK(kernel == f.q() - 1);
  // chi(g) = zeta_d via nu(g^(q-1)) = zeta_d.
  CHECK(f.chi_exp(f.generator(), 1) == 1u);
  CHECK(f.mu_d_index(f.pow(f.generator(), f.q() - 1)) == 1u);
}

TEST_CASE("find_ab_pairs") {
  const auto f7 = FieldCtx::make(7, 1);
  const auto pairs = f7.find_ab_pairs();
  const FqElem three = f7.from_int(3), two_w{14};
  CHECK(std::find(pairs.begin(), pairs.end(), std::pair{three, two_w}) != pairs.end());
  CHECK(pairs.size() == 8);
  for (const auto& [a, b] : pairs) {
    CHECK(f7.sub(f7.add(f7.mul(a, a), f7.one()), f7.mul(b, b)) == f7.zero());
    CHECK(f7.in_subfield(a));
    CHECK_FALSE(f7.in_subfield(b));
  }

  // q = 13: brute force over a in F_13 for a^2 + 1 a nonsquare.
  const auto f13 = FieldCtx::make(13, 1);
  std::set<std::uint32_t> expected;
  for (std::uint32_t a = 0; a < 13; ++a) {
    const std::uint32_t c = (a * a + 1) % 13;
    bool square = false;
    for (std::uint32_t y = 0; y < 13; ++y) square |= (y * y) % 13 == c;
    if (!square) expected.insert(c);
  }
  CHECK(expected == std::set<std::uint32_t>{2, 5, 11});
  std::set<std::uint32_t> got;
  for (const auto& [a, b] : f13.find_ab_pairs()) got.insert(f13.mul(b, b).code);
  CHECK(got == expected);

  // Ordering by dlog(a) then dlog(b).
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    const auto prev = std::pair{f7.dlog(pairs[i - 1].first), f7.dlog(pairs[i - 1].second)};
    const auto cur = std::pair{f7.dlog(pairs[i].first), f7.dlog(pairs[i].second)};
    CHECK(prev < cur);
  }
}

TEST_CASE("primitive_root_of_unity") {
  const auto f = FieldCtx::make(7, 1);
  CHECK(f.primitive_root_of_unity(1) == f.one());
  CHECK(f.primitive_root_of_unity(2) == f.from_int(-1));
  const FqElem b = f.primitive_root_of_unity(12);
  CHECK(f.pow(b, 12) == f.one());
  CHECK(f.pow(b, 6) != f.one());
  CHECK(f.pow(b, 4) != f.one());
  CHECK(f.multiplicative_order(b) == 12);
  CHECK_THROWS_AS(f.primitive_root_of_unity(5), PreconditionError);
  CHECK_THROWS_AS(f.primitive_root_of_unity(0), PreconditionError);
}

TEST_CASE("element coordinates") {
  const auto f = FieldCtx::make(5, 2);
  const std::vector<std::int64_t> c{1, -1, 3, 7};
  const FqElem x = f.from_coeffs(c);
  CHECK(f.coeffs(x) == std::vector<std::uint32_t>{1, 4, 3, 2});
  const std::vector<std::int64_t> too_long(5, 1);
  CHECK_THROWS_AS(f.from_coeffs(too_long), PreconditionError);
}
