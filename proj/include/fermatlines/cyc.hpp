#pragma once

// Exact arithmetic in Z[zeta_d]. An element keeps its group-ring
// representative (one integer per power of zeta_d) and is compared through
// the remainder of that representative modulo the cyclotomic polynomial.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace fermatlines::cyc {

// Phi_d(x), low degree first.
const std::vector<std::int64_t>& cyclotomic_poly(std::uint32_t d);
std::uint32_t euler_phi(std::uint32_t d);

class CycElt {
 public:
  explicit CycElt(std::uint32_t d);

  static CycElt integer(std::uint32_t d, std::int64_t m);
  // zeta_d^e.
  static CycElt root(std::uint32_t d, std::int64_t e);
  static CycElt from_counts(std::vector<std::int64_t> counts);

  std::uint32_t order() const { return static_cast<std::uint32_t>(counts_.size()); }
  std::span<const std::int64_t> counts() const { return counts_; }

  // Adds zeta_d^e; a nullopt exponent (chi(0) = 0) adds nothing.
  void accumulate(std::optional<std::uint32_t> e);
  void add_term(std::int64_t e, std::int64_t multiplicity);

  CycElt& operator+=(const CycElt& other);
  CycElt& operator-=(const CycElt& other);
  CycElt& operator*=(std::int64_t m);
  friend CycElt operator+(CycElt a, const CycElt& b) { return a += b; }
  friend CycElt operator-(CycElt a, const CycElt& b) { return a -= b; }
  friend CycElt operator*(CycElt a, std::int64_t m) { return a *= m; }
  CycElt operator*(const CycElt& other) const;

  // Remainder modulo Phi_d, length phi(d), low degree first.
  std::vector<std::int64_t> canon() const;

  friend bool operator==(const CycElt& a, const CycElt& b);

  std::optional<std::int64_t> as_integer() const;
  bool equals_integer(std::int64_t m) const;

  // zeta_d -> zeta_d^u. Throws PreconditionError unless gcd(u, d) = 1.
  CycElt galois_apply(std::int64_t u) const;
  CycElt conjugate() const { return galois_apply(static_cast<std::int64_t>(order()) - 1); }
  bool is_real() const { return conjugate() == *this; }

  // canon() reduced coefficient-wise into [0, m).
  std::vector<std::int64_t> mod_ideal_class(std::int64_t m) const;

 private:
  std::vector<std::int64_t> counts_;
};

}  // namespace fermatlines::cyc
