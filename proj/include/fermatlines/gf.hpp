#pragma once

// Finite field tower F_p ⊂ F_q ⊂ F_{q^2}, realized as a single extension
// F_p[w]/(modulus) of degree 2k with q = p^k. Elements are packed as the
// base-p integer of their power-basis coordinates, so every element has a
// unique code in [0, q^2).

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace fermatlines::gf {

struct FqElem {
  std::uint32_t code = 0;

  friend constexpr auto operator<=>(const FqElem&, const FqElem&) = default;
};

// Exponent e with chi^i(x) = zeta_d^e, or nullopt for x = 0 (chi(0) = 0).
using ChiExp = std::optional<std::uint32_t>;

inline constexpr std::uint64_t kDefaultSizeCap = 4'000'000;  // bound on q^2

bool is_prime(std::uint64_t n);

class FieldCtx {
 public:
  // Builds F_{p^{2k}}. Throws PreconditionError if p is not a prime >= 5 or
  // q^2 exceeds size_cap.
  static FieldCtx make(std::uint32_t p, std::uint32_t k,
                       std::uint64_t size_cap = kDefaultSizeCap);

  FieldCtx(const FieldCtx&) = delete;
  FieldCtx& operator=(const FieldCtx&) = delete;
  FieldCtx(FieldCtx&&) noexcept = default;
  FieldCtx& operator=(FieldCtx&&) noexcept = default;

  std::uint32_t p() const { return p_; }
  std::uint32_t k() const { return k_; }
  std::uint32_t q() const { return q_; }
  std::uint32_t d() const { return q_ + 1; }
  std::uint32_t degree() const { return 2 * k_; }
  std::uint32_t size() const { return size_; }  // q^2
  std::uint32_t group_order() const { return size_ - 1; }

  // Monic modulus, low degree first, length degree()+1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FqElem zero() const { return FqElem{0}; }
  FqElem one() const { return FqElem{1}; }
  FqElem generator() const { return exp_[1]; }
  // Element of the prime field congruent to n.
  FqElem from_int(std::int64_t n) const;
  FqElem from_coeffs(std::span<const std::int64_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(FqElem x) const;
  // Digit j of x's code, i.e. the coefficient of w^j.
  std::uint32_t digit(FqElem x, std::uint32_t j) const;

  FqElem add(FqElem x, FqElem y) const;
  FqElem sub(FqElem x, FqElem y) const;
  FqElem neg(FqElem x) const;
  FqElem mul(FqElem x, FqElem y) const;
  FqElem inv(FqElem x) const;
  FqElem div(FqElem x, FqElem y) const { return mul(x, inv(y)); }
  FqElem pow(FqElem x, std::int64_t e) const;

  // dlog(g^m) = m for m in [0, q^2-2]. Throws on zero.
  std::uint32_t dlog(FqElem x) const;
  FqElem exp(std::int64_t m) const;

  // x^q.
  FqElem frobenius(FqElem x) const;
  bool in_subfield(FqElem x) const { return frobenius(x) == x; }
  // x^d = 1. Throws PreconditionError for x = 0.
  bool in_mu_d(FqElem x) const;
  // Exponent of chi^i(x) where chi(x) = nu(x^(q-1)) and nu(g^(q-1)) = zeta_d.
  ChiExp chi_exp(FqElem x, std::uint32_t i) const;

  // g^(q-1), the fixed generator of mu_d.
  FqElem mu_d_generator() const { return exp_[q_ - 1]; }
  // Index j with x = mu_d_generator()^j. Throws if x is not in mu_d.
  std::uint32_t mu_d_index(FqElem x) const;
  FqElem mu_d_element(std::int64_t j) const;

  // g^((q^2-1)/m); throws unless m divides q^2 - 1.
  FqElem primitive_root_of_unity(std::uint32_t m) const;
  std::uint32_t multiplicative_order(FqElem x) const;

  // Elements of F_q ordered by dlog, with 0 first.
  std::vector<FqElem> subfield_elements() const;
  bool is_subfield_square(FqElem c) const;

  // All (a, b) with a in F_q, b not in F_q and a^2 + 1 = b^2, ordered by
  // dlog(a) then dlog(b).
  std::vector<std::pair<FqElem, FqElem>> find_ab_pairs() const;

  // Raw tables for sweep loops. dlog_table()[0] is unused; chi_table()[code]
  // is dlog mod d, or kNoChi for the zero element.
  static constexpr std::uint32_t kNoChi = 0xFFFFFFFFu;
  std::span<const std::uint32_t> dlog_table() const { return log_; }
  std::span<const std::uint32_t> chi_table() const { return chi_; }
  std::span<const std::uint32_t> power_table() const { return pow_p_; }

 private:
  FieldCtx() = default;

  std::uint32_t p_ = 0;
  std::uint32_t k_ = 0;
  std::uint32_t q_ = 0;
  std::uint32_t size_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> pow_p_;  // p^j for j <= degree
  std::vector<FqElem> exp_;           // exp_[m] = g^m, m in [0, q^2-1)
  std::vector<std::uint32_t> log_;    // log_[code]
  std::vector<std::uint32_t> chi_;    // log_[code] mod d
};

}  // namespace fermatlines::gf
