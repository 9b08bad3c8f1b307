#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace bolpq {

/// An element re + im*sqrt(t) of F_{p^2}. Elements of F_p are those with im == 0.
///
/// The defaulted ordering is lexicographic on (re, im); every sorted listing
/// of gamma values and every orbit representative uses it.
struct Fp2Element {
  std::uint64_t re = 0;
  std::uint64_t im = 0;

  constexpr Fp2Element() = default;
  constexpr Fp2Element(std::uint64_t re_, std::uint64_t im_ = 0) : re(re_), im(im_) {}

  bool is_zero() const noexcept { return re == 0 && im == 0; }

  friend constexpr bool operator==(const Fp2Element&, const Fp2Element&) = default;
  friend constexpr auto operator<=>(const Fp2Element&, const Fp2Element&) = default;
};

/// Formats as "a+b*w" with w = sqrt(t), e.g. "3+0*w".
std::string to_string(const Fp2Element& x);
std::ostream& operator<<(std::ostream& os, const Fp2Element& x);

inline bool in_prime_field(const Fp2Element& x) noexcept { return x.im == 0; }

/// Largest admissible p. Keeps every product of two residues below 2^62.
inline constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 31) - 1;

bool is_prime(std::uint64_t n);

/// Smallest t >= 2 with t^((p-1)/2) == -1 mod p.
std::uint64_t find_nonsquare(std::uint64_t p);

/// Arithmetic in F_p[x]/(x^2 - t) for a fixed odd prime p and nonsquare t.
class Fp2Field {
 public:
  Fp2Field(std::uint64_t p, std::uint64_t t);

  std::uint64_t p() const noexcept { return p_; }
  std::uint64_t t() const noexcept { return t_; }

  /// Embeds an integer (possibly negative) into F_p.
  Fp2Element from_int(std::int64_t v) const;
  Fp2Element zero() const { return {0, 0}; }
  Fp2Element one() const { return {1, 0}; }
  Fp2Element half() const;

  Fp2Element add(const Fp2Element& a, const Fp2Element& b) const;
  Fp2Element sub(const Fp2Element& a, const Fp2Element& b) const;
  Fp2Element neg(const Fp2Element& a) const;
  Fp2Element mul(const Fp2Element& a, const Fp2Element& b) const;
  Fp2Element pow(Fp2Element base, std::uint64_t e) const;
  /// re^2 - t*im^2, an element of F_p.
  std::uint64_t norm(const Fp2Element& a) const;
  /// Throws DivisionByZero for a == 0.
  Fp2Element inv(const Fp2Element& a) const;
  Fp2Element div(const Fp2Element& a, const Fp2Element& b) const { return mul(a, inv(b)); }

  bool is_reduced(const Fp2Element& a) const noexcept { return a.re < p_ && a.im < p_; }

 private:
  std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) const { return a * b % p_; }
  std::uint64_t invmod(std::uint64_t a) const;

  std::uint64_t p_;
  std::uint64_t t_;
};

/// Deterministic primitive q-th root of unity in F_{p^2}.
///
/// If q | p-1 the search runs over beta = 2, 3, ... in F_p and returns the
/// first beta^((p-1)/q) != 1. If q | p+1 it runs over beta = a + sqrt(t),
/// a = 1, 2, ..., and returns the first beta^((p^2-1)/q) != 1.
/// Throws NoRootError when q does not divide p^2 - 1.
Fp2Element find_primitive_qth_root(std::uint64_t p, std::uint64_t q, std::uint64_t t);

enum class Branch { QDividesPMinus1, QDividesPPlus1, Neither };

std::string to_string(Branch b);

/// The arithmetic context for order pq: the field, the nonsquare t, and
/// (when it exists) the canonical primitive q-th root omega with its powers.
///
/// Immutable after construction.
class FieldParams : public Fp2Field {
 public:
  /// Throws InvalidInput unless p > q are odd primes with p <= kMaxPrime.
  /// When q does not divide p^2 - 1 the branch is Neither and no omega exists.
  FieldParams(std::uint64_t p, std::uint64_t q);

  std::uint64_t q() const noexcept { return q_; }
  Branch branch() const noexcept { return branch_; }
  bool has_root() const noexcept { return branch_ != Branch::Neither; }

  /// Throws NoRootError when the branch is Neither.
  const Fp2Element& omega() const;
  /// omega^k for any integer k, reduced mod q.
  const Fp2Element& omega_pow(std::int64_t k) const;
  const std::vector<Fp2Element>& omega_powers() const { return omega_powers_; }

  /// True iff x is one of the q powers of omega.
  bool omega_subgroup_contains(const Fp2Element& x) const;

  /// Reduces an index into [0, q).
  std::uint64_t mod_q(std::int64_t i) const {
    const auto m = static_cast<std::int64_t>(q_);
    return static_cast<std::uint64_t>(((i % m) + m) % m);
  }

 private:
  std::uint64_t q_;
  Branch branch_;
  std::vector<Fp2Element> omega_powers_;
};

}  // namespace bolpq
