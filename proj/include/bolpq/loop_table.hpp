#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bolpq/field.hpp"
#include "bolpq/sequences.hpp"

namespace bolpq {

using Element = std::uint32_t;

/// Largest order accepted for a dense table.
inline constexpr std::size_t kMaxTableOrder = 3000;

/// (i, j) in F_q x F_p flattened to i*p + j; the identity (0, 0) maps to 0.
struct ElementIndex {
  std::uint64_t i;
  std::uint64_t j;

  Element flatten(std::uint64_t p) const { return static_cast<Element>(i * p + j); }
  static ElementIndex unflatten(Element x, std::uint64_t p) { return {x / p, x % p}; }
};

struct Provenance {
  std::uint64_t p;
  std::uint64_t q;
  std::optional<Fp2Element> gamma;
  ThetaVector theta;
};

/// Dense n x n Cayley table with a designated identity.
class LoopTable {
 public:
  /// Throws InvalidInput on a shape mismatch, an entry outside [0, n), or
  /// identity >= n; ResourceError when n exceeds kMaxTableOrder.
  LoopTable(std::size_t n, std::vector<Element> cells, Element identity = 0);

  std::size_t order() const noexcept { return n_; }
  Element identity() const noexcept { return identity_; }
  Element operator()(Element x, Element y) const { return cells_[static_cast<std::size_t>(x) * n_ + y]; }
  const std::vector<Element>& cells() const noexcept { return cells_; }

  const std::optional<Provenance>& provenance() const noexcept { return provenance_; }
  void set_provenance(Provenance prov) { provenance_ = std::move(prov); }

  /// Tables compare by order, identity and cells; provenance is ignored.
  friend bool operator==(const LoopTable& a, const LoopTable& b) {
    return a.n_ == b.n_ && a.identity_ == b.identity_ && a.cells_ == b.cells_;
  }

 private:
  std::size_t n_;
  std::vector<Element> cells_;
  Element identity_;
  std::optional<Provenance> provenance_;
};

/// Cayley table of Q(theta) on F_q x F_p:
///   (i,j)(k,l) = (i+k, l/(1+theta_k) + (j + l/(1+theta_k)) theta_i^-1 theta_{i+k}).
/// Throws InadmissibleTheta if a denominator vanishes or the second
/// coordinate would leave F_p.
LoopTable build_loop(const FieldParams& params, const ThetaVector& theta);

/// Theta for the cyclic group of order pq.
ThetaVector cyclic_theta(std::uint64_t q);

/// Every row and every column is a permutation.
bool is_latin(const LoopTable& L);
/// Latin, and identity() is a two-sided identity.
bool is_loop(const LoopTable& L);
/// ((z x) y) x == z ((x y) x) for all triples.
bool is_bol(const LoopTable& L);
/// The right inverse of x, when it is also a left inverse.
std::optional<Element> element_inverse(const LoopTable& L, Element x);
/// Bol, all inverses two-sided, and (x y)^-1 == x^-1 y^-1.
bool is_bruck(const LoopTable& L);
bool is_associative(const LoopTable& L);
bool is_commutative(const LoopTable& L);

/// Order of x along the left-power chain x, x*x, (x*x)*x, ...; the chain
/// returns to the identity in any loop. Returns 0 if it does not (non-loop input).
std::size_t left_power_order(const LoopTable& L, Element x);

/// Text format: first line n, then n rows of n whitespace-separated entries.
void write_table(std::ostream& os, const LoopTable& L);
/// Throws ParseError with the offending line number.
LoopTable read_table(std::istream& is);
void export_table(const LoopTable& L, const std::string& path);
LoopTable import_table(const std::string& path);

}  // namespace bolpq
