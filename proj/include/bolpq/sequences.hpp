#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bolpq/field.hpp"

namespace bolpq {

/// One period (u_0, ..., u_{q-1}) of a bi-infinite q-periodic sequence over
/// F_{p^2}, normalized so that u_0 = 1. Indexing reduces mod q, so u[-1] is u_{q-1}.
class PeriodicSequence {
 public:
  /// Throws InvalidInput if entries is empty or entries[0] != 1.
  explicit PeriodicSequence(std::vector<Fp2Element> entries);

  std::size_t period() const noexcept { return entries_.size(); }
  const Fp2Element& operator[](std::int64_t i) const;
  const std::vector<Fp2Element>& entries() const noexcept { return entries_; }
  std::span<const Fp2Element> view() const noexcept { return entries_; }

  friend bool operator==(const PeriodicSequence&, const PeriodicSequence&) = default;

 private:
  std::vector<Fp2Element> entries_;
};

/// theta_i = u_i^{-1}; theta_0 = 1 and all entries are nonzero.
struct ThetaVector {
  std::vector<Fp2Element> thetas;

  friend bool operator==(const ThetaVector&, const ThetaVector&) = default;
};

/// The q x q circulant with first row (0, 1, 0, ..., 0, 1).
struct Circulant {
  std::size_t q;

  std::vector<int> row(std::size_t i) const;
};

struct EigenPair {
  Fp2Element lambda;
  PeriodicSequence vector;
};

/// lambda_j = omega^j + omega^-j with eigenvector e_j = (omega^{ij})_i.
EigenPair eigen_pair(const FieldParams& params, std::int64_t j);

/// Multiplication by the circulant: result[i] = u[i-1] + u[i+1].
std::vector<Fp2Element> circulant_apply(const FieldParams& params, std::span<const Fp2Element> u);

/// u(gamma) = gamma e_j + (1 - gamma) e_{-j}.
PeriodicSequence u_from_gamma(const FieldParams& params, const Fp2Element& gamma, std::int64_t j = 1);

/// u_{n+2} = lambda u_{n+1} - u_n for every n mod q.
bool satisfies_recurrence(const FieldParams& params, const PeriodicSequence& u, const Fp2Element& lambda);

/// Index j with A u = lambda_j u, if u is an eigenvector of the circulant.
std::optional<std::int64_t> eigen_index(const FieldParams& params, const PeriodicSequence& u);

/// u is an eigenvector of the circulant and every ratio u_i^{-1} u_k lies in
/// F_p^* \ {-1}.
bool is_bol_sequence(const FieldParams& params, const PeriodicSequence& u);

/// u_i = u_{-i} for every i.
bool is_bruck_sequence(const PeriodicSequence& u);

/// Entrywise inverse of u. Throws DivisionByZero on a zero entry.
ThetaVector theta_from_sequence(const FieldParams& params, const PeriodicSequence& u);

/// theta_i = 1 / (gamma omega^i + (1 - gamma) omega^-i).
/// Throws DegenerateGamma if a denominator vanishes.
ThetaVector theta_from_gamma(const FieldParams& params, const Fp2Element& gamma);

/// v_i = u_r^{-1} u_{s i + r}. Throws InvalidInput for s == 0 mod q and
/// DivisionByZero when u_r == 0.
PeriodicSequence transform_seq(const FieldParams& params, const PeriodicSequence& u, std::int64_t s,
                               std::int64_t r);

enum class Relation {
  Isomorphism,  ///< u_i = v_{s i}
  Companion,    ///< u_i = v_r^{-1} v_{i + r}
  Isotopism,    ///< u_i = v_r^{-1} v_{s i + r}
};

struct SequenceWitness {
  std::int64_t s;
  std::int64_t r;

  friend bool operator==(const SequenceWitness&, const SequenceWitness&) = default;
};

/// Least (s, r) in lexicographic order with transform_seq(v, s, r) == u,
/// restricted to r = 0 for Isomorphism and s = 1 for Companion.
std::optional<SequenceWitness> find_isotopy_witness(const FieldParams& params, const PeriodicSequence& u,
                                                    const PeriodicSequence& v, Relation mode);

}  // namespace bolpq
