#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bolpq/field.hpp"
#include "bolpq/gamma_orbits.hpp"
#include "bolpq/loop_table.hpp"
#include "bolpq/sequences.hpp"

namespace bolpq {

enum class Upto { Isomorphism, Isotopism };

/// (p - q + 4) / 2 when q | p^2 - 1, else 1.
std::uint64_t isomorphism_count_formula(std::uint64_t p, std::uint64_t q);
/// floor((p - 1 + 4q) / (2q)) when q | p^2 - 1, else 1.
std::uint64_t isotopism_count_formula(std::uint64_t p, std::uint64_t q);

inline bool divides_p2_minus_1(std::uint64_t p, std::uint64_t q) {
  return (p - 1) % q == 0 || (p + 1) % q == 0;
}

struct ClassifyOptions {
  /// Flags are read off explicit Cayley tables when pq is at most this bound;
  /// above it they come from the sequence criteria.
  std::size_t table_check_bound = 231;
};

struct LoopClass {
  /// Absent for the cyclic class; 1/2 for the class of the Bruck loop,
  /// otherwise the least orbit member.
  std::optional<Fp2Element> representative;
  std::vector<Fp2Element> orbit;
  ThetaVector theta;
  bool is_cyclic = false;
  bool is_group = false;
  bool is_commutative = false;
  bool is_bruck = false;
  bool table_checked = false;  ///< flags come from the Cayley table
  bool table_is_bol = false;   ///< only meaningful when table_checked

  std::size_t orbit_size() const noexcept { return orbit.size(); }
};

struct ClassificationReport {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  std::uint64_t t = 0;
  std::optional<Fp2Element> omega;
  Branch branch = Branch::Neither;
  Upto upto = Upto::Isotopism;
  std::vector<LoopClass> classes;  ///< cyclic class first, then by representative
  std::uint64_t isomorphism_count = 0;
  std::uint64_t isotopism_count = 0;
};

/// Largest p accepted by classify and count_range.
inline constexpr std::uint64_t kMaxClassifyPrime = 1'000'000;

/// Throws InvalidInput for invalid primes and ResourceError when p exceeds
/// kMaxClassifyPrime.
ClassificationReport classify(std::uint64_t p, std::uint64_t q, Upto upto, const ClassifyOptions& opts = {});

/// Cayley table of the class (cyclic when representative is absent).
LoopTable class_table(const FieldParams& params, const LoopClass& cls);

/// Table for a given gamma; throws DegenerateGamma / InadmissibleTheta for bad gamma.
LoopTable table_for_gamma(const FieldParams& params, const Fp2Element& gamma);

struct CountRow {
  std::uint64_t p;
  std::uint64_t iso_count;
  std::uint64_t isotop_count;
  std::uint64_t remark_formula;                 ///< floor((p-1+4q)/(2q)), 1 when q does not divide p^2-1
  std::optional<std::uint64_t> nr_lower_bound;  ///< ceil((p+5)/6), only for q = 3
  std::optional<std::int64_t> difference;       ///< remark_formula - nr_lower_bound
};

/// Orbit-enumerated counts for every prime q < p <= p_max.
std::vector<CountRow> count_range(std::uint64_t q, std::uint64_t p_max);

struct PairCheck {
  std::size_t i;
  std::size_t j;
  bool orbit_same_iso;                 ///< same <f>-orbit
  bool sequence_same_iso;              ///< isomorphism witness exists
  std::optional<bool> table_same_iso;  ///< brute_isomorphic, if the oracle ran
  bool orbit_same_isotopy;             ///< same <f,g>-orbit
  bool sequence_same_isotopy;          ///< isotopism witness exists
  std::optional<bool> table_same_isotopy;

  bool agrees() const;
};

struct VerificationSummary {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  bool oracle_ran = false;
  std::vector<std::optional<Fp2Element>> representatives;  ///< isomorphism representatives, cyclic first
  std::vector<PairCheck> pairs;
  std::size_t orbit_isotopy_classes = 0;
  std::size_t sequence_isotopy_classes = 0;
  std::optional<std::size_t> table_isotopy_classes;
  std::vector<std::string> notes;

  bool passed() const;
};

/// Three-way comparison of the orbit partition, the sequence-level witness
/// search and (when pq <= oracle_bound) the table-level brute-force oracle,
/// over every pair of isomorphism representatives.
VerificationSummary cross_verify(std::uint64_t p, std::uint64_t q, std::size_t oracle_bound = 33);

}  // namespace bolpq
