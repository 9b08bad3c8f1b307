#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bolpq/loop_table.hpp"

namespace bolpq {

/// A bijection phi with phi(x y) = phi(x) phi(y); image[x] = phi(x).
struct IsoWitness {
  std::vector<Element> image;
};

/// Isomorphism invariants used to prune the search.
struct Fingerprint {
  std::size_t order = 0;
  std::size_t involution_solutions = 0;   ///< #{x : x x = e}
  std::vector<std::size_t> power_orders;  ///< sorted left-power orders
  std::size_t idempotents = 0;            ///< #{x : x x = x}

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const LoopTable& L);

/// x o y = (x / b)(a \ y), a loop with identity a b.
/// Throws InvalidInput if L is not a loop or a, b are out of range.
LoopTable principal_isotope(const LoopTable& L, Element a, Element b);

/// True iff phi is a bijection, maps identity to identity, and respects products.
bool verify_isomorphism(const LoopTable& from, const LoopTable& to, const IsoWitness& phi);

/// Backtracking search for an isomorphism from L1 onto L2. Images are chosen
/// for one new generator at a time (the least element outside the current
/// closure, candidates in ascending order); products are propagated and
/// conflicts prune the branch. Any returned witness has been verified.
std::optional<IsoWitness> brute_isomorphic(const LoopTable& L1, const LoopTable& L2);

struct IsotopyWitness {
  Element a;
  Element b;
  IsoWitness iso;  ///< from principal_isotope(L1, a, b) onto L2
};

/// Least (a, b) such that principal_isotope(L1, a, b) is isomorphic to L2.
std::optional<IsotopyWitness> find_isotopy(const LoopTable& L1, const LoopTable& L2);

bool brute_isotopic(const LoopTable& L1, const LoopTable& L2);

}  // namespace bolpq
