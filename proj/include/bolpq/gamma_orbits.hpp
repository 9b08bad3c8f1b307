#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bolpq/field.hpp"

namespace bolpq {

/// The admissible parameters gamma for which u(gamma) yields a Bol loop,
/// sorted by the (re, im) order.
struct GammaSet {
  std::vector<Fp2Element> elements;
  Branch branch = Branch::Neither;

  std::size_t size() const noexcept { return elements.size(); }
  bool contains(const Fp2Element& x) const;
};

/// If q | p-1: { gamma in F_p : gamma = 0 or 1 - 1/gamma not in <omega> }.
/// If q | p+1: { gamma in 1/2 + F_p sqrt(t) : 1 - 1/gamma not in <omega> }.
/// Throws NoRootError when q does not divide p^2 - 1.
GammaSet build_gamma_set(const FieldParams& params);

/// gamma -> 1 - gamma
Fp2Element act_f(const FieldParams& params, const Fp2Element& gamma);

/// gamma -> gamma w^r / (gamma w^r + (1 - gamma) w^-r). g_0 is the identity
/// and g_r g_s = g_{r+s}. Throws DegenerateGamma if the denominator vanishes.
Fp2Element act_g(const FieldParams& params, const Fp2Element& gamma, std::int64_t r);

/// The dihedral element f^flip g^rot, evaluated as the composite map
/// gamma -> f^flip(g^rot(gamma)).
struct ActionElement {
  int flip = 0;          ///< 0 or 1
  std::int64_t rot = 0;  ///< reduced mod q by normalized()

  bool is_identity(std::uint64_t q) const;
  ActionElement normalized(std::uint64_t q) const;
  Fp2Element apply(const FieldParams& params, const Fp2Element& gamma) const;

  friend bool operator==(const ActionElement&, const ActionElement&) = default;
};

/// Composite map a o b (b applied first), using g f = f g^-1.
ActionElement compose(const ActionElement& a, const ActionElement& b, std::uint64_t q);

struct Generators {
  bool f = true;
  bool g = true;
};

struct Orbit {
  std::vector<Fp2Element> members;  ///< sorted; members.front() is the representative

  const Fp2Element& representative() const { return members.front(); }
  std::size_t size() const noexcept { return members.size(); }
  bool contains(const Fp2Element& x) const;
};

/// Orbits sorted by representative.
struct OrbitPartition {
  std::vector<Orbit> orbits;

  std::size_t size() const noexcept { return orbits.size(); }
  /// Index of the orbit containing x, if any.
  std::optional<std::size_t> orbit_of(const Fp2Element& x) const;
};

/// Breadth-first closure of every point of gammas under the chosen generators
/// (f and g = g_1).
OrbitPartition orbit_partition(const FieldParams& params, const GammaSet& gammas, Generators gens);

/// Points of gammas fixed by elem. Throws InvalidInput for the identity.
std::vector<Fp2Element> fixed_points(const FieldParams& params, const GammaSet& gammas,
                                     const ActionElement& elem);

/// Checks pointwise on gammas that f^2 = 1, g^q = 1, g f = f g^-1 and
/// g_r g_s = g_{r+s} for all r, s, and that every generator maps gammas into itself.
bool dihedral_check(const FieldParams& params, const GammaSet& gammas);

}  // namespace bolpq
