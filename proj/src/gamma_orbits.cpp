#include "bolpq/gamma_orbits.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "bolpq/errors.hpp"

namespace bolpq {

bool GammaSet::contains(const Fp2Element& x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

GammaSet build_gamma_set(const FieldParams& params) {
  if (!params.has_root()) {
    throw NoRootError("q does not divide p^2 - 1; only the cyclic loop exists");
  }
  const std::uint64_t p = params.p();
  const Fp2Element one = params.one();
  const auto admissible = [&](const Fp2Element& gamma) {
    return !params.omega_subgroup_contains(params.sub(one, params.inv(gamma)));
  };

  GammaSet out;
  out.branch = params.branch();
  if (params.branch() == Branch::QDividesPMinus1) {
    out.elements.emplace_back(0, 0);
    for (std::uint64_t g = 1; g < p; ++g) {
      if (admissible({g, 0})) out.elements.emplace_back(g, 0);
    }
  } else {
    const std::uint64_t h = params.half().re;
    for (std::uint64_t v = 0; v < p; ++v) {
      if (admissible({h, v})) out.elements.emplace_back(h, v);
    }
  }
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

Fp2Element act_f(const FieldParams& params, const Fp2Element& gamma) {
  return params.sub(params.one(), gamma);
}

Fp2Element act_g(const FieldParams& params, const Fp2Element& gamma, std::int64_t r) {
  const Fp2Element num = params.mul(gamma, params.omega_pow(r));
  const Fp2Element den = params.add(num, params.mul(act_f(params, gamma), params.omega_pow(-r)));
  if (den.is_zero()) {
    throw DegenerateGamma("g_" + std::to_string(r) + " undefined at gamma = " + to_string(gamma));
  }
  return params.div(num, den);
}

bool ActionElement::is_identity(std::uint64_t q) const {
  const auto n = normalized(q);
  return n.flip == 0 && n.rot == 0;
}

ActionElement ActionElement::normalized(std::uint64_t q) const {
  const auto m = static_cast<std::int64_t>(q);
  return {flip & 1, ((rot % m) + m) % m};
}

Fp2Element ActionElement::apply(const FieldParams& params, const Fp2Element& gamma) const {
  Fp2Element x = rot % static_cast<std::int64_t>(params.q()) == 0 ? gamma : act_g(params, gamma, rot);
  if (flip & 1) x = act_f(params, x);
  return x;
}

ActionElement compose(const ActionElement& a, const ActionElement& b, std::uint64_t q) {
  // f^a g^r f^b g^s = f^(a+b) g^((-1)^b r + s)
  const std::int64_t r = (b.flip & 1) ? -a.rot : a.rot;
  return ActionElement{a.flip + b.flip, r + b.rot}.normalized(q);
}

bool Orbit::contains(const Fp2Element& x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

std::optional<std::size_t> OrbitPartition::orbit_of(const Fp2Element& x) const {
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    if (orbits[i].contains(x)) return i;
  }
  return std::nullopt;
}

OrbitPartition orbit_partition(const FieldParams& params, const GammaSet& gammas, Generators gens) {
  std::set<Fp2Element> seen;
  OrbitPartition out;
  for (const auto& start : gammas.elements) {
    if (seen.contains(start)) continue;
    Orbit orbit;
    std::deque<Fp2Element> frontier{start};
    seen.insert(start);
    while (!frontier.empty()) {
      const Fp2Element x = frontier.front();
      frontier.pop_front();
      orbit.members.push_back(x);
      const auto visit = [&](const Fp2Element& y) {
        if (seen.insert(y).second) frontier.push_back(y);
      };
      if (gens.f) visit(act_f(params, x));
      if (gens.g) visit(act_g(params, x, 1));
    }
    std::sort(orbit.members.begin(), orbit.members.end());
    out.orbits.push_back(std::move(orbit));
  }
  // Each orbit is discovered from its least element, so orbits already come
  // out ordered by representative.
  return out;
}

std::vector<Fp2Element> fixed_points(const FieldParams& params, const GammaSet& gammas,
                                     const ActionElement& elem) {
  if (elem.is_identity(params.q())) throw InvalidInput("the identity fixes every point");
  std::vector<Fp2Element> out;
  for (const auto& x : gammas.elements) {
    if (elem.apply(params, x) == x) out.push_back(x);
  }
  return out;
}

bool dihedral_check(const FieldParams& params, const GammaSet& gammas) {
  const auto q = static_cast<std::int64_t>(params.q());
  for (const auto& x : gammas.elements) {
    const Fp2Element fx = act_f(params, x);
    const Fp2Element gx = act_g(params, x, 1);
    if (!gammas.contains(fx) || !gammas.contains(gx)) return false;
    if (act_f(params, fx) != x) return false;
    Fp2Element y = x;
    for (std::int64_t k = 0; k < q; ++k) y = act_g(params, y, 1);
    if (y != x) return false;
    // g(f(x)) == f(g^-1(x))
    if (act_g(params, fx, 1) != act_f(params, act_g(params, x, -1))) return false;
    for (std::int64_t r = 0; r < q; ++r) {
      const Fp2Element xr = act_g(params, x, r);
      for (std::int64_t s = 0; s < q; ++s) {
        if (act_g(params, xr, s) != act_g(params, x, r + s)) return false;
      }
    }
  }
  return true;
}

}  // namespace bolpq
