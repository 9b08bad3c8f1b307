#include "bolpq/classify.hpp"

#include <numeric>

#include "bolpq/errors.hpp"
#include "bolpq/iso_oracle.hpp"
#include "parallel.hpp"

namespace bolpq {

std::uint64_t isomorphism_count_formula(std::uint64_t p, std::uint64_t q) {
  return divides_p2_minus_1(p, q) ? (p - q + 4) / 2 : 1;
}

std::uint64_t isotopism_count_formula(std::uint64_t p, std::uint64_t q) {
  return divides_p2_minus_1(p, q) ? (p - 1 + 4 * q) / (2 * q) : 1;
}

namespace {

void require_classifiable(std::uint64_t p) {
  if (p > kMaxClassifyPrime) {
    throw ResourceError("p = " + std::to_string(p) + " exceeds " + std::to_string(kMaxClassifyPrime));
  }
}

LoopClass cyclic_class(std::uint64_t q) {
  LoopClass c;
  c.theta = cyclic_theta(q);
  c.is_cyclic = c.is_group = c.is_commutative = c.is_bruck = true;
  return c;
}

void fill_flags_from_table(const FieldParams& params, LoopClass& cls) {
  const LoopTable table = class_table(params, cls);
  cls.table_checked = true;
  cls.table_is_bol = is_loop(table) && is_bol(table);
  cls.is_bruck = cls.table_is_bol && is_bruck(table);
  cls.is_group = is_associative(table);
  cls.is_commutative = is_commutative(table);
}

void fill_flags_from_sequence(const FieldParams& params, LoopClass& cls) {
  if (cls.is_cyclic) return;
  const Fp2Element& g = *cls.representative;
  cls.is_bruck = is_bruck_sequence(u_from_gamma(params, g));
  // gamma in {0, 1} gives theta_i = omega^{-+i}, the nonabelian group.
  cls.is_group = cls.orbit.front() == params.zero() || cls.orbit.front() == params.one();
  cls.is_commutative = false;
}

}  // namespace

LoopTable table_for_gamma(const FieldParams& params, const Fp2Element& gamma) {
  LoopTable table = build_loop(params, theta_from_gamma(params, gamma));
  auto prov = *table.provenance();
  prov.gamma = gamma;
  table.set_provenance(std::move(prov));
  return table;
}

LoopTable class_table(const FieldParams& params, const LoopClass& cls) {
  if (!cls.representative) return build_loop(params, cyclic_theta(params.q()));
  return table_for_gamma(params, *cls.representative);
}

ClassificationReport classify(std::uint64_t p, std::uint64_t q, Upto upto, const ClassifyOptions& opts) {
  const FieldParams params(p, q);
  require_classifiable(p);

  ClassificationReport report;
  report.p = p;
  report.q = q;
  report.t = params.t();
  report.branch = params.branch();
  report.upto = upto;
  report.classes.push_back(cyclic_class(q));

  if (params.has_root()) {
    report.omega = params.omega();
    const GammaSet gammas = build_gamma_set(params);
    const OrbitPartition iso = orbit_partition(params, gammas, {.f = true, .g = false});
    const OrbitPartition isot = orbit_partition(params, gammas, {.f = true, .g = true});
    report.isomorphism_count = iso.size() + 1;
    report.isotopism_count = isot.size() + 1;
    for (const Orbit& orbit : (upto == Upto::Isomorphism ? iso : isot).orbits) {
      LoopClass c;
      // The Bruck loop B_{p,q} represents its own class; other classes use the least member.
      c.representative = orbit.contains(params.half()) ? params.half() : orbit.representative();
      c.orbit = orbit.members;
      c.theta = theta_from_gamma(params, *c.representative);
      report.classes.push_back(std::move(c));
    }
  } else {
    report.isomorphism_count = 1;
    report.isotopism_count = 1;
  }

  if (p * q <= opts.table_check_bound) {
    detail::parallel_all_of(
        report.classes.size(),
        [&](std::size_t i) {
          fill_flags_from_table(params, report.classes[i]);
          return true;
        },
        1);
  } else {
    for (auto& cls : report.classes) fill_flags_from_sequence(params, cls);
  }
  return report;
}

std::vector<CountRow> count_range(std::uint64_t q, std::uint64_t p_max) {
  if (q == 2 || !is_prime(q)) throw InvalidInput("q = " + std::to_string(q) + " is not an odd prime");
  require_classifiable(p_max);
  std::vector<CountRow> rows;
  for (std::uint64_t p = q + 2; p <= p_max; p += 2) {
    if (!is_prime(p)) continue;
    const FieldParams params(p, q);
    CountRow row{p, 1, 1, isotopism_count_formula(p, q), std::nullopt, std::nullopt};
    if (params.has_root()) {
      const GammaSet gammas = build_gamma_set(params);
      row.iso_count = orbit_partition(params, gammas, {.f = true, .g = false}).size() + 1;
      row.isotop_count = orbit_partition(params, gammas, {.f = true, .g = true}).size() + 1;
    }
    if (q == 3) {
      row.nr_lower_bound = (p + 5 + 5) / 6;
      row.difference =
          static_cast<std::int64_t>(row.remark_formula) - static_cast<std::int64_t>(*row.nr_lower_bound);
    }
    rows.push_back(row);
  }
  return rows;
}

bool PairCheck::agrees() const {
  if (orbit_same_iso != sequence_same_iso) return false;
  if (table_same_iso && *table_same_iso != orbit_same_iso) return false;
  if (orbit_same_isotopy != sequence_same_isotopy) return false;
  if (table_same_isotopy && *table_same_isotopy != orbit_same_isotopy) return false;
  return true;
}

bool VerificationSummary::passed() const {
  for (const auto& pc : pairs) {
    if (!pc.agrees()) return false;
  }
  if (orbit_isotopy_classes != sequence_isotopy_classes) return false;
  if (table_isotopy_classes && *table_isotopy_classes != orbit_isotopy_classes) return false;
  return orbit_isotopy_classes == isotopism_count_formula(p, q) &&
         representatives.size() == isomorphism_count_formula(p, q);
}

namespace {

// Number of classes of the relation given by the pairs for which same(pc) holds.
template <class Same>
std::size_t count_classes(std::size_t n, const std::vector<PairCheck>& pairs, Same same) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& pc : pairs) {
    if (same(pc)) parent[find(pc.i)] = find(pc.j);
  }
  std::size_t roots = 0;
  for (std::size_t x = 0; x < n; ++x) roots += find(x) == x;
  return roots;
}

}  // namespace

VerificationSummary cross_verify(std::uint64_t p, std::uint64_t q, std::size_t oracle_bound) {
  const FieldParams params(p, q);
  require_classifiable(p);
  VerificationSummary out;
  out.p = p;
  out.q = q;
  out.representatives.push_back(std::nullopt);

  OrbitPartition iso;
  OrbitPartition isot;
  if (params.has_root()) {
    const GammaSet gammas = build_gamma_set(params);
    iso = orbit_partition(params, gammas, {.f = true, .g = false});
    isot = orbit_partition(params, gammas, {.f = true, .g = true});
    for (const auto& o : iso.orbits) out.representatives.push_back(o.representative());
  } else {
    out.notes.push_back("q does not divide p^2 - 1: only the cyclic group");
  }

  const std::size_t n = out.representatives.size();
  std::vector<PeriodicSequence> seqs;
  for (const auto& rep : out.representatives) {
    seqs.push_back(rep ? u_from_gamma(params, *rep)
                       : PeriodicSequence(std::vector<Fp2Element>(q, params.one())));
  }

  out.oracle_ran = p * q <= oracle_bound;
  std::vector<LoopTable> tables;
  if (out.oracle_ran) {
    for (const auto& rep : out.representatives) {
      tables.push_back(rep ? table_for_gamma(params, *rep) : build_loop(params, cyclic_theta(q)));
    }
  } else {
    out.notes.push_back("table oracle skipped: pq = " + std::to_string(p * q) + " exceeds oracle bound " +
                        std::to_string(oracle_bound));
  }

  const auto same_orbit = [](const OrbitPartition& part, const std::optional<Fp2Element>& a,
                             const std::optional<Fp2Element>& b) {
    if (!a || !b) return !a && !b;
    return part.orbit_of(*a) == part.orbit_of(*b);
  };

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      PairCheck pc;
      pc.i = i;
      pc.j = j;
      out.pairs.push_back(pc);
    }
  }
  detail::parallel_all_of(
      out.pairs.size(),
      [&](std::size_t k) {
        PairCheck& pc = out.pairs[k];
        const std::size_t i = pc.i;
        const std::size_t j = pc.j;
        const auto& a = out.representatives[i];
        const auto& b = out.representatives[j];
        pc.orbit_same_iso = same_orbit(iso, a, b);
        pc.orbit_same_isotopy = same_orbit(isot, a, b);
        pc.sequence_same_iso =
            find_isotopy_witness(params, seqs[i], seqs[j], Relation::Isomorphism).has_value();
        pc.sequence_same_isotopy =
            find_isotopy_witness(params, seqs[i], seqs[j], Relation::Isotopism).has_value();
        if (out.oracle_ran) {
          pc.table_same_iso = brute_isomorphic(tables[i], tables[j]).has_value();
          pc.table_same_isotopy = brute_isotopic(tables[i], tables[j]);
        }
        return true;
      },
      1);

  out.orbit_isotopy_classes =
      count_classes(n, out.pairs, [](const PairCheck& pc) { return pc.orbit_same_isotopy; });
  out.sequence_isotopy_classes =
      count_classes(n, out.pairs, [](const PairCheck& pc) { return pc.sequence_same_isotopy; });
  if (out.oracle_ran) {
    out.table_isotopy_classes =
        count_classes(n, out.pairs, [](const PairCheck& pc) { return *pc.table_same_isotopy; });
  }
  return out;
}

}  // namespace bolpq
