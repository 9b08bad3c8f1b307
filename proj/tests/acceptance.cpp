// Acceptance suite: one line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bolpq/classify.hpp"
#include "bolpq/gamma_orbits.hpp"
#include "bolpq/iso_oracle.hpp"
#include "bolpq/loop_table.hpp"
#include "bolpq/sequences.hpp"

using namespace bolpq;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail << what;
    ok = ok && cond;
  }
};

struct Criterion {
  const char* id;
  const char* title;
  double time_limit_s;
  std::function<void(Outcome&)> run;
};

std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs_where(
    std::uint64_t p_max, const std::function<bool(std::uint64_t, std::uint64_t)>& keep) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t p = 5; p <= p_max; p += 2) {
    if (!is_prime(p)) continue;
    for (std::uint64_t q = 3; q < p; q += 2) {
      if (is_prime(q) && keep(p, q)) out.emplace_back(p, q);
    }
  }
  return out;
}

std::string pq(std::uint64_t p, std::uint64_t q) {
  return "(" + std::to_string(p) + "," + std::to_string(q) + ") ";
}

void closed_form_counts(Outcome& out) {
  const std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs = {{5, 3},  {7, 3},  {11, 3}, {13, 3},
                                                                      {11, 5}, {19, 5}, {13, 7}};
  const std::vector<std::uint64_t> iso = {3, 4, 6, 7, 5, 9, 5};
  const std::vector<std::uint64_t> isot = {2, 3, 3, 4, 3, 3, 2};
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto [p, q] = pairs[k];
    const auto t0 = Clock::now();
    const auto by_iso = classify(p, q, Upto::Isomorphism);
    const auto by_isot = classify(p, q, Upto::Isotopism);
    const double dt = seconds_since(t0);
    out.expect(by_iso.classes.size() == iso[k] && by_iso.isomorphism_count == iso[k],
               pq(p, q) + "isomorphism count");
    out.expect(by_isot.classes.size() == isot[k] && by_isot.isotopism_count == isot[k],
               pq(p, q) + "isotopism count");
    out.expect(iso[k] == (p - q + 4) / 2 && isot[k] == (p - 1 + 4 * q) / (2 * q), pq(p, q) + "closed form");
    out.expect(dt < 1.0, pq(p, q) + "took " + std::to_string(dt) + " s");
  }
}

void identity_verification(Outcome& out) {
  const auto pairs = pairs_where(77, [](auto p, auto q) { return p * q <= 231 && divides_p2_minus_1(p, q); });
  out.expect(!pairs.empty(), "no pairs");
  for (const auto [p, q] : pairs) {
    const FieldParams params(p, q);
    for (Upto upto : {Upto::Isomorphism, Upto::Isotopism}) {
      const auto report = classify(p, q, upto, {.table_check_bound = 0});
      std::size_t bruck_nonassoc = 0;
      for (const auto& cls : report.classes) {
        const LoopTable table = class_table(params, cls);
        out.expect(is_latin(table), pq(p, q) + "representative not latin");
        out.expect(is_bol(table), pq(p, q) + "representative not Bol");
        if (is_bruck(table) && !is_associative(table)) ++bruck_nonassoc;
      }
      out.expect(bruck_nonassoc == 1,
                 pq(p, q) + "nonassociative Bruck representatives: " + std::to_string(bruck_nonassoc));
    }
  }
}

void oracle_agreement(Outcome& out) {
  for (const auto [p, q, iso_classes, isot_classes] :
       std::vector<std::tuple<std::uint64_t, std::uint64_t, std::size_t, std::size_t>>{{5, 3, 3, 2},
                                                                                       {7, 3, 4, 3}}) {
    const auto summary = cross_verify(p, q, 33);
    out.expect(summary.oracle_ran, pq(p, q) + "oracle skipped");
    out.expect(summary.representatives.size() == iso_classes, pq(p, q) + "isomorphism representatives");
    for (const auto& pc : summary.pairs) {
      out.expect(pc.table_same_iso == std::optional<bool>{false}, pq(p, q) + "brute_isomorphic coincidence");
      out.expect(!pc.sequence_same_iso && !pc.orbit_same_iso,
                 pq(p, q) + "isomorphism representatives coincide");
      out.expect(pc.agrees(), pq(p, q) + "pair disagreement");
    }
    out.expect(summary.table_isotopy_classes == std::optional<std::size_t>{isot_classes},
               pq(p, q) + "table isotopy classes");
    out.expect(summary.orbit_isotopy_classes == isot_classes, pq(p, q) + "orbit isotopy classes");
    out.expect(summary.sequence_isotopy_classes == isot_classes, pq(p, q) + "sequence isotopy classes");
    out.expect(summary.passed(), pq(p, q) + "summary failed");
  }
}

void remark_reproduction(Outcome& out) {
  const auto rows = count_range(3, 199);
  std::size_t primes = 0;
  for (std::uint64_t p = 5; p <= 199; ++p) primes += is_prime(p);
  out.expect(rows.size() == primes, "missing primes");
  for (const auto& row : rows) {
    const std::string at = "p=" + std::to_string(row.p) + " ";
    out.expect(row.isotop_count == (row.p + 11) / 6, at + "isotopy count");
    out.expect(row.iso_count == (row.p - 3 + 4) / 2, at + "isomorphism count");
    out.expect(row.nr_lower_bound == std::optional<std::uint64_t>{(row.p + 5 + 5) / 6}, at + "lower bound");
    const std::int64_t expected_diff = row.p % 6 == 5 ? 0 : 1;
    out.expect(row.p % 6 == 5 || row.p % 6 == 1, at + "residue");
    out.expect(row.difference == std::optional<std::int64_t>{expected_diff}, at + "difference");
  }
}

void nonexistence(Outcome& out) {
  for (const auto [p, q] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{7, 5}, {13, 5}, {11, 7}}) {
    out.expect(!divides_p2_minus_1(p, q), pq(p, q) + "q divides p^2-1");
    const auto report = classify(p, q, Upto::Isotopism);
    out.expect(report.classes.size() == 1, pq(p, q) + "class count");
    const LoopTable table = class_table(FieldParams(p, q), report.classes.front());
    out.expect(is_associative(table) && is_commutative(table), pq(p, q) + "cyclic table");
  }
}

void structural_properties(Outcome& out) {
  const auto pairs = pairs_where(50, [](auto p, auto q) { return divides_p2_minus_1(p, q); });
  for (const auto [p, q] : pairs) {
    const std::string at = pq(p, q);
    const FieldParams params(p, q);
    const GammaSet gammas = build_gamma_set(params);
    const Fp2Element half = params.half();
    const bool split = params.branch() == Branch::QDividesPMinus1;
    out.expect(gammas.size() == p - q + 1, at + "|Gamma|");
    out.expect(gammas.contains(half), at + "1/2 missing");
    for (const auto& g : gammas.elements) out.expect(gammas.contains(act_f(params, g)), at + "not f-closed");
    out.expect(dihedral_check(params, gammas), at + "dihedral relations");

    out.expect(fixed_points(params, gammas, {1, 0}) == std::vector<Fp2Element>{half}, at + "Fix(f)");
    const auto qi = static_cast<std::int64_t>(q);
    for (std::int64_t i = 1; i < qi; ++i) {
      const auto fix_g = fixed_points(params, gammas, {0, i});
      out.expect(split ? fix_g == std::vector<Fp2Element>{params.zero(), params.one()} : fix_g.empty(),
                 at + "Fix(g^i)");
      const Fp2Element expected = params.inv(params.add(params.one(), params.omega_pow(i)));
      out.expect(fixed_points(params, gammas, {1, i}) == std::vector<Fp2Element>{expected}, at + "Fix(fg^i)");
    }

    const auto part = orbit_partition(params, gammas, {.f = true, .g = true});
    const auto half_orbit = part.orbit_of(half);
    out.expect(half_orbit && part.orbits[*half_orbit].size() == q, at + "|O(1/2)|");
    for (std::size_t k = 0; k < part.size(); ++k) {
      const auto& orbit = part.orbits[k];
      if (k == half_orbit) continue;
      if (split && orbit.contains(params.zero())) {
        out.expect(orbit.members == std::vector<Fp2Element>{params.zero(), params.one()}, at + "O(0)");
        continue;
      }
      out.expect(orbit.size() == 2 * q, at + "orbit of size " + std::to_string(orbit.size()));
    }
    if (!split)
      out.expect(!gammas.contains(params.zero()) && !gammas.contains(params.one()), at + "0 or 1 in Gamma");

    const Fp2Element lambda1 = eigen_pair(params, 1).lambda;
    for (const auto& g : gammas.elements) {
      const auto u = u_from_gamma(params, g);
      const auto au = circulant_apply(params, u.view());
      for (std::size_t i = 0; i < q; ++i) {
        out.expect(au[i] == params.mul(lambda1, u.entries()[i]), at + "eigen equation");
      }
    }
  }
}

void group_branch(Outcome& out) {
  const auto pairs = pairs_where(77, [](auto p, auto q) { return p * q <= 231 && (p - 1) % q == 0; });
  for (const auto [p, q] : pairs) {
    const FieldParams params(p, q);
    const LoopTable g = table_for_gamma(params, params.one());
    out.expect(is_associative(g), pq(p, q) + "gamma=1 not associative");
    out.expect(!is_commutative(g), pq(p, q) + "gamma=1 commutative");
  }
  const FieldParams p7(7, 3);
  const LoopTable g21 = table_for_gamma(p7, p7.one());
  for (Element a = 0; a < 21; ++a) {
    for (Element b = 0; b < 21; ++b) {
      const LoopTable iso = principal_isotope(g21, a, b);
      out.expect(brute_isomorphic(iso, g21).has_value(),
                 "principal isotope (" + std::to_string(a) + "," + std::to_string(b) + ") not isomorphic");
    }
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "closed-form counts at seven (p,q) pairs", 7.0, closed_form_counts},
      {"AC2", "representative tables are latin and Bol, one nonassociative Bruck", 60.0,
       identity_verification},
      {"AC3", "brute-force oracle agreement at orders 15 and 21", 300.0, oracle_agreement},
      {"AC4", "isotopy counts for q=3, p<=199 and the lower-bound gap", 30.0, remark_reproduction},
      {"AC5", "only the cyclic group when q does not divide p^2-1", 10.0, nonexistence},
      {"AC6", "Gamma, dihedral action, fixed points and orbit sizes for p<=50", 10.0, structural_properties},
      {"AC7", "gamma=1 is the nonabelian group; its isotopes are isomorphic", 60.0, group_branch},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome out;
    const auto t0 = Clock::now();
    try {
      c.run(out);
    } catch (const std::exception& e) {
      out.expect(false, std::string("exception: ") + e.what());
    }
    const double dt = seconds_since(t0);
    out.expect(dt < c.time_limit_s, "exceeded time limit");
    std::printf("[%s] %s %s (%.2f s)%s%s\n", out.ok ? "PASS" : "FAIL", c.id, c.title, dt, out.ok ? "" : ": ",
                out.detail.str().c_str());
    failed += !out.ok;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
