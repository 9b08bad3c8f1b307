#include "bolpq/sequences.hpp"

#include <string>

#include "bolpq/errors.hpp"

namespace bolpq {

PeriodicSequence::PeriodicSequence(std::vector<Fp2Element> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw InvalidInput("periodic sequence needs a positive period");
  if (entries_[0] != Fp2Element{1, 0}) throw InvalidInput("periodic sequence must satisfy u_0 = 1");
}

const Fp2Element& PeriodicSequence::operator[](std::int64_t i) const {
  const auto m = static_cast<std::int64_t>(entries_.size());
  return entries_[static_cast<std::size_t>(((i % m) + m) % m)];
}

std::vector<int> Circulant::row(std::size_t i) const {
  std::vector<int> r(q, 0);
  r[(i + 1) % q] += 1;
  r[(i + q - 1) % q] += 1;
  return r;
}

EigenPair eigen_pair(const FieldParams& params, std::int64_t j) {
  const std::uint64_t q = params.q();
  std::vector<Fp2Element> e(q);
  for (std::uint64_t i = 0; i < q; ++i) e[i] = params.omega_pow(static_cast<std::int64_t>(i) * j);
  return {params.add(params.omega_pow(j), params.omega_pow(-j)), PeriodicSequence(std::move(e))};
}

std::vector<Fp2Element> circulant_apply(const FieldParams& params, std::span<const Fp2Element> u) {
  const std::size_t q = u.size();
  std::vector<Fp2Element> out(q);
  for (std::size_t i = 0; i < q; ++i) out[i] = params.add(u[(i + q - 1) % q], u[(i + 1) % q]);
  return out;
}

PeriodicSequence u_from_gamma(const FieldParams& params, const Fp2Element& gamma, std::int64_t j) {
  const std::uint64_t q = params.q();
  const Fp2Element co = params.sub(params.one(), gamma);
  std::vector<Fp2Element> u(q);
  for (std::uint64_t i = 0; i < q; ++i) {
    const auto ji = static_cast<std::int64_t>(i) * j;
    u[i] = params.add(params.mul(gamma, params.omega_pow(ji)), params.mul(co, params.omega_pow(-ji)));
  }
  return PeriodicSequence(std::move(u));
}

bool satisfies_recurrence(const FieldParams& params, const PeriodicSequence& u, const Fp2Element& lambda) {
  const auto q = static_cast<std::int64_t>(u.period());
  for (std::int64_t n = 0; n < q; ++n) {
    if (u[n + 2] != params.sub(params.mul(lambda, u[n + 1]), u[n])) return false;
  }
  return true;
}

std::optional<std::int64_t> eigen_index(const FieldParams& params, const PeriodicSequence& u) {
  if (u.period() != params.q()) return std::nullopt;
  const auto au = circulant_apply(params, u.view());
  for (std::int64_t j = 0; j < static_cast<std::int64_t>(params.q()); ++j) {
    const Fp2Element lambda = params.add(params.omega_pow(j), params.omega_pow(-j));
    bool ok = true;
    for (std::size_t i = 0; ok && i < au.size(); ++i) ok = au[i] == params.mul(lambda, u.entries()[i]);
    if (ok) return j;
  }
  return std::nullopt;
}

bool is_bol_sequence(const FieldParams& params, const PeriodicSequence& u) {
  const auto& e = u.entries();
  for (const auto& x : e) {
    if (x.is_zero()) return false;
  }
  const Fp2Element minus_one = params.from_int(-1);
  for (const auto& a : e) {
    const Fp2Element a_inv = params.inv(a);
    for (const auto& b : e) {
      const Fp2Element ratio = params.mul(a_inv, b);
      if (!in_prime_field(ratio) || ratio == minus_one) return false;
    }
  }
  return eigen_index(params, u).has_value();
}

bool is_bruck_sequence(const PeriodicSequence& u) {
  const auto q = static_cast<std::int64_t>(u.period());
  for (std::int64_t i = 1; i < q; ++i) {
    if (u[i] != u[-i]) return false;
  }
  return true;
}

ThetaVector theta_from_sequence(const FieldParams& params, const PeriodicSequence& u) {
  ThetaVector out;
  out.thetas.reserve(u.period());
  for (const auto& x : u.entries()) out.thetas.push_back(params.inv(x));
  return out;
}

ThetaVector theta_from_gamma(const FieldParams& params, const Fp2Element& gamma) {
  const PeriodicSequence u = u_from_gamma(params, gamma, 1);
  for (std::size_t i = 0; i < u.period(); ++i) {
    if (u.entries()[i].is_zero()) {
      throw DegenerateGamma("gamma = " + to_string(gamma) +
                            " gives a zero denominator at i = " + std::to_string(i));
    }
  }
  return theta_from_sequence(params, u);
}

PeriodicSequence transform_seq(const FieldParams& params, const PeriodicSequence& u, std::int64_t s,
                               std::int64_t r) {
  const auto q = static_cast<std::int64_t>(u.period());
  if (((s % q) + q) % q == 0) throw InvalidInput("transform multiplier s must be nonzero mod q");
  const Fp2Element ur_inv = params.inv(u[r]);
  std::vector<Fp2Element> v(static_cast<std::size_t>(q));
  for (std::int64_t i = 0; i < q; ++i) v[static_cast<std::size_t>(i)] = params.mul(ur_inv, u[s * i + r]);
  return PeriodicSequence(std::move(v));
}

std::optional<SequenceWitness> find_isotopy_witness(const FieldParams& params, const PeriodicSequence& u,
                                                    const PeriodicSequence& v, Relation mode) {
  if (u.period() != v.period()) return std::nullopt;
  const auto q = static_cast<std::int64_t>(v.period());
  for (std::int64_t s = 1; s < q; ++s) {
    if (mode == Relation::Companion && s != 1) break;
    for (std::int64_t r = 0; r < q; ++r) {
      if (mode == Relation::Isomorphism && r != 0) break;
      if (v[r].is_zero()) continue;
      if (transform_seq(params, v, s, r) == u) return SequenceWitness{s, r};
    }
  }
  return std::nullopt;
}

}  // namespace bolpq
