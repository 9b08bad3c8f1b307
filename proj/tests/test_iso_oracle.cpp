#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "bolpq/classify.hpp"
#include "bolpq/errors.hpp"
#include "bolpq/iso_oracle.hpp"

using namespace bolpq;

namespace {

// The table transported along a bijection: sigma(x) sigma(y) := sigma(x y).
LoopTable relabel(const LoopTable& L, const std::vector<Element>& sigma) {
  const std::size_t n = L.order();
  std::vector<Element> cells(n * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) cells[sigma[x] * n + sigma[y]] = sigma[L(x, y)];
  return LoopTable(n, std::move(cells), sigma[L.identity()]);
}

std::vector<Element> random_permutation(std::size_t n, std::mt19937& rng) {
  std::vector<Element> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::shuffle(sigma.begin(), sigma.end(), rng);
  return sigma;
}

struct Fixture {
  FieldParams p5{5, 3};
  FieldParams p7{7, 3};
  LoopTable z15 = build_loop(p5, cyclic_theta(3));
  LoopTable b53 = table_for_gamma(p5, p5.half());
  LoopTable g21_0 = table_for_gamma(p7, {0, 0});
  LoopTable g21_1 = table_for_gamma(p7, {1, 0});
  LoopTable l21_3 = table_for_gamma(p7, {3, 0});
  LoopTable l21_4 = table_for_gamma(p7, {4, 0});
  LoopTable l21_5 = table_for_gamma(p7, {5, 0});
};

}  // namespace

TEST_CASE_FIXTURE(Fixture, "principal isotopes") {
  CHECK(principal_isotope(b53, 0, 0) == b53);
  const Element a = ElementIndex{0, 1}.flatten(5);
  const Element b = ElementIndex{1, 0}.flatten(5);
  const LoopTable iso = principal_isotope(b53, a, b);
  CHECK(is_latin(iso));
  CHECK(iso.identity() == b53(a, b));
  CHECK(is_loop(iso));
  CHECK_THROWS_AS(principal_isotope(LoopTable(2, {0, 1, 1, 1}), 0, 0), InvalidInput);
  CHECK_THROWS_AS(principal_isotope(b53, 15, 0), InvalidInput);

  for (Element x = 0; x < 15; x += 4) {
    for (Element y = 0; y < 15; y += 3) {
      const LoopTable zi = principal_isotope(z15, x, y);
      CHECK(is_loop(zi));
      CHECK(zi.identity() == z15(x, y));
      CHECK(brute_isomorphic(zi, z15));
    }
  }
}

TEST_CASE_FIXTURE(Fixture, "brute_isomorphic examples") {
  const auto self = brute_isomorphic(b53, b53);
  REQUIRE(self);
  CHECK(verify_isomorphism(b53, b53, *self));
  std::vector<Element> id(15);
  std::iota(id.begin(), id.end(), 0);
  CHECK(self->image == id);  // ascending candidate order finds the identity first

  const auto w = brute_isomorphic(g21_0, g21_1);
  REQUIRE(w);
  CHECK(verify_isomorphism(g21_0, g21_1, *w));
  CHECK_FALSE(brute_isomorphic(l21_4, l21_3));
  CHECK_FALSE(brute_isomorphic(z15, b53));
}

TEST_CASE_FIXTURE(Fixture, "brute_isomorphic finds hidden relabelings") {
  std::mt19937 rng(11);
  const std::vector<const LoopTable*> tables = {&z15, &b53, &g21_1, &l21_3, &l21_4};
  for (const LoopTable* L : tables) {
    for (int trial = 0; trial < 5; ++trial) {
      const LoopTable M = relabel(*L, random_permutation(L->order(), rng));
      CHECK(fingerprint(M) == fingerprint(*L));
      const auto fwd = brute_isomorphic(*L, M);
      const auto back = brute_isomorphic(M, *L);
      REQUIRE(fwd);
      REQUIRE(back);
      CHECK(verify_isomorphism(*L, M, *fwd));
      CHECK(verify_isomorphism(M, *L, *back));
    }
  }
}

TEST_CASE_FIXTURE(Fixture, "isomorphism is symmetric on constructed tables") {
  const std::vector<const LoopTable*> tables = {&g21_0, &g21_1, &l21_3, &l21_4, &l21_5};
  for (const LoopTable* a : tables) {
    for (const LoopTable* b : tables) {
      CHECK(brute_isomorphic(*a, *b).has_value() == brute_isomorphic(*b, *a).has_value());
      if (fingerprint(*a) != fingerprint(*b)) CHECK_FALSE(brute_isomorphic(*a, *b));
    }
  }
}

TEST_CASE_FIXTURE(Fixture, "fingerprints") {
  const Fingerprint fz = fingerprint(z15);
  CHECK(fz.order == 15);
  CHECK(fz.involution_solutions == 1);
  CHECK(fz.idempotents == 1);
  CHECK(std::count(fz.power_orders.begin(), fz.power_orders.end(), 15u) == 8);  // phi(15)
  std::mt19937 rng(5);
  CHECK(fingerprint(relabel(b53, random_permutation(15, rng))) == fingerprint(b53));
  CHECK(fingerprint(z15) != fingerprint(b53));
}

TEST_CASE_FIXTURE(Fixture, "brute_isotopic examples") {
  CHECK(brute_isotopic(b53, b53));
  CHECK(brute_isotopic(table_for_gamma(p5, {3, 2}), b53));
  CHECK_FALSE(brute_isotopic(g21_1, l21_4));
  CHECK(brute_isotopic(l21_3, l21_4));
  CHECK_FALSE(brute_isotopic(z15, b53));
  CHECK_FALSE(brute_isotopic(z15, g21_1));  // orders differ

  const auto w = find_isotopy(table_for_gamma(p5, {3, 2}), b53);
  REQUIRE(w);
  CHECK(verify_isomorphism(principal_isotope(table_for_gamma(p5, {3, 2}), w->a, w->b), b53, w->iso));
}
