#include "bolpq/iso_oracle.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>

#include "bolpq/errors.hpp"
#include "parallel.hpp"

namespace bolpq {

Fingerprint fingerprint(const LoopTable& L) {
  Fingerprint fp;
  fp.order = L.order();
  for (Element x = 0; x < L.order(); ++x) {
    const Element xx = L(x, x);
    if (xx == L.identity()) ++fp.involution_solutions;
    if (xx == x) ++fp.idempotents;
    fp.power_orders.push_back(left_power_order(L, x));
  }
  std::sort(fp.power_orders.begin(), fp.power_orders.end());
  return fp;
}

LoopTable principal_isotope(const LoopTable& L, Element a, Element b) {
  const std::size_t n = L.order();
  if (a >= n || b >= n) throw InvalidInput("isotope parameters out of range");
  if (!is_loop(L)) throw InvalidInput("principal isotope requires a loop");
  // right_div[x] = x / b (z with z b = x); left_div[y] = a \ y (w with a w = y)
  std::vector<Element> right_div(n);
  std::vector<Element> left_div(n);
  for (Element z = 0; z < n; ++z) {
    right_div[L(z, b)] = z;
    left_div[L(a, z)] = z;
  }
  std::vector<Element> cells(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) cells[x * n + y] = L(right_div[x], left_div[y]);
  }
  return LoopTable(n, std::move(cells), L(a, b));
}

bool verify_isomorphism(const LoopTable& from, const LoopTable& to, const IsoWitness& phi) {
  const std::size_t n = from.order();
  if (to.order() != n || phi.image.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (const Element y : phi.image) {
    if (y >= n || hit[y]) return false;
    hit[y] = true;
  }
  if (phi.image[from.identity()] != to.identity()) return false;
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (phi.image[from(x, y)] != to(phi.image[x], phi.image[y])) return false;
    }
  }
  return true;
}

namespace {

constexpr Element kUnset = ~Element{0};

class IsoSearch {
 public:
  IsoSearch(const LoopTable& from, const LoopTable& to)
      : from_(from), to_(to), n_(from.order()), image_(n_, kUnset), used_(n_, false) {
    for (Element x = 0; x < n_; ++x) {
      from_order_.push_back(left_power_order(from_, x));
      to_order_.push_back(left_power_order(to_, x));
    }
  }

  std::optional<IsoWitness> run() {
    std::vector<Element> assigned;
    if (!assign(from_.identity(), to_.identity(), assigned)) return std::nullopt;
    if (!propagate(assigned)) return std::nullopt;
    if (!extend(assigned)) return std::nullopt;
    return IsoWitness{image_};
  }

 private:
  bool assign(Element x, Element y, std::vector<Element>& assigned) {
    if (used_[y] || from_order_[x] != to_order_[y]) return false;
    image_[x] = y;
    used_[y] = true;
    assigned.push_back(x);
    return true;
  }

  void undo(std::vector<Element>& assigned, std::size_t keep) {
    while (assigned.size() > keep) {
      const Element x = assigned.back();
      assigned.pop_back();
      used_[image_[x]] = false;
      image_[x] = kUnset;
    }
  }

  // Closes the assigned set under products, checking consistency of every pair.
  bool propagate(std::vector<Element>& assigned) {
    std::size_t checked = 0;  // pairs among assigned[0, checked) are done
    while (checked < assigned.size()) {
      const std::size_t upto = assigned.size();
      for (std::size_t i = 0; i < upto; ++i) {
        for (std::size_t j = (i < checked ? checked : 0); j < upto; ++j) {
          for (int side = 0; side < 2; ++side) {
            const Element x = side == 0 ? assigned[i] : assigned[j];
            const Element y = side == 0 ? assigned[j] : assigned[i];
            const Element xy = from_(x, y);
            const Element img = to_(image_[x], image_[y]);
            if (image_[xy] == kUnset) {
              if (!assign(xy, img, assigned)) return false;
            } else if (image_[xy] != img) {
              return false;
            }
          }
        }
      }
      checked = upto;
    }
    return true;
  }

  bool extend(std::vector<Element>& assigned) {
    if (assigned.size() == n_) return true;
    Element gen = 0;
    while (image_[gen] != kUnset) ++gen;
    const std::size_t keep = assigned.size();
    for (Element cand = 0; cand < n_; ++cand) {
      if (used_[cand]) continue;
      if (assign(gen, cand, assigned) && propagate(assigned) && extend(assigned)) return true;
      undo(assigned, keep);
    }
    return false;
  }

  const LoopTable& from_;
  const LoopTable& to_;
  std::size_t n_;
  std::vector<Element> image_;
  std::vector<bool> used_;
  std::vector<std::size_t> from_order_;
  std::vector<std::size_t> to_order_;
};

}  // namespace

std::optional<IsoWitness> brute_isomorphic(const LoopTable& L1, const LoopTable& L2) {
  if (L1.order() != L2.order()) return std::nullopt;
  if (fingerprint(L1) != fingerprint(L2)) return std::nullopt;
  auto witness = IsoSearch(L1, L2).run();
  if (witness && !verify_isomorphism(L1, L2, *witness)) return std::nullopt;
  return witness;
}

std::optional<IsotopyWitness> find_isotopy(const LoopTable& L1, const LoopTable& L2) {
  const std::size_t n = L1.order();
  if (L2.order() != n || !is_loop(L1) || !is_loop(L2)) return std::nullopt;
  const Fingerprint target = fingerprint(L2);

  // Each pair (a, b) is independent; keep the least successful index.
  std::atomic<std::size_t> best{n * n};
  std::optional<IsotopyWitness> found;
  std::mutex mu;
  detail::parallel_all_of(
      n * n,
      [&](std::size_t idx) {
        if (idx >= best.load()) return true;
        const auto a = static_cast<Element>(idx / n);
        const auto b = static_cast<Element>(idx % n);
        const LoopTable iso = principal_isotope(L1, a, b);
        if (fingerprint(iso) != target) return true;
        auto w = brute_isomorphic(iso, L2);
        if (!w) return true;
        std::lock_guard lock(mu);
        if (idx < best.load()) {
          best = idx;
          found = IsotopyWitness{a, b, std::move(*w)};
        }
        return true;
      },
      1);
  return found;
}

bool brute_isotopic(const LoopTable& L1, const LoopTable& L2) { return find_isotopy(L1, L2).has_value(); }

}  // namespace bolpq
