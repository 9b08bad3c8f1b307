#include "bolpq/loop_table.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "bolpq/errors.hpp"
#include "parallel.hpp"

namespace bolpq {

LoopTable::LoopTable(std::size_t n, std::vector<Element> cells, Element identity)
    : n_(n), cells_(std::move(cells)), identity_(identity) {
  if (n_ == 0) throw InvalidInput("table order must be positive");
  if (n_ > kMaxTableOrder) {
    throw ResourceError("table order " + std::to_string(n_) + " exceeds " + std::to_string(kMaxTableOrder));
  }
  if (cells_.size() != n_ * n_)
    throw InvalidInput("table has " + std::to_string(cells_.size()) + " cells, expected n^2");
  if (identity_ >= n_) throw InvalidInput("identity index out of range");
  for (const Element c : cells_) {
    if (c >= n_) throw InvalidInput("table entry " + std::to_string(c) + " out of range");
  }
}

ThetaVector cyclic_theta(std::uint64_t q) {
  return ThetaVector{std::vector<Fp2Element>(q, Fp2Element{1, 0})};
}

LoopTable build_loop(const FieldParams& params, const ThetaVector& theta) {
  const std::uint64_t p = params.p();
  const std::uint64_t q = params.q();
  const auto& th = theta.thetas;
  if (th.size() != q) throw InadmissibleTheta("theta must have q = " + std::to_string(q) + " entries");
  if (th[0] != params.one()) throw InadmissibleTheta("theta_0 must be 1");
  const std::size_t n = p * q;
  if (n > kMaxTableOrder) {
    throw ResourceError("order pq = " + std::to_string(n) + " exceeds " + std::to_string(kMaxTableOrder));
  }

  // scale[k] = (1 + theta_k)^-1, ratio[i][k] = theta_i^-1 theta_{i+k}; both must lie in F_p.
  std::vector<std::uint64_t> scale(q);
  std::vector<std::uint64_t> ratio(q * q);
  for (std::uint64_t k = 0; k < q; ++k) {
    if (th[k].is_zero()) throw InadmissibleTheta("theta_" + std::to_string(k) + " is zero");
    const Fp2Element den = params.add(params.one(), th[k]);
    if (den.is_zero()) throw InadmissibleTheta("1 + theta_" + std::to_string(k) + " is zero");
    const Fp2Element c = params.inv(den);
    if (!in_prime_field(c)) throw InadmissibleTheta("(1 + theta_" + std::to_string(k) + ")^-1 is not in F_p");
    scale[k] = c.re;
  }
  for (std::uint64_t i = 0; i < q; ++i) {
    const Fp2Element ti_inv = params.inv(th[i]);
    for (std::uint64_t k = 0; k < q; ++k) {
      const Fp2Element m = params.mul(ti_inv, th[(i + k) % q]);
      if (!in_prime_field(m)) {
        throw InadmissibleTheta("theta_" + std::to_string(i) + "^-1 theta_" + std::to_string((i + k) % q) +
                                " is not in F_p");
      }
      ratio[i * q + k] = m.re;
    }
  }

  std::vector<Element> cells(n * n);
  for (std::uint64_t i = 0; i < q; ++i) {
    for (std::uint64_t j = 0; j < p; ++j) {
      const std::size_t row = (i * p + j) * n;
      for (std::uint64_t k = 0; k < q; ++k) {
        const std::uint64_t m = ratio[i * q + k];
        for (std::uint64_t l = 0; l < p; ++l) {
          const std::uint64_t ls = l * scale[k] % p;
          const std::uint64_t second = (ls + (j + ls) % p * m) % p;
          cells[row + k * p + l] = static_cast<Element>(ElementIndex{(i + k) % q, second}.flatten(p));
        }
      }
    }
  }
  LoopTable out(n, std::move(cells), 0);
  out.set_provenance(Provenance{p, q, std::nullopt, theta});
  return out;
}

bool is_latin(const LoopTable& L) {
  const std::size_t n = L.order();
  std::vector<std::uint32_t> row_seen(n, 0);
  std::vector<std::uint32_t> col_seen(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    const auto stamp = static_cast<std::uint32_t>(a + 1);
    for (std::size_t b = 0; b < n; ++b) {
      const Element r = L(static_cast<Element>(a), static_cast<Element>(b));
      const Element c = L(static_cast<Element>(b), static_cast<Element>(a));
      if (row_seen[r] == stamp || col_seen[c] == stamp) return false;
      row_seen[r] = stamp;
      col_seen[c] = stamp;
    }
  }
  return true;
}

bool is_loop(const LoopTable& L) {
  if (!is_latin(L)) return false;
  const Element e = L.identity();
  for (Element x = 0; x < L.order(); ++x) {
    if (L(e, x) != x || L(x, e) != x) return false;
  }
  return true;
}

bool is_bol(const LoopTable& L) {
  const std::size_t n = L.order();
  return detail::parallel_all_of(n, [&](std::size_t xi) {
    const auto x = static_cast<Element>(xi);
    for (Element y = 0; y < n; ++y) {
      const Element xyx = L(L(x, y), x);
      for (Element z = 0; z < n; ++z) {
        if (L(L(L(z, x), y), x) != L(z, xyx)) return false;
      }
    }
    return true;
  });
}

std::optional<Element> element_inverse(const LoopTable& L, Element x) {
  const Element e = L.identity();
  for (Element y = 0; y < L.order(); ++y) {
    if (L(x, y) == e) {
      if (L(y, x) == e) return y;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

bool is_bruck(const LoopTable& L) {
  if (!is_bol(L)) return false;
  const std::size_t n = L.order();
  std::vector<Element> inv(n);
  for (Element x = 0; x < n; ++x) {
    const auto y = element_inverse(L, x);
    if (!y) return false;
    inv[x] = *y;
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (inv[L(x, y)] != L(inv[x], inv[y])) return false;
    }
  }
  return true;
}

bool is_associative(const LoopTable& L) {
  const std::size_t n = L.order();
  return detail::parallel_all_of(n, [&](std::size_t xi) {
    const auto x = static_cast<Element>(xi);
    for (Element y = 0; y < n; ++y) {
      const Element xy = L(x, y);
      for (Element z = 0; z < n; ++z) {
        if (L(xy, z) != L(x, L(y, z))) return false;
      }
    }
    return true;
  });
}

bool is_commutative(const LoopTable& L) {
  for (Element x = 0; x < L.order(); ++x) {
    for (Element y = x + 1; y < L.order(); ++y) {
      if (L(x, y) != L(y, x)) return false;
    }
  }
  return true;
}

std::size_t left_power_order(const LoopTable& L, Element x) {
  Element power = x;
  for (std::size_t k = 1; k <= L.order(); ++k) {
    if (power == L.identity()) return k;
    power = L(power, x);
  }
  return 0;
}

void write_table(std::ostream& os, const LoopTable& L) {
  const std::size_t n = L.order();
  os << n << '\n';
  for (Element r = 0; r < n; ++r) {
    for (Element c = 0; c < n; ++c) {
      if (c > 0) os << ' ';
      os << L(r, c);
    }
    os << '\n';
  }
}

namespace {

bool next_content_line(std::istream& is, std::string& line, std::size_t& lineno) {
  while (std::getline(is, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

}  // namespace

LoopTable read_table(std::istream& is) {
  std::string line;
  std::size_t lineno = 0;
  if (!next_content_line(is, line, lineno)) throw ParseError(lineno, "missing order header");

  long long n_raw = 0;
  {
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> n_raw) || (hs >> extra)) throw ParseError(lineno, "header must be a single integer");
  }
  if (n_raw <= 0) throw ParseError(lineno, "order must be positive");
  if (static_cast<unsigned long long>(n_raw) > kMaxTableOrder) {
    throw ParseError(lineno, "order " + std::to_string(n_raw) + " exceeds " + std::to_string(kMaxTableOrder));
  }
  const auto n = static_cast<std::size_t>(n_raw);

  std::vector<Element> cells;
  cells.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!next_content_line(is, line, lineno)) {
      throw ParseError(lineno, "expected " + std::to_string(n) + " rows, found " + std::to_string(r));
    }
    std::istringstream rs(line);
    std::string tok;
    std::size_t count = 0;
    while (rs >> tok) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) throw ParseError(lineno, "not an integer: '" + tok + "'");
      if (v < 0 || static_cast<unsigned long long>(v) >= n) {
        throw ParseError(lineno, "entry " + tok + " outside [0, " + std::to_string(n) + ")");
      }
      if (++count > n) throw ParseError(lineno, "row has more than " + std::to_string(n) + " entries");
      cells.push_back(static_cast<Element>(v));
    }
    if (count != n) {
      throw ParseError(lineno,
                       "row has " + std::to_string(count) + " entries, expected " + std::to_string(n));
    }
  }
  if (next_content_line(is, line, lineno))
    throw ParseError(lineno, "trailing data after " + std::to_string(n) + " rows");
  return LoopTable(n, std::move(cells), 0);
}

void export_table(const LoopTable& L, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw InvalidInput("cannot open '" + path + "' for writing");
  write_table(os, L);
  if (!os) throw InvalidInput("failed writing '" + path + "'");
}

LoopTable import_table(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw InvalidInput("cannot open '" + path + "'");
  return read_table(is);
}

}  // namespace bolpq
