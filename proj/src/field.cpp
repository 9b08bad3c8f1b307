#include "bolpq/field.hpp"

#include <algorithm>

#include "bolpq/errors.hpp"

namespace bolpq {

std::string to_string(const Fp2Element& x) {
  return std::to_string(x.re) + "+" + std::to_string(x.im) + "*w";
}

std::ostream& operator<<(std::ostream& os, const Fp2Element& x) { return os << to_string(x); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

void require_odd_prime(std::uint64_t p, const char* name) {
  if (p == 2 || !is_prime(p)) {
    throw InvalidInput(std::string(name) + " = " + std::to_string(p) + " is not an odd prime");
  }
  if (p > kMaxPrime) {
    throw InvalidInput(std::string(name) + " = " + std::to_string(p) + " exceeds 2^31 - 1");
  }
}

}  // namespace

std::uint64_t find_nonsquare(std::uint64_t p) {
  require_odd_prime(p, "p");
  for (std::uint64_t t = 2; t < p; ++t) {
    if (powmod(t, (p - 1) / 2, p) == p - 1) return t;
  }
  // Unreachable for an odd prime: half of F_p^* are nonsquares.
  throw InvalidInput("no nonsquare modulo " + std::to_string(p));
}

Fp2Field::Fp2Field(std::uint64_t p, std::uint64_t t) : p_(p), t_(t % p) {
  require_odd_prime(p, "p");
  if (powmod(t_, (p - 1) / 2, p) != p - 1) {
    throw InvalidInput("t = " + std::to_string(t) + " is a square modulo " + std::to_string(p));
  }
}

Fp2Element Fp2Field::from_int(std::int64_t v) const {
  const auto m = static_cast<std::int64_t>(p_);
  return {static_cast<std::uint64_t>(((v % m) + m) % m), 0};
}

Fp2Element Fp2Field::half() const { return {(p_ + 1) / 2, 0}; }

Fp2Element Fp2Field::add(const Fp2Element& a, const Fp2Element& b) const {
  return {(a.re + b.re) % p_, (a.im + b.im) % p_};
}

Fp2Element Fp2Field::sub(const Fp2Element& a, const Fp2Element& b) const {
  return {(a.re + p_ - b.re) % p_, (a.im + p_ - b.im) % p_};
}

Fp2Element Fp2Field::neg(const Fp2Element& a) const { return {(p_ - a.re) % p_, (p_ - a.im) % p_}; }

Fp2Element Fp2Field::mul(const Fp2Element& a, const Fp2Element& b) const {
  // (a + b w)(c + d w) = (ac + bd t) + (ad + bc) w
  const std::uint64_t bd_t = mulmod(mulmod(a.im, b.im), t_);
  return {(mulmod(a.re, b.re) + bd_t) % p_, (mulmod(a.re, b.im) + mulmod(a.im, b.re)) % p_};
}

Fp2Element Fp2Field::pow(Fp2Element base, std::uint64_t e) const {
  Fp2Element r = one();
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

std::uint64_t Fp2Field::norm(const Fp2Element& a) const {
  return (mulmod(a.re, a.re) + p_ - mulmod(mulmod(a.im, a.im), t_)) % p_;
}

std::uint64_t Fp2Field::invmod(std::uint64_t a) const { return powmod(a, p_ - 2, p_); }

Fp2Element Fp2Field::inv(const Fp2Element& a) const {
  if (a.is_zero()) throw DivisionByZero("inverse of zero in F_" + std::to_string(p_) + "^2");
  // (a + b w)^-1 = (a - b w) / (a^2 - b^2 t); the norm vanishes only at 0 since t is a nonsquare.
  const std::uint64_t n_inv = invmod(norm(a));
  return {mulmod(a.re, n_inv), mulmod((p_ - a.im) % p_, n_inv)};
}

Fp2Element find_primitive_qth_root(std::uint64_t p, std::uint64_t q, std::uint64_t t) {
  require_odd_prime(q, "q");
  const Fp2Field field(p, t);
  const Fp2Element one = field.one();
  if ((p - 1) % q == 0) {
    for (std::uint64_t beta = 2; beta < p; ++beta) {
      const Fp2Element w = field.pow({beta, 0}, (p - 1) / q);
      if (w != one) return w;
    }
  } else if ((p + 1) % q == 0) {
    for (std::uint64_t a = 1; a < p; ++a) {
      const Fp2Element w = field.pow({a, 1}, (p * p - 1) / q);
      if (w != one) return w;
    }
  } else {
    throw NoRootError(std::to_string(q) + " does not divide " + std::to_string(p) + "^2 - 1");
  }
  throw NoRootError("search for a primitive root of order " + std::to_string(q) + " failed");
}

std::string to_string(Branch b) {
  switch (b) {
    case Branch::QDividesPMinus1:
      return "q|p-1";
    case Branch::QDividesPPlus1:
      return "q|p+1";
    case Branch::Neither:
      return "none";
  }
  return "?";
}

namespace {

Fp2Field make_field(std::uint64_t p, std::uint64_t q) {
  require_odd_prime(p, "p");
  require_odd_prime(q, "q");
  if (q >= p) {
    throw InvalidInput("need q < p, got p = " + std::to_string(p) + ", q = " + std::to_string(q));
  }
  return Fp2Field(p, find_nonsquare(p));
}

}  // namespace

FieldParams::FieldParams(std::uint64_t p, std::uint64_t q) : Fp2Field(make_field(p, q)), q_(q) {
  if ((p - 1) % q == 0) {
    branch_ = Branch::QDividesPMinus1;
  } else if ((p + 1) % q == 0) {
    branch_ = Branch::QDividesPPlus1;
  } else {
    branch_ = Branch::Neither;
    return;
  }
  const Fp2Element w = find_primitive_qth_root(p, q, t());
  omega_powers_.reserve(q);
  Fp2Element x = one();
  for (std::uint64_t i = 0; i < q; ++i) {
    omega_powers_.push_back(x);
    x = mul(x, w);
  }
}

const Fp2Element& FieldParams::omega() const {
  if (!has_root()) throw NoRootError("no primitive q-th root of unity for this (p, q)");
  return omega_powers_[1];
}

const Fp2Element& FieldParams::omega_pow(std::int64_t k) const {
  if (!has_root()) throw NoRootError("no primitive q-th root of unity for this (p, q)");
  return omega_powers_[mod_q(k)];
}

bool FieldParams::omega_subgroup_contains(const Fp2Element& x) const {
  return std::find(omega_powers_.begin(), omega_powers_.end(), x) != omega_powers_.end();
}

}  // namespace bolpq
