#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fibsemi {

// Exact integers. Nat values are non-negative by convention; Int may be negative
// (a Frobenius number of -1 for the full semigroup).
using Nat = mpz_class;
using Int = mpz_class;

inline std::string to_string(const mpz_class& v) { return v.get_str(); }

inline Nat parse_nat(const std::string& text) {
  Nat v;
  if (text.empty() || text[0] == '-' || text[0] == '+' || v.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a non-negative decimal integer: '" + text + "'");
  }
  return v;
}

// Quotient of an exact division. A non-zero remainder is a broken internal
// invariant, not a user error.
inline Nat exact_div(const Nat& num, const Nat& den) {
  if (den == 0) throw std::logic_error("exact_div: division by zero");
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    throw std::logic_error("exact_div: " + to_string(den) + " does not divide " + to_string(num));
  }
  Nat q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

inline Nat floor_div(const Nat& num, const Nat& den) {
  Nat q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

inline Nat gcd(const Nat& a, const Nat& b) {
  Nat g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline bool fits_u64(const Nat& v) { return v >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64; }

inline std::uint64_t to_u64(const Nat& v) {
  if (!fits_u64(v)) throw std::out_of_range("value does not fit in 64 bits: " + to_string(v));
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, v.get_mpz_t());
  return out;
}

inline Nat from_u64(std::uint64_t v) {
  Nat out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return out;
}

}  // namespace fibsemi
