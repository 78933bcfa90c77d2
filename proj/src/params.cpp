#include "fibsemi/params.hpp"

#include <algorithm>
#include <string>

namespace fibsemi {

Nat SemigroupParams::quotient(int i) const {
  if (i < 0) throw std::invalid_argument("quotient: negative index");
  if (static_cast<std::size_t>(i) < quotients_.size()) return quotients_[static_cast<std::size_t>(i)];
  return exact_div(fib(i * d_), fd_);
}

Nat SemigroupParams::term(int i) const {
  if (i < 0) throw std::invalid_argument("term: negative index");
  if (static_cast<std::size_t>(i) < terms_.size()) return terms_[static_cast<std::size_t>(i)];
  return genfib(spec_, n_ + i * d_);
}

SemigroupParams validate(const SequenceSpec& spec, int n, int d) {
  if (n < 1) throw std::invalid_argument("n must be >= 1, got " + std::to_string(n));
  if (d < 1) throw std::invalid_argument("d must be >= 1, got " + std::to_string(d));
  if (spec.v1 < 1 || spec.v2 < 1) {
    throw std::invalid_argument("sequence seeds must be positive, got (" + to_string(spec.v1) +
                                ", " + to_string(spec.v2) + ")");
  }

  const Nat seed_gcd = gcd(spec.v1, spec.v2);
  if (seed_gcd != 1) {
    throw SemigroupError(SemigroupError::Kind::NotCoprimeSeed, seed_gcd,
                         "not coprime seeds: gcd(V_1, V_2) = " + to_string(seed_gcd));
  }

  SemigroupParams p;
  p.spec_ = spec;
  p.n_ = n;
  p.d_ = d;
  p.fd_ = fib(d);
  p.ld_ = lucas(d);

  const Nat vn = genfib(spec, n);
  const Nat g = gcd(vn, p.fd_);
  if (g != 1) {
    throw SemigroupError(SemigroupError::Kind::NotNumericalSemigroup, g,
                         "not a numerical semigroup: gcd(V_n, F_d) = " + to_string(g));
  }

  // Smallest k >= 1 with F_{kd}/F_d >= V_n. For odd d every V_{n+kd} lies in
  // <V_n, V_{n+d}>, so only those two can be minimal.
  p.quotients_.push_back(Nat{0});
  p.quotients_.push_back(Nat{1});
  if (p.even_d()) {
    int k = 1;
    while (p.quotients_[static_cast<std::size_t>(k)] < vn) {
      ++k;
      p.quotients_.push_back(exact_div(fib(k * d), p.fd_));
    }
    p.kappa_ = k;
  } else {
    const Nat vnd = genfib(spec, n + d);
    p.kappa_ = (vn == 1 || vnd == 1) ? 1 : 2;
  }
  const int cached = std::max(p.kappa_ + 2, 3);
  while (static_cast<int>(p.quotients_.size()) < cached) {
    const int i = static_cast<int>(p.quotients_.size());
    p.quotients_.push_back(exact_div(fib(i * d), p.fd_));
  }

  p.terms_.reserve(static_cast<std::size_t>(cached));
  for (int i = 0; i < cached; ++i) p.terms_.push_back(genfib(spec, n + i * d));
  return p;
}

}  // namespace fibsemi
