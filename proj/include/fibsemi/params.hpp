#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "fibsemi/fib_core.hpp"
#include "fibsemi/nat.hpp"

namespace fibsemi {

/// Raised when (spec, n, d) does not describe a numerical semigroup.
class SemigroupError : public std::invalid_argument {
 public:
  enum class Kind {
    NotCoprimeSeed,        // gcd(V_1, V_2) > 1
    NotNumericalSemigroup  // gcd(V_n, F_d) > 1
  };

  SemigroupError(Kind kind, Nat divisor, const std::string& what)
      : std::invalid_argument(what), kind_(kind), divisor_(std::move(divisor)) {}

  Kind kind() const noexcept { return kind_; }
  const Nat& divisor() const noexcept { return divisor_; }

 private:
  Kind kind_;
  Nat divisor_;
};

/// S = <V_n, V_{n+d}, V_{n+2d}, ...> for a validated (spec, n, d).
///
/// Instances are immutable. Construction caches the ratios F_{id}/F_d and the
/// terms V_{n+id} for 0 <= i <= embedding dimension + 1; lookups past the cache
/// are computed on demand.
class SemigroupParams {
 public:
  const SequenceSpec& spec() const noexcept { return spec_; }
  int n() const noexcept { return n_; }
  int d() const noexcept { return d_; }
  bool even_d() const noexcept { return d_ % 2 == 0; }

  const Nat& vn() const noexcept { return terms_[0]; }
  const Nat& vnd() const noexcept { return terms_[1]; }
  const Nat& fd() const noexcept { return fd_; }
  const Nat& ld() const noexcept { return ld_; }

  /// Embedding dimension, fixed at construction.
  int kappa() const noexcept { return kappa_; }

  /// F_{id}/F_d for i >= 0 (0 at i = 0).
  Nat quotient(int i) const;
  /// V_{n+id} for i >= 0.
  Nat term(int i) const;

  /// Cached prefix of quotient(i), i = 0..cached_count()-1.
  const std::vector<Nat>& quotients() const noexcept { return quotients_; }
  const std::vector<Nat>& terms() const noexcept { return terms_; }

 private:
  friend SemigroupParams validate(const SequenceSpec& spec, int n, int d);
  SemigroupParams() = default;

  SequenceSpec spec_;
  int n_ = 1;
  int d_ = 1;
  int kappa_ = 1;
  Nat fd_;
  Nat ld_;
  std::vector<Nat> quotients_;
  std::vector<Nat> terms_;
};

/// Checks gcd(V_1, V_2) = 1 and gcd(V_n, F_d) = 1 and builds the parameter
/// object. Throws std::invalid_argument for n < 1, d < 1 or non-positive seeds,
/// and SemigroupError when a gcd condition fails.
SemigroupParams validate(const SequenceSpec& spec, int n, int d);

}  // namespace fibsemi
