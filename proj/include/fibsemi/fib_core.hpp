#pragma once

#include <vector>

#include "fibsemi/nat.hpp"

namespace fibsemi {

/// Seeds of a generalized Fibonacci sequence: V_1 = v1, V_2 = v2,
/// V_n = V_{n-1} + V_{n-2}. Both seeds must be positive.
struct SequenceSpec {
  Nat v1{1};
  Nat v2{1};

  static SequenceSpec fibonacci() { return {Nat{1}, Nat{1}}; }
  static SequenceSpec lucas() { return {Nat{1}, Nat{3}}; }

  bool operator==(const SequenceSpec& o) const { return v1 == o.v1 && v2 == o.v2; }
};

/// F_n with F_0 = 0, F_1 = F_2 = 1.
Nat fib(int n);

/// L_n with L_0 = 2, L_1 = 1.
Nat lucas(int n);

/// V_n for n >= 1. Throws std::invalid_argument for n < 1 or a zero seed.
Nat genfib(const SequenceSpec& spec, int n);

/// [V_lo, ..., V_hi], 1 <= lo <= hi.
std::vector<Nat> genfib_range(const SequenceSpec& spec, int lo, int hi);

}  // namespace fibsemi
