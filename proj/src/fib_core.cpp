#include "fibsemi/fib_core.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace fibsemi {
namespace {

// Advances (x, y) = (U_j, U_{j+1}) by `steps` positions of the recurrence.
void advance(Nat& x, Nat& y, int steps) {
  for (int i = 0; i < steps; ++i) {
    x += y;
    std::swap(x, y);
  }
}

void check_seeds(const SequenceSpec& spec) {
  if (spec.v1 < 1 || spec.v2 < 1) {
    throw std::invalid_argument("sequence seeds must be positive, got (" + to_string(spec.v1) +
                                ", " + to_string(spec.v2) + ")");
  }
}

}  // namespace

Nat fib(int n) {
  if (n < 0) throw std::invalid_argument("fib: negative index " + std::to_string(n));
  Nat x{0};
  Nat y{1};
  advance(x, y, n);
  return x;
}

Nat lucas(int n) {
  if (n < 0) throw std::invalid_argument("lucas: negative index " + std::to_string(n));
  Nat x{2};
  Nat y{1};
  advance(x, y, n);
  return x;
}

Nat genfib(const SequenceSpec& spec, int n) {
  if (n < 1) throw std::invalid_argument("genfib: index must be >= 1, got " + std::to_string(n));
  check_seeds(spec);
  Nat x = spec.v1;
  Nat y = spec.v2;
  advance(x, y, n - 1);
  return x;
}

std::vector<Nat> genfib_range(const SequenceSpec& spec, int lo, int hi) {
  if (lo < 1 || hi < lo) {
    throw std::invalid_argument("genfib_range: need 1 <= lo <= hi, got lo=" + std::to_string(lo) +
                                " hi=" + std::to_string(hi));
  }
  check_seeds(spec);
  Nat x = spec.v1;
  Nat y = spec.v2;
  advance(x, y, lo - 1);
  std::vector<Nat> out;
  out.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (int i = lo; i <= hi; ++i) {
    out.push_back(x);
    advance(x, y, 1);
  }
  return out;
}

}  // namespace fibsemi
