#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fibsemi/nat.hpp"
#include "fibsemi/params.hpp"

namespace fibsemi {

/// Greedy coefficients of `target` over an increasing base starting at 1.
///
/// lambdas[i] pairs with base[i]; lambda(i) gives the 1-based view used in
/// formulas, so lambda(1) is the coefficient of base[0] = 1.
struct GreedyRepr {
  Nat target;
  std::vector<Nat> base;
  std::vector<Nat> lambdas;

  std::size_t size() const noexcept { return lambdas.size(); }
  const Nat& lambda(std::size_t i) const { return lambdas.at(i - 1); }
  Nat reconstruct() const;
};

/// Descending greedy: the largest base element takes floor(target / base[k]),
/// each smaller one takes the floor of what is left.
/// Throws std::invalid_argument for an empty base, base[0] != 1, a base that is
/// not strictly increasing, or a negative target.
GreedyRepr greedy_repr(std::span<const Nat> base, const Nat& target);

/// 1, F_{2d}/F_d, ..., F_{kd}/F_d.
struct BaseSeq {
  int d = 2;
  std::vector<Nat> terms;
};

/// Requires even d >= 2 and k >= 1.
BaseSeq base_sequence(int d, int k);

/// The k with F_{kd}/F_d <= x < F_{(k+1)d}/F_d. Requires even d and x >= 1.
int rank_k(int d, const Nat& x);

/// Greedy coefficients of x over base_sequence(d, rank_k(d, x)).
GreedyRepr s_coefficients(const SemigroupParams& params, const Nat& x);

/// s(x) = sum_i lambda_i V_{n+id} for 1 <= x <= V_n - 1 (even d only).
Nat eval_s(const SemigroupParams& params, const Nat& x);

/// s(x) = V_{n+d} x - floor(F_{(k-1)d} x / F_{kd}) V_n with k = rank_k(d, x).
Nat eval_s_closed_form(const SemigroupParams& params, const Nat& x);

/// Predicted greedy coefficients of F_m - 1 (m > 2, even d), trailing zeros
/// dropped. Throws std::invalid_argument when d | m and d > 2.
std::vector<Nat> structure_for_fib_target(int d, int m);

/// Predicted greedy coefficients of L_m - 1 (m > 1, even d), trailing zeros
/// dropped. For m < d the target is below L_d and the answer is (L_m - 1).
std::vector<Nat> structure_for_lucas_target(int d, int m);

enum class SpecialTarget {
  FibBoundary,  // x = F_{(k+1)d}/F_d - 1, index = k >= 1
  Fib,          // x = F_m - 1, index = m > 2
  Lucas         // x = L_m - 1, index = m > 1
};

/// The argument x named by (kind, index) for step d.
Nat special_target(SpecialTarget kind, int d, int index);

/// Whether the closed form of s at (kind, index) is exact for step d.
///
/// The boundary form always is. For F_m - 1 it needs d = 2, odd m >= d - 1, or
/// even m >= 2d; for L_m - 1 it needs m >= 2d or even m > d. Below those
/// ranges the coefficient patterns lose their (m/d - 1)-th entry and the
/// telescoping that produces the closed form no longer applies.
bool special_closed_form_applies(SpecialTarget kind, int d, int index);

/// Closed-form s at a special argument:
///   boundary  V_{n+(k+1)d} - V_{n+d} + V_n
///   F_m - 1   F_d V_{n+m} - V_{n+d} + V_n
///   L_m - 1   F_d (V_{n+m+1} + V_{n+m-1}) - V_{n+d} + V_n
/// Throws std::invalid_argument when the argument is outside [1, V_n - 1] or
/// special_closed_form_applies() is false.
Nat s_at_special_target(const SemigroupParams& params, SpecialTarget kind, int index);

}  // namespace fibsemi
