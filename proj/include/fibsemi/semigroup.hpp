#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fibsemi/apery_table.hpp"
#include "fibsemi/fib_core.hpp"
#include "fibsemi/greedy.hpp"
#include "fibsemi/params.hpp"

namespace fibsemi {

enum class Family { Fibonacci, Lucas };

struct SemigroupSummary {
  int embedding_dim = 0;
  std::vector<Nat> min_generators;
  Int frobenius;
  Nat genus;
};

/// A_k = sum of s(x) for 1 <= x < F_{(k+1)d}/F_d and
/// B_k = sum of s(x) for 1 <= x < (F_{(k+1)d} - F_{kd})/F_d.
struct GenusRecState {
  int k = 0;
  Nat a;
  Nat b;
};

struct TwoGenerator {
  Int frobenius;
  Nat genus;
};

enum class PrefixSumMethod {
  Auto,     // Pattern when it applies, Blocks otherwise
  Pattern,  // closed form for L_d-2, ..., L_d-2, b, a coefficient shapes
  Blocks,   // peel the leading coefficient, using A_k for whole blocks
  Direct    // sum eval_s term by term
};

inline constexpr std::uint64_t kDefaultAperyLimit = std::uint64_t{1} << 22;

int embedding_dimension(const SemigroupParams& params);

/// 1 + ceil((n-2)/d) or 1 + ceil((n-1)/d) for Fibonacci, 1 or 1 + ceil(n/d)
/// for Lucas. Throws std::invalid_argument for odd d or a non-numerical
/// semigroup.
int embedding_dimension_closed_form(Family family, int n, int d);

/// V_n, V_{n+d}, ..., V_{n+(kappa-1)d} in increasing order.
std::vector<Nat> minimal_generators(const SemigroupParams& params);

/// Apery set with respect to V_n. Throws std::length_error when V_n exceeds
/// max_entries.
AperyTable apery_set(const SemigroupParams& params,
                     std::uint64_t max_entries = kDefaultAperyLimit);

/// s(V_n - 1) - V_n for even d, ab - a - b for odd d, -1 when S is everything.
Int frobenius(const SemigroupParams& params);

/// Closed form for Fibonacci (n >= 3) and Lucas (n >= 4) subsequences:
///   F_d F_{2n} - F_{n+d}   and   F_d (L_{2n+1} + L_{2n-1}) - L_{n+d}.
/// Both rest on the closed form of s(V_n - 1), so the same ranges as
/// special_closed_form_applies() hold; outside them std::invalid_argument is
/// thrown and frobenius() is the authority.
Int frobenius_special(Family family, int n, int d);

Nat genus(const SemigroupParams& params);

/// States k = 1..k_max from the joint first-order recurrences, seeded with
/// A_1 = V_{n+d} L_d (L_d - 1) / 2 and B_1 = V_{n+d} (L_d - 1)(L_d - 2) / 2.
std::vector<GenusRecState> genus_recurrence(const SemigroupParams& params, int k_max);

/// sum_{x=1}^{X} s(x) for 1 <= X <= V_n - 1.
Nat prefix_sum_s(const SemigroupParams& params, const Nat& upto,
                 PrefixSumMethod method = PrefixSumMethod::Auto);

/// The Pattern route, or nullopt when the greedy coefficients of X are not of
/// the form (L_d-2, ..., L_d-2, b, a) with k >= 2.
std::optional<Nat> prefix_sum_s_pattern(const SemigroupParams& params, const Nat& upto);

SemigroupSummary summary(const SemigroupParams& params);

/// F = ab - a - b and g = (a-1)(b-1)/2; (-1, 0) if a or b is 1.
TwoGenerator two_gen_formulas(const Nat& a, const Nat& b);

}  // namespace fibsemi
