#include "fibsemi/greedy.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace fibsemi {
namespace {

void require_even_step(int d, const char* who) {
  if (d < 2 || d % 2 != 0) {
    throw std::invalid_argument(std::string(who) + ": step d must be even and >= 2, got " +
                                std::to_string(d));
  }
}

// Rank of x within the cached quotients of params, extending past the cache
// when needed.
int rank_in(const SemigroupParams& params, const Nat& x) {
  int k = 1;
  while (params.quotient(k + 1) <= x) ++k;
  return k;
}

std::vector<Nat> pattern_to_vector(const std::map<int, Nat>& entries) {
  std::vector<Nat> out;
  if (entries.empty()) return out;
  const int last = entries.rbegin()->first;
  for (int i = 1; i <= last; ++i) {
    auto it = entries.find(i);
    out.push_back(it == entries.end() ? Nat{0} : it->second);
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// Indices below 1 belong to terms that vanish for small m.
void put(std::map<int, Nat>& entries, int i, const Nat& v) {
  if (i >= 1) entries[i] = v;
}

void put_run(std::map<int, Nat>& entries, int last, const Nat& v) {
  for (int i = 1; i <= last; ++i) entries[i] = v;
}

}  // namespace

Nat GreedyRepr::reconstruct() const {
  Nat total{0};
  for (std::size_t i = 0; i < lambdas.size(); ++i) total += lambdas[i] * base[i];
  return total;
}

GreedyRepr greedy_repr(std::span<const Nat> base, const Nat& target) {
  if (base.empty()) throw std::invalid_argument("greedy_repr: empty base");
  if (base[0] != 1) throw std::invalid_argument("greedy_repr: base must start at 1");
  for (std::size_t i = 1; i < base.size(); ++i) {
    if (base[i] <= base[i - 1]) {
      throw std::invalid_argument("greedy_repr: base must be strictly increasing");
    }
  }
  if (target < 0) throw std::invalid_argument("greedy_repr: negative target");

  GreedyRepr repr;
  repr.target = target;
  repr.base.assign(base.begin(), base.end());
  repr.lambdas.resize(base.size());
  Nat rest = target;
  for (std::size_t j = base.size(); j-- > 0;) {
    mpz_fdiv_qr(repr.lambdas[j].get_mpz_t(), rest.get_mpz_t(), rest.get_mpz_t(),
                base[j].get_mpz_t());
  }
  return repr;
}

BaseSeq base_sequence(int d, int k) {
  require_even_step(d, "base_sequence");
  if (k < 1) throw std::invalid_argument("base_sequence: k must be >= 1");
  BaseSeq seq;
  seq.d = d;
  const Nat fd = fib(d);
  for (int i = 1; i <= k; ++i) seq.terms.push_back(exact_div(fib(i * d), fd));
  return seq;
}

int rank_k(int d, const Nat& x) {
  require_even_step(d, "rank_k");
  if (x < 1) throw std::invalid_argument("rank_k: x must be >= 1");
  const Nat fd = fib(d);
  int k = 1;
  while (exact_div(fib((k + 1) * d), fd) <= x) ++k;
  return k;
}

GreedyRepr s_coefficients(const SemigroupParams& params, const Nat& x) {
  require_even_step(params.d(), "s_coefficients");
  if (x < 1) throw std::invalid_argument("s_coefficients: x must be >= 1");
  const int k = rank_in(params, x);
  std::vector<Nat> base;
  base.reserve(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) base.push_back(params.quotient(i));
  return greedy_repr(base, x);
}

namespace {

void check_s_argument(const SemigroupParams& params, const Nat& x, const char* who) {
  require_even_step(params.d(), who);
  if (x < 1 || x >= params.vn()) {
    throw std::invalid_argument(std::string(who) + ": x = " + to_string(x) +
                                " outside [1, V_n - 1] = [1, " + to_string(params.vn() - 1) +
                                "]");
  }
}

}  // namespace

Nat eval_s(const SemigroupParams& params, const Nat& x) {
  check_s_argument(params, x, "eval_s");
  const GreedyRepr repr = s_coefficients(params, x);
  Nat s{0};
  for (std::size_t i = 0; i < repr.lambdas.size(); ++i) {
    if (repr.lambdas[i] != 0) s += repr.lambdas[i] * params.term(static_cast<int>(i) + 1);
  }
  return s;
}

Nat eval_s_closed_form(const SemigroupParams& params, const Nat& x) {
  check_s_argument(params, x, "eval_s_closed_form");
  const int k = rank_in(params, x);
  const int d = params.d();
  const Nat num = fib((k - 1) * d) * x;
  return params.vnd() * x - floor_div(num, fib(k * d)) * params.vn();
}

std::vector<Nat> structure_for_fib_target(int d, int m) {
  require_even_step(d, "structure_for_fib_target");
  if (m <= 2) throw std::invalid_argument("structure_for_fib_target: m must be > 2");
  const int q = m / d;
  const int r = m % d;
  const Nat ld = lucas(d);
  std::map<int, Nat> lam;

  if (m % 2 == 1) {
    put_run(lam, q - 1, ld - 2);
    put(lam, q, ld - fib(d - r) - 1);
    put(lam, q + 1, fib(r) - 1);
    return pattern_to_vector(lam);
  }
  if (m < d) return {fib(m) - 1};
  if (r == 0 && d > 2) {
    throw std::invalid_argument("structure_for_fib_target: d | m with d > 2 (F_d divides F_m)");
  }
  put_run(lam, q - 2, ld - 2);
  put(lam, q - 1, ld - 1);
  put(lam, q, fib(d - r) - 1);
  put(lam, q + 1, fib(r));
  return pattern_to_vector(lam);
}

std::vector<Nat> structure_for_lucas_target(int d, int m) {
  require_even_step(d, "structure_for_lucas_target");
  if (m <= 1) throw std::invalid_argument("structure_for_lucas_target: m must be > 1");
  if (m < d) return {lucas(m) - 1};
  const int q = m / d;
  const int r = m % d;
  const Nat ld = lucas(d);
  std::map<int, Nat> lam;

  if (r == 0) {
    put_run(lam, q - 2, ld - 2);
    put(lam, q - 1, ld - 3);
    put(lam, q, ld - 1);
  } else if (m % 2 == 1) {
    put_run(lam, q - 2, ld - 2);
    put(lam, q - 1, ld - 1);
    put(lam, q, lucas(d - r) - 1);
    put(lam, q + 1, lucas(r));
  } else {
    put_run(lam, q - 1, ld - 2);
    put(lam, q, ld - lucas(d - r) - 1);
    put(lam, q + 1, lucas(r) - 1);
  }
  return pattern_to_vector(lam);
}

Nat special_target(SpecialTarget kind, int d, int index) {
  require_even_step(d, "special_target");
  switch (kind) {
    case SpecialTarget::FibBoundary:
      if (index < 1) throw std::invalid_argument("special_target: boundary index must be >= 1");
      return exact_div(fib((index + 1) * d), fib(d)) - 1;
    case SpecialTarget::Fib:
      if (index <= 2) throw std::invalid_argument("special_target: F_m - 1 needs m > 2");
      return fib(index) - 1;
    case SpecialTarget::Lucas:
      if (index <= 1) throw std::invalid_argument("special_target: L_m - 1 needs m > 1");
      return lucas(index) - 1;
  }
  throw std::invalid_argument("special_target: unknown kind");
}

bool special_closed_form_applies(SpecialTarget kind, int d, int index) {
  const bool odd = index % 2 != 0;
  switch (kind) {
    case SpecialTarget::FibBoundary:
      return true;
    case SpecialTarget::Fib:
      return odd ? index >= d - 1 : index >= 2 * d;
    case SpecialTarget::Lucas:
      return index >= 2 * d || (!odd && index > d);
  }
  return false;
}

Nat s_at_special_target(const SemigroupParams& params, SpecialTarget kind, int index) {
  const int d = params.d();
  const Nat x = special_target(kind, d, index);
  check_s_argument(params, x, "s_at_special_target");
  if (!special_closed_form_applies(kind, d, index)) {
    throw std::invalid_argument("s_at_special_target: closed form does not hold for d = " +
                                std::to_string(d) + ", index = " + std::to_string(index));
  }
  const SequenceSpec& spec = params.spec();
  const int n = params.n();
  const Nat tail = params.vn() - params.vnd();
  switch (kind) {
    case SpecialTarget::FibBoundary:
      return params.term(index + 1) + tail;
    case SpecialTarget::Fib:
      return params.fd() * genfib(spec, n + index) + tail;
    case SpecialTarget::Lucas:
      return params.fd() * (genfib(spec, n + index + 1) + genfib(spec, n + index - 1)) + tail;
  }
  throw std::invalid_argument("s_at_special_target: unknown kind");
}

}  // namespace fibsemi
