#include "fibsemi/semigroup.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace fibsemi {
namespace {

int ceil_div(int num, int den) { return num >= 0 ? (num + den - 1) / den : -((-num) / den); }

void require_even(const SemigroupParams& params, const char* who) {
  if (!params.even_d()) {
    throw std::invalid_argument(std::string(who) + ": requires even d, got d = " +
                                std::to_string(params.d()));
  }
}

SequenceSpec family_spec(Family family) {
  return family == Family::Fibonacci ? SequenceSpec::fibonacci() : SequenceSpec::lucas();
}

struct RecurrenceTables {
  std::vector<Nat> a;  // a[0] = 0
  std::vector<Nat> b;  // b[0] = 0
};

RecurrenceTables recurrence_tables(const SemigroupParams& params, int k_max) {
  const int d = params.d();
  const Nat& ld = params.ld();
  const Nat two_fd = 2 * params.fd();
  RecurrenceTables t;
  t.a.assign(static_cast<std::size_t>(std::max(k_max, 1)) + 1, Nat{0});
  t.b.assign(t.a.size(), Nat{0});
  t.a[1] = exact_div(params.vnd() * ld * (ld - 1), 2);
  t.b[1] = exact_div(params.vnd() * (ld - 1) * (ld - 2), 2);
  for (int k = 1; k < k_max; ++k) {
    const auto ku = static_cast<std::size_t>(k);
    const Nat v = params.term(k + 1);
    const Nat f_k = fib(k * d);
    const Nat f_k1 = fib((k + 1) * d);
    const Nat f_k2 = fib((k + 2) * d);
    t.a[ku + 1] = (ld - 1) * t.a[ku] + t.b[ku] + exact_div((ld - 1) * v * (f_k2 - f_k), two_fd);
    t.b[ku + 1] =
        (ld - 2) * t.a[ku] + t.b[ku] + exact_div((ld - 2) * v * (f_k2 - f_k1 - f_k), two_fd);
  }
  return t;
}

void check_prefix_bound(const SemigroupParams& params, const Nat& upto) {
  require_even(params, "prefix_sum_s");
  if (upto < 1 || upto >= params.vn()) {
    throw std::invalid_argument("prefix_sum_s: X = " + to_string(upto) + " outside [1, V_n - 1]");
  }
}

Nat prefix_sum_blocks(const SemigroupParams& params, const Nat& upto) {
  const GreedyRepr top = s_coefficients(params, upto);
  const int k_top = static_cast<int>(top.size());
  const RecurrenceTables rec = recurrence_tables(params, k_top);

  // P(X) = a A_{k-1} + a(a-1)/2 T_k V_{n+kd} + (X - a T_k + 1) a V_{n+kd} + P(X - a T_k)
  // where T_k = F_{kd}/F_d <= X < T_{k+1} and a = floor(X / T_k).
  Nat total{0};
  Nat rest = upto;
  for (int k = k_top; k >= 1 && rest > 0; --k) {
    const Nat t_k = params.quotient(k);
    const Nat a = floor_div(rest, t_k);
    if (a == 0) continue;
    const Nat v_k = params.term(k);
    const Nat block = a * t_k;
    total += a * rec.a[static_cast<std::size_t>(k - 1)];
    total += exact_div(a * (a - 1), 2) * t_k * v_k;
    total += (rest - block + 1) * a * v_k;
    rest -= block;
  }
  return total;
}

Nat prefix_sum_direct(const SemigroupParams& params, const Nat& upto) {
  Nat total{0};
  for (Nat x{1}; x <= upto; ++x) total += eval_s(params, x);
  return total;
}

}  // namespace

int embedding_dimension(const SemigroupParams& params) { return params.kappa(); }

int embedding_dimension_closed_form(Family family, int n, int d) {
  if (d < 2 || d % 2 != 0) {
    throw std::invalid_argument("embedding_dimension_closed_form: d must be even");
  }
  validate(family_spec(family), n, d);
  if (family == Family::Fibonacci) {
    if (d == 2 || n <= 2) return 1 + ceil_div(n - 2, d);
    return 1 + ceil_div(n - 1, d);
  }
  if (n == 1) return 1;
  return 1 + ceil_div(n, d);
}

std::vector<Nat> minimal_generators(const SemigroupParams& params) {
  if (params.kappa() == 1) return {Nat{1}};
  std::vector<Nat> gens;
  for (int i = 0; i < params.kappa(); ++i) gens.push_back(params.term(i));
  std::sort(gens.begin(), gens.end());
  return gens;
}

AperyTable apery_set(const SemigroupParams& params, std::uint64_t max_entries) {
  const Nat& vn = params.vn();
  if (!fits_u64(vn) || to_u64(vn) > max_entries) {
    throw std::length_error("apery_set: V_n = " + to_string(vn) + " exceeds the table limit of " +
                            std::to_string(max_entries) + " entries");
  }
  const auto size = static_cast<std::size_t>(to_u64(vn));
  AperyTable table;
  table.modulus = vn;
  table.entries.assign(size, Nat{-1});
  table.entries[0] = 0;
  if (size == 1) return table;

  auto place = [&](const Nat& element) {
    const Nat r = element % vn;
    auto& slot = table.entries[static_cast<std::size_t>(to_u64(r))];
    if (slot != -1) throw std::logic_error("apery_set: residue " + to_string(r) + " hit twice");
    slot = element;
  };

  if (params.even_d()) {
    for (Nat x{1}; x < vn; ++x) place(eval_s(params, x));
  } else {
    const Nat& b = params.vnd();
    for (Nat x{1}; x < vn; ++x) place(b * x);
  }
  return table;
}

Int frobenius(const SemigroupParams& params) {
  if (params.vn() == 1) return Int{-1};
  if (!params.even_d()) return two_gen_formulas(params.vn(), params.vnd()).frobenius;
  return eval_s(params, params.vn() - 1) - params.vn();
}

Int frobenius_special(Family family, int n, int d) {
  if (d < 2 || d % 2 != 0) throw std::invalid_argument("frobenius_special: d must be even");
  const bool fibonacci = family == Family::Fibonacci;
  const int threshold = fibonacci ? 3 : 4;
  if (n < threshold) {
    throw std::invalid_argument("frobenius_special: n must be >= " + std::to_string(threshold));
  }
  validate(family_spec(family), n, d);
  const SpecialTarget kind = fibonacci ? SpecialTarget::Fib : SpecialTarget::Lucas;
  if (!special_closed_form_applies(kind, d, n)) {
    throw std::invalid_argument("frobenius_special: closed form does not hold for n = " +
                                std::to_string(n) + ", d = " + std::to_string(d));
  }
  if (fibonacci) return fib(d) * fib(2 * n) - fib(n + d);
  return fib(d) * (lucas(2 * n + 1) + lucas(2 * n - 1)) - lucas(n + d);
}

Nat genus(const SemigroupParams& params) {
  const Nat& vn = params.vn();
  if (vn == 1) return Nat{0};
  if (!params.even_d()) return two_gen_formulas(vn, params.vnd()).genus;
  const Nat sum = prefix_sum_s(params, vn - 1);
  const Nat g = exact_div(2 * sum - vn * (vn - 1), 2 * vn);
  if (g < 0) throw std::logic_error("genus: negative result " + to_string(g));
  return g;
}

std::vector<GenusRecState> genus_recurrence(const SemigroupParams& params, int k_max) {
  require_even(params, "genus_recurrence");
  if (k_max < 1) throw std::invalid_argument("genus_recurrence: k_max must be >= 1");
  const RecurrenceTables rec = recurrence_tables(params, k_max);
  std::vector<GenusRecState> out;
  out.reserve(static_cast<std::size_t>(k_max));
  for (int k = 1; k <= k_max; ++k) {
    const auto ku = static_cast<std::size_t>(k);
    out.push_back({k, rec.a[ku], rec.b[ku]});
  }
  return out;
}

std::optional<Nat> prefix_sum_s_pattern(const SemigroupParams& params, const Nat& upto) {
  check_prefix_bound(params, upto);
  const GreedyRepr repr = s_coefficients(params, upto);
  const int k = static_cast<int>(repr.size());
  if (k < 2) return std::nullopt;
  const Nat& ld = params.ld();
  for (int i = 1; i <= k - 2; ++i) {
    if (repr.lambda(static_cast<std::size_t>(i)) != ld - 2) return std::nullopt;
  }
  const Nat& a = repr.lambda(static_cast<std::size_t>(k));
  const Nat& b = repr.lambda(static_cast<std::size_t>(k - 1));

  const RecurrenceTables rec = recurrence_tables(params, k - 1);
  const auto km1 = static_cast<std::size_t>(k - 1);
  const auto km2 = static_cast<std::size_t>(k - 2);
  const int d = params.d();
  const Nat f_k = fib(k * d);
  const Nat f_k1 = fib((k - 1) * d);
  const Nat f_k2 = fib((k - 2) * d);
  const Nat two_fd = 2 * params.fd();

  Nat total = a * rec.a[km1] + rec.b[km2] + b * rec.a[km2];
  total += exact_div(a * ((a - 1) * f_k + 2 * (b + 1) * f_k1 - 2 * f_k2) * params.term(k), two_fd);
  total += exact_div(b * ((b + 1) * f_k1 - 2 * f_k2) * params.term(k - 1), two_fd);
  return total;
}

Nat prefix_sum_s(const SemigroupParams& params, const Nat& upto, PrefixSumMethod method) {
  check_prefix_bound(params, upto);
  switch (method) {
    case PrefixSumMethod::Auto:
      if (auto fast = prefix_sum_s_pattern(params, upto)) return *fast;
      return prefix_sum_blocks(params, upto);
    case PrefixSumMethod::Pattern:
      if (auto fast = prefix_sum_s_pattern(params, upto)) return *fast;
      throw std::invalid_argument("prefix_sum_s: coefficients of X do not fit the pattern");
    case PrefixSumMethod::Blocks:
      return prefix_sum_blocks(params, upto);
    case PrefixSumMethod::Direct:
      return prefix_sum_direct(params, upto);
  }
  throw std::invalid_argument("prefix_sum_s: unknown method");
}

SemigroupSummary summary(const SemigroupParams& params) {
  SemigroupSummary out;
  out.embedding_dim = embedding_dimension(params);
  out.min_generators = minimal_generators(params);
  out.frobenius = frobenius(params);
  out.genus = genus(params);
  return out;
}

TwoGenerator two_gen_formulas(const Nat& a, const Nat& b) {
  if (a < 1 || b < 1) throw std::invalid_argument("two_gen_formulas: generators must be >= 1");
  if (gcd(a, b) != 1) {
    throw std::invalid_argument("two_gen_formulas: gcd(" + to_string(a) + ", " + to_string(b) +
                                ") = " + to_string(gcd(a, b)));
  }
  if (a == 1 || b == 1) return {Int{-1}, Nat{0}};
  return {a * b - a - b, exact_div((a - 1) * (b - 1), 2)};
}

}  // namespace fibsemi
