#include <doctest.h>

#include "fibsemi/oracle.hpp"
#include "fibsemi/semigroup.hpp"
#include "support/grid.hpp"

using namespace fibsemi;

namespace {

SemigroupParams fibp(int n, int d) { return validate(SequenceSpec::fibonacci(), n, d); }
SemigroupParams lucp(int n, int d) { return validate(SequenceSpec::lucas(), n, d); }
std::vector<Nat> nats(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST_CASE("validate") {
  CHECK(fibp(5, 2).vn() == 5);
  CHECK(fibp(5, 2).vnd() == 13);
  CHECK_THROWS_AS(validate({Nat{2}, Nat{4}}, 3, 2), SemigroupError);
  try {
    fibp(6, 6);
    FAIL("expected an error");
  } catch (const SemigroupError& e) {
    CHECK(e.kind() == SemigroupError::Kind::NotNumericalSemigroup);
    CHECK(e.divisor() == 8);
    CHECK(std::string(e.what()).find("gcd(V_n, F_d) = 8") != std::string::npos);
  }
  CHECK_THROWS_AS(fibp(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(fibp(3, 0), std::invalid_argument);
}

TEST_CASE("embedding dimension and generators") {
  CHECK(embedding_dimension(fibp(7, 2)) == 4);
  CHECK(embedding_dimension_closed_form(Family::Fibonacci, 7, 2) == 4);
  CHECK(embedding_dimension_closed_form(Family::Fibonacci, 9, 4) == 3);
  CHECK(embedding_dimension_closed_form(Family::Lucas, 1, 4) == 1);
  CHECK_THROWS_AS(embedding_dimension_closed_form(Family::Fibonacci, 5, 3), std::invalid_argument);
  CHECK_THROWS_AS(embedding_dimension_closed_form(Family::Fibonacci, 6, 6), std::invalid_argument);

  CHECK(minimal_generators(fibp(5, 2)) == nats({5, 13, 34}));
  CHECK(minimal_generators(lucp(1, 2)) == nats({1}));
  CHECK(minimal_generators(fibp(4, 2)) == nats({3, 8}));
  CHECK(minimal_generators(fibp(5, 4)) == nats({5, 34}));
  CHECK(minimal_generators(fibp(7, 3)) == nats({13, 55}));

  for (int d : {2, 4, 6, 8}) {
    for (int n = 1; n <= 30; ++n) {
      for (auto fam : {Family::Fibonacci, Family::Lucas}) {
        const auto spec = fam == Family::Fibonacci ? SequenceSpec::fibonacci() : SequenceSpec::lucas();
        if (!fibsemi::testing::is_valid(spec, n, d)) continue;
        CAPTURE(n);
        CAPTURE(d);
        CHECK(embedding_dimension_closed_form(fam, n, d) == embedding_dimension(validate(spec, n, d)));
      }
    }
  }
}

TEST_CASE("apery set") {
  const auto t = apery_set(fibp(5, 2));
  CHECK(t.modulus == 5);
  CHECK(t.entries == nats({0, 26, 47, 13, 34}));
  CHECK(apery_set(fibp(4, 2)).entries == nats({0, 16, 8}));
  CHECK(apery_set(lucp(1, 2)).entries == nats({0}));
  CHECK(apery_set(lucp(4, 2)).entries.size() == 7);
  CHECK(apery_set(fibp(7, 3)).entries == oracle_apery(nats({13, 55}), 13).entries);
  CHECK_THROWS_AS(apery_set(fibp(30, 2), 1000), std::length_error);
}

TEST_CASE("frobenius and genus examples") {
  CHECK(frobenius(fibp(5, 2)) == 42);
  CHECK(frobenius(fibp(4, 2)) == 13);
  CHECK(frobenius(lucp(1, 2)) == -1);
  CHECK(genus(fibp(5, 2)) == 22);
  CHECK(genus(fibp(4, 2)) == 7);
  CHECK(genus(lucp(1, 2)) == 0);

  // Frozen from an independent brute-force gap count.
  CHECK(frobenius(fibp(8, 2)) == 932);
  CHECK(genus(fibp(8, 2)) == 470);
  CHECK(frobenius(fibp(9, 4)) == 7519);
  CHECK(genus(fibp(9, 4)) == 3762);
  CHECK(frobenius(lucp(6, 2)) == 673);
  CHECK(genus(lucp(6, 2)) == 341);
  CHECK(frobenius(validate({Nat{2}, Nat{5}}, 3, 4)) == 293);
  CHECK(genus(validate({Nat{2}, Nat{5}}, 3, 4)) == 147);
  CHECK(frobenius(validate({Nat{3}, Nat{4}}, 4, 2)) == 246);
  CHECK(genus(validate({Nat{3}, Nat{4}}, 4, 2)) == 124);
  CHECK(frobenius(validate({Nat{1}, Nat{4}}, 4, 6)) == 1247);
  CHECK(genus(validate({Nat{1}, Nat{4}}, 4, 6)) == 624);
  CHECK(frobenius(fibp(7, 3)) == 647);
  CHECK(genus(fibp(7, 3)) == 324);
  CHECK(frobenius(lucp(5, 1)) == 169);
  CHECK(genus(lucp(5, 1)) == 85);
}

TEST_CASE("frobenius closed forms") {
  CHECK(frobenius_special(Family::Fibonacci, 5, 2) == 42);
  CHECK(frobenius_special(Family::Fibonacci, 5, 4) == 131);
  CHECK(frobenius(fibp(5, 4)) == 131);
  CHECK(frobenius_special(Family::Lucas, 4, 2) == 87);
  CHECK(oracle_frobenius(nats({7, 18, 47})) == 87);
  CHECK_THROWS_AS(frobenius_special(Family::Fibonacci, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(frobenius_special(Family::Lucas, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(frobenius_special(Family::Fibonacci, 5, 3), std::invalid_argument);
  // n=6, d=4: S = <8, 55, 377> has F(S) = 369, not 377.
  CHECK(frobenius(fibp(6, 4)) == 369);
  CHECK_THROWS_AS(frobenius_special(Family::Fibonacci, 6, 4), std::invalid_argument);

  for (int d : {2, 4, 6, 8}) {
    for (int n = 3; n <= 16; ++n) {
      for (auto fam : {Family::Fibonacci, Family::Lucas}) {
        const auto spec = fam == Family::Fibonacci ? SequenceSpec::fibonacci() : SequenceSpec::lucas();
        if (!fibsemi::testing::is_valid(spec, n, d)) continue;
        try {
          const Int closed = frobenius_special(fam, n, d);
          CAPTURE(n);
          CAPTURE(d);
          CHECK(closed == frobenius(validate(spec, n, d)));
        } catch (const std::invalid_argument&) {
        }
      }
    }
  }
}

TEST_CASE("genus recurrence") {
  const auto p = fibp(5, 2);
  const auto states = genus_recurrence(p, 1);
  REQUIRE(states.size() == 1);
  CHECK(states[0].a == 39);
  CHECK(states[0].b == 13);
  CHECK_THROWS_AS(genus_recurrence(p, 0), std::invalid_argument);
  CHECK_THROWS_AS(genus_recurrence(fibp(7, 3), 2), std::invalid_argument);

  const auto q = fibp(13, 2);
  const auto rec = genus_recurrence(q, 5);
  for (const auto& st : rec) {
    Nat a{0};
    Nat b{0};
    const Nat a_top = q.quotient(st.k + 1) - 1;
    const Nat b_top = q.quotient(st.k + 1) - q.quotient(st.k) - 1;
    for (Nat x{1}; x <= a_top; ++x) a += eval_s(q, x);
    for (Nat x{1}; x <= b_top; ++x) b += eval_s(q, x);
    CAPTURE(st.k);
    CHECK(st.a == a);
    CHECK(st.b == b);
  }
}

TEST_CASE("prefix sums") {
  const auto p = fibp(5, 2);
  CHECK(prefix_sum_s(p, 4) == 120);
  CHECK(prefix_sum_s(p, 1) == p.vnd());
  CHECK_THROWS_AS(prefix_sum_s(p, 0), std::invalid_argument);
  CHECK_THROWS_AS(prefix_sum_s(p, 5), std::invalid_argument);

  const auto q = fibp(8, 2);
  CHECK(prefix_sum_s(q, 20, PrefixSumMethod::Direct) == 10080);
  CHECK(prefix_sum_s(q, 20, PrefixSumMethod::Blocks) == 10080);
  CHECK(prefix_sum_s(q, 20) == 10080);

  int triggered = 0;
  for (const auto& g : fibsemi::testing::even_grid()) {
    const auto params = validate(g.spec, g.n, g.d);
    Nat running{0};
    for (Nat x{1}; x < params.vn(); ++x) {
      running += eval_s(params, x);
      CAPTURE(g.label());
      CAPTURE(x);
      CHECK(prefix_sum_s(params, x, PrefixSumMethod::Blocks) == running);
      if (auto fast = prefix_sum_s_pattern(params, x)) {
        ++triggered;
        CHECK(*fast == running);
        CHECK(prefix_sum_s(params, x, PrefixSumMethod::Pattern) == running);
      }
    }
  }
  CHECK(triggered > 0);
}

TEST_CASE("summary and two-generator formulas") {
  const auto s = summary(fibp(5, 2));
  CHECK(s.embedding_dim == 3);
  CHECK(s.min_generators == nats({5, 13, 34}));
  CHECK(s.frobenius == 42);
  CHECK(s.genus == 22);

  const auto one = summary(lucp(1, 2));
  CHECK(one.embedding_dim == 1);
  CHECK(one.frobenius == -1);
  CHECK(one.genus == 0);

  const auto two = summary(fibp(4, 2));
  CHECK(two.embedding_dim == 2);
  CHECK(two.frobenius == 13);
  CHECK(two.genus == 7);

  CHECK(two_gen_formulas(3, 8).frobenius == 13);
  CHECK(two_gen_formulas(3, 8).genus == 7);
  CHECK(two_gen_formulas(2, 3).frobenius == 1);
  CHECK(two_gen_formulas(2, 3).genus == 1);
  CHECK(two_gen_formulas(1, 9).frobenius == -1);
  CHECK(two_gen_formulas(1, 9).genus == 0);
  CHECK_THROWS_AS(two_gen_formulas(4, 6), std::invalid_argument);
}

TEST_CASE("odd d goes through two generators") {
  for (const auto& g : fibsemi::testing::odd_grid()) {
    const auto p = validate(g.spec, g.n, g.d);
    CAPTURE(g.label());
    const auto tg = two_gen_formulas(p.vn(), p.vnd());
    CHECK(frobenius(p) == tg.frobenius);
    CHECK(genus(p) == tg.genus);
    CHECK(embedding_dimension(p) == (p.vn() == 1 || p.vnd() == 1 ? 1 : 2));
  }
}
