#include <doctest.h>

#include "fibsemi/oracle.hpp"

using namespace fibsemi;

namespace {
std::vector<Nat> nats(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }
}  // namespace

TEST_CASE("membership") {
  const auto all = build_membership(nats({1}));
  CHECK(all.gaps().empty());
  CHECK(all.contains(std::uint64_t{0}));

  const auto t = build_membership(nats({3, 8}));
  CHECK(t.gaps() == std::vector<std::uint64_t>{1, 2, 4, 5, 7, 10, 13});
  CHECK(t.contains(std::uint64_t{24}));
  CHECK(t.contains(Nat("1000000000000000000000")));
  CHECK_FALSE(t.contains(Nat{-1}));

  CHECK(build_membership(nats({5, 13, 34})).gaps().size() == 22);

  // A bigger bound never flips a value.
  const auto wide = build_membership(nats({3, 8}), kDefaultOracleMaxBits, 500);
  CHECK(wide.bound() == 500);
  for (std::uint64_t x = 0; x <= 500; ++x) CHECK(wide.contains(x) == t.contains(x));

  for (std::uint64_t x = 0; x <= wide.bound(); ++x) {
    for (std::uint64_t y = 0; x + y <= wide.bound(); y += 7) {
      if (wide.contains(x) && wide.contains(y)) CHECK(wide.contains(x + y));
    }
  }

  CHECK_THROWS_AS(build_membership({}), std::invalid_argument);
  CHECK_THROWS_AS(build_membership(nats({4, 6})), std::invalid_argument);
  CHECK_THROWS_AS(build_membership(nats({0, 3})), std::invalid_argument);
  CHECK_THROWS_AS(build_membership(nats({1000, 1001}), 1000), OracleLimitError);
}

TEST_CASE("frobenius and genus") {
  CHECK(oracle_frobenius(nats({3, 8})) == 13);
  CHECK(oracle_frobenius(nats({1})) == -1);
  CHECK(oracle_frobenius(nats({7, 18, 47})) == 87);
  CHECK(oracle_genus(nats({3, 8})) == 7);
  CHECK(oracle_genus(nats({1})) == 0);
  CHECK(oracle_genus(nats({2, 3})) == 1);
  CHECK(oracle_frobenius(nats({6, 10, 15})) == 29);
}

TEST_CASE("apery") {
  CHECK(oracle_apery(nats({3, 8}), 3).entries == nats({0, 16, 8}));
  CHECK(oracle_apery(nats({1}), 1).entries == nats({0}));
  CHECK(oracle_apery(nats({5, 13, 34}), 5).entries == nats({0, 26, 47, 13, 34}));
  CHECK_THROWS_AS(oracle_apery(nats({3, 8}), 5), std::invalid_argument);
  CHECK_THROWS_AS(oracle_apery(nats({3, 8}), 0), std::invalid_argument);

  // max(Ap) - a = F and sum(Ap)/a - (a-1)/2 = g for every member a.
  const auto t = build_membership(nats({7, 18, 47}));
  for (std::uint64_t a = 1; a <= 60; ++a) {
    if (!t.contains(a)) continue;
    const auto ap = oracle_apery(t, from_u64(a));
    Nat sum{0};
    for (const auto& e : ap.entries) sum += e;
    CHECK(ap.max_element() - from_u64(a) == oracle_frobenius(t));
    CHECK(2 * sum - from_u64(a * (a - 1)) == 2 * from_u64(a) * oracle_genus(t));
  }
}

TEST_CASE("minimal generators") {
  CHECK(oracle_minimal_generators(nats({3, 8, 21})) == nats({3, 8}));
  CHECK(oracle_minimal_generators(nats({5, 13, 34})) == nats({5, 13, 34}));
  CHECK(oracle_minimal_generators(nats({1})) == nats({1}));
  CHECK(oracle_minimal_generators(nats({1, 5, 7})) == nats({1}));
  CHECK(oracle_minimal_generators(nats({8, 3, 3, 11})) == nats({3, 8}));
}
