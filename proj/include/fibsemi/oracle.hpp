#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fibsemi/apery_table.hpp"
#include "fibsemi/nat.hpp"

namespace fibsemi {

/// The membership bitmap would need more bits than the configured ceiling.
class OracleLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultOracleMaxBits = std::uint64_t{1} << 28;

/// Brute-force membership for <generators> over [0, bound]. Every integer
/// above bound is a member.
class MembershipTable {
 public:
  const std::vector<Nat>& generators() const noexcept { return generators_; }
  std::uint64_t bound() const noexcept { return bound_; }

  bool contains(std::uint64_t x) const { return x > bound_ || member_[x]; }
  bool contains(const Nat& x) const;

  /// Non-members in increasing order.
  std::vector<std::uint64_t> gaps() const;

 private:
  friend MembershipTable build_membership(const std::vector<Nat>&, std::uint64_t, std::uint64_t);

  std::vector<Nat> generators_;
  std::uint64_t bound_ = 0;
  std::vector<bool> member_;
};

/// Forward DP over [0, bound]. The bound is the smallest product of two coprime
/// generators (or g_min * g_max when no pair is coprime), raised to at least
/// g_max and min_bound.
/// Throws std::invalid_argument for an empty list, a zero generator or
/// gcd > 1, and OracleLimitError when bound + 1 exceeds max_bits.
MembershipTable build_membership(const std::vector<Nat>& generators,
                                 std::uint64_t max_bits = kDefaultOracleMaxBits,
                                 std::uint64_t min_bound = 0);

/// Largest gap, or -1 when there is none.
Int oracle_frobenius(const MembershipTable& table);
Int oracle_frobenius(const std::vector<Nat>& generators,
                     std::uint64_t max_bits = kDefaultOracleMaxBits);

Nat oracle_genus(const MembershipTable& table);
Nat oracle_genus(const std::vector<Nat>& generators,
                 std::uint64_t max_bits = kDefaultOracleMaxBits);

/// Smallest member in each residue class modulo a. Throws
/// std::invalid_argument when a is not a positive member.
AperyTable oracle_apery(const MembershipTable& table, const Nat& a);
AperyTable oracle_apery(const std::vector<Nat>& generators, const Nat& a,
                        std::uint64_t max_bits = kDefaultOracleMaxBits);

/// Sorted distinct generators that are not a sum of two positive members.
std::vector<Nat> oracle_minimal_generators(const MembershipTable& table);
std::vector<Nat> oracle_minimal_generators(const std::vector<Nat>& generators,
                                           std::uint64_t max_bits = kDefaultOracleMaxBits);

}  // namespace fibsemi
