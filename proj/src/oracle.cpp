#include "fibsemi/oracle.hpp"

#include <algorithm>

namespace fibsemi {
namespace {

std::uint64_t choose_bound(const std::vector<Nat>& gens) {
  Nat best = gens.front() * gens.back();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (gcd(gens[i], gens[j]) == 1 && gens[i] * gens[j] < best) best = gens[i] * gens[j];
    }
  }
  if (best < gens.back()) best = gens.back();
  return fits_u64(best) ? to_u64(best) : UINT64_MAX;
}

}  // namespace

bool MembershipTable::contains(const Nat& x) const {
  if (x < 0) return false;
  if (!fits_u64(x)) return true;
  return contains(to_u64(x));
}

std::vector<std::uint64_t> MembershipTable::gaps() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 0; x <= bound_; ++x) {
    if (!member_[x]) out.push_back(x);
  }
  return out;
}

MembershipTable build_membership(const std::vector<Nat>& generators, std::uint64_t max_bits,
                                 std::uint64_t min_bound) {
  if (generators.empty()) throw std::invalid_argument("oracle: empty generator list");
  std::vector<Nat> gens = generators;
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (gens.front() < 1) throw std::invalid_argument("oracle: generators must be >= 1");
  Nat g{0};
  for (const Nat& x : gens) g = gcd(g, x);
  if (g != 1) throw std::invalid_argument("oracle: gcd of generators is " + to_string(g));

  const std::uint64_t bound = std::max(choose_bound(gens), min_bound);
  if (bound == UINT64_MAX || bound + 1 > max_bits) {
    throw OracleLimitError("oracle: membership table needs more than " +
                           std::to_string(max_bits) + " bits (generators " +
                           to_string(gens.front()) + " .. " + to_string(gens.back()) + ")");
  }

  MembershipTable table;
  table.generators_ = gens;
  table.bound_ = bound;
  table.member_.assign(bound + 1, false);
  table.member_[0] = true;
  std::vector<std::uint64_t> steps;
  for (const Nat& x : gens) {
    if (fits_u64(x) && to_u64(x) <= bound) steps.push_back(to_u64(x));
  }
  for (std::uint64_t x = 1; x <= bound; ++x) {
    for (std::uint64_t s : steps) {
      if (s > x) break;
      if (table.member_[x - s]) {
        table.member_[x] = true;
        break;
      }
    }
  }
  return table;
}

Int oracle_frobenius(const MembershipTable& table) {
  for (std::uint64_t x = table.bound() + 1; x-- > 0;) {
    if (!table.contains(x)) return from_u64(x);
  }
  return Int{-1};
}

Int oracle_frobenius(const std::vector<Nat>& generators, std::uint64_t max_bits) {
  return oracle_frobenius(build_membership(generators, max_bits));
}

Nat oracle_genus(const MembershipTable& table) { return from_u64(table.gaps().size()); }

Nat oracle_genus(const std::vector<Nat>& generators, std::uint64_t max_bits) {
  return oracle_genus(build_membership(generators, max_bits));
}

AperyTable oracle_apery(const MembershipTable& table, const Nat& a) {
  if (a < 1 || !table.contains(a)) {
    throw std::invalid_argument("oracle_apery: " + to_string(a) + " is not a positive member");
  }
  const std::uint64_t m = to_u64(a);
  AperyTable out;
  out.modulus = a;
  out.entries.assign(m, Nat{-1});
  std::uint64_t filled = 0;
  // Past the bound every integer is a member, so each residue is settled by
  // bound + m.
  for (std::uint64_t x = 0; filled < m; ++x) {
    if (!table.contains(x)) continue;
    Nat& slot = out.entries[x % m];
    if (slot == -1) {
      slot = from_u64(x);
      ++filled;
    }
  }
  return out;
}

AperyTable oracle_apery(const std::vector<Nat>& generators, const Nat& a,
                        std::uint64_t max_bits) {
  return oracle_apery(build_membership(generators, max_bits), a);
}

std::vector<Nat> oracle_minimal_generators(const MembershipTable& table) {
  // g = u + v with u, v positive members iff g - h is a member for some
  // smaller generator h.
  std::vector<Nat> out;
  const auto& gens = table.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool reducible = false;
    for (std::size_t j = 0; j < i && !reducible; ++j) {
      reducible = table.contains(Nat{gens[i] - gens[j]});
    }
    if (!reducible) out.push_back(gens[i]);
  }
  return out;
}

std::vector<Nat> oracle_minimal_generators(const std::vector<Nat>& generators,
                                           std::uint64_t max_bits) {
  return oracle_minimal_generators(build_membership(generators, max_bits));
}

}  // namespace fibsemi
