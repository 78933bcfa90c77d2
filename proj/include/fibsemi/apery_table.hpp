#pragma once

#include <vector>

#include "fibsemi/nat.hpp"

namespace fibsemi {

/// Minimal semigroup element in each residue class modulo `modulus`;
/// entries[r] is the element congruent to r.
struct AperyTable {
  Nat modulus;
  std::vector<Nat> entries;

  bool operator==(const AperyTable& o) const {
    return modulus == o.modulus && entries == o.entries;
  }

  Nat max_element() const {
    Nat m{0};
    for (const Nat& e : entries) {
      if (e > m) m = e;
    }
    return m;
  }
};

}  // namespace fibsemi
