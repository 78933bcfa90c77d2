#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fibsemi/fib_core.hpp"
#include "fibsemi/oracle.hpp"
#include "fibsemi/params.hpp"

namespace fibsemi {

struct OracleCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<OracleCheck> checks;

  std::size_t passed() const;
  bool all_ok() const { return passed() == checks.size(); }
};

/// Compares frobenius, genus, Apery set and minimal generators with the
/// oracle run on V_n, ..., V_{n+kappa d}. Throws OracleLimitError when the
/// membership table is too large.
VerifyReport verify_against_oracle(const SemigroupParams& params,
                                   std::uint64_t max_bits = kDefaultOracleMaxBits);

struct SweepRow {
  Nat a;
  Nat b;
  int n = 0;
  int d = 0;
  std::optional<int> kappa;
  std::optional<Int> frobenius;
  std::optional<Nat> genus;
  bool verified = false;
  std::optional<std::string> error;
};

struct SweepOptions {
  std::vector<SequenceSpec> specs;
  std::vector<int> ns;
  std::vector<int> ds;
  bool verify = false;
  unsigned jobs = 1;
  std::uint64_t max_bits = kDefaultOracleMaxBits;
};

SweepRow sweep_row(const SequenceSpec& spec, int n, int d, bool verify, std::uint64_t max_bits);

/// One row per (spec, n, d), sorted by (a, b, n, d) whatever the job count.
std::vector<SweepRow> run_sweep(const SweepOptions& options);

/// Header a,b,n,d,kappa,frobenius,genus,verified,error; the error field is
/// always quoted and numeric fields are empty on error rows.
std::string render_csv(const std::vector<SweepRow>& rows);
std::string render_json(const std::vector<SweepRow>& rows);

}  // namespace fibsemi
