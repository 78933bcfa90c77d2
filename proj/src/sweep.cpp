#include "fibsemi/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <nlohmann/json.hpp>
#include <sstream>
#include <thread>
#include <tuple>

#include "fibsemi/semigroup.hpp"

namespace fibsemi {
namespace {

std::string join(const std::vector<Nat>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ' ';
    out += to_string(xs[i]);
  }
  return out;
}

std::string describe(const AperyTable& t) {
  std::vector<Nat> v(t.entries.begin(), t.entries.end());
  return join(v);
}

OracleCheck compare(std::string name, const std::string& ours, const std::string& oracle) {
  OracleCheck c;
  c.name = std::move(name);
  c.ok = ours == oracle;
  c.detail = c.ok ? ours : ours + " vs oracle " + oracle;
  return c;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

}  // namespace

std::size_t VerifyReport::passed() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const OracleCheck& c) { return c.ok; }));
}

VerifyReport verify_against_oracle(const SemigroupParams& params, std::uint64_t max_bits) {
  std::vector<Nat> extended;
  const int top = std::max(params.kappa(), 2);
  for (int i = 0; i <= top; ++i) extended.push_back(params.term(i));
  const MembershipTable table = build_membership(extended, max_bits);

  VerifyReport report;
  report.checks.push_back(
      compare("frobenius", to_string(frobenius(params)), to_string(oracle_frobenius(table))));
  report.checks.push_back(
      compare("genus", to_string(genus(params)), to_string(oracle_genus(table))));
  report.checks.push_back(compare("apery", describe(apery_set(params)),
                                  describe(oracle_apery(table, params.vn()))));
  report.checks.push_back(compare("minimal generators", join(minimal_generators(params)),
                                  join(oracle_minimal_generators(table))));
  return report;
}

SweepRow sweep_row(const SequenceSpec& spec, int n, int d, bool verify, std::uint64_t max_bits) {
  SweepRow row;
  row.a = spec.v1;
  row.b = spec.v2;
  row.n = n;
  row.d = d;
  try {
    const SemigroupParams params = validate(spec, n, d);
    const SemigroupSummary s = summary(params);
    row.kappa = s.embedding_dim;
    row.frobenius = s.frobenius;
    row.genus = s.genus;
  } catch (const std::exception& e) {
    row.error = e.what();
    return row;
  }
  if (verify) {
    try {
      const VerifyReport report = verify_against_oracle(validate(spec, n, d), max_bits);
      row.verified = report.all_ok();
      for (const auto& c : report.checks) {
        if (!c.ok) {
          row.error = "oracle disagrees on " + c.name + ": " + c.detail;
          break;
        }
      }
    } catch (const std::exception& e) {
      row.error = e.what();
    }
  }
  return row;
}

std::vector<SweepRow> run_sweep(const SweepOptions& options) {
  std::vector<std::tuple<SequenceSpec, int, int>> cells;
  for (const auto& spec : options.specs) {
    for (int n : options.ns) {
      for (int d : options.ds) cells.emplace_back(spec, n, d);
    }
  }
  std::vector<SweepRow> rows(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      const auto& [spec, n, d] = cells[i];
      rows[i] = sweep_row(spec, n, d, options.verify, options.max_bits);
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, cells.size()));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::stable_sort(rows.begin(), rows.end(), [](const SweepRow& x, const SweepRow& y) {
    if (x.a != y.a) return x.a < y.a;
    if (x.b != y.b) return x.b < y.b;
    return std::tie(x.n, x.d) < std::tie(y.n, y.d);
  });
  return rows;
}

std::string render_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "a,b,n,d,kappa,frobenius,genus,verified,error\n";
  for (const auto& r : rows) {
    out << to_string(r.a) << ',' << to_string(r.b) << ',' << r.n << ',' << r.d << ',';
    if (r.kappa) out << *r.kappa;
    out << ',';
    if (r.frobenius) out << to_string(*r.frobenius);
    out << ',';
    if (r.genus) out << to_string(*r.genus);
    out << ',' << (r.verified ? "true" : "false") << ',';
    out << csv_quote(r.error.value_or("")) << '\n';
  }
  return out.str();
}

std::string render_json(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    out << (i ? ",\n " : "\n ");
    out << "{\"a\": " << to_string(r.a) << ", \"b\": " << to_string(r.b) << ", \"n\": " << r.n
        << ", \"d\": " << r.d << ", \"kappa\": ";
    out << (r.kappa ? std::to_string(*r.kappa) : "null");
    out << ", \"frobenius\": " << (r.frobenius ? to_string(*r.frobenius) : "null");
    out << ", \"genus\": " << (r.genus ? to_string(*r.genus) : "null");
    out << ", \"verified\": " << (r.verified ? "true" : "false");
    out << ", \"error\": " << (r.error ? nlohmann::json(*r.error).dump() : "null") << "}";
  }
  out << (rows.empty() ? "]\n" : "\n]\n");
  return out.str();
}

}  // namespace fibsemi
