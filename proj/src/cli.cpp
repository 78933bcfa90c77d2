#include "fibsemi/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "fibsemi/oracle.hpp"
#include "fibsemi/semigroup.hpp"
#include "fibsemi/sweep.hpp"

namespace fibsemi::cli {
namespace {

int parse_int(const std::string& text) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw std::invalid_argument("not an integer: '" + text + "'");
  }
  return v;
}

SequenceSpec parse_seq(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw std::invalid_argument("--seq expects a,b, got '" + text + "'");
  }
  SequenceSpec spec;
  spec.v1 = parse_nat(text.substr(0, comma));
  spec.v2 = parse_nat(text.substr(comma + 1));
  if (spec.v1 < 1 || spec.v2 < 1) throw std::invalid_argument("--seq values must be >= 1");
  return spec;
}

struct Selection {
  std::vector<std::string> seqs;
  bool fib = false;
  bool lucas = false;

  std::vector<SequenceSpec> specs() const {
    std::vector<SequenceSpec> out;
    for (const auto& s : seqs) out.push_back(parse_seq(s));
    if (fib) out.push_back(SequenceSpec::fibonacci());
    if (lucas) out.push_back(SequenceSpec::lucas());
    if (out.empty()) out.push_back(SequenceSpec::fibonacci());
    return out;
  }

  SequenceSpec single() const {
    auto all = specs();
    if (all.size() != 1) throw std::invalid_argument("give exactly one of --seq, --fib, --lucas");
    return all.front();
  }
};

void add_selection(CLI::App* cmd, Selection& sel) {
  cmd->add_option("--seq", sel.seqs, "seed values V_1,V_2");
  cmd->add_flag("--fib", sel.fib, "Fibonacci seeds 1,1");
  cmd->add_flag("--lucas", sel.lucas, "Lucas seeds 1,3");
}

std::string join(const std::vector<Nat>& xs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += to_string(xs[i]);
  }
  return out;
}

int cmd_summary(const SemigroupParams& p, const std::string& format, std::ostream& out) {
  const SemigroupSummary s = summary(p);
  if (format == "json") {
    out << "{\"a\": " << to_string(p.spec().v1) << ", \"b\": " << to_string(p.spec().v2)
        << ", \"n\": " << p.n() << ", \"d\": " << p.d() << ", \"kappa\": " << s.embedding_dim
        << ", \"generators\": [" << join(s.min_generators, ", ")
        << "], \"frobenius\": " << to_string(s.frobenius) << ", \"genus\": " << to_string(s.genus)
        << "}\n";
    return kOk;
  }
  out << "S = <" << join(s.min_generators, ", ") << ">\n";
  out << "V_1, V_2 = " << to_string(p.spec().v1) << ", " << to_string(p.spec().v2) << "\n";
  out << "n = " << p.n() << ", d = " << p.d() << "\n";
  out << "kappa = " << s.embedding_dim << "\n";
  out << "F = " << to_string(s.frobenius) << "\n";
  out << "g = " << to_string(s.genus) << "\n";
  return kOk;
}

int cmd_apery(const SemigroupParams& p, const std::string& format, std::ostream& out) {
  const AperyTable t = apery_set(p);
  if (format == "json") {
    out << "{\"modulus\": " << to_string(t.modulus) << ", \"entries\": ["
        << join(t.entries, ", ") << "]}\n";
    return kOk;
  }
  for (std::size_t r = 0; r < t.entries.size(); ++r) {
    out << r << ' ' << to_string(t.entries[r]) << '\n';
  }
  return kOk;
}

int cmd_verify(const SemigroupParams& p, std::uint64_t max_bits, std::ostream& out) {
  const VerifyReport report = verify_against_oracle(p, max_bits);
  for (const auto& c : report.checks) {
    out << c.name << ": " << (c.ok ? "ok" : "MISMATCH") << " (" << c.detail << ")\n";
  }
  out << report.passed() << '/' << report.checks.size() << " checks passed\n";
  return report.all_ok() ? kOk : kDisagreement;
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_int(item));
      continue;
    }
    const int lo = parse_int(item.substr(0, dots));
    const int hi = parse_int(item.substr(dots + 2));
    if (hi < lo) throw std::invalid_argument("empty range '" + item + "'");
    for (int v = lo; v <= hi; ++v) out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty list");
  std::set<int> uniq(out.begin(), out.end());
  return {uniq.begin(), uniq.end()};
}

std::uint64_t oracle_max_bits_from_env() {
  const char* raw = std::getenv("FIBSEMI_ORACLE_MAX_BITS");
  if (raw == nullptr || *raw == '\0') return kDefaultOracleMaxBits;
  const Nat v = parse_nat(raw);
  if (v < 1 || !fits_u64(v)) {
    throw std::invalid_argument("FIBSEMI_ORACLE_MAX_BITS out of range: " + std::string(raw));
  }
  return to_u64(v);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical semigroups generated by V_n, V_{n+d}, V_{n+2d}, ..."};
  app.name("fibsemi");
  app.require_subcommand(1);

  Selection sel;
  int n = 0;
  int d = 0;
  std::string format = "text";
  bool verify = false;

  auto* summary_cmd = app.add_subcommand("summary", "embedding dimension, generators, F and g");
  auto* apery_cmd = app.add_subcommand("apery", "Apery set with respect to V_n");
  auto* verify_cmd = app.add_subcommand("verify", "compare with the brute-force oracle");
  for (auto* cmd : {summary_cmd, apery_cmd, verify_cmd}) {
    add_selection(cmd, sel);
    cmd->add_option("--n", n, "index of the first generator")->required();
    cmd->add_option("--d", d, "index step")->required();
  }
  for (auto* cmd : {summary_cmd, apery_cmd}) {
    cmd->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_flag("--verify", verify, "also run the oracle");
  }

  Selection sweep_sel;
  std::string n_list;
  std::string d_list;
  std::string sweep_format = "csv";
  std::string out_path = "-";
  bool sweep_verify = false;
  unsigned jobs = 1;
  auto* sweep_cmd = app.add_subcommand("sweep", "table over sequences, n and d");
  add_selection(sweep_cmd, sweep_sel);
  sweep_cmd->add_option("--n", n_list, "indices, e.g. 3..8 or 3,5,7")->required();
  sweep_cmd->add_option("--d", d_list, "steps, e.g. 2,4,6")->required();
  sweep_cmd->add_option("--format", sweep_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  sweep_cmd->add_option("--out", out_path, "output file, - for stdout");
  sweep_cmd->add_flag("--verify", sweep_verify, "check each row with the oracle");
  sweep_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const std::uint64_t max_bits = oracle_max_bits_from_env();

    if (sweep_cmd->parsed()) {
      SweepOptions opts;
      opts.specs = sweep_sel.specs();
      opts.ns = parse_int_list(n_list);
      opts.ds = parse_int_list(d_list);
      opts.verify = sweep_verify;
      opts.jobs = jobs;
      opts.max_bits = max_bits;
      const auto rows = run_sweep(opts);
      const std::string text = sweep_format == "json" ? render_json(rows) : render_csv(rows);
      if (out_path == "-") {
        out << text;
        return kOk;
      }
      std::ofstream file(out_path, std::ios::binary);
      file << text;
      file.close();
      if (!file) {
        err << "fibsemi: cannot write " << out_path << "\n";
        return kIoFailure;
      }
      return kOk;
    }

    const SemigroupParams params = validate(sel.single(), n, d);
    int code = kOk;
    if (summary_cmd->parsed()) code = cmd_summary(params, format, out);
    if (apery_cmd->parsed()) code = cmd_apery(params, format, out);
    if (verify_cmd->parsed() || verify) {
      std::ostringstream report;
      code = cmd_verify(params, max_bits, verify_cmd->parsed() ? out : report);
      if (!verify_cmd->parsed() && code != kOk) err << report.str();
    }
    return code;
  } catch (const OracleLimitError& e) {
    err << "fibsemi: " << e.what() << "\n";
    return kOracleInfeasible;
  } catch (const std::length_error& e) {
    err << "fibsemi: " << e.what() << "\n";
    return kOracleInfeasible;
  } catch (const std::invalid_argument& e) {
    err << "fibsemi: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace fibsemi::cli
