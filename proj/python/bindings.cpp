#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fibsemi/oracle.hpp"
#include "fibsemi/semigroup.hpp"
#include "fibsemi/sweep.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// Python int <-> mpz_class through the decimal string form.
template <>
struct type_caster<mpz_class> {
  PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

  bool load(handle src, bool) {
    if (!src || !PyLong_Check(src.ptr())) return false;
    const std::string text = py::str(src);
    return value.set_str(text, 10) == 0;
  }

  static handle cast(const mpz_class& v, return_value_policy, handle) {
    return PyLong_FromString(v.get_str().c_str(), nullptr, 10);
  }
};

}  // namespace pybind11::detail

namespace {

using namespace fibsemi;

SemigroupParams make(const Nat& a, const Nat& b, int n, int d) {
  SequenceSpec spec;
  spec.v1 = a;
  spec.v2 = b;
  return validate(spec, n, d);
}

Family family_of(const std::string& kind) {
  if (kind == "fib") return Family::Fibonacci;
  if (kind == "lucas") return Family::Lucas;
  throw std::invalid_argument("kind must be 'fib' or 'lucas'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Numerical semigroups generated by arithmetic-index Fibonacci-like terms";

  py::register_exception<OracleLimitError>(m, "OracleLimitError", PyExc_RuntimeError);

  m.def("fib", &fib, py::arg("n"));
  m.def("lucas", &lucas, py::arg("n"));
  m.def(
      "genfib",
      [](const Nat& a, const Nat& b, int n) {
        SequenceSpec spec;
        spec.v1 = a;
        spec.v2 = b;
        return genfib(spec, n);
      },
      py::arg("a"), py::arg("b"), py::arg("n"));

  m.def(
      "greedy_repr",
      [](const std::vector<Nat>& base, const Nat& target) {
        return greedy_repr(base, target).lambdas;
      },
      py::arg("base"), py::arg("target"));
  m.def(
      "eval_s",
      [](const Nat& a, const Nat& b, int n, int d, const Nat& x) {
        return eval_s(make(a, b, n, d), x);
      },
      py::arg("a"), py::arg("b"), py::arg("n"), py::arg("d"), py::arg("x"));

  m.def(
      "embedding_dimension",
      [](const Nat& a, const Nat& b, int n, int d) { return embedding_dimension(make(a, b, n, d)); },
      py::arg("a"), py::arg("b"), py::arg("n"), py::arg("d"));
  m.def(
      "minimal_generators",
      [](const Nat& a, const Nat& b, int n, int d) { return minimal_generators(make(a, b, n, d)); },
      py::arg("a"), py::arg("b"), py::arg("n"), py::arg("d"));
  m.def(
      "apery_set",
      [](const Nat& a, const Nat& b, int n, int d) {
        return apery_set(make(a, b, n, d)).entries;
      },
      py::arg("a"), py::arg("b"), py::arg("n"), py::arg("d"));
  m.def(
      "frobenius",
      [](const Nat& a, const Nat& b, int n, int d) { return frobenius(make(a, b, n, d)); },
      py::arg("a"), py::arg("b"), py::arg("n"), py::arg("d"));
  m.def(
      "frobenius_special",
      [](const std::string& kind, int n, int d) { return frobenius_special(family_of(kind), n, d); },
      py::arg("kind"), py::arg("n"), py::arg("d"));
  m.def(
      "genus", [](const Nat& a, const Nat& b, int n, int d) { return genus(make(a, b, n, d)); },
      py::arg("a"), py::arg("b"), py::arg("n"), py::arg("d"));
  m.def(
      "summary",
      [](const Nat& a, const Nat& b, int n, int d) {
        const SemigroupSummary s = summary(make(a, b, n, d));
        py::dict out;
        out["kappa"] = s.embedding_dim;
        out["generators"] = s.min_generators;
        out["frobenius"] = s.frobenius;
        out["genus"] = s.genus;
        return out;
      },
      py::arg("a"), py::arg("b"), py::arg("n"), py::arg("d"));
  m.def(
      "two_gen_formulas",
      [](const Nat& a, const Nat& b) {
        const TwoGenerator t = two_gen_formulas(a, b);
        return py::make_tuple(t.frobenius, t.genus);
      },
      py::arg("a"), py::arg("b"));

  m.def(
      "oracle_frobenius",
      [](const std::vector<Nat>& gens) { return oracle_frobenius(gens); }, py::arg("generators"));
  m.def(
      "oracle_genus", [](const std::vector<Nat>& gens) { return oracle_genus(gens); },
      py::arg("generators"));
  m.def(
      "oracle_minimal_generators",
      [](const std::vector<Nat>& gens) { return oracle_minimal_generators(gens); },
      py::arg("generators"));
  m.def(
      "verify",
      [](const Nat& a, const Nat& b, int n, int d) {
        const VerifyReport r = verify_against_oracle(make(a, b, n, d));
        py::dict out;
        for (const auto& c : r.checks) out[py::str(c.name)] = c.ok;
        return out;
      },
      py::arg("a"), py::arg("b"), py::arg("n"), py::arg("d"));
}
