#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "triplication/crt.hpp"
#include "triplication/msp.hpp"
#include "triplication/recovery.hpp"
#include "triplication/templates.hpp"

namespace py = pybind11;
using namespace triplication;

namespace {

// Pairs cross the boundary as lists of (x, y) tuples.
using PairList = std::vector<std::pair<int, int>>;

std::vector<Pair> to_pairs(const PairList& in) {
  std::vector<Pair> out;
  out.reserve(in.size());
  for (auto [x, y] : in) out.push_back({x, y});
  return out;
}

PairList from_pairs(const std::vector<Pair>& in) {
  PairList out;
  out.reserve(in.size());
  for (const Pair& p : in) out.emplace_back(p.x, p.y);
  return out;
}

Scenario scenario_of(const std::string& kind, int m) { return Scenario(parse_scenario_kind(kind), m); }

py::dict outcome_dict(const SolveOutcome& out) {
  py::dict d;
  d["status"] = to_string(out.status);
  d["solution"] = out.solution ? py::cast(from_pairs(out.solution->values)) : py::none();
  d["nodes"] = out.stats.nodes;
  d["backtracks"] = out.stats.backtracks;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Strong starters of order 3m from triplication tables";

  py::register_exception<Error>(m, "TriplicationError", PyExc_ValueError);

  m.def(
      "classify", [](int n, const PairList& pairs) { return std::string(to_string(classify(Pairing(n, to_pairs(pairs))).kind)); },
      py::arg("n"), py::arg("pairs"), "NotAny, Pseudostarter, Starter or StrongStarter");
  m.def(
      "enumerate_strong_starters",
      [](int n) {
        std::vector<PairList> out;
        for (const Pairing& p : enumerate_strong_starters(n)) out.push_back(from_pairs(p.pairs()));
        return out;
      },
      py::arg("n"));
  m.def(
      "epicycloidal", [](int n, int mu) { return from_pairs(epicycloidal(n, mu).pairs()); }, py::arg("n"),
      py::arg("mu"));
  m.def("crt", [](long long u, long long mod_u, long long U, long long mod_U) { return crt_general({u, mod_u, U, mod_U}); },
        py::arg("u"), py::arg("m"), py::arg("U"), py::arg("h"));

  m.def(
      "one_starter_keys", [](int n, const PairList& t) { return admissible_keys(one_starter_base(Pairing(n, to_pairs(t)))); },
      py::arg("m"), py::arg("t"));
  m.def(
      "three_starter_keys",
      [](int n, const PairList& t0, const PairList& t1, const PairList& t2) {
        return admissible_keys(make_base(Pairing(n, to_pairs(t0)), Pairing(n, to_pairs(t1)), Pairing(n, to_pairs(t2))));
      },
      py::arg("m"), py::arg("t0"), py::arg("t1"), py::arg("t2"));
  m.def(
      "epicycloidal_keys",
      [](int n, const PairList& t0, int mu) { return admissible_keys(epicycloidal_base(Pairing(n, to_pairs(t0)), mu)); },
      py::arg("m"), py::arg("t0"), py::arg("mu"));

  py::class_<TriplicationTable>(m, "Table")
      .def(py::init([](int n, const PairList& pairs) { return TriplicationTable::validate(n, to_pairs(pairs)); }),
           py::arg("m"), py::arg("pairs"))
      .def_property_readonly("order", &TriplicationTable::order)
      .def_property_readonly("key", &TriplicationTable::key)
      .def_property_readonly("pairs", [](const TriplicationTable& t) { return from_pairs(t.pairs()); })
      .def_property_readonly("signs", &TriplicationTable::signs)
      .def_property_readonly("weak_sets",
                             [](const TriplicationTable& t) {
                               py::dict d;
                               for (const WeakSet& w : t.weak().sets) d[py::int_(w.sum)] = w.indices;
                               return d;
                             })
      .def_property_readonly("strong_pairs", [](const TriplicationTable& t) { return t.weak().strong; })
      .def("__len__", &TriplicationTable::size)
      .def("__repr__", [](const TriplicationTable& t) { return "Table(" + format_pairs(t.pairs()) + ")"; });

  m.def(
      "one_starter_table", [](int n, const PairList& t, int key) { return one_starter_table(Pairing(n, to_pairs(t)), key); },
      py::arg("m"), py::arg("t"), py::arg("key"));
  m.def(
      "epicycloidal_table",
      [](int n, const PairList& t0, int mu, int key) {
        return template_table(epicycloidal_base(Pairing(n, to_pairs(t0)), mu), key);
      },
      py::arg("m"), py::arg("t0"), py::arg("mu"), py::arg("key"));
  m.def(
      "random_table",
      [](int n, std::uint64_t seed, std::uint64_t budget) -> std::optional<TriplicationTable> {
        return random_tt(n, {seed, budget, 2'000});
      },
      py::arg("m"), py::arg("seed") = 0, py::arg("budget") = 1'000'000);

  m.def(
      "solve",
      [](const TriplicationTable& t, const std::string& scenario, std::uint64_t budget, std::optional<std::uint64_t> seed) {
        SolveOutcome out;
        {
          py::gil_scoped_release release;
          out = solve_first(compile(t, scenario_of(scenario, t.order())), {budget, seed});
        }
        return outcome_dict(out);
      },
      py::arg("table"), py::arg("scenario") = "carry", py::arg("budget") = 0, py::arg("seed") = py::none());
  m.def(
      "solve_all",
      [](const TriplicationTable& t, const std::string& scenario, std::size_t limit) {
        Enumeration all;
        {
          py::gil_scoped_release release;
          all = solve_all(compile(t, scenario_of(scenario, t.order())), {}, limit);
        }
        std::vector<PairList> out;
        for (const auto& s : all.solutions) out.push_back(from_pairs(s.values));
        return py::make_tuple(out, all.complete);
      },
      py::arg("table"), py::arg("scenario") = "carry", py::arg("limit") = 1'000'000);
  m.def(
      "check_congruous",
      [](const TriplicationTable& t, const PairList& values, const std::string& scenario) {
        Scenario sc = scenario_of(scenario, t.order());
        CongruenceReport r = check_congruous(t, {sc.kind(), sc.radix(), to_pairs(values)}, sc);
        return py::make_tuple(r.ok, r.violation);
      },
      py::arg("table"), py::arg("values"), py::arg("scenario") = "carry");
  m.def(
      "recover",
      [](const TriplicationTable& t, const PairList& values, const std::string& scenario) {
        Scenario sc = scenario_of(scenario, t.order());
        return from_pairs(recover_starter(t, {sc.kind(), sc.radix(), to_pairs(values)}, sc).pairs());
      },
      py::arg("table"), py::arg("values"), py::arg("scenario") = "carry");
}
