#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "freeknots/bracket.hpp"
#include "freeknots/cover.hpp"
#include "freeknots/delta.hpp"
#include "freeknots/moves.hpp"
#include "freeknots/parity.hpp"
#include "freeknots/search.hpp"

namespace py = pybind11;
using namespace freeknots;

namespace {

std::map<std::string, int> by_label(const Diagram& d, const std::map<int, int>& values) {
  std::map<std::string, int> out;
  for (const auto& [x, v] : values) out[d.label(x)] = v;
  return out;
}

SearchBudget budget_of(const py::tuple& t) {
  if (t.size() != 3) throw Error(ErrorCode::InvalidArgument, "budget", "budget is (max_crossings, max_depth, max_states)");
  return {t[0].cast<int>(), t[1].cast<int>(), t[2].cast<std::size_t>()};
}

py::dict delta_dict(const DeltaValue& v) {
  py::list summands;
  for (const auto& s : v.summands) {
    py::dict row;
    row["site"] = s.site;
    row["raw"] = serialize(s.raw);
    row["status"] = s.status;
    row["term"] = s.term;
    row["certificate"] = s.certificate;
    summands.append(row);
  }
  py::dict out;
  out["mode"] = std::string(to_string(v.mode));
  out["terms"] = v.terms.sorted();
  out["summands"] = summands;
  out["undecided"] = v.undecided();
  return out;
}

DeltaOptions delta_options(const std::string& mode, bool strict, const py::tuple& budget) {
  return {parse_filter_mode(mode), strict, budget_of(budget)};
}

}  // namespace

PYBIND11_MODULE(_freeknots, m) {
  static py::exception<Error> error(m, "FreeKnotsError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object instance = py::reinterpret_borrow<py::object>(error.ptr())(e.what());
      instance.attr("code") = std::string(to_string(e.code()));
      instance.attr("detail") = e.detail();
      PyErr_SetObject(error.ptr(), instance.ptr());
    }
  });

  py::class_<Diagram>(m, "Diagram")
      .def(py::init([](const std::string& text) { return parse_gauss(text); }), py::arg("text"))
      .def("__str__", [](const Diagram& d) { return serialize(d); })
      .def("__repr__", [](const Diagram& d) { return "Diagram('" + serialize(d) + "')"; })
      .def("__eq__", [](const Diagram& a, const Diagram& b) { return a == b; })
      .def_property_readonly("component_count", &Diagram::component_count)
      .def_property_readonly("crossing_count", &Diagram::crossing_count)
      .def_property_readonly("labels", &Diagram::labels)
      .def("is_pure", [](const Diagram& d, const std::string& label) { return d.is_pure(d.crossing(label)); })
      .def("canonical", [](const Diagram& d, int fixed_components, bool oriented) {
        return canonical_text(d, Symmetry{fixed_components, oriented});
      }, py::arg("fixed_components") = 0, py::arg("oriented") = false);

  m.def("moves", [](const Diagram& d, bool allow_increasing, int max_crossings) {
    std::vector<std::pair<std::string, Diagram>> out;
    for (const auto& mv : enumerate_moves(d, {allow_increasing, max_crossings, SIZE_MAX})) {
      out.emplace_back(describe(mv), apply_move(d, mv));
    }
    return out;
  }, py::arg("diagram"), py::arg("allow_increasing") = false, py::arg("max_crossings") = 64);

  m.def("gaussian_parities", [](const Diagram& d) { return by_label(d, gaussian_parities(d)); });
  m.def("p_L_parities", [](const Diagram& d, int k_component) { return by_label(d, p_L_parities(d, k_component)); },
        py::arg("diagram"), py::arg("k_component") = 0);

  m.def("bracket", [](const Diagram& d, const std::string& space) { return bracket(d, parse_space(space)).terms.sorted(); },
        py::arg("diagram"), py::arg("space") = "G");
  m.def("smoothing_bracket", [](const Diagram& d) { return smoothing_bracket(d).terms.sorted(); });
  m.def("normalize_G", [](const Diagram& d) { return normalize_G(d); });

  m.def("bounded_equiv", [](const Diagram& a, const Diagram& b, const py::tuple& budget) {
    const auto v = bounded_equiv(a, b, budget_of(budget));
    py::dict out;
    out["outcome"] = std::string(to_string(v.outcome));
    out["invariant"] = v.invariant;
    py::list path;
    for (const auto& mv : v.path) path.append(describe(mv));
    out["path"] = path;
    return out;
  }, py::arg("a"), py::arg("b"), py::arg("budget") = py::make_tuple(10, 3, 20000));
  m.def("certified_nonsplit", [](const Diagram& d, const py::tuple& budget) {
    const auto v = certified_nonsplit(d, budget_of(budget));
    return std::make_pair(std::string(to_string(v.status)), v.certificate);
  }, py::arg("diagram"), py::arg("budget") = py::make_tuple(10, 3, 20000));

  m.def("turaev_delta", [](const Diagram& d, const std::string& mode, bool strict, const py::tuple& budget) {
    return delta_dict(turaev_delta(d, delta_options(mode, strict, budget)));
  }, py::arg("diagram"), py::arg("mode") = "no-trivial-component", py::arg("strict") = true,
        py::arg("budget") = py::make_tuple(10, 3, 20000));
  m.def("delta_L", [](const Diagram& d, const std::string& mode, bool strict, const py::tuple& budget) {
    return delta_dict(delta_L(d, delta_options(mode, strict, budget)));
  }, py::arg("diagram"), py::arg("mode") = "nonsplit", py::arg("strict") = true,
        py::arg("budget") = py::make_tuple(10, 3, 20000));

  m.def("projection_Kprime", [](const Diagram& d) { return projection_Kprime(d); });
  m.def("kprime_from_k2", [](const Diagram& d) { return kprime_from_k2(covering_K2(d)); });
}
