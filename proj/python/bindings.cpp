#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mpchoice/bounds.hpp"
#include "mpchoice/certify.hpp"
#include "mpchoice/charroots.hpp"
#include "mpchoice/core.hpp"
#include "mpchoice/error.hpp"
#include "mpchoice/exact.hpp"
#include "mpchoice/json_io.hpp"

namespace py = pybind11;
using namespace mpchoice;

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace {

std::vector<std::vector<std::vector<int>>> lists_of(const ListAssignment& a) {
  std::vector<std::vector<std::vector<int>>> out;
  for (const auto& part : a.parts) {
    auto& p = out.emplace_back();
    for (auto list : part) p.push_back(list.to_vector());
  }
  return out;
}

ListAssignment assignment_of(int t, const std::vector<std::vector<std::vector<int>>>& parts) {
  nlohmann::json j{{"t", t}, {"parts", parts}};
  return assignment_from_json(j);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Choice number bounds for complete multipartite graphs";

  py::register_exception<Error>(m, "MpchoiceError", PyExc_ValueError);

  py::class_<GraphSpec>(m, "GraphSpec")
      .def_property_readonly("sizes_log2", &GraphSpec::sizes_log2)
      .def_property_readonly("sizes_exact", &GraphSpec::sizes_exact)
      .def_property_readonly("s", &GraphSpec::s)
      .def("__eq__", [](const GraphSpec& a, const GraphSpec& b) { return a == b; })
      .def("__repr__", [](const GraphSpec& g) { return nlohmann::json(g).dump(); });

  m.def("make_spec", [](const std::vector<std::uint64_t>& sizes) { return make_spec(sizes); },
        py::arg("sizes"));
  m.def("make_spec_log2", [](const std::vector<double>& l2) { return make_spec_log2(l2); },
        py::arg("sizes_log2"));
  m.def("exponents", [](const GraphSpec& s) { return exponents(s).k; });

  py::class_<AsymptoticDiagnostics>(m, "AsymptoticDiagnostics")
      .def_readonly("alpha", &AsymptoticDiagnostics::alpha)
      .def_readonly("alpha_threshold", &AsymptoticDiagnostics::alpha_threshold)
      .def_readonly("regime_ok", &AsymptoticDiagnostics::regime_ok)
      .def_readonly("loglog_defined", &AsymptoticDiagnostics::loglog_defined);
  m.def("diagnostics", &diagnostics);

  py::class_<RootResult>(m, "RootResult")
      .def_readonly("x0", &RootResult::x0)
      .def_readonly("residual", &RootResult::residual)
      .def_readonly("bracket_low", &RootResult::bracket_low)
      .def_readonly("bracket_high", &RootResult::bracket_high)
      .def_readonly("iterations", &RootResult::iterations);

  m.def("char_value",
        [](double x, const std::vector<double>& k, double eps) {
          return char_value(x, RootProblem{k, eps});
        },
        py::arg("x"), py::arg("k"), py::arg("epsilon") = 0.0);
  m.def("solve_x0",
        [](const std::vector<double>& k, double eps, double tol) {
          return solve_x0(RootProblem{k, eps}, tol);
        },
        py::arg("k"), py::arg("epsilon") = 0.0, py::arg("tol") = kDefaultRootTol);

  py::class_<UpperCertificate>(m, "UpperCertificate")
      .def_readonly("r", &UpperCertificate::r)
      .def_readonly("formula_r", &UpperCertificate::formula_r)
      .def_readonly("x0", &UpperCertificate::x0)
      .def_readonly("p", &UpperCertificate::p)
      .def_readonly("union_bound_value", &UpperCertificate::union_bound_value)
      .def_readonly("union_bound_log2", &UpperCertificate::union_bound_log2)
      .def_readonly("valid", &UpperCertificate::valid);

  py::class_<LowerPrescription>(m, "LowerPrescription")
      .def_readonly("r0", &LowerPrescription::r0)
      .def_readonly("u", &LowerPrescription::u)
      .def_readonly("r", &LowerPrescription::r)
      .def_readonly("t", &LowerPrescription::t)
      .def_readonly("t_real", &LowerPrescription::t_real)
      .def_readonly("l", &LowerPrescription::l)
      .def_readonly("l_real", &LowerPrescription::l_real);

  py::class_<LowerCertificate>(m, "LowerCertificate")
      .def_readonly("prescription", &LowerCertificate::prescription)
      .def_readonly("lhs_log", &LowerCertificate::lhs_log)
      .def_readonly("valid", &LowerCertificate::valid)
      .def_property_readonly("r", [](const LowerCertificate& c) { return c.prescription.r; });

  py::class_<BoundReport>(m, "BoundReport")
      .def_readonly("estimate", &BoundReport::estimate)
      .def_readonly("upper", &BoundReport::upper)
      .def_readonly("lower", &BoundReport::lower)
      .def_readonly("ratio", &BoundReport::ratio)
      .def_readonly("diagnostics", &BoundReport::diagnostics);

  m.def("estimate_choice", &estimate_choice);
  m.def("upper_bound", &upper_bound, py::arg("spec"), py::arg("epsilon") = kDefaultEpsilon);
  m.def("lower_prescription", &lower_prescription);
  m.def("lower_bound_search", &lower_bound_search, py::arg("spec"),
        py::arg("r_max_hint") = py::none());
  m.def("bound_report", &bound_report, py::arg("spec"), py::arg("epsilon") = kDefaultEpsilon);

  py::class_<StarTerms>(m, "StarTerms")
      .def_readonly("log_ratio", &StarTerms::log_ratio)
      .def_readonly("term_log", &StarTerms::term_log)
      .def_readonly("lhs_log", &StarTerms::lhs_log);

  py::class_<McReport>(m, "McReport")
      .def_readonly("trials", &McReport::trials)
      .def_readonly("mean_bad_events", &McReport::mean_bad_events)
      .def_readonly("std_error", &McReport::std_error)
      .def_readonly("theoretical_expectation", &McReport::theoretical_expectation)
      .def_readonly("seed", &McReport::seed);

  m.def("falling_factorial_log_ratio", &falling_factorial_log_ratio, py::arg("a"), py::arg("t"),
        py::arg("r"));
  m.def("star_lhs_log",
        [](const GraphSpec& s, std::int64_t r, std::int64_t t, const std::vector<std::int64_t>& l) {
          return star_lhs_log(s, r, t, l);
        },
        py::arg("spec"), py::arg("r"), py::arg("t"), py::arg("l"));
  m.def("mc_split_bad_events",
        [](const GraphSpec& s, int r, const std::vector<double>& p, int universe,
           std::int64_t trials, std::uint64_t seed, int threads) {
          py::gil_scoped_release release;
          return mc_split_bad_events(s, r, p, universe, trials, seed, threads);
        },
        py::arg("spec"), py::arg("r"), py::arg("p"), py::arg("universe"), py::arg("trials"),
        py::arg("seed"), py::arg("threads") = 1);
  m.def("mc_cover_failure",
        [](const GraphSpec& s, int r, int t, const std::vector<std::int64_t>& l,
           std::int64_t trials, std::uint64_t seed, int threads) {
          py::gil_scoped_release release;
          return mc_cover_failure(s, r, t, l, trials, seed, threads);
        },
        py::arg("spec"), py::arg("r"), py::arg("t"), py::arg("l"), py::arg("trials"),
        py::arg("seed"), py::arg("threads") = 1);

  // List assignments cross the boundary as (t, [[[colors]]]).
  m.def("decide_list_colorable",
        [](int t, const std::vector<std::vector<std::vector<int>>>& parts) {
          const ColoringResult res = decide_list_colorable(assignment_of(t, parts));
          py::dict d;
          d["colorable"] = res.colorable;
          d["color_part"] = res.colorable ? py::cast(res.color_part) : py::none();
          d["vertex_colors"] = res.colorable ? py::cast(res.vertex_colors) : py::none();
          return d;
        },
        py::arg("t"), py::arg("parts"));
  m.def("min_cover",
        [](int vertex_count, const std::vector<std::vector<int>>& edges) {
          Hypergraph h{vertex_count, {}};
          for (const auto& e : edges) {
            ColorSet cs;
            for (int c : e) {
              if (c < 0 || c >= kMaxUniverse) throw Error(ErrorCode::BadArgs, "vertex out of range");
              cs.insert(c);
            }
            h.edges.push_back(cs);
          }
          const CoverResult res = min_cover(h);
          return py::make_tuple(res.size, res.witness.to_vector());
        },
        py::arg("vertex_count"), py::arg("edges"));
  m.def("verify_lower_witness",
        [](int t, const std::vector<std::vector<std::vector<int>>>& parts,
           const std::vector<std::int64_t>& l) {
          return verify_lower_witness(assignment_of(t, parts), l);
        },
        py::arg("t"), py::arg("parts"), py::arg("l"));
  m.def("sample_adversarial",
        [](const GraphSpec& s, int r, int t, std::uint64_t seed) {
          return lists_of(sample_adversarial(s, r, t, seed));
        },
        py::arg("spec"), py::arg("r"), py::arg("t"), py::arg("seed"));
  m.def("is_r_choosable",
        [](const GraphSpec& s, int r, std::optional<int> cap) { return is_r_choosable(s, r, cap); },
        py::arg("spec"), py::arg("r"), py::arg("universe_cap") = py::none());
  m.def("is_r_choosable",
        [](const std::vector<std::uint64_t>& sizes, int r, std::optional<int> cap) {
          return is_r_choosable(sizes, r, cap);
        },
        py::arg("sizes"), py::arg("r"), py::arg("universe_cap") = py::none());
  m.def("choice_number_exact", [](const GraphSpec& s) { return choice_number_exact(s); });
  m.def("choice_number_exact",
        [](const std::vector<std::uint64_t>& sizes) { return choice_number_exact(sizes); },
        py::arg("sizes"));

#ifdef VERSION_INFO
  m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
