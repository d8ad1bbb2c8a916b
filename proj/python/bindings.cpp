#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "syzlab/harness.hpp"

namespace py = pybind11;
using namespace syzlab;

namespace {

std::vector<Polynomial> parse_all(const RingPtr& ring, const std::vector<std::string>& texts) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(parse_polynomial(ring, t));
  return out;
}

Submodule ideal_of(const PresentedModule& m, const std::vector<std::string>& gens) {
  return make_ideal(m.ring()->base(), parse_all(m.ring()->base(), gens));
}

std::vector<std::string> texts(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

py::dict fit_dict(const QuasiPolynomial& q) {
  py::dict d;
  d["even"] = q.even.to_string();
  d["odd"] = q.odd.to_string();
  d["onset"] = q.onset;
  d["degree"] = q.degree();
  return d;
}

GrowthParams growth(int dimension, int j_max, int holdout, std::uint64_t seed) {
  GrowthParams g;
  g.dimension = dimension;
  g.j_max = j_max;
  g.holdout = holdout;
  g.seed = seed;
  return g;
}

}  // namespace

PYBIND11_MODULE(_syzlab, m) {
  m.doc() = "Graded commutative algebra over complete intersections and syzygy experiments";

  static py::exception<Error> base_error(m, "SyzlabError");
  py::register_exception<SpecError>(m, "SpecError", base_error.ptr());
  py::register_exception<ParseError>(m, "ParseError", base_error.ptr());
  py::register_exception<FitInconclusive>(m, "FitInconclusive", base_error.ptr());

  py::class_<QuotientRing, std::shared_ptr<QuotientRing>>(m, "Ring")
      .def(py::init([](std::uint32_t p, std::vector<std::string> vars, std::vector<std::string> relations) {
             RingPtr base = make_ring(p, std::move(vars));
             return std::const_pointer_cast<QuotientRing>(make_quotient(base, parse_all(base, relations)));
           }),
           py::arg("p"), py::arg("variables"), py::arg("relations") = std::vector<std::string>{})
      .def_property_readonly("variables", [](const QuotientRing& r) { return r.base()->variables(); })
      .def_property_readonly("modulus", [](const QuotientRing& r) { return r.base()->modulus(); })
      .def_property_readonly("codimension", &QuotientRing::codimension)
      .def_property_readonly("relations", [](const QuotientRing& r) { return texts(r.relations()); })
      .def("reduce", [](const QuotientRing& r, const std::string& f) {
        return r.reduce(parse_polynomial(r.base(), f)).to_string();
      });

  py::class_<PresentedModule>(m, "Module")
      .def_static("residue_field", [](std::shared_ptr<QuotientRing> r) { return PresentedModule::residue_field(r); })
      .def_static("free", [](std::shared_ptr<QuotientRing> r, std::vector<int> shifts) {
        return PresentedModule::free(r, std::move(shifts));
      }, py::arg("ring"), py::arg("shifts") = std::vector<int>{0})
      .def_static("cyclic", [](std::shared_ptr<QuotientRing> r, const std::vector<std::string>& gens) {
        return PresentedModule::cyclic(r, parse_all(r->base(), gens));
      })
      .def_static("presented",
                  [](std::shared_ptr<QuotientRing> r, std::vector<int> shifts,
                     const std::vector<std::vector<std::string>>& columns) {
                    ModulePtr F = make_free_module(r->base(), shifts);
                    std::vector<FreeElement> cols;
                    for (const auto& c : columns) cols.push_back(FreeElement::from_components(F, parse_all(r->base(), c)));
                    return minimal_presentation(PresentedModule(r, std::move(shifts), std::move(cols)));
                  },
                  py::arg("ring"), py::arg("shifts"), py::arg("columns"))
      .def_property_readonly("rank", &PresentedModule::rank)
      .def_property_readonly("shifts", &PresentedModule::shifts)
      .def("syzygy", [](const PresentedModule& mod, int j) { return syzygy(mod, j); })
      .def("modulo", [](const PresentedModule& mod, const std::vector<std::string>& gens) {
        return mod.modulo_ideal(ideal_of(mod, gens));
      })
      .def("length", [](const PresentedModule& mod) { return length(mod); });

  py::class_<VerdictReport>(m, "VerdictReport")
      .def_readonly("claim", &VerdictReport::claim)
      .def_readonly("columns", &VerdictReport::columns)
      .def_readonly("rows", &VerdictReport::rows)
      .def_readonly("notes", &VerdictReport::notes)
      .def_readonly("passed", &VerdictReport::passed)
      .def_readonly("degree_bound", &VerdictReport::degree_bound)
      .def_property_readonly("fits", [](const VerdictReport& v) {
        py::dict d;
        for (const auto& [name, q] : v.fits) d[py::str(name)] = fit_dict(q);
        return d;
      })
      .def("to_text", &VerdictReport::to_text)
      .def("to_csv", &VerdictReport::to_csv)
      .def("__repr__", [](const VerdictReport& v) {
        return "<VerdictReport " + v.claim + (v.passed ? " PASS>" : " FAIL>");
      });

  m.def("groebner_basis",
        [](std::uint32_t p, std::vector<std::string> vars, const std::vector<std::string>& gens) {
          RingPtr R = make_ring(p, std::move(vars));
          GroebnerBasis gb = buchberger(make_ideal(R, parse_all(R, gens)));
          std::vector<std::string> out;
          for (const auto& g : gb.elements()) out.push_back(g.component(0).to_string());
          return out;
        },
        py::arg("p"), py::arg("variables"), py::arg("generators"));

  m.def("betti_numbers", [](const PresentedModule& mod, int steps) { return minimal_free_resolution(mod, steps).betti(); },
        py::arg("module"), py::arg("steps") = kDefaultResolutionSteps);
  m.def("complexity", [](const PresentedModule& mod, int steps) {
    return complexity_estimate(BettiTable{minimal_free_resolution(mod, steps).betti()});
  }, py::arg("module"), py::arg("steps") = kDefaultResolutionSteps);

  m.def("hilbert_data", [](const PresentedModule& mod, const std::vector<std::string>& ideal, int dimension) {
    HilbertData hd = hilbert_data(mod, ideal_of(mod, ideal), dimension);
    py::dict d;
    d["values"] = hd.values;
    d["h"] = hd.h;
    d["e"] = hd.e;
    d["postulation_number"] = hd.postulation_number;
    return d;
  }, py::arg("module"), py::arg("ideal"), py::arg("dimension"));
  m.def("dual_hilbert_data", [](const PresentedModule& mod, const std::vector<std::string>& ideal, int dimension) {
    DualHilbertData dd = dual_hilbert_data(mod, ideal_of(mod, ideal), dimension);
    py::dict d;
    d["values"] = dd.values;
    d["c"] = dd.c;
    return d;
  }, py::arg("module"), py::arg("ideal"), py::arg("dimension"));
  m.def("rr_deviation_table", [](const PresentedModule& mod, const std::vector<std::string>& ideal, int n_max) {
    return rr_deviation_table(mod, ideal_of(mod, ideal), n_max);
  }, py::arg("module"), py::arg("ideal"), py::arg("n_max") = 4);
  m.def("depth_table", [](const PresentedModule& mod, const std::vector<std::string>& ideal, int dimension, int j_max,
                          std::uint64_t seed) {
    SyzygyFamily fam = syzygy_family(mod, j_max);
    std::vector<PresentedModule> mods(fam.modules.begin(), fam.modules.begin() + j_max + 1);
    return depth_table(mods, ideal_of(mod, ideal), dimension, seed).depth;
  }, py::arg("module"), py::arg("ideal"), py::arg("dimension"), py::arg("j_max") = 7, py::arg("seed") = 0);

  m.def("coefficient_growth_table",
        [](const PresentedModule& mod, int i, const std::vector<std::string>& ideal, int dimension, int j_max,
           int holdout, std::uint64_t seed) {
          return coefficient_growth_table(mod, i, ideal_of(mod, ideal), growth(dimension, j_max, holdout, seed));
        },
        py::arg("module"), py::arg("i"), py::arg("ideal"), py::arg("dimension"), py::arg("j_max") = 11,
        py::arg("holdout") = kDefaultHoldout, py::arg("seed") = 0);
  m.def("e0_recursion_check", [](const PresentedModule& mod, const std::vector<std::string>& ideal, int j_max,
                                 int dimension) { return e0_recursion_check(mod, ideal_of(mod, ideal), j_max, dimension); },
        py::arg("module"), py::arg("ideal"), py::arg("j_max"), py::arg("dimension"));
  m.def("e1_recursion_check", [](const PresentedModule& mod, const std::vector<std::string>& ideal, int j_max, int n_lo,
                                 int n_hi) { return e1_recursion_check(mod, ideal_of(mod, ideal), j_max, n_lo, n_hi); },
        py::arg("module"), py::arg("ideal"), py::arg("j_max"), py::arg("n_lo"), py::arg("n_hi"));
  m.def("tor_rigidity_check", [](const PresentedModule& mod, const std::vector<std::string>& ideal, int r, int n_max,
                                 int i_max) { return tor_rigidity_check(mod, ideal_of(mod, ideal), r, n_max, i_max); },
        py::arg("module"), py::arg("ideal"), py::arg("r"), py::arg("n_max"), py::arg("i_max"));
  m.def("dual_growth_check",
        [](const PresentedModule& mod, const std::vector<std::string>& ideal, int i, int dimension, int j_max) {
          return dual_growth_check(mod, ideal_of(mod, ideal), i, growth(dimension, j_max, kDefaultHoldout, 0));
        },
        py::arg("module"), py::arg("ideal"), py::arg("i"), py::arg("dimension"), py::arg("j_max") = 11);

  m.def("quasi_fit", [](const std::vector<std::int64_t>& seq, int max_degree, int holdout) {
    return fit_dict(quasi_fit(seq, max_degree, holdout));
  }, py::arg("sequence"), py::arg("max_degree"), py::arg("holdout") = kDefaultHoldout);

  m.def("parse_spec", [](const std::string& text) { return parse_spec(text).to_text(); }, py::arg("text"),
        "Validates a spec and returns its normalized text.");
  m.def("run_spec",
        [](const std::string& text, std::uint64_t seed, std::optional<std::filesystem::path> cache_dir,
           std::optional<std::filesystem::path> out_dir, bool verify) {
          ExperimentSpec spec = parse_spec(text);
          RunOptions opts;
          opts.seed = seed;
          if (cache_dir) opts.cache = std::make_shared<FileCache>(*cache_dir);
          std::vector<CommandSpec> cmds = spec.commands;
          if (verify || cmds.empty()) cmds = {CommandSpec{"verify-all", {}, 0}};
          RunArtifact art;
          {
            py::gil_scoped_release release;
            art = run(spec, cmds, opts);
          }
          if (out_dir) art.write(*out_dir);
          std::vector<VerdictReport> reports;
          for (const auto& r : art.results)
            for (const auto& v : r.reports) reports.push_back(v);
          return py::make_tuple(art.all_passed(), reports, art.report_text());
        },
        py::arg("text"), py::arg("seed") = 0, py::arg("cache_dir") = py::none(), py::arg("out_dir") = py::none(),
        py::arg("verify") = false);
}
