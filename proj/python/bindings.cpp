#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cxlab/error.hpp"
#include "cxlab/json_io.hpp"

namespace py = pybind11;
using namespace cxlab;

namespace {

// pybind11 holders must be non-const; the library only ever reads through them.
using RingHolder = std::shared_ptr<QuotientRing>;
using ResolutionHolder = std::shared_ptr<FreeResolution>;

py::object to_py(const io::Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

HomologyKind kind_of(const std::string& s) {
  if (s == "ext") return HomologyKind::Ext;
  if (s == "tor") return HomologyKind::Tor;
  throw InvalidInput("kind must be 'ext' or 'tor'");
}

VanishingCheck check_of(const std::string& s) {
  static const VanishingCheck all[] = {
      VanishingCheck::UniformGapExt,      VanishingCheck::UniformGapTor,      VanishingCheck::ConsecutiveExt,
      VanishingCheck::ConsecutiveTor,     VanishingCheck::FiniteLengthGapExt, VanishingCheck::FiniteLengthGapTor,
      VanishingCheck::TwoGapExt,          VanishingCheck::TwoGapTor,          VanishingCheck::MixedGapsExt,
      VanishingCheck::MixedGapsTor};
  for (auto c : all)
    if (s == check_name(c)) return c;
  throw InvalidInput("unknown check '" + s + "'");
}

void export_ring(py::module_& m) {
  py::class_<QuotientRing, RingHolder>(m, "Ring")
      .def(py::init([](const std::string& text) { return std::const_pointer_cast<QuotientRing>(parse_ring(text)); }), py::arg("text"))
      .def_property_readonly("characteristic", [](const QuotientRing& r) { return r.field().characteristic(); })
      .def_property_readonly("nvars", &QuotientRing::nvars)
      .def_property_readonly("codim", &QuotientRing::codim)
      .def_property_readonly("krull_dim", &QuotientRing::krull_dim)
      .def_property_readonly("depth", [](const QuotientRing& r) { return ring_depth(r); })
      .def("hilbert_series", &QuotientRing::hilbert_series, py::arg("truncation"))
      .def("__str__", &QuotientRing::render)
      .def("__repr__", &QuotientRing::describe);
}

void export_module(py::module_& m) {
  py::class_<GradedModule>(m, "Module")
      .def(py::init([](const RingHolder& ring, const std::string& text) { return parse_module(ring, text); }),
           py::arg("ring"), py::arg("text"))
      .def_property_readonly("twists", &GradedModule::twists)
      .def_property_readonly("name", &GradedModule::name)
      .def_property_readonly("num_generators", &GradedModule::num_generators)
      .def("is_free", &GradedModule::is_free)
      .def("is_zero", &GradedModule::is_zero)
      .def("twisted", &GradedModule::twisted, py::arg("s"))
      .def("hilbert_function", &GradedModule::hilbert_function, py::arg("lo"), py::arg("hi"))
      .def("depth", [](const GradedModule& g) { return depth(g); })
      .def("__str__", &GradedModule::render);

  py::class_<FreeResolution, ResolutionHolder>(m, "Resolution")
      .def_readonly("twists", &FreeResolution::twists)
      .def_readonly("complete", &FreeResolution::complete)
      .def_property_readonly("top", &FreeResolution::top)
      .def("betti", [](const FreeResolution& r) { return to_py(io::to_json(betti_table(r))); })
      .def("betti_totals", [](const FreeResolution& r) { return betti_table(r).totals; })
      .def("to_dict", [](const FreeResolution& r) { return to_py(io::to_json(r)); });
}

void export_algorithms(py::module_& m) {
  m.def("resolve", [](const GradedModule& g, int bound) {
    return std::make_shared<FreeResolution>(minimal_resolution(g, bound));
  }, py::arg("module"), py::arg("bound") = 20);
  m.def("tor", [](const GradedModule& a, const GradedModule& b, int lo, int hi) {
    return to_py(io::to_json(tor(a, b, lo, hi)));
  }, py::arg("m"), py::arg("n"), py::arg("lo"), py::arg("hi"));
  m.def("ext", [](const GradedModule& a, const GradedModule& b, int lo, int hi) {
    return to_py(io::to_json(ext(a, b, lo, hi)));
  }, py::arg("m"), py::arg("n"), py::arg("lo"), py::arg("hi"));
  m.def("complexity", [](const ResolutionHolder& r) { return to_py(io::to_json(complexity_estimate(*r))); },
        py::arg("resolution"));
  m.def("k_eta", [](const ResolutionHolder& r, const std::vector<Coeff>& coeffs, int t, const GradedModule& n) {
    const auto p = k_eta(eta_power(eta(eisenbud_operators(r), coeffs), t));
    return to_py(io::Json{{"pushout", io::to_json(p)}, {"verdict", io::to_json(verify_reduction(p, n))}});
  }, py::arg("resolution"), py::arg("coefficients"), py::arg("t"), py::arg("against"));
  m.def("reduction_chain", [](const GradedModule& g, int retries, std::uint64_t seed) {
    io::Json out = io::Json::array();
    for (const auto& step : reduction_chain(g, retries, seed)) out.push_back(io::to_json(step));
    return to_py(out);
  }, py::arg("module"), py::arg("retries") = 8, py::arg("seed") = 0);
  m.def("check_uniform_gap", [](const GradedModule& a, const GradedModule& b, int n, int q, const std::string& kind) {
    return to_py(io::to_json(check_uniform_gap(a, b, n, q, kind_of(kind))));
  }, py::arg("m"), py::arg("n_module"), py::arg("n"), py::arg("q"), py::arg("kind") = "ext");
  m.def("check_finite_length", [](const GradedModule& a, const GradedModule& b, int n, const std::string& check,
                                  std::optional<int> q) {
    return to_py(io::to_json(check_finite_length(a, b, n, check_of(check), q)));
  }, py::arg("m"), py::arg("n_module"), py::arg("n"), py::arg("check"), py::arg("q") = py::none());
  m.def("check_two_gap", [](const GradedModule& a, const GradedModule& b, int n, int p, int q, const std::string& kind) {
    return to_py(io::to_json(check_two_gap(a, b, n, p, q, kind_of(kind))));
  }, py::arg("m"), py::arg("n_module"), py::arg("n"), py::arg("p"), py::arg("q"), py::arg("kind") = "ext");
  m.def("explore_mixed_gaps", [](const GradedModule& a, const GradedModule& b, int n, const std::vector<int>& gaps,
                                 const std::string& kind) {
    return to_py(io::to_json(explore_mixed_gaps(a, b, n, gaps, kind_of(kind))));
  }, py::arg("m"), py::arg("n_module"), py::arg("n"), py::arg("gaps"), py::arg("kind") = "ext");
  m.def("random_module", [](const RingHolder& r, std::uint64_t seed) { return random_module(r, seed); },
        py::arg("ring"), py::arg("seed"));
  m.def("hypersurface_example", [] { return to_py(io::to_json(run_hypersurface_example())); });
  m.def("corpus", [](const std::vector<std::string>& rings, int count, std::uint64_t seed) {
    CorpusOptions o;
    if (!rings.empty()) o.rings = rings;
    o.count = count;
    o.seed = seed;
    return to_py(io::to_json(run_corpus(o)));
  }, py::arg("rings") = std::vector<std::string>{}, py::arg("count") = 10, py::arg("seed") = 0);
}

}  // namespace

PYBIND11_MODULE(_cxlab, m) {
  m.doc() = "Exact homological algebra over graded complete intersections";
  auto base = py::register_exception<Error>(m, "CxlabError", PyExc_RuntimeError);
  py::register_exception<InvalidInput>(m, "InvalidInput", base.ptr());
  py::register_exception<ResourceLimit>(m, "ResourceLimit", base.ptr());
  py::register_exception<SelfTestFailure>(m, "SelfTestFailure", base.ptr());
  export_ring(m);
  export_module(m);
  export_algorithms(m);
}
