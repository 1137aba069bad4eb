// Python bindings for the core operations: graph construction, cover
// verification, exact and constructive solving, extremal generators and
// the campaign runners. JSON-valued results cross the boundary as strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ddpc/campaign.hpp"
#include "ddpc/constructive.hpp"
#include "ddpc/errors.hpp"
#include "ddpc/exact.hpp"
#include "ddpc/extremal.hpp"
#include "ddpc/io.hpp"

namespace py = pybind11;
using namespace ddpc;

namespace {

CoverSpec make_spec(const std::string& kind, int k,
                    const std::vector<Vertex>& S, const std::vector<Vertex>& T) {
  return CoverSpec{cover_kind_from_string(kind), k, S, T};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "disjoint directed path cover laboratory";

  py::register_exception<precondition_error>(m, "PreconditionError",
                                             PyExc_ValueError);

  py::class_<Digraph>(m, "Digraph")
      .def(py::init<int, const std::vector<Arc>&>(), py::arg("n"),
           py::arg("arcs"))
      .def_property_readonly("order", &Digraph::order)
      .def_property_readonly("arc_count", &Digraph::arc_count)
      .def("has_arc", &Digraph::has_arc)
      .def("out_neighbors", &Digraph::out_neighbors)
      .def("in_neighbors", &Digraph::in_neighbors)
      .def("arcs", &Digraph::arcs)
      .def("__eq__", [](const Digraph& a, const Digraph& b) { return a == b; })
      .def("to_json", [](const Digraph& d) { return emit_digraph(d); })
      .def("to_dot", [](const Digraph& d) { return to_dot(d); })
      .def_static("from_json",
                  [](const std::string& text) { return parse_digraph(text); });

  m.def("complete_digraph", &complete_digraph);
  m.def("complete_bipartite_digraph", &complete_bipartite_digraph);
  m.def("glued_cliques", &glued_cliques);

  m.def("degree_summary", [](const Digraph& d) {
    auto deg = degree_summary(d);
    py::dict out;
    out["out_degree"] = deg.out_degree;
    out["in_degree"] = deg.in_degree;
    out["min_semi_degree"] = deg.min_semi_degree;
    out["ore_min"] = deg.ore_min ? py::cast(*deg.ore_min) : py::none();
    return out;
  });

  m.def(
      "verify_cover",
      [](const Digraph& d, const std::string& kind, int k,
         const std::vector<Vertex>& S, const std::vector<Vertex>& T,
         const std::vector<DiPath>& paths) {
        auto res = verify_cover(d, make_spec(kind, k, S, T), PathCover{paths});
        return py::make_tuple(res.accepted, std::string(to_string(res.reason)),
                              res.detail);
      },
      py::arg("graph"), py::arg("kind"), py::arg("k"), py::arg("S"),
      py::arg("T"), py::arg("paths"));

  m.def(
      "find_cover_exact",
      [](const Digraph& d, const std::string& kind, int k,
         const std::vector<Vertex>& S,
         const std::vector<Vertex>& T) -> py::object {
        auto c = find_cover_exact(d, make_spec(kind, k, S, T));
        if (!c) return py::none();
        return py::cast(c->paths);
      },
      py::arg("graph"), py::arg("kind"), py::arg("k"), py::arg("S"),
      py::arg("T"));

  m.def("find_hamiltonian_path",
        [](const Digraph& d, Vertex s, Vertex t) -> py::object {
          auto p = find_hamiltonian_path(d, s, t);
          if (!p) return py::none();
          return py::cast(*p);
        });

  m.def("unpaired_mtm_cover",
        [](const Digraph& d, const std::vector<Vertex>& S,
           const std::vector<Vertex>& T) {
          return unpaired_mtm_cover(d, S, T).paths;
        });
  m.def("paired_two_cover",
        [](const Digraph& d, Vertex s1, Vertex s2, Vertex t1, Vertex t2) {
          return paired_two_cover(d, s1, s2, t1, t2).paths;
        });
  m.def("one_to_many_cover",
        [](const Digraph& d, Vertex s, const std::vector<Vertex>& T) {
          return one_to_many_cover(d, s, T).paths;
        });
  m.def("one_to_one_cover", [](const Digraph& d, Vertex s, Vertex t, int k) {
    return one_to_one_cover(d, s, t, k).paths;
  });

  m.def(
      "generate_extremal",
      [](const std::string& family, int a, int b) {
        auto w = generate_extremal(extremal_family_from_string(family), a, b);
        py::dict out;
        out["graph"] = w.graph;
        out["claimed_min_semi_degree"] = w.claimed_min_semi_degree;
        out["claimed_ore_min"] =
            w.claimed_ore_min ? py::cast(*w.claimed_ore_min) : py::none();
        out["kind"] = std::string(to_string(w.spec.kind));
        out["k"] = w.spec.k;
        out["S"] = w.spec.sources;
        out["T"] = w.spec.sinks;
        out["note"] = w.note;
        return out;
      },
      py::arg("family"), py::arg("a"), py::arg("b"));

  m.def(
      "run_theorem_check",
      [](const std::string& theorem, const std::string& mode, int n_min,
         int n_max, int k_min, int k_max, int samples, std::uint64_t seed,
         int threshold_offset) {
        CampaignConfig cfg;
        cfg.theorem = theorem;
        cfg.mode = mode == "exhaustive" ? CampaignMode::Exhaustive
                                        : CampaignMode::Random;
        cfg.n_min = n_min;
        cfg.n_max = n_max;
        cfg.k_min = k_min;
        cfg.k_max = k_max;
        cfg.samples = samples;
        cfg.seed = seed;
        cfg.threshold_offset = threshold_offset;
        return run_theorem_check(cfg).to_string();
      },
      py::arg("theorem"), py::arg("mode") = "random", py::arg("n_min") = 0,
      py::arg("n_max") = 0, py::arg("k_min") = 1, py::arg("k_max") = 1,
      py::arg("samples") = 300, py::arg("seed") = 0,
      py::arg("threshold_offset") = 0);

  m.def(
      "run_sharpness_check",
      [](const std::string& family, int a, int b) {
        return run_sharpness_check(extremal_family_from_string(family), a, b)
            .to_string();
      },
      py::arg("family"), py::arg("a"), py::arg("b"));
}
