#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "clustertilt/algebra.hpp"
#include "clustertilt/hammocks.hpp"
#include "clustertilt/presets.hpp"
#include "clustertilt/render.hpp"

namespace py = pybind11;
using namespace clustertilt;

namespace {

struct Category {
  DynkinSpec spec;
  Orientation orientation;
  std::unique_ptr<ClusterCategory> cc;

  Category(const std::string& family, int rank, const std::string& orient) {
    spec = {parse_family(family), rank};
    spec.validate();
    orientation = orient.empty() ? Orientation::default_for(spec.family) : Orientation::parse(orient);
    cc = build_category(spec, orientation);
  }

  TiltingObject tilting(const std::vector<int>& cids) const {
    auto check = check_cluster_tilting(*cc, cids);
    if (!check.ok) throw InvalidTilting(std::move(check));
    return {cids};
  }
};

std::vector<std::vector<int>> as_lists(const std::vector<TiltingObject>& ts) {
  std::vector<std::vector<int>> out;
  for (const auto& t : ts) out.push_back(t.summands);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Cluster categories of type A and D, cluster-tilted algebras and hammocks";

  py::register_exception<EngineError>(m, "EngineError");
  py::register_exception<InvalidTilting>(m, "InvalidTilting", PyExc_ValueError);

  py::class_<Category>(m, "Category")
      .def(py::init<const std::string&, int, const std::string&>(), py::arg("family"), py::arg("rank"),
           py::arg("orientation") = "")
      .def_property_readonly("name", [](const Category& c) { return c.spec.name(); })
      .def_property_readonly("orientation", [](const Category& c) { return c.orientation.to_string(); })
      .def_property_readonly("rank", [](const Category& c) { return c.cc->rank(); })
      .def_property_readonly("size", [](const Category& c) { return c.cc->size(); })
      .def_property_readonly("module_count", [](const Category& c) { return c.cc->modules().size(); })
      .def("label", [](const Category& c, int x) { return c.cc->label(x); })
      .def("dim_vector", [](const Category& c, int x) { return c.cc->dim_vector(x); })
      .def("successors", [](const Category& c, int x) { return c.cc->successors(x); })
      .def("tau", [](const Category& c, int x) { return c.cc->tau(x); })
      .def("shift", [](const Category& c, int x) { return c.cc->shift(x); })
      .def("hom_dim", [](const Category& c, int x, int y) { return c.cc->hom_dim(x, y); })
      .def("ext_dim", [](const Category& c, int x, int y) { return c.cc->ext_dim(x, y); })
      .def("hom_basis_dim", [](const Category& c, int x, int y) { return c.cc->hom_basis_dim(x, y); })
      .def("tiltings", [](const Category& c) { return as_lists(enumerate_tilting(*c.cc)); })
      .def("is_cluster_tilting", [](const Category& c, const std::vector<int>& s) { return is_cluster_tilting(*c.cc, s); })
      .def("resolve_tilting", [](const Category& c, const std::string& text) { return resolve_tilting(*c.cc, text).summands; })
      .def("mutate",
           [](const Category& c, const std::vector<int>& t, int label) { return mutate(*c.cc, c.tilting(t), label).summands; })
      .def("gabriel_quiver",
           [](const Category& c, const std::vector<int>& t) {
             std::vector<std::pair<int, int>> arrows;
             for (const auto& a : gabriel_quiver(ClusterTiltedAlgebra(*c.cc, c.tilting(t))).arrows)
               arrows.emplace_back(a.source + 1, a.target + 1);
             return arrows;
           })
      .def("pd_classes",
           [](const Category& c, const std::vector<int>& t) {
             const ClusterTiltedAlgebra alg(*c.cc, c.tilting(t));
             std::vector<std::pair<int, std::string>> out;
             for (int x = 0; x < c.cc->size(); ++x) {
               bool shifted = false;
               for (int s : t) shifted = shifted || c.cc->shift(s) == x;
               if (!shifted) out.emplace_back(x, to_string(pd_class(alg, module_of(alg, x))));
             }
             return out;
           })
      .def("hij",
           [](const Category& c, const std::vector<int>& t, int i, int j) {
             const auto h = hij(*c.cc, c.tilting(t), i, j);
             return py::make_tuple(h.vertices, to_string(h.shape));
           })
      .def("infinite_pd_set", [](const Category& c, const std::vector<int>& t) { return infinite_pd_set(*c.cc, c.tilting(t)); })
      .def("report_json",
           [](const Category& c, const std::vector<int>& t) {
             return export_json({c.spec.family, c.spec.rank, c.orientation.to_string(), verify_main_theorem(*c.cc, c.tilting(t))});
           })
      .def(
          "render",
          [](const Category& c, const std::string& format, const std::optional<std::vector<int>>& t) {
            RenderSpec spec;
            spec.format = parse_format(format);
            if (t) {
              spec.tilting = c.tilting(*t);
              spec.highlights = hammock_highlights(*c.cc, *spec.tilting);
            }
            return render(*c.cc, spec);
          },
          py::arg("format") = "dot", py::arg("tilting") = py::none());
}
