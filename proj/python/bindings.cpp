#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gammasym/admissible.hpp"
#include "gammasym/antipodal.hpp"
#include "gammasym/gamma.hpp"
#include "gammasym/report.hpp"
#include "gammasym/roots.hpp"

namespace py = pybind11;
using namespace gammasym;

namespace {

// Index sets cross the boundary as lists of 1-indexed ints.
IndexSet to_set(const std::vector<int>& indices) { return IndexSet::of(indices); }
std::vector<int> from_set(IndexSet s) { return s.indices(); }

std::vector<std::vector<int>> from_sets(const std::vector<IndexSet>& sets) {
  std::vector<std::vector<int>> out;
  for (IndexSet s : sets) out.push_back(s.indices());
  return out;
}

RootSystem build_named(const std::string& family, int rank) {
  return build(RootSystemType(parse_family(family), rank));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Admissible index sets, antipodal Weyl orbits and subgroup triples of root systems.";

  py::register_exception<NotAdmissibleError>(m, "NotAdmissibleError", PyExc_ValueError);
  py::register_exception<DiscrepancyError>(m, "DiscrepancyError", PyExc_RuntimeError);

  py::class_<RootSystemType>(m, "RootSystemType")
      .def(py::init([](const std::string& family, int rank) { return RootSystemType(parse_family(family), rank); }),
           py::arg("family"), py::arg("rank"))
      .def_property_readonly("family", [](const RootSystemType& t) { return std::string(to_string(t.family())); })
      .def_property_readonly("rank", &RootSystemType::rank)
      .def_property_readonly("reduced", &RootSystemType::reduced)
      .def_property_readonly("name", &RootSystemType::name)
      .def("__repr__", [](const RootSystemType& t) { return "RootSystemType('" + t.name() + "')"; });

  py::class_<RootSystem>(m, "RootSystem")
      .def_property_readonly("type", &RootSystem::type)
      .def_property_readonly("rank", &RootSystem::rank)
      .def_property_readonly("positive_roots",
                             [](const RootSystem& s) {
                               std::vector<std::vector<int>> out;
                               for (const Root& r : s.positive_roots()) out.push_back(r.coeffs);
                               return out;
                             })
      .def_property_readonly("highest_root", [](const RootSystem& s) { return s.highest_root().coeffs; })
      .def_property_readonly("cartan", &RootSystem::cartan_matrix)
      .def("to_json", [](const RootSystem& s) { return to_json(s).dump(); })
      .def("__len__", &RootSystem::size)
      .def("__repr__", [](const RootSystem& s) { return "<RootSystem " + s.type().name() + ">"; });

  m.def("build", &build_named, py::arg("family"), py::arg("rank"),
        "Positive roots, Cartan matrix and highest root in Bourbaki numbering.");

  m.def("coefficient", [](const std::vector<int>& root, int j) { return coefficient(Root{root}, j); });
  m.def("evaluate_on_xi_sum",
        [](const std::vector<int>& root, const std::vector<int>& J) { return evaluate_on_xi_sum(Root{root}, to_set(J)); });

  m.def("is_admissible", [](const RootSystem& s, const std::vector<int>& I) { return is_admissible(s, to_set(I)); },
        py::arg("system"), py::arg("I"));
  m.def(
      "admissibility_witness",
      [](const RootSystem& s, const std::vector<int>& I) -> std::optional<std::vector<int>> {
        auto w = admissibility_witness(s, to_set(I));
        if (!w) return std::nullopt;
        return w->coeffs;
      },
      py::arg("system"), py::arg("I"));
  m.def("enumerate_admissible", [](const RootSystem& s) { return from_sets(enumerate_admissible(s)); });
  m.def("closed_form", [](const RootSystemType& t, const std::vector<int>& I) { return closed_form(t, to_set(I)); });
  m.def("is_union_closed", &is_union_closed);
  m.def("extrinsic_symmetric_indices", [](const RootSystem& s) { return from_set(extrinsic_symmetric_indices(s)); });

  py::class_<ClassificationReport>(m, "ClassificationReport")
      .def_property_readonly("type", [](const ClassificationReport& r) { return r.type; })
      .def_property_readonly("admissible_sets", [](const ClassificationReport& r) { return from_sets(r.admissible_sets); })
      .def_readonly("closed_form_agrees", &ClassificationReport::closed_form_agrees)
      .def_property_readonly("witness_discrepancies", [](const ClassificationReport& r) {
        std::vector<std::tuple<std::vector<int>, bool, bool>> out;
        for (const auto& d : r.witness_discrepancies) out.emplace_back(d.set.indices(), d.expected, d.got);
        return out;
      });
  m.def("verify_classification", [](const std::string& family, int rank) {
    return verify_classification(RootSystemType(parse_family(family), rank));
  });

  m.def("reflect", [](const std::vector<int>& v, int j, const RootSystem& s) {
    return reflect(CoweightVector{v}, j, s).coords;
  });
  m.def("weyl_group_order", [](const RootSystemType& t) { return weyl_group_order(t); });
  m.def("stabilizer_order", [](const RootSystem& s, const std::vector<int>& I) { return stabilizer_order(s, to_set(I)); });
  m.def("two_number", [](const RootSystem& s, const std::vector<int>& I) { return two_number(s, to_set(I)); },
        py::arg("system"), py::arg("I"));

  py::class_<OrbitResult>(m, "OrbitResult")
      .def_readonly("size", &OrbitResult::size)
      .def_property_readonly("elements",
                             [](const OrbitResult& r) -> std::optional<std::vector<std::vector<int>>> {
                               if (!r.elements) return std::nullopt;
                               std::vector<std::vector<int>> out;
                               for (const auto& e : *r.elements) out.push_back(e.coords);
                               return out;
                             })
      .def_property_readonly("method", [](const OrbitResult& r) { return std::string(to_string(r.method)); })
      .def_readonly("weyl_order", &OrbitResult::weyl_order)
      .def_readonly("stabilizer_order", &OrbitResult::stabilizer_order)
      .def_readonly("budget_exceeded", &OrbitResult::budget_exceeded)
      .def_readonly("note", &OrbitResult::note);
  m.def(
      "orbit",
      [](const RootSystem& s, const std::vector<int>& I, bool enumerate, std::uint64_t budget) {
        OrbitOptions options;
        options.enumerate = enumerate;
        options.budget = budget;
        return orbit(s, to_set(I), options);
      },
      py::arg("system"), py::arg("I"), py::arg("enumerate") = false, py::arg("budget") = kDefaultOrbitBudget);

  py::class_<GammaSubgroup>(m, "GammaSubgroup")
      .def_property_readonly("rank", &GammaSubgroup::rank)
      .def_property_readonly("dimension", &GammaSubgroup::dimension)
      .def_property_readonly("order", &GammaSubgroup::order)
      .def_property_readonly("basis", [](const GammaSubgroup& g) { return from_sets(g.basis()); })
      .def_property_readonly("elements", [](const GammaSubgroup& g) { return from_sets(g.elements()); })
      .def("__eq__", [](const GammaSubgroup& a, const GammaSubgroup& b) { return a == b; });
  m.def(
      "subgroup_span",
      [](const std::vector<std::vector<int>>& gens, int rank) {
        std::vector<IndexSet> sets;
        for (const auto& g : gens) sets.push_back(to_set(g));
        return GammaSubgroup::span(sets, rank);
      },
      py::arg("generators"), py::arg("rank"));
  m.def("fixed_root_set", [](const RootSystem& s, const GammaSubgroup& g) {
    std::vector<std::vector<int>> out;
    for (std::size_t i : fixed_root_set(s, g).roots) out.push_back(s.positive_roots()[i].coeffs);
    return out;
  });
  m.def("is_triple",
        [](const RootSystem& s, const std::vector<int>& I, const GammaSubgroup& g) { return is_triple(s, to_set(I), g); },
        py::arg("system"), py::arg("I"), py::arg("subgroup"));
  m.def(
      "verify_maximality_proposition",
      [](const RootSystem& s, int max_rank) { return verify_maximality_proposition(s, max_rank).holds(); },
      py::arg("system"), py::arg("max_rank") = kDefaultExhaustiveRank);
  m.def(
      "minimal_triple_subgroups",
      [](const RootSystem& s, const std::vector<int>& I) { return minimal_triple_subgroups(s, to_set(I)); },
      py::arg("system"), py::arg("I"));
}
