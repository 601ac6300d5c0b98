#include "gammasym/report.hpp"

#include <sstream>

#include "gammasym/suite.hpp"

namespace gammasym {

Json to_json(const Root& root) { return Json(root.coeffs); }

Json to_json(IndexSet set) { return Json(set.indices()); }

Json to_json(const RootSystem& system) {
  Json j;
  j["family"] = std::string(to_string(system.type().family()));
  j["rank"] = system.rank();
  Json roots = Json::array();
  for (const Root& root : system.positive_roots()) roots.push_back(to_json(root));
  j["positive_roots"] = std::move(roots);
  j["highest_root"] = to_json(system.highest_root());
  j["cartan"] = system.cartan_matrix();
  return j;
}

namespace {

std::optional<std::uint64_t> try_two_number(const RootSystem& system, IndexSet I) {
  try {
    return orbit(system, I).size;
  } catch (const std::overflow_error&) {
    return std::nullopt;
  }
}

}  // namespace

Json to_json(const ClassificationReport& report, const RootSystem& system) {
  const IndexSet extrinsic = extrinsic_symmetric_indices(system);
  Json j;
  j["type"] = report.type.name();
  j["family"] = std::string(to_string(report.type.family()));
  j["rank"] = report.type.rank();
  j["reduced"] = report.type.reduced();
  j["extrinsic_symmetric"] = to_json(extrinsic);
  Json sets = Json::array();
  for (IndexSet I : report.admissible_sets) {
    Json row;
    row["I"] = to_json(I);
    row["extrinsic_symmetric"] = I.subset_of(extrinsic);
    if (auto n = try_two_number(system, I)) {
      row["two_number"] = *n;
    } else {
      row["two_number"] = nullptr;
    }
    sets.push_back(std::move(row));
  }
  j["admissible_count"] = report.admissible_sets.size();
  j["admissible_sets"] = std::move(sets);
  j["closed_form_agrees"] = report.closed_form_agrees;
  Json disc = Json::array();
  for (const auto& d : report.witness_discrepancies) {
    disc.push_back({{"I", to_json(d.set)}, {"expected", d.expected}, {"got", d.got}});
  }
  j["witness_discrepancies"] = std::move(disc);
  return j;
}

std::string to_markdown(const ClassificationReport& report, const RootSystem& system) {
  const IndexSet extrinsic = extrinsic_symmetric_indices(system);
  const std::uint64_t subsets = (std::uint64_t{1} << report.type.rank()) - 1;
  std::ostringstream out;
  out << "## " << report.type.name() << "\n\n";
  out << "Highest root " << system.highest_root().to_string() << ". " << report.admissible_sets.size()
      << " of " << subsets << " non-empty index sets are admissible. Closed form agrees: "
      << (report.closed_form_agrees ? "yes" : "NO") << ".\n\n";
  if (!report.admissible_sets.empty()) {
    out << "| I | extrinsic symmetric | 2-number |\n";
    out << "|---|---|---|\n";
    for (IndexSet I : report.admissible_sets) {
      const auto n = try_two_number(system, I);
      out << "| " << I.to_string() << " | " << (I.subset_of(extrinsic) ? "yes" : "no") << " | "
          << (n ? std::to_string(*n) : std::string("overflow")) << " |\n";
    }
    out << "\n";
  }
  for (const auto& d : report.witness_discrepancies) {
    out << "- discrepancy at " << d.set.to_string() << ": closed form " << (d.expected ? "true" : "false")
        << ", brute force " << (d.got ? "true" : "false") << "\n";
  }
  if (!report.witness_discrepancies.empty()) out << "\n";
  return out.str();
}

std::string to_plain(const ClassificationReport& report) {
  std::ostringstream out;
  out << report.type.name() << ": " << report.admissible_sets.size() << " admissible";
  out << (report.closed_form_agrees ? " (closed form agrees)" : " (closed form DISAGREES)") << "\n";
  for (IndexSet I : report.admissible_sets) out << "  " << I.to_string() << "\n";
  for (const auto& d : report.witness_discrepancies) {
    out << "  discrepancy " << d.set.to_string() << ": expected " << d.expected << ", got " << d.got << "\n";
  }
  return out.str();
}

Json to_json(const OrbitResult& result, const RootSystem& system, IndexSet I) {
  const bool admissible = is_admissible(system, I);
  Json j;
  j["type"] = system.type().name();
  j["rank"] = system.rank();
  j["I"] = to_json(I);
  j["admissible"] = admissible;
  if (admissible) {
    j["two_number"] = result.size;
  } else {
    j["two_number"] = nullptr;
  }
  j["orbit_size"] = result.size;
  j["weyl_order"] = result.weyl_order;
  j["stabilizer_order"] = result.stabilizer_order;
  j["method"] = std::string(to_string(result.method));
  if (result.budget_exceeded) j["budget_exceeded"] = true;
  if (!result.note.empty()) j["note"] = result.note;
  if (result.elements) {
    Json els = Json::array();
    for (const auto& e : *result.elements) els.push_back(e.coords);
    j["elements"] = std::move(els);
  }
  return j;
}

Json triple_json(const RootSystem& system, IndexSet I, const GammaSubgroup& subgroup) {
  const auto witness = triple_witness(system, I, subgroup);
  Json j;
  j["type"] = system.type().name();
  j["rank"] = system.rank();
  j["I"] = to_json(I);
  Json basis = Json::array();
  for (IndexSet b : subgroup.basis()) basis.push_back(to_json(b));
  j["subgroup_basis"] = std::move(basis);
  j["subgroup_order"] = subgroup.order();
  j["is_triple"] = !witness.has_value();
  j["fixed_roots"] = fixed_root_set(system, subgroup).roots.size();
  if (witness) j["witness"] = to_json(*witness);
  return j;
}

std::string classification_document(int max_classical_rank) {
  std::ostringstream out;
  out << "# Admissible index sets by type\n\n"
      << "Generated by `gammasym verify-all --fixtures-dir`. Index sets use Bourbaki numbering; "
         "the 2-number is the size of the Weyl orbit of xi_I.\n\n";
  for (const auto& type : classification_types(max_classical_rank)) {
    const RootSystem system = build(type);
    out << to_markdown(verify_classification(system), system);
  }
  return out.str();
}

}  // namespace gammasym
