#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "gammasym/admissible.hpp"
#include "gammasym/antipodal.hpp"
#include "gammasym/gamma.hpp"
#include "gammasym/roots.hpp"

namespace gammasym {

using Json = nlohmann::ordered_json;

Json to_json(const Root& root);
Json to_json(IndexSet set);

/// {family, rank, positive_roots, highest_root, cartan}
Json to_json(const RootSystem& system);

/// Classification with per-set 2-numbers and extrinsic-symmetric flags.
Json to_json(const ClassificationReport& report, const RootSystem& system);
/// One table per type, one row per admissible set.
std::string to_markdown(const ClassificationReport& report, const RootSystem& system);
std::string to_plain(const ClassificationReport& report);

/// {type, rank, I, admissible, two_number, weyl_order, stabilizer_order,
///  method, elements?}
Json to_json(const OrbitResult& result, const RootSystem& system, IndexSet I);

/// {type, rank, I, subgroup_basis, is_triple, fixed_roots, witness?}
Json triple_json(const RootSystem& system, IndexSet I, const GammaSubgroup& subgroup);

/// Markdown for every type the classification covers, one section each.
std::string classification_document(int max_classical_rank);

}  // namespace gammasym
