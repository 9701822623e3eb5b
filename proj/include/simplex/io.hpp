// JSON interchange for objects, maps, groups, cocycles and reports.
#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "simplex/em.hpp"
#include "simplex/join.hpp"
#include "simplex/nerve.hpp"

namespace simplex {

using Json = nlohmann::ordered_json;

/// Parses a file; InputError on I/O or syntax errors.
Json read_json(const std::filesystem::path& p);
void write_json(const std::filesystem::path& p, const Json& j);

/// {"truncation", "coskeletal_above", "levels", "faces": {"k,i": [...]}, "degeneracies": {...}}
Json to_json(const SSet& x);
/// Validates the simplicial identities; InputError otherwise.
SSet sset_from_json(const Json& j);

/// {"source", "target", "components"}; source and target are inline
/// objects, or paths relative to `dir`.
Json to_json(const SMap& f);
SMap map_from_json(const Json& j, const std::filesystem::path& dir = {});
/// A map document, or an object document read as its map to the point.
SMap map_or_terminal(const Json& j, const std::filesystem::path& dir = {});
bool is_map_document(const Json& j);

/// {"order", "mul", "inv", "e", "abelian"}; inv and e are derived when absent.
Json to_json(const FinGroup& g);
FinGroup group_from_json(const Json& j);

/// {"objects", "src", "tgt", "unit", "inv", "comp"}; -1 marks a missing composite.
Json to_json(const Groupoid& g);
Groupoid groupoid_from_json(const Json& j);

/// {"group", "abelian", "n", "values": {"(g1,...,gn)": a}}; omitted tuples are 0.
Json to_json(const GroupCocycle& c);
GroupCocycle cocycle_from_json(const Json& j, const std::filesystem::path& dir = {});

Json to_json(const Verdict& v);
Json to_json(const ExpansionCertificate& c);
Json to_json(const TwoGroupData& d, const FinGroup& A);

}  // namespace simplex
