#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "brann/anncat.hpp"
#include "brann/cohomology.hpp"
#include "brann/functor.hpp"

namespace brann {

using json = nlohmann::json;

/// Reads and parses a JSON file; ParseError names the path on failure.
json read_json(const std::filesystem::path& path);

// Parsers. `where` prefixes every diagnostic (usually the file path).
FiniteCommutativeRing ring_from_json(const json& j, const std::string& where);
FiniteModule module_from_json(const json& j, const FiniteCommutativeRing& ring,
                              const std::string& where);
HomPair hom_from_json(const json& j, const FiniteModule& source, const FiniteModule& target,
                      const std::string& where);
/// Shape and range are checked here; normalization is left to the consumer.
Cochain cochain_from_json(const json& j, const ModulePtr& module, const std::string& where);
Table alpha_from_json(const json& j, const FiniteCommutativeRing& ring, int module_size,
                      const std::string& where);

struct CategoryFile {
    ModulePtr module;
    Cochain structure;
};

/// {"ring":…,"module":…,"structure":…}; a string member is a path relative to `base`.
CategoryFile category_from_json(const json& j, const std::filesystem::path& base,
                                const std::string& where);
CategoryFile load_category(const std::filesystem::path& path);

BrAnnFunctorData functor_from_json(const json& j, const FiniteModule& source,
                                   const FiniteModule& target, const std::string& where);

json to_json(const FiniteCommutativeRing& ring);
json to_json(const FiniteModule& module);
json to_json(const Cochain& c);
json to_json(const CohomologyGroup& group);
json to_json(const BrAnnFunctorData& f);
json to_json(const Table& t);

} // namespace brann
