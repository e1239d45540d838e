#pragma once

#include <filesystem>
#include <optional>
#include <string_view>

#include <json.hpp>

#include "trisum/constructions.hpp"
#include "trisum/int_set.hpp"
#include "trisum/proof_lab.hpp"
#include "trisum/rep.hpp"
#include "trisum/sieve_bounds.hpp"

namespace trisum {

// Newline-delimited decimal text; round-trips the element list exactly.
void write_int_set_text(const std::filesystem::path& path, const IntSet& s);
IntSet read_int_set_text(const std::filesystem::path& path,
                         std::optional<int64_t> bound = std::nullopt);

// JSON array form; same round-trip contract.
nlohmann::json int_set_to_json(const IntSet& s);
IntSet int_set_from_json(const nlohmann::json& j,
                         std::optional<int64_t> bound = std::nullopt);

// ADL hooks so records convert to nlohmann::json directly.
void to_json(nlohmann::json& j, const ResidueProfile& p);
void to_json(nlohmann::json& j, const RepFunction& r);
void to_json(nlohmann::json& j, const RegularityReport& r);
void to_json(nlohmann::json& j, const ProductSumsetRatio& r);
void to_json(nlohmann::json& j, const SieveReport& r);
void to_json(nlohmann::json& j, const GallagherSums& g);
void to_json(nlohmann::json& j, const CauchyDavenportCheck& c);
void to_json(nlohmann::json& j, const SquareMassCheck& c);
void to_json(nlohmann::json& j, const ShiftPattern& p);
void to_json(nlohmann::json& j, const AdmissibilityResult& r);
void to_json(nlohmann::json& j, const DecompositionWitness& w);
void to_json(nlohmann::json& j, const EstExtraction& e);
void to_json(nlohmann::json& j, const DisjointOccupancy& d);
void to_json(nlohmann::json& j, const PairOccupancySums& s);
void to_json(nlohmann::json& j, const VarianceSum& v);
void to_json(nlohmann::json& j, const TranslationTerm& t);
void to_json(nlohmann::json& j, const TranslationProfile& t);
void to_json(nlohmann::json& j, const SmoothFraction& f);
void to_json(nlohmann::json& j, const Prop4Split& s);
void to_json(nlohmann::json& j, const ThinningStats& t);

// Report envelope: every CLI report embeds the resolved config and the
// library version, and serializes byte-identically for identical inputs.
nlohmann::json make_report(std::string_view command,
                           const nlohmann::json& config,
                           nlohmann::json result);

}  // namespace trisum
