#pragma once

#include <json.hpp>
#include <map>
#include <string>
#include <utility>

#include "hmv/cube.hpp"
#include "hmv/splitting.hpp"
#include "hmv/strata.hpp"
#include "hmv/valuation.hpp"

namespace hmv {

using Json = nlohmann::json;

// Subsets of the embedding set serialize as sorted [prime, slot] pairs,
// rationals as exact "a/b" strings, faces as their {0,*,1} words.
Json json_of(const EmbSet& S);
Json json_of(const Rat& r);
Json json_of(const ValuationVector& nu);
Json json_of(const FaceCode& face);

// Full stratum row: pair, critical indices, dimension, images and window.
Json json_of(const AdmissiblePair& pr);

Json json_of_census(
    const SplittingPtr& s,
    const std::map<std::pair<std::uint64_t, std::uint64_t>, long long>&
        census);
Json json_of_spaced(const SplittingPtr& s,
                    const std::map<std::uint64_t, long long>& census);

// Inverses used by round-trip checks and CLI arguments.
Rat rational_from_json(const Json& j);
EmbSet embset_from_json(const SplittingPtr& s, const Json& j);

// "full", "empty", or "(i,j),(i,j),..." (spaces optional)
EmbSet parse_embset(const SplittingPtr& s, const std::string& text);

// "1/2,0,1" -> vector of exact rationals
std::vector<Rat> parse_rational_list(const std::string& text);

// payload rendering: "json" pretty-prints; "csv" and "table" expect an
// array of flat objects (a single object is treated as a one-row array)
// and serialize nested values compactly
std::string render_csv(const Json& rows);
std::string render_table(const Json& rows);
std::string render(const Json& payload, const std::string& format);

}  // namespace hmv
