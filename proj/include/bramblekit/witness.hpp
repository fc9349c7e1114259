#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "bramblekit/bramble.hpp"
#include "bramblekit/constants.hpp"
#include "bramblekit/decomposition.hpp"
#include "bramblekit/fpt.hpp"
#include "bramblekit/gridlike.hpp"
#include "bramblekit/perfect.hpp"
#include "bramblekit/separators.hpp"
#include "bramblekit/web.hpp"

namespace bk {

using Json = nlohmann::json;  // keys sorted, so dumps are canonical

Json constants_to_json(const Constants& c);
/// Missing keys keep the desk defaults; unknown keys are an input error.
Constants constants_from_json(const Json& j);
Constants load_constants_file(const std::string& path);

Json bramble_to_json(const Bramble& b);
Bramble bramble_from_json(const Json& j);
Json web_to_json(const KWeb& w);
KWeb web_from_json(const Json& j);
Json gridlike_to_json(const GridLikeMinor& glm);
GridLikeMinor gridlike_from_json(const Json& j);
Json perfect_to_json(const PerfectBramble& pb, const Constants& cfg);
PerfectBramble perfect_from_json(const Json& j);
Json decomposition_to_json(const TreeDecomposition& td, bool exact);
TreeDecomposition decomposition_from_json(const Json& j);
Json unsplittable_to_json(const UnsplittableSet& x);
UnsplittableSet unsplittable_from_json(const Json& j);
Json dichotomy_to_json(const DichotomyResult& r, const std::string& parameter, const Constants& cfg);
DichotomyResult dichotomy_from_json(const Json& j);

/// Re-validates a payload of the given kind against g from raw data.
Check verify_payload(const Graph& g, const std::string& kind, const Json& payload, const Constants& cfg);

/// Witness document: graph_ref, kind, payload, provenance. The provenance
/// records the validation status computed here.
Json make_witness(const Graph& g, const std::string& format, const std::string& kind, Json payload,
                  const std::string& algorithm, std::uint64_t seed, const Constants& cfg);

/// Graph hash, kind, provenance and payload re-checked from scratch.
Check verify_witness(const Graph& g, const Json& doc);

std::string dump_witness(const Json& doc);

}  // namespace bk
