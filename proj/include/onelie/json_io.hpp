#pragma once

#include "json.hpp"
#include "onelie/core.hpp"
#include "onelie/decoder.hpp"

namespace onelie {

// {"n": 3, "queries": [{"elements": [1, 2, 3], "multiplicity": 1}, ...]}
// Elements are 1-based and emitted ascending; entry order is preserved.
nlohmann::json family_to_json(const MultiFamily& family);
MultiFamily family_from_json(const nlohmann::json& j);

// {"verdict": "found", "element": 1} | {"verdict": "none"}
// | {"verdict": "undecidable"} | {"verdict": "inconsistent"}
nlohmann::json verdict_to_json(const Verdict& v);

nlohmann::json elements_to_json(const Query& q);
nlohmann::json mask_to_json(std::uint64_t mask);

// Flat positions and the sets on each side, for printable witnesses.
nlohmann::json partition_to_json(const MultiFamily& family, const PartitionAssignment& split);

}  // namespace onelie
