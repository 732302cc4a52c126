// Deterministic report emission. Values are assembled into ordered JSON
// (insertion-ordered keys) and printed by a fixed-format serializer:
// doubles at 12 significant digits, so reruns and platforms agree on the
// bytes. CSV output for confinement scans.
#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "core/strings.hpp"

namespace qdm::rep {

using ojson = nlohmann::ordered_json;

// Two-space pretty printing, keys in insertion order, "%.12g" doubles,
// non-finite doubles as null.
std::string dump(const ojson& j);

std::string csv_confinement(const std::vector<ex::ConfinementRow>& rows);

}  // namespace qdm::rep
