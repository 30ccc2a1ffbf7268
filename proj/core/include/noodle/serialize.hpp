#pragma once

#include <string>

#include "noodle/enumeration.hpp"
#include "noodle/kappa.hpp"
#include "noodle/nclattice.hpp"
#include "noodle/sampling.hpp"
#include "noodle/systems.hpp"

// JSON encodings used by the cache files and the CLI. Kept by hand (rather
// than adl serializers) so the key layout stays a stable wire format:
//   word            {"word": "<LR string>", "offset": 0}
//   pair system     {"n": k, "upper": "<LR>", "lower": "<LR>"}
//   partial system  adds offset and singleton decoration lists
namespace noodle {

std::string pair_system_to_json(const PairSystem& s);
PairSystem pair_system_from_json(const std::string& text);

std::string partial_system_to_json(const PartialSystem& s);
PartialSystem partial_system_from_json(const std::string& text);

std::string meander_to_json(const Meander& m);
Meander meander_from_json(const std::string& text);

std::string partial_shape_to_json(const PartialShape& p);
PartialShape partial_shape_from_json(const std::string& text);

}  // namespace noodle
