#ifndef AMOEBA_REPORT_JSON_HPP
#define AMOEBA_REPORT_JSON_HPP

#include <json.hpp>

#include "amoeba/chains.hpp"
#include "amoeba/classify.hpp"

namespace amoeba {

// Stable-key report schema; group orders as decimal strings.
nlohmann::ordered_json report_to_json(const ClassificationReport& report);

// Self-contained chain file: start graph, target permutation, step list.
nlohmann::ordered_json chain_to_json(const MorphChain& chain);
MorphChain chain_from_json(const nlohmann::ordered_json& j);

} // namespace amoeba

#endif // AMOEBA_REPORT_JSON_HPP
