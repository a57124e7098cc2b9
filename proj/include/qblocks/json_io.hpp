#pragma once

#include <string>

#include <json.hpp>

#include "qblocks/blockone.hpp"
#include "qblocks/charring.hpp"
#include "qblocks/linkage.hpp"
#include "qblocks/reduce.hpp"
#include "qblocks/zigzag.hpp"

namespace qblocks {

using Json = nlohmann::ordered_json;

/// {"n": 2, "coords": ["0+s*1", "0+s*-1"], "symbols": ["s"]}. When
/// "symbols" is present every symbol in the coordinates must be declared.
Weight weight_from_json(const Json& j);
Json weight_to_json(const Weight& w);
Weight read_weight_file(const std::string& path);

Json witness_to_json(const LinkageWitness& w);
LinkageWitness witness_from_json(const Json& j);

Json wt_to_json(const WtVector& v);
Json reduction_to_json(const ReductionResult& r);
Json character_to_json(const FormalCharacter& ch);
Json chart_to_json(const BlockChart& chart);
Json gl_to_json(const GlWeight& nu);
Json comparison_to_json(const ChartComparison& c);

}  // namespace qblocks
