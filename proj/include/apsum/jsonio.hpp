#pragma once

/**
 * @file jsonio.hpp
 * @brief JSON forms of the library types.
 *
 * Rationals serialize as canonical strings, truncated series as arrays
 * of those strings (lowest order first), Laurent series as an object
 * carrying the principal-part depth alongside the coefficients. Verify
 * reports omit the wall-clock time so consecutive runs with identical
 * results serialize to identical bytes.
 */

#include <json.hpp>  // vendored nlohmann/json single header

#include "apsum/bernoulli.hpp"
#include "apsum/series.hpp"
#include "apsum/verify.hpp"

namespace apsum {

using Json = nlohmann::ordered_json;

Json to_json(const TruncatedSeries& s);
Json to_json(const LaurentSeries& s);
Json to_json(const BernoulliPoly& p);
Json to_json(const VerifyReport& report);

}  // namespace apsum
