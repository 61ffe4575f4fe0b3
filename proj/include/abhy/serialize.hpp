#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "abhy/cluster.hpp"
#include "abhy/polytope.hpp"

namespace abhy {

using Json = nlohmann::ordered_json;

/// Thrown on malformed documents; the message names the offending field.
struct DocumentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json matrix_to_json(const ExchangeMatrix& b);
ExchangeMatrix matrix_from_json(const Json& j);

Json polytope_to_json(const VPolytope& p,
                      const std::vector<std::vector<int>>* labels = nullptr);
VPolytope polytope_from_json(const Json& j);

Json atlas_to_json(const Atlas& a);

/// OFF with vertices only; exact rationals rendered as decimals.
std::string polytope_to_off(const VPolytope& p, int precision);

std::string dump(const Json& j);

}  // namespace abhy
