#pragma once

#include <string>

#include <json.hpp>

#include "voi/core.hpp"

namespace voi::cli {

using Json = nlohmann::ordered_json;

/// A distribution read from disk: either a JSON document
/// {"p": [numbers], "name": optional string} or a plain-text file with one
/// number per line ('#' starts a comment). Vectors are renormalized on load
/// when their sum is within 1% of one, so files carrying rounded values
/// remain usable; anything further off is rejected.
struct DistributionFile {
  Distribution dist;
  std::string name;
};

DistributionFile load_distribution(const std::string& path);

/// Writes a distribution as a JSON DistributionFile.
void write_distribution(const std::string& path, const std::vector<double>& p,
                        const std::string& name);

/// Rounds a double through a 12-significant-digit text representation so the
/// emitted JSON is byte-stable and carries no more precision than promised.
double round12(double x);

Json round12(const std::vector<double>& v);

std::string log_base_name(LogBase base);
LogBase parse_log_base(const std::string& name);

}  // namespace voi::cli
