#pragma once

#include <string>

#include <json.hpp>

#include "hoeckend/grasp.hpp"

namespace hoeckend::io {

nlohmann::ordered_json outcome_json(const GraspOutcome& outcome, const ObjectShape& obj,
                            const std::string& config_hash);
std::string trajectory_csv(const GraspOutcome& outcome, const std::string& config_hash);

}  // namespace hoeckend::io
