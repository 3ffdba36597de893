#pragma once

#include <vector>

#include "lgi/registry.hpp"

namespace lgi::registry {

// Sorted by id. Stable after first use apart from register_identity.
const std::vector<IdentityRecord>& catalog();

}  // namespace lgi::registry
