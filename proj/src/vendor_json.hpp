#pragma once

// Single-header nlohmann/json from vendor/.
#include <json.hpp>
