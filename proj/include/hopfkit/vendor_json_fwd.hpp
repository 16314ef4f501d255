#pragma once

// Single include point for nlohmann::json so every module agrees on the
// ordered-by-key object representation (the default std::map backing gives
// the canonical sorted-key serialization the file formats require).

#include <json.hpp>
