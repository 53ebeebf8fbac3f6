#pragma once

namespace ptsim {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace ptsim
