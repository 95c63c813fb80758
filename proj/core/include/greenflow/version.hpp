#pragma once

namespace greenflow {

// Bumping this invalidates every cached kernel blob.
inline constexpr const char* kVersionTag = "greenflow-0.1.0";

}  // namespace greenflow
