#pragma once

#include <string>

namespace weyl {

/// Truncation bounds: |grading| <= grading and H-degree <= degree.
struct Box {
  int grading = 8;
  int degree = 12;

  friend bool operator==(const Box&, const Box&) = default;
};

inline std::string to_string(const Box& b) { return std::to_string(b.grading) + "," + std::to_string(b.degree); }

}  // namespace weyl
