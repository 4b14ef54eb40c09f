#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hdom {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kFormatVersion = 1;

using VertexId = std::uint32_t;

// An edge is kept in canonical form: strictly increasing vertex ids.
// An edge order (see Orientation) is a permutation of a canonical edge.
using Edge = std::vector<VertexId>;

// Thrown when an exhaustive computation would exceed the caller's cap.
// `required` carries the exact work count as a decimal string, which may
// not fit in any machine integer.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::string required_count, std::uint64_t cap)
      : std::runtime_error("cap exceeded: would require " + required_count +
                           " steps, cap is " + std::to_string(cap)),
        required(std::move(required_count)) {}

  std::string required;
};

}  // namespace hdom
