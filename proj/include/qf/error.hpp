#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qf {

enum class Errc {
  DuplicateNodes,
  Infeasible,
  Unbounded,
  EmptyInput,
  DimensionMismatch,
  NegativeScale,
  NotFullDimensional,
  ZeroDirection,
  LowDimensionalE,
  IndexOrder,
  NonPositiveEntry,
  InvalidZeroPattern,
  DimensionTooSmall,
  ParseError,
  UnknownPreset,
  EmptyVertexList,
  DegenerateGeneration,
  IoError,
  InvalidArgument,
};

std::string_view errc_name(Errc code);

/// Every failure raised by the library carries one of the Errc codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace qf
