#include "qf/error.hpp"

namespace qf {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::DuplicateNodes: return "DuplicateNodes";
    case Errc::Infeasible: return "Infeasible";
    case Errc::Unbounded: return "Unbounded";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NegativeScale: return "NegativeScale";
    case Errc::NotFullDimensional: return "NotFullDimensional";
    case Errc::ZeroDirection: return "ZeroDirection";
    case Errc::LowDimensionalE: return "LowDimensionalE";
    case Errc::IndexOrder: return "IndexOrder";
    case Errc::NonPositiveEntry: return "NonPositiveEntry";
    case Errc::InvalidZeroPattern: return "InvalidZeroPattern";
    case Errc::DimensionTooSmall: return "DimensionTooSmall";
    case Errc::ParseError: return "ParseError";
    case Errc::UnknownPreset: return "UnknownPreset";
    case Errc::EmptyVertexList: return "EmptyVertexList";
    case Errc::DegenerateGeneration: return "DegenerateGeneration";
    case Errc::IoError: return "IoError";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

}  // namespace qf
