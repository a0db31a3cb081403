#include "phylo/error.hpp"

namespace phylo {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NoCommand: return "NoCommand";
    case ErrorKind::InvalidCommand: return "InvalidCommand";
    case ErrorKind::MissingType: return "MissingType";
    case ErrorKind::InvalidType: return "InvalidType";
    case ErrorKind::RepeatedCommand: return "RepeatedCommand";
    case ErrorKind::MissingInput: return "MissingInput";
    case ErrorKind::ParseFailure: return "ParseFailure";
    case ErrorKind::IoFailure: return "IoFailure";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace phylo
