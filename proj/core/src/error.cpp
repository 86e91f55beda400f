#include "dwbc/error.hpp"

namespace dwbc {

const char* error_name(ErrorKind k) noexcept {
  switch (k) {
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::OrderExceeded: return "OrderExceeded";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NonInvertible: return "NonInvertible";
    case ErrorKind::TruncationInsufficient: return "TruncationInsufficient";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::InvalidRegion: return "InvalidRegion";
    case ErrorKind::NearDegenerate: return "NearDegenerate";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::DegeneratePoints: return "DegeneratePoints";
    case ErrorKind::PoleCollision: return "PoleCollision";
    case ErrorKind::DegenerateHankel: return "DegenerateHankel";
    case ErrorKind::SamplePoleHit: return "SamplePoleHit";
    case ErrorKind::ChainBreak: return "ChainBreak";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace dwbc
