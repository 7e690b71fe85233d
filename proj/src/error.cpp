#include "lvb/error.hpp"

namespace lvb {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::InvalidLieType: return "InvalidLieType";
    case ErrorCode::LabelMissing: return "LabelMissing";
    case ErrorCode::LabelForbidden: return "LabelForbidden";
    case ErrorCode::NotSpecial: return "NotSpecial";
    case ErrorCode::NotVeryEven: return "NotVeryEven";
    case ErrorCode::ParityViolation: return "ParityViolation";
    case ErrorCode::LocalSystemLengthMismatch: return "LocalSystemLengthMismatch";
    case ErrorCode::InvalidConjClass: return "InvalidConjClass";
    case ErrorCode::NoMaximum: return "NoMaximum";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

}  // namespace lvb
