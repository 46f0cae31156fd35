#pragma once

#include <stdexcept>
#include <string>

namespace sesqui {

enum class ErrorKind {
  OutOfRangeParent,
  NonEmptyOverEmpty,
  DimZero,
  BadIndices,
  NotPasting,
  ImageNotContained,
  TrivialDiagram,
  AlreadyBlock,
  ExceedsMaxDim,
  SourceMismatch,
  NotExtendable,
  IncompatibleLabels,
  ArityError,
  DimError,
  IncompatibleAt,
  PatternMismatch,
  SideConditionFailed,
  InvalidLabelling,
  BoundExceeded,
  PartialTable,
  LiftInconsistent,
  SyntaxError,
  UnsupportedDim,
  UnknownCell,
  NotGlobular,
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::OutOfRangeParent: return "OutOfRangeParent";
    case ErrorKind::NonEmptyOverEmpty: return "NonEmptyOverEmpty";
    case ErrorKind::DimZero: return "DimZero";
    case ErrorKind::BadIndices: return "BadIndices";
    case ErrorKind::NotPasting: return "NotPasting";
    case ErrorKind::ImageNotContained: return "ImageNotContained";
    case ErrorKind::TrivialDiagram: return "TrivialDiagram";
    case ErrorKind::AlreadyBlock: return "AlreadyBlock";
    case ErrorKind::ExceedsMaxDim: return "ExceedsMaxDim";
    case ErrorKind::SourceMismatch: return "SourceMismatch";
    case ErrorKind::NotExtendable: return "NotExtendable";
    case ErrorKind::IncompatibleLabels: return "IncompatibleLabels";
    case ErrorKind::ArityError: return "ArityError";
    case ErrorKind::DimError: return "DimError";
    case ErrorKind::IncompatibleAt: return "IncompatibleAt";
    case ErrorKind::PatternMismatch: return "PatternMismatch";
    case ErrorKind::SideConditionFailed: return "SideConditionFailed";
    case ErrorKind::InvalidLabelling: return "InvalidLabelling";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::PartialTable: return "PartialTable";
    case ErrorKind::LiftInconsistent: return "LiftInconsistent";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnsupportedDim: return "UnsupportedDim";
    case ErrorKind::UnknownCell: return "UnknownCell";
    case ErrorKind::NotGlobular: return "NotGlobular";
  }
  return "Unknown";
}

// level/position are 1-based where meaningful, -1 when not applicable.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, int level = -1, int position = -1)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
        kind_(kind),
        level_(level),
        position_(position) {}

  ErrorKind kind() const { return kind_; }
  int level() const { return level_; }
  int position() const { return position_; }

 private:
  ErrorKind kind_;
  int level_;
  int position_;
};

}  // namespace sesqui
