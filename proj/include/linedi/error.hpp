#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace linedi {

enum class ErrorKind {
  IndexOutOfRange,
  DuplicateLabel,
  LabelCountMismatch,
  ResourceLimit,
  NotAcyclic,
  EmptyDigraph,
  ParamOutOfRange,
  DimensionMismatch,
  NotRegular,
  InvalidPartition,
  InsufficientTerms,
  NoRecurrenceFound,
  MethodDisagreement,
  EnumerationCapExceeded,
  InvalidSpec,
  ParseError,
  DbUnreadable,
  TooFewTerms,
  Timeout,
  Offline,
  MalformedResponse,
  Internal,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::LabelCountMismatch: return "LabelCountMismatch";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::NotAcyclic: return "NotAcyclic";
    case ErrorKind::EmptyDigraph: return "EmptyDigraph";
    case ErrorKind::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotRegular: return "NotRegular";
    case ErrorKind::InvalidPartition: return "InvalidPartition";
    case ErrorKind::InsufficientTerms: return "InsufficientTerms";
    case ErrorKind::NoRecurrenceFound: return "NoRecurrenceFound";
    case ErrorKind::MethodDisagreement: return "MethodDisagreement";
    case ErrorKind::EnumerationCapExceeded: return "EnumerationCapExceeded";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DbUnreadable: return "DbUnreadable";
    case ErrorKind::TooFewTerms: return "TooFewTerms";
    case ErrorKind::Timeout: return "Timeout";
    case ErrorKind::Offline: return "Offline";
    case ErrorKind::MalformedResponse: return "MalformedResponse";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the ErrorKind tags so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace linedi
