#pragma once

#include <stdexcept>
#include <string>

namespace qfz {

enum class ErrorCode {
  kSelfLoop,
  kDuplicateEdge,
  kVertexOutOfRange,
  kDisconnected,
  kEmptyGraph,
  kInvalidWeight,
  kSizeMismatch,
  kLevelOutOfRange,
  kInvalidEdgeIndex,
  kMalformedInput,
  kUnsupportedFormat,
  kSizeGuard,
  kPrecondition,
};

const char* to_string(ErrorCode code);

// All library failures are reported through this type; `code()` tells the
// validation failures apart.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qfz
