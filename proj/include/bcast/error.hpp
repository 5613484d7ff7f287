#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bcast {

// Every input-side failure carries one of these codes so callers (the CLI in
// particular) can report a stable, machine-readable kind.
enum class ErrorCode {
  MalformedLine,
  MissingHeader,
  DuplicateHeader,
  VertexOutOfRange,
  EdgeCountMismatch,
  SelfLoop,
  DuplicateEdge,
  BadWeight,
  Disconnected,
  EmptyGraph,
  InvalidBroadcast,
  InvalidDecomposition,
  InvalidNiceDecomposition,
  ParameterOutOfRange,
  SignatureOverflow,
  InstanceTooLarge,
  InvalidInstance,
  Io,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bcast
