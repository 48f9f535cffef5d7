#pragma once

#include <stdexcept>
#include <string>

namespace toruskk {

// Error taxonomy shared by the library and the CLI. The CLI maps any
// Error to exit code 2 with a machine-readable JSON object; everything
// else (bad flags) is a usage error (64).
enum class ErrorKind {
  Dimension,     // incompatible row/column counts or grades
  Rank,          // rank-deficient input where full rank is required
  Embedding,     // basis is not primitive: not a Lie embedding
  Primitivity,   // no integer section exists
  Variance,      // x-type vs y-type mixup in a pairing
  SpecMismatch,  // exterior-algebra ambient specs disagree
  NotInvertible, // matrix is not unimodular
  NotTransverse, // intersection is not transverse
  Parse,         // malformed matrix text / class JSON
};

const char* errorKindName(ErrorKind k);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

} // namespace toruskk
