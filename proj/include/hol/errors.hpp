#ifndef HOL_ERRORS_HPP
#define HOL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hol {

// Base class for everything this library throws on misuse.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct TypeError : Error {
  explicit TypeError(const std::string& msg) : Error("type error: " + msg) {}
};

struct UnboundVariable : Error {
  explicit UnboundVariable(const std::string& name)
      : Error("unbound variable: " + name) {}
};

struct SyntaxError : Error {
  std::size_t position;
  SyntaxError(std::size_t pos, const std::string& msg)
      : Error("syntax error at " + std::to_string(pos) + ": " + msg),
        position(pos) {}
};

struct UnknownConstant : Error {
  explicit UnknownConstant(const std::string& name)
      : Error("unknown constant: " + name) {}
};

// Proof construction misuse (combinators, builders, transformers).
struct ProofError : Error {
  explicit ProofError(const std::string& msg) : Error(msg) {}
};

struct ShapeMismatch : ProofError {
  explicit ShapeMismatch(const std::string& msg)
      : ProofError("shape mismatch: " + msg) {}
};

struct ContextMismatch : ProofError {
  explicit ContextMismatch(const std::string& msg)
      : ProofError("context mismatch: " + msg) {}
};

struct InputDoesNotCheck : ProofError {
  explicit InputDoesNotCheck(const std::string& msg)
      : ProofError("input derivation does not check: " + msg) {}
};

struct ConclusionMismatch : ProofError {
  explicit ConclusionMismatch(const std::string& msg)
      : ProofError("conclusion mismatch: " + msg) {}
};

struct OracleRefused : ProofError {
  explicit OracleRefused(const std::string& msg)
      : ProofError("oracle refused: " + msg) {}
};

struct OracleOutputInvalid : ProofError {
  explicit OracleOutputInvalid(const std::string& msg)
      : ProofError("oracle output invalid: " + msg) {}
};

// Proof file loading problems that are not plain syntax errors.
struct FileFormatError : Error {
  explicit FileFormatError(const std::string& msg)
      : Error("proof file: " + msg) {}
};

}  // namespace hol

#endif
