#pragma once

#include <stdexcept>
#include <string>

namespace branchlaw {

/// Failure categories. The CLI maps each one to its own exit code.
enum class ErrorKind {
  kParse = 3,
  kGroup = 4,
  kCharacterTable = 5,
  kPipeline = 6,
  kIo = 7,
  kArithmetic = 8,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(ErrorKind::kParse, what) {}
};

class GroupError : public Error {
 public:
  explicit GroupError(const std::string& what) : Error(ErrorKind::kGroup, what) {}
};

class TableError : public Error {
 public:
  explicit TableError(const std::string& what)
      : Error(ErrorKind::kCharacterTable, what) {}
};

/// Raised when a pipeline self-check fails (non-integral multiplicity,
/// non-rational coefficient, etc.). Always indicates a bug or corrupt input.
class PipelineError : public Error {
 public:
  explicit PipelineError(const std::string& what) : Error(ErrorKind::kPipeline, what) {}
};

class ArithmeticError : public Error {
 public:
  explicit ArithmeticError(const std::string& what)
      : Error(ErrorKind::kArithmetic, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorKind::kIo, what) {}
};

}  // namespace branchlaw
