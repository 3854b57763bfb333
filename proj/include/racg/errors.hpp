#pragma once

#include <stdexcept>
#include <string>

namespace racg {

enum class ErrorCode {
  ParseError,
  ValidationError,
  UnknownVertex,
  UnknownLetter,
  EmptyWord,
  NotFolded,
  InvalidK,
  BadParameter,
  LengthCapExceeded,
  NotAGeneralization,
  LabelOutsideBase,
  BudgetExceeded,
  InfiniteComplex,
  Overflow,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace racg
