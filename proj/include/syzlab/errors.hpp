#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace syzlab {

/// Base class for every error raised by the engines.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ModulusMismatch : public Error {
 public:
  ModulusMismatch() : Error("prime field modulus mismatch") {}
};

class VariableCountMismatch : public Error {
 public:
  VariableCountMismatch() : Error("variable count mismatch") {}
};

class AmbientMismatch : public Error {
 public:
  AmbientMismatch() : Error("free module ambient mismatch") {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class NotHomogeneous : public Error {
 public:
  using Error::Error;
};

class NotAReduction : public Error {
 public:
  using Error::Error;
};

class NoStabilization : public Error {
 public:
  using Error::Error;
};

class NotPrimary : public Error {
 public:
  using Error::Error;
};

class NotStabilized : public Error {
 public:
  using Error::Error;
};

class NotGorenstein : public Error {
 public:
  using Error::Error;
};

class NoCandidateFound : public Error {
 public:
  using Error::Error;
};

class FitInconclusive : public Error {
 public:
  using Error::Error;
};

class NotPeriodicYet : public Error {
 public:
  using Error::Error;
};

class DivisionFailure : public Error {
 public:
  using Error::Error;
};

class NotRegularSequence : public Error {
 public:
  using Error::Error;
};

class SpecError : public Error {
 public:
  SpecError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace syzlab
