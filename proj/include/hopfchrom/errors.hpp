#pragma once

#include <stdexcept>
#include <string>

namespace hopfchrom {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid field specification or mixed-field arithmetic.
class FieldError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// Malformed literal or input file. `context` names the offending field.
class ParseError : public Error {
 public:
  ParseError(const std::string& context, const std::string& what)
      : Error(context.empty() ? what : context + ": " + what), context_(context) {}
  const std::string& context() const { return context_; }

 private:
  std::string context_;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class NoSolution : public Error {
 public:
  NoSolution() : Error("no solution") {}
};

/// A Hopf algebra axiom failed. `axiom()` is the stable axiom name.
class AxiomError : public Error {
 public:
  AxiomError(std::string axiom, const std::string& detail)
      : Error(axiom + " violated: " + detail), axiom_(std::move(axiom)) {}
  const std::string& axiom() const { return axiom_; }

 private:
  std::string axiom_;
};

/// Input data is not that of a genuine finite-dimensional Hopf algebra
/// (e.g. an integral space that is not one-dimensional).
class CorruptData : public Error {
 public:
  using Error::Error;
};

class ModuleError : public Error {
 public:
  using Error::Error;
};

/// Ill-typed composite or tensor of morphisms.
class TypeMismatch : public Error {
 public:
  using Error::Error;
};

class NotHLinear : public Error {
 public:
  using Error::Error;
};

class NotSpherical : public Error {
 public:
  using Error::Error;
};

/// Pivot search could not decide (large intertwiner space over an infinite field).
class PivotSearchInconclusive : public Error {
 public:
  using Error::Error;
};

class RetractError : public Error {
 public:
  using Error::Error;
};

}  // namespace hopfchrom
