#pragma once

#include <stdexcept>
#include <string>

namespace rayleigh {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Basis family errors.
class EmptyFamily : public Error {
 public:
  EmptyFamily() : Error("basis family is empty") {}
};

class MixedCardinality : public Error {
 public:
  using Error::Error;
};

// Thrown when a claimed basis family fails the exchange axiom. Carries the
// offending pair and the element that cannot be exchanged.
class ExchangeAxiomViolation : public Error {
 public:
  ExchangeAxiomViolation(std::string b1, std::string b2, std::string x,
                         const std::string& message)
      : Error(message), basis1(std::move(b1)), basis2(std::move(b2)),
        element(std::move(x)) {}
  std::string basis1;
  std::string basis2;
  std::string element;
};

class ZeroMatrix : public Error {
 public:
  using Error::Error;
};

class BadFieldEntry : public Error {
 public:
  using Error::Error;
};

class InvalidGeometry : public Error {
 public:
  using Error::Error;
};

class GlueElementDegenerate : public Error {
 public:
  using Error::Error;
};

class LabelCollision : public Error {
 public:
  using Error::Error;
};

class GroundTooLarge : public Error {
 public:
  using Error::Error;
};

class UnknownElement : public Error {
 public:
  using Error::Error;
};

class DuplicateLabel : public Error {
 public:
  using Error::Error;
};

// Polynomial operands built over different ground-set namespaces.
class NamespaceMismatch : public Error {
 public:
  using Error::Error;
};

class ValueParseError : public Error {
 public:
  using Error::Error;
};

// Graph construction and traversal errors.
class GraphError : public Error {
 public:
  using Error::Error;
};

// Spanning-tree operations need a connected graph.
class DisconnectedGraph : public GraphError {
 public:
  using GraphError::GraphError;
};

// .mtr or certificate input that fails to parse; carries a 1-based line
// number when one is known (0 otherwise).
class ParseError : public Error {
 public:
  ParseError(int line_number, const std::string& message)
      : Error(line_number > 0
                  ? "line " + std::to_string(line_number) + ": " + message
                  : message),
        line(line_number) {}
  int line;
};

}  // namespace rayleigh
