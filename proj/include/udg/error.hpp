#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace udg {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IdOutOfRange : public Error {
 public:
  IdOutOfRange(long long id, std::size_t n)
      : Error("vertex id " + std::to_string(id) + " out of range [0, " + std::to_string(n) + ")"),
        id(id) {}
  long long id;
};

class SelfLoop : public Error {
 public:
  explicit SelfLoop(int v) : Error("self-loop at vertex " + std::to_string(v)), vertex(v) {}
  int vertex;
};

class NotConnected : public Error {
 public:
  NotConnected() : Error("graph is not connected") {}
};

class NonPositiveRadius : public Error {
 public:
  explicit NonPositiveRadius(int id) : Error("disk " + std::to_string(id) + " has radius <= 0"), id(id) {}
  int id;
};

class BadParameter : public Error {
 public:
  using Error::Error;
};

class ModelMismatch : public Error {
 public:
  ModelMismatch() : Error("graph does not match the geometric instance") {}
};

class NotMaximumMatching : public Error {
 public:
  using Error::Error;
};

class IsolatedVertex : public Error {
 public:
  explicit IsolatedVertex(int v) : Error("vertex " + std::to_string(v) + " is isolated"), vertex(v) {}
  int vertex;
};

class TooLarge : public Error {
 public:
  TooLarge(std::size_t n, std::size_t limit)
      : Error("instance with " + std::to_string(n) + " vertices exceeds oracle limit " +
              std::to_string(limit)) {}
};

class Timeout : public Error {
 public:
  Timeout() : Error("oracle time budget exceeded") {}
};

/// Raised when the input is provably outside the graph class a heuristic
/// was asked to handle. `witness` lists the vertices certifying that.
class ClassCertificateError : public Error {
 public:
  ClassCertificateError(const std::string& what, std::vector<int> witness)
      : Error(what), witness(std::move(witness)) {}
  std::vector<int> witness;
};

/// Every vertex of `witness` has degree > bound inside the witness subgraph.
class MinDegreeExceeded : public ClassCertificateError {
 public:
  MinDegreeExceeded(int bound, std::vector<int> witness)
      : ClassCertificateError("induced subgraph on " + std::to_string(witness.size()) +
                                  " vertices has minimum degree > " + std::to_string(bound),
                              std::move(witness)),
        bound(bound) {}
  int bound;
};

/// No remaining vertex has a neighborhood with independence number <= bound.
class NoEligibleVertex : public ClassCertificateError {
 public:
  NoEligibleVertex(int bound, std::vector<int> witness)
      : ClassCertificateError("no vertex among " + std::to_string(witness.size()) +
                                  " remaining has neighborhood independence <= " +
                                  std::to_string(bound),
                              std::move(witness)),
        bound(bound) {}
  int bound;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& reason)
      : Error("line " + std::to_string(line) + ": " + reason), line(line), reason(reason) {}
  std::size_t line;
  std::string reason;
};

class VersionMismatch : public Error {
 public:
  explicit VersionMismatch(int found)
      : Error("unsupported instance format version " + std::to_string(found)), found(found) {}
  int found;
};

}  // namespace udg
