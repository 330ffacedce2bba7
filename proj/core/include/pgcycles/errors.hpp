#pragma once

#include <stdexcept>
#include <string>

namespace pgc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph, cycle or center; violated structural precondition.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Cycles living on different graphs were combined.
class GraphMismatchError : public ValidationError {
 public:
  GraphMismatchError() : ValidationError("cycles live on different graphs") {}
};

/// Analytic inputs (p_g, h1, gaps) that contradict a numeric identity.
class InconsistentInputError : public Error {
 public:
  using Error::Error;
};

/// Unreadable file or malformed JSON.
class IoError : public Error {
 public:
  using Error::Error;
};

/// An operation needs an analytic datum that was not supplied.
class MissingAnalyticData : public Error {
 public:
  explicit MissingAnalyticData(std::string datum)
      : Error("missing analytic datum: " + datum), datum_(std::move(datum)) {}
  const std::string& datum() const { return datum_; }

 private:
  std::string datum_;
};

}  // namespace pgc
