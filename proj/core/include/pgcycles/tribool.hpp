#pragma once

#include <optional>
#include <string>
#include <utility>

namespace pgc {

/// Three-valued verdict. Unknown carries the name of the missing analytic datum.
class TriBool {
 public:
  enum class State { False, True, Unknown };

  static TriBool yes(std::string note = {}) { return TriBool(State::True, std::move(note)); }
  static TriBool no(std::string note = {}) { return TriBool(State::False, std::move(note)); }
  static TriBool unknown(std::string reason) { return TriBool(State::Unknown, std::move(reason)); }
  static TriBool from(bool value, std::string note = {}) {
    return value ? yes(std::move(note)) : no(std::move(note));
  }

  State state() const { return state_; }
  bool is_true() const { return state_ == State::True; }
  bool is_false() const { return state_ == State::False; }
  bool is_unknown() const { return state_ == State::Unknown; }

  /// For Unknown: the missing datum. For True/False: the deciding rule (may be empty).
  const std::string& reason() const { return reason_; }

  const char* name() const {
    switch (state_) {
      case State::True: return "true";
      case State::False: return "false";
      default: return "unknown";
    }
  }

 private:
  TriBool(State s, std::string r) : state_(s), reason_(std::move(r)) {}
  State state_;
  std::string reason_;
};

/// A value that may be unavailable because analytic input is missing.
template <class T>
class Unknowable {
 public:
  Unknowable(T value) : value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  static Unknowable unknown(std::string reason) {
    Unknowable u;
    u.reason_ = std::move(reason);
    return u;
  }

  bool known() const { return value_.has_value(); }
  const T& value() const { return value_.value(); }
  const T& operator*() const { return *value_; }
  const std::string& reason() const { return reason_; }

 private:
  Unknowable() = default;
  std::optional<T> value_;
  std::string reason_;
};

}  // namespace pgc
