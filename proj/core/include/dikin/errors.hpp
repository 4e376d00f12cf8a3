#pragma once

#include <stdexcept>
#include <string>

namespace dikin {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A point was outside the strict interior of the domain. Carries the
/// offending minimum slack so callers can tell "on the boundary" from
/// "far outside".
class NotInteriorError : public Error {
 public:
  explicit NotInteriorError(double min_slack)
      : Error("point is not strictly interior (min slack " +
              std::to_string(min_slack) + ")"),
        min_slack_(min_slack) {}

  NotInteriorError(double min_slack, const std::string& context)
      : Error(context + ": point is not strictly interior (min slack " +
              std::to_string(min_slack) + ")"),
        min_slack_(min_slack) {}

  double min_slack() const { return min_slack_; }

 private:
  double min_slack_;
};

/// SPD factorization failed; the matrix is indefinite or numerically broken.
class NotPositiveDefiniteError : public Error {
 public:
  using Error::Error;
};

/// A direction argument was not a unit vector.
class NotUnitError : public Error {
 public:
  using Error::Error;
};

/// A quadratic loss matrix was not positive semidefinite.
class NotPsdError : public Error {
 public:
  using Error::Error;
};

/// Sequence lengths disagree (segments vs horizon, trace vs losses).
class LengthMismatchError : public Error {
 public:
  using Error::Error;
};

/// The polytope has a recession direction; diameter and ray distances are
/// undefined.
class UnboundedError : public Error {
 public:
  using Error::Error;
};

/// A sub-interval [s, t] was outside 1..T or had s > t.
class BadIntervalError : public Error {
 public:
  using Error::Error;
};

/// The hindsight optimizer has no exact or brute-force route for this loss
/// composition.
class UnsupportedCompositionError : public Error {
 public:
  using Error::Error;
};

/// Malformed experiment config; `key()` names the offending entry.
class ConfigParseError : public Error {
 public:
  ConfigParseError(std::string key, const std::string& message)
      : Error("config error at '" + key + "': " + message),
        key_(std::move(key)) {}

  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

/// An internal consistency check failed (e.g. a ray exited farther than the
/// domain diameter). Indicates a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace dikin
