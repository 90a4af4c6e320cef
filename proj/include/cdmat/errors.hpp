#pragma once

#include <stdexcept>
#include <string>

namespace cdmat {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An enumeration would exceed a hard size cap (cycle space, flats, minors).
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what_was_capped, long requested, long cap)
      : Error(what_was_capped + ": requested " + std::to_string(requested) +
              " exceeds cap " + std::to_string(cap)),
        requested_(requested),
        cap_(cap) {}

  long requested() const noexcept { return requested_; }
  long cap() const noexcept { return cap_; }

 private:
  long requested_;
  long cap_;
};

class NotConnected : public Error {
 public:
  explicit NotConnected(const std::string& op)
      : Error(op + ": matroid is not connected") {}
};

class NotRegular : public Error {
 public:
  explicit NotRegular(const std::string& op)
      : Error(op + ": matroid has an F7 or F7* minor; use the brute-force predicates") {}
};

class InvalidSpec : public Error {
 public:
  using Error::Error;
};

class ParameterOutOfRange : public Error {
 public:
  using Error::Error;
};

/// Input text could not be parsed. line() is 1-based, 0 when not applicable.
class MalformedInput : public Error {
 public:
  MalformedInput(const std::string& msg, int line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace cdmat
