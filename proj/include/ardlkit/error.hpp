#pragma once

#include <stdexcept>
#include <string>

namespace ardlkit {

enum class ErrorKind {
  InvalidInput,    // malformed data, bad configuration, unresolved names
  TooShort,        // sample or degrees of freedom exhausted
  RankDeficient,   // singular design or restriction
  Domain,          // value outside the domain of a transform or statistic
  Degenerate,      // statistic undefined (zero variance, perfect fit)
  Unsupported,     // option combination without embedded tables
  Io,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ardlkit
