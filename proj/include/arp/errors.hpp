#pragma once

#include <stdexcept>
#include <string>

namespace arp {

// Error categories map 1:1 onto CLI exit codes.
enum class ErrorKind {
  Usage = 1,  // bad flags or arguments
  Data = 2,   // unparseable or invariant-violating input
  Limit = 3,  // an internal cap prevented an answer
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }
  int exit_code() const { return static_cast<int>(kind_); }

 private:
  ErrorKind kind_;
};

inline Error usage_error(const std::string& message) { return Error(ErrorKind::Usage, message); }
inline Error data_error(const std::string& message) { return Error(ErrorKind::Data, message); }
inline Error limit_error(const std::string& message) { return Error(ErrorKind::Limit, message); }

}  // namespace arp
