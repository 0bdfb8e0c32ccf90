#pragma once

#include <stdexcept>
#include <string>

namespace rauzy {

enum class ErrorKind {
  Validation,   // malformed or mathematically unsuitable input
  ResourceCap,  // enumeration / word-length caps
  Precision,    // p-adic or interval precision exhausted
  Unsupported,  // local structure outside the implemented model
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }
  const char* kind_name() const;
  int exit_code() const;

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline const char* Error::kind_name() const {
  switch (kind_) {
    case ErrorKind::Validation: return "validation";
    case ErrorKind::ResourceCap: return "resource-cap";
    case ErrorKind::Precision: return "precision";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::Internal: return "internal";
  }
  return "internal";
}

inline int Error::exit_code() const {
  switch (kind_) {
    case ErrorKind::Validation:
    case ErrorKind::Unsupported: return 2;
    case ErrorKind::ResourceCap: return 3;
    case ErrorKind::Precision: return 4;
    case ErrorKind::Internal: return 1;
  }
  return 1;
}

}  // namespace rauzy
