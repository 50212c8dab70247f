#ifndef OMNILIE_ERROR_HPP
#define OMNILIE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace omnilie {

/// Classifies failures so the CLI can map them onto its exit-code contract:
/// mathematical check failures are reported, not thrown; these exceptions are
/// reserved for ill-formed requests and ill-formed data.
enum class ErrorKind {
  Dimension,  ///< operands with incompatible shapes / variable counts
  Parse,      ///< syntactically invalid model file
  Semantic,   ///< well-formed file violating a type invariant (skewness, ...)
  Input       ///< anything else the caller got wrong (unknown command, ...)
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Dimension: return "dimension";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Semantic: return "semantic";
    case ErrorKind::Input: return "input";
  }
  return "unknown";
}

}  // namespace omnilie

#endif
