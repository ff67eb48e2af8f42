#pragma once

#include <stdexcept>
#include <string>

namespace murai {

/// Failure categories. The CLI maps these onto its exit codes.
enum class Errc {
  invalid_argument,     // malformed input: bad monomial, bad facet, bad composition
  not_proper,           // operation needs a proper multicomplex
  size_cap,             // a configured size cap was exceeded
  invariant_violation,  // an internal consistency check failed
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

/// Aborts with an invariant violation when `cond` is false. Active in all build types.
inline void ensure(bool cond, const char* what) {
  if (!cond) fail(Errc::invariant_violation, what);
}

}  // namespace murai
