#ifndef IDIST_ERROR_HPP
#define IDIST_ERROR_HPP

#include <stdexcept>
#include <string>

namespace idist {

// Domain error with a stable machine-readable code ("NonPrime",
// "MixedFields", ...) alongside the human-readable message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace idist

#endif
