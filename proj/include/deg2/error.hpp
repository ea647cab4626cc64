#ifndef DEG2_ERROR_HPP_
#define DEG2_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <utility>

namespace deg2 {

// Every failure carries a stable machine-readable kind alongside the message.
// Kinds in use: "invalid-input", "degenerate-input", "degree-violation",
// "resource-limit", "parse-error", and the decomposition-hypothesis kinds
// "matching-violation", "anticlique-violation", "adjacency-violation",
// "overlap-violation".
class Error : public std::runtime_error {
 public:
  Error(std::string kind, std::string const& msg)
      : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}

  std::string const& kind() const noexcept {
    return kind_;
  }

 private:
  std::string kind_;
};

[[noreturn]] inline void fail(std::string kind, std::string const& msg) {
  throw Error(std::move(kind), msg);
}

}  // namespace deg2

#endif  // DEG2_ERROR_HPP_
