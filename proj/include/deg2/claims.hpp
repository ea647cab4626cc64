#ifndef DEG2_CLAIMS_HPP_
#define DEG2_CLAIMS_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "deg2/semigroup.hpp"

namespace deg2 {

struct ClaimResult {
  bool pass = false;
  std::string detail;
};

// One independently recomputable reference result. run() re-derives
// everything from scratch; seed drives the randomized sweeps and cap guards
// the closures.
struct Claim {
  std::string id;
  std::string description;
  ClaimResult (*run)(std::uint64_t seed, std::size_t cap);
};

inline constexpr std::uint64_t kDefaultClaimSeed = 20260816;

// The bundled verification suite: exactly ten claims, each covering one
// headline result of the toolkit.
std::vector<Claim> const& reference_claims();

}  // namespace deg2

#endif  // DEG2_CLAIMS_HPP_
