// Acceptance gate: runs every bundled reference claim and prints one
// pass/fail line per criterion. Exits nonzero if any criterion fails.

#include <cstddef>
#include <iostream>
#include <string>

#include "deg2/claims.hpp"
#include "deg2/error.hpp"
#include "deg2/semigroup.hpp"

int main() {
  auto const& claims = deg2::reference_claims();
  std::size_t passed = 0;
  std::size_t number = 0;
  for (auto const& claim : claims) {
    ++number;
    deg2::ClaimResult result;
    try {
      result = claim.run(deg2::kDefaultClaimSeed, deg2::kDefaultClosureCap);
    } catch (deg2::Error const& e) {
      result = {false, "error (" + std::string(e.kind()) + "): " + e.what()};
    } catch (std::exception const& e) {
      result = {false, std::string("unexpected exception: ") + e.what()};
    }
    std::cout << "criterion " << number << " [" << (result.pass ? "PASS" : "FAIL") << "] "
              << claim.id << ": " << claim.description << "\n";
    if (!result.detail.empty()) {
      std::cout << "    " << result.detail << "\n";
    }
    passed += result.pass ? 1 : 0;
  }
  std::cout << passed << "/" << claims.size() << " criteria passed\n";
  return passed == claims.size() ? 0 : 1;
}
