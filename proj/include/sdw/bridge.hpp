#ifndef SDW_BRIDGE_HPP
#define SDW_BRIDGE_HPP

#include <string>
#include <vector>

#include "sdw/budget.hpp"
#include "sdw/code.hpp"
#include "sdw/coset.hpp"
#include "sdw/shadow.hpp"

namespace sdw {

struct BridgeOptions {
  Budget budget{};
  // Skip the expensive input verification (extremality, coset minimum
  // weight). The caller vouches for the preconditions instead; structural
  // errors are still raised.
  bool assume_preconditions = false;
};

struct BridgeCheck {
  std::string what;
  std::string value;
  bool verified = false;  // false reads as "unverified (budget)"
};

struct BridgeReport {
  std::string direction;
  std::vector<BridgeCheck> checks;
  void note(std::string what, std::string value, bool verified);
};

// k for lengths of the form 24k+8 with k >= 1; anything else is rejected.
int family_index(int n);

// Doubly even -> singly even: split d by the parity functional x -> v.x and
// extend the even part by a weight 2 mod 4 representative of the coset.
LinearCode from_doubly_even(const LinearCode& d, const BitVec& v,
                            const BridgeOptions& opt = {},
                            BridgeReport* report = nullptr);

struct ToDoublyEven {
  LinearCode n1;
  LinearCode n3;
  int coset_leader_weight = 0;
};
// Singly even -> its two doubly even neighbors, with the verifications that
// make the correspondence meaningful.
ToDoublyEven to_doubly_even(const LinearCode& c, const BridgeOptions& opt = {},
                            BridgeReport* report = nullptr);

// One singly even neighbor per coset of minimum weight 4k+2, ordered by
// syndrome value.
std::vector<LinearCode> census_from_cosets(const LinearCode& d,
                                           const BridgeOptions& opt = {},
                                           BridgeReport* report = nullptr);

}  // namespace sdw

#endif
