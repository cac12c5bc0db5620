#ifndef SDW_COSET_HPP
#define SDW_COSET_HPP

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "sdw/budget.hpp"
#include "sdw/code.hpp"

namespace sdw {

// Leader weight for every syndrome of a code, built by breadth-first
// layering over error weights. Optionally keeps one leader vector per
// syndrome (first seen in the fixed enumeration order, so deterministic).
class SyndromeTable {
 public:
  SyndromeTable(LinearCode code, std::vector<std::uint64_t> col_synd,
                std::vector<std::uint8_t> weights, std::vector<BitVec> leaders,
                int radius);

  const LinearCode& code() const { return code_; }
  int redundancy() const { return code_.length() - code_.dim(); }
  std::uint64_t size() const { return weights_.size(); }

  std::uint8_t leader_weight(std::uint64_t s) const { return weights_[s]; }
  bool has_leaders() const { return !leaders_.empty(); }
  const BitVec& leader(std::uint64_t s) const { return leaders_[s]; }
  const std::vector<std::uint8_t>& leader_weights() const { return weights_; }

  std::uint64_t syndrome(const BitVec& v) const;
  int max_leader_weight() const { return radius_; }

 private:
  LinearCode code_;
  std::vector<std::uint64_t> col_synd_;
  std::vector<std::uint8_t> weights_;
  std::vector<BitVec> leaders_;
  int radius_ = 0;
};

SyndromeTable build_syndrome_table(const LinearCode& c,
                                   const Budget& budget = {},
                                   bool store_leaders = false);

int covering_radius(const SyndromeTable& t);

struct CosetBound {
  int weight = 0;
  // false: upper bound only (enumeration was over budget).
  bool exact = true;
};
CosetBound coset_min_weight(const LinearCode& c, const BitVec& v,
                            const Budget& budget = {});
int coset_min_weight(const SyndromeTable& t, const BitVec& v);

struct CosetWE {
  BitVec rep;  // canonical representative (v reduced by the generator)
  WeightEnum we;
};
CosetWE coset_weight_enumerator(const LinearCode& c, const BitVec& v,
                                const Budget& budget = {});

// Number of nonzero dual weights, an upper bound on the covering radius.
int delsarte_bound(const WeightEnum& we_dual);

// Same bound evaluated on the largest possible weight support of a self-dual
// code with minimum weight d: {d, d+s, ..., n-d} plus the all-ones weight,
// s = 4 for doubly even and 2 for singly even codes. Usable at lengths where
// the enumerator itself is out of reach.
int delsarte_bound_from_min_weight(int n, int d, ParityClass parity);

std::uint64_t census_min_weight_cosets(const SyndromeTable& t, int w);

// For every coset of minimum weight w: (syndrome, first weight-w member in
// the fixed enumeration order), sorted by syndrome.
std::vector<std::pair<std::uint64_t, BitVec>> min_weight_coset_members(
    const SyndromeTable& t, int w);

// Binary dump: u32 n, u32 k, u64 entry count, one leader-weight byte per
// syndrome, little-endian.
void save_syndrome_weights(const SyndromeTable& t, std::ostream& out);

struct SyndromeDump {
  int n = 0;
  int k = 0;
  std::vector<std::uint8_t> weights;
};
SyndromeDump load_syndrome_weights(std::istream& in);

}  // namespace sdw

#endif
