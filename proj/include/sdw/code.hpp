#ifndef SDW_CODE_HPP
#define SDW_CODE_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "sdw/budget.hpp"
#include "sdw/gf2.hpp"

namespace sdw {

enum class ParityClass { DoublyEven, SinglyEven, Odd };

const char* parity_name(ParityClass p);

struct WeightEnum {
  int n = 0;
  std::vector<mpz_class> coeffs;  // coeffs[i] = number of vectors of weight i

  WeightEnum() = default;
  explicit WeightEnum(int len) : n(len), coeffs(static_cast<std::size_t>(len) + 1, 0) {}

  mpz_class mass() const;
  int min_positive_weight() const;  // -1 when the distribution is 1 alone
  friend bool operator==(const WeightEnum&, const WeightEnum&) = default;
};

class LinearCode {
 public:
  explicit LinearCode(const BitMat& generator);

  int length() const { return n_; }
  int dim() const { return k_; }
  const BitMat& generator() const { return gen_; }  // RREF, k rows
  const std::vector<int>& pivots() const { return pivots_; }
  bool contains(const BitVec& v) const { return member(gen_, v); }

  friend bool operator==(const LinearCode&, const LinearCode&) = default;

 private:
  int n_ = 0;
  int k_ = 0;
  BitMat gen_;
  std::vector<int> pivots_;
};

bool is_self_dual(const LinearCode& c);
ParityClass parity_class(const LinearCode& c);

WeightEnum weight_enumerator(const LinearCode& c, const Budget& budget = {});
int min_weight_full(const LinearCode& c, const Budget& budget = {});

struct BzResult {
  int weight = 0;
  // true: weight is the exact minimum. false: early exit, minimum >= weight.
  bool exact = true;
};
BzResult min_weight_bz(const LinearCode& c,
                       std::optional<int> target_cap = std::nullopt);

int rains_bound(int n);
bool is_extremal(const LinearCode& c);

struct DesignCheck {
  bool is_design = false;
  std::uint64_t lambda = 0;
};
DesignCheck design_check(const LinearCode& c, int w, int t,
                         const Budget& budget = {});

WeightEnum macwilliams(const WeightEnum& we, int k);

// Weight tally of the coset base + <rows> over all 2^rows messages,
// partitioned across budget.workers. The workhorse behind code, shadow and
// coset enumerations.
std::vector<std::uint64_t> coset_weight_tally(const BitMat& rows,
                                              const BitVec& base,
                                              const Budget& budget);

}  // namespace sdw

#endif
