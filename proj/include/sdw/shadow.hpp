#ifndef SDW_SHADOW_HPP
#define SDW_SHADOW_HPP

#include <utility>

#include "sdw/budget.hpp"
#include "sdw/code.hpp"

namespace sdw {

// Split of a singly even self-dual code C: c0 is its doubly even subcode of
// index 2, and the dual of c0 splits into four cosets c0, rep1+c0, rep2+c0,
// rep3+c0 with C = c0 u (rep2+c0) and shadow S = (rep1+c0) u (rep3+c0).
// rep1 and rep3 are the canonical (pivot-cleared) coset representatives,
// labeled so that rep1 is the lexicographically smaller of the two.
struct ShadowDecomp {
  LinearCode code;
  LinearCode c0;
  BitVec rep1;
  BitVec rep2;
  BitVec rep3;
};

ShadowDecomp decompose(const LinearCode& c);

WeightEnum shadow_weight_enumerator(const ShadowDecomp& sd,
                                    const Budget& budget = {});

std::pair<LinearCode, LinearCode> doubly_even_neighbors(const ShadowDecomp& sd);

struct SExtremal {
  bool is_s_extremal = false;
  int d_code = 0;
  int d_shadow = 0;
};
SExtremal s_extremal_check(const LinearCode& c, const Budget& budget = {});

}  // namespace sdw

#endif
