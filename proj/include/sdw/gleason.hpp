#ifndef SDW_GLEASON_HPP
#define SDW_GLEASON_HPP

#include <gmpxx.h>

#include <vector>

#include "sdw/code.hpp"

namespace sdw {

// The two length families handled by the solver: n = 24k+8 with minimum
// weight 4k+2, and n = 24k+16 with minimum weight 4k+4.
enum class Family { n24k8, n24k16 };

int family_length(Family f, int k);

// Coefficients of one pair of spanning polynomials, in the single variable
// u = y^2 after the substitution x -> 1. code[t] multiplies y^{2t} in
// (x^2+y^2)^{n/2-4j} (x^2 y^2 (x^2-y^2)^2)^j, shadow[t] multiplies y^{2t} in
// (-1)^j 2^{n/2-6j} (xy)^{n/2-4j} (x^4-y^4)^{2j}.
struct GleasonBasisTerm {
  int n = 0;
  int j = 0;
  std::vector<mpz_class> code;
  std::vector<mpq_class> shadow;
};

GleasonBasisTerm basis_term(int n, int j, int max_t);

struct GleasonSolution {
  Family family = Family::n24k8;
  int k = 0;
  int n = 0;
  bool unique = false;
  std::vector<mpq_class> a;          // basis coefficients, j = 0..n/8
  std::vector<mpq_class> code_we;    // A_i by weight i = 0..n
  std::vector<mpq_class> shadow_we;  // B_i by weight i = 0..n
};

GleasonSolution solve_s_extremal(Family family, int k);

struct MinCoefficients {
  mpq_class code_min;
  mpq_class shadow_min;
};
MinCoefficients min_coefficient(const GleasonSolution& gs);

struct ScanRow {
  int k = 0;
  int n = 0;
  bool unique = false;
  bool consistent = true;
  int code_min_sign = 0;
  int shadow_min_sign = 0;
  int first_negative_weight = -1;  // -1 when no negative coefficient
  double wall_seconds = 0.0;
};
std::vector<ScanRow> scan_family(Family family, int k_from, int k_to,
                                 int workers = 1);

// Weight enumerator of a minimum-weight coset of the doubly even neighbor:
// picks up A_i at weights i = 2 mod 4 plus B_i/2 everywhere.
WeightEnum coset_weight_enumerator(const GleasonSolution& gs);

// Weight enumerator of the doubly even neighbor itself: A_i at weights
// i = 0 mod 4 plus B_i/2.
WeightEnum neighbor_weight_enum(const GleasonSolution& gs);

// Conversion with integrality and nonnegativity checks.
WeightEnum to_weight_enum(const std::vector<mpq_class>& by_weight, int n);

}  // namespace sdw

#endif
