#ifndef SDW_CATALOG_HPP
#define SDW_CATALOG_HPP

#include <string>

#include "sdw/code.hpp"
#include "sdw/gf2.hpp"

namespace sdw {

// Octal generator-matrix documents: 40 tokens, each 13 octal digits followed
// by 'a' (0) or 'b' (1), read row-major. Tokens may be separated by any
// whitespace. Digits map to 3 bits most significant first.
BitMat parse_octal_matrix(const std::string& text);
std::string render_octal_matrix(const BitMat& m);

// Support lists "{c1,c2,...}" with 1-based coordinates in 1..n.
BitVec parse_support(const std::string& text, int n);
std::string render_support(const BitVec& v);

// Generator matrices as text, one 0/1 row per line. Blank lines and lines
// starting with '#' are skipped.
BitMat parse_generator_rows(const std::string& text);
std::string render_generator_rows(const BitMat& m);

LinearCode reed_muller(int r, int m);

// Extended quadratic residue code of length p+1 for a prime p = +-1 mod 8.
LinearCode extended_qr(int p);

struct BorderBits {
  int a = 0;
  int b = 1;
  int c = 1;
};

// Pure form (I | R) of length 2l, or the bordered form of length 2l+2 with
// right block A given by A[0][0]=a, A[0][j]=b, A[i][0]=c and the circulant
// of first_row in the remaining l x l corner.
LinearCode double_circulant(const BitVec& first_row, bool bordered,
                            BorderBits border = {});

// Embedded copies of the two published length-80 generator matrices,
// checksummed at access time. which is 1 or 2.
const std::string& figure_octal_text(int which);
LinearCode n80_code(int which);

// File I/O. load_code_file dispatches on extension: .gen holds 0/1 rows,
// .oct holds an octal document M composed as (I | M).
LinearCode load_code_file(const std::string& path);
BitVec load_support_file(const std::string& path, int n);
void save_code_file(const std::string& path, const LinearCode& c);

}  // namespace sdw

#endif
