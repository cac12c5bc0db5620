#include "sdw/catalog.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace sdw {

namespace detail {
const char* figure_tokens(int which);
}

namespace {

constexpr int kOctalRows = 40;
constexpr int kOctalDigits = 13;

std::vector<std::string> split_ws(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace

BitMat parse_octal_matrix(const std::string& text) {
  std::vector<std::string> tokens = split_ws(text);
  if (static_cast<int>(tokens.size()) != kOctalRows)
    fail(errc::parse_error, "expected 40 row tokens, found " +
                                std::to_string(tokens.size()));
  BitMat m(kOctalRows, kOctalRows);
  for (int r = 0; r < kOctalRows; ++r) {
    const std::string& tok = tokens[static_cast<std::size_t>(r)];
    if (tok.size() != kOctalDigits + 1)
      fail(errc::parse_error, "row " + std::to_string(r + 1) + ": token \"" +
                                  tok + "\" is not 13 octal digits plus a/b");
    for (int d = 0; d < kOctalDigits; ++d) {
      char ch = tok[static_cast<std::size_t>(d)];
      if (ch < '0' || ch > '7')
        fail(errc::parse_error, "row " + std::to_string(r + 1) +
                                    ": invalid octal digit '" +
                                    std::string(1, ch) + "'");
      int v = ch - '0';
      if (v & 4) m.row(r).set(3 * d, true);
      if (v & 2) m.row(r).set(3 * d + 1, true);
      if (v & 1) m.row(r).set(3 * d + 2, true);
    }
    char tail = tok[kOctalDigits];
    if (tail != 'a' && tail != 'b')
      fail(errc::parse_error, "row " + std::to_string(r + 1) +
                                  ": trailing letter must be a or b, got '" +
                                  std::string(1, tail) + "'");
    if (tail == 'b') m.row(r).set(kOctalRows - 1, true);
  }
  return m;
}

std::string render_octal_matrix(const BitMat& m) {
  if (m.rows() != kOctalRows || m.cols() != kOctalRows)
    fail(errc::invalid_argument, "octal documents hold 40x40 matrices");
  std::string out;
  out.reserve(static_cast<std::size_t>(kOctalRows) * (kOctalDigits + 2));
  for (int r = 0; r < kOctalRows; ++r) {
    const BitVec& row = m.row(r);
    for (int d = 0; d < kOctalDigits; ++d) {
      int v = (row.get(3 * d) << 2) | (row.get(3 * d + 1) << 1) |
              static_cast<int>(row.get(3 * d + 2));
      out += static_cast<char>('0' + v);
    }
    out += row.get(kOctalRows - 1) ? 'b' : 'a';
    out += '\n';
  }
  return out;
}

BitVec parse_support(const std::string& text, int n) {
  if (n < 0) fail(errc::invalid_argument, "negative length");
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_ws();
  if (i >= text.size() || text[i] != '{')
    fail(errc::parse_error, "support list must start with '{'");
  ++i;
  BitVec v(n);
  bool first = true;
  for (;;) {
    skip_ws();
    if (i < text.size() && text[i] == '}') {
      ++i;
      break;
    }
    if (!first) {
      if (i >= text.size() || text[i] != ',')
        fail(errc::parse_error, "expected ',' or '}' in support list");
      ++i;
      skip_ws();
    }
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      ++i;
    if (i == start) fail(errc::parse_error, "expected a coordinate");
    long c = std::stol(text.substr(start, i - start));
    if (c < 1 || c > n)
      fail(errc::parse_error,
           "coordinate " + std::to_string(c) + " outside 1.." + std::to_string(n));
    if (v.get(static_cast<int>(c) - 1))
      fail(errc::parse_error, "duplicate coordinate " + std::to_string(c));
    v.set(static_cast<int>(c) - 1, true);
    first = false;
  }
  skip_ws();
  if (i != text.size())
    fail(errc::parse_error, "trailing characters after support list");
  return v;
}

std::string render_support(const BitVec& v) {
  std::string out = "{";
  bool first = true;
  for (int c : v.support0()) {
    if (!first) out += ',';
    out += std::to_string(c + 1);
    first = false;
  }
  out += '}';
  return out;
}

BitMat parse_generator_rows(const std::string& text) {
  std::vector<BitVec> rows;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int cols = -1;
  while (std::getline(in, line)) {
    ++lineno;
    std::string bits;
    for (char ch : line) {
      if (ch == '#') break;
      if (std::isspace(static_cast<unsigned char>(ch))) continue;
      if (ch != '0' && ch != '1')
        fail(errc::parse_error, "line " + std::to_string(lineno) +
                                    ": unexpected character '" +
                                    std::string(1, ch) + "'");
      bits += ch;
    }
    if (bits.empty()) continue;
    if (cols < 0)
      cols = static_cast<int>(bits.size());
    else if (static_cast<int>(bits.size()) != cols)
      fail(errc::parse_error,
           "line " + std::to_string(lineno) + ": row length " +
               std::to_string(bits.size()) + " differs from " +
               std::to_string(cols));
    rows.push_back(BitVec::from_string(bits));
  }
  if (rows.empty()) fail(errc::parse_error, "no generator rows found");
  return BitMat(std::move(rows));
}

std::string render_generator_rows(const BitMat& m) {
  std::string out;
  for (int i = 0; i < m.rows(); ++i) {
    out += m.row(i).to_string();
    out += '\n';
  }
  return out;
}

LinearCode reed_muller(int r, int m) {
  if (r < 0 || m < 0 || r > m || m > 24)
    fail(errc::invalid_argument, "need 0 <= r <= m <= 24");
  const int n = 1 << m;
  std::vector<BitVec> rows;
  for (std::uint32_t mono = 0; mono < (1u << m); ++mono) {
    if (std::popcount(mono) > r) continue;
    BitVec row(n);
    for (int x = 0; x < n; ++x)
      if ((static_cast<std::uint32_t>(x) & mono) == mono) row.set(x, true);
    rows.push_back(std::move(row));
  }
  return LinearCode(BitMat(std::move(rows)));
}

namespace {

int poly_deg(const mpz_class& p) {
  if (p == 0) return -1;
  return static_cast<int>(mpz_sizeinbase(p.get_mpz_t(), 2)) - 1;
}

mpz_class poly_mod(mpz_class a, const mpz_class& b) {
  const int db = poly_deg(b);
  for (int da = poly_deg(a); da >= db; da = poly_deg(a))
    a ^= b << (da - db);
  return a;
}

mpz_class poly_gcd(mpz_class a, mpz_class b) {
  while (b != 0) {
    mpz_class r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

LinearCode extended_qr(int p) {
  if (!is_prime(p) || (p % 8 != 1 && p % 8 != 7))
    fail(errc::invalid_argument,
         "length must be a prime = +-1 mod 8, got " + std::to_string(p));

  mpz_class theta = 0;
  for (int i = 1; i < p; ++i)
    mpz_setbit(theta.get_mpz_t(),
               static_cast<unsigned long>((static_cast<long>(i) * i) % p));
  mpz_class xp1 = 0;
  mpz_setbit(xp1.get_mpz_t(), static_cast<unsigned long>(p));
  mpz_setbit(xp1.get_mpz_t(), 0);

  mpz_class g = poly_gcd(xp1, theta);
  if (mpz_popcount(g.get_mpz_t()) % 2 == 0) {
    // (x+1) divides g; peel it off to keep only the residue-class factor.
    mpz_class q = 0;
    while (poly_deg(g) >= 1) {
      int d = poly_deg(g);
      mpz_setbit(q.get_mpz_t(), static_cast<unsigned long>(d - 1));
      g ^= mpz_class(3) << (d - 1);
    }
    assert(g == 0);
    g = std::move(q);
  }
  assert(poly_deg(g) == (p - 1) / 2);

  const int k = p - poly_deg(g);
  std::vector<BitVec> rows;
  rows.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    BitVec row(p + 1);
    mpz_class shifted = g << i;
    for (int j = 0; j <= p - 1; ++j)
      if (mpz_tstbit(shifted.get_mpz_t(), static_cast<unsigned long>(j)))
        row.set(j, true);
    if (row.weight() % 2 != 0) row.set(p, true);
    rows.push_back(std::move(row));
  }
  return LinearCode(BitMat(std::move(rows)));
}

LinearCode double_circulant(const BitVec& first_row, bool bordered,
                            BorderBits border) {
  const int l = first_row.length();
  if (l < 1) fail(errc::invalid_argument, "empty circulant row");
  if ((border.a | border.b | border.c) & ~1)
    fail(errc::invalid_argument, "border bits must be 0 or 1");

  std::vector<BitVec> rows;
  if (!bordered) {
    rows.reserve(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i) {
      BitVec row(2 * l);
      row.set(i, true);
      for (int j = 0; j < l; ++j)
        if (first_row.get((j - i + l) % l)) row.set(l + j, true);
      rows.push_back(std::move(row));
    }
  } else {
    const int k = l + 1;
    rows.reserve(static_cast<std::size_t>(k));
    BitVec top(2 * k);
    top.set(0, true);
    if (border.a) top.set(k, true);
    if (border.b)
      for (int j = 1; j <= l; ++j) top.set(k + j, true);
    rows.push_back(std::move(top));
    for (int i = 1; i <= l; ++i) {
      BitVec row(2 * k);
      row.set(i, true);
      if (border.c) row.set(k, true);
      for (int j = 1; j <= l; ++j)
        if (first_row.get((j - i + l) % l)) row.set(k + j, true);
      rows.push_back(std::move(row));
    }
  }
  return LinearCode(BitMat(std::move(rows)));
}

namespace {

LinearCode compose_identity_block(const BitMat& m) {
  std::vector<BitVec> rows;
  rows.reserve(static_cast<std::size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i) {
    BitVec row(m.rows() + m.cols());
    row.set(i, true);
    for (int j = 0; j < m.cols(); ++j)
      if (m.row(i).get(j)) row.set(m.rows() + j, true);
    rows.push_back(std::move(row));
  }
  return LinearCode(BitMat(std::move(rows)));
}

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  return h;
}

constexpr std::uint64_t kFigureChecksum[2] = {0x80cbcb428492b501ull,
                                              0x6f013ddd8e2c14fdull};

}  // namespace

const std::string& figure_octal_text(int which) {
  if (which != 1 && which != 2)
    fail(errc::invalid_argument, "figure index must be 1 or 2");
  static const std::string text[2] = {detail::figure_tokens(1),
                                      detail::figure_tokens(2)};
  const std::string& t = text[which - 1];
  if (fnv1a64(t) != kFigureChecksum[which - 1])
    fail(errc::parse_error,
         "embedded matrix " + std::to_string(which) + " failed its checksum");
  return t;
}

LinearCode n80_code(int which) {
  return compose_identity_block(parse_octal_matrix(figure_octal_text(which)));
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::parse_error, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string extension(const std::string& path) {
  std::size_t slash = path.find_last_of("/\\");
  std::size_t dot = path.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
    return "";
  return path.substr(dot);
}

}  // namespace

LinearCode load_code_file(const std::string& path) {
  const std::string ext = extension(path);
  const std::string text = read_file(path);
  if (ext == ".gen") return LinearCode(parse_generator_rows(text));
  if (ext == ".oct") return compose_identity_block(parse_octal_matrix(text));
  fail(errc::parse_error, "unrecognized code file extension in " + path);
}

BitVec load_support_file(const std::string& path, int n) {
  return parse_support(read_file(path), n);
}

void save_code_file(const std::string& path, const LinearCode& c) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(errc::parse_error, "cannot write " + path);
  out << render_generator_rows(c.generator());
  if (!out) fail(errc::parse_error, "write failed for " + path);
}

}  // namespace sdw
