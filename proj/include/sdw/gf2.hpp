#ifndef SDW_GF2_HPP
#define SDW_GF2_HPP

#include <bit>
#include <cassert>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sdw/errors.hpp"

namespace sdw {

// Vector over F2, bit-packed into 64-bit words, coordinate 0 in the lowest
// bit of word 0. All indices in this API are 0-based; the 1-based convention
// of the text file formats is handled at the parse/render boundary.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(int n) : n_(n), w_((n + 63) / 64, 0) { assert(n >= 0); }

  static BitVec from_string(const std::string& bits);
  static BitVec from_support0(int n, const std::vector<int>& coords);

  int length() const { return n_; }
  int word_count() const { return static_cast<int>(w_.size()); }
  const std::uint64_t* words() const { return w_.data(); }
  std::uint64_t* words() { return w_.data(); }

  bool get(int i) const {
    assert(i >= 0 && i < n_);
    return (w_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(int i, bool b) {
    assert(i >= 0 && i < n_);
    std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (b)
      w_[i >> 6] |= m;
    else
      w_[i >> 6] &= ~m;
  }
  void flip(int i) {
    assert(i >= 0 && i < n_);
    w_[i >> 6] ^= std::uint64_t{1} << (i & 63);
  }

  int weight() const {
    int s = 0;
    for (std::uint64_t w : w_) s += std::popcount(w);
    return s;
  }
  bool is_zero() const {
    for (std::uint64_t w : w_)
      if (w) return false;
    return true;
  }

  // Position of the first set coordinate, -1 if zero.
  int leading() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return static_cast<int>(i * 64 + std::countr_zero(w_[i]));
    return -1;
  }

  std::vector<int> support0() const;

  BitVec& operator^=(const BitVec& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
  }
  friend BitVec operator^(BitVec a, const BitVec& b) {
    a ^= b;
    return a;
  }
  friend bool operator==(const BitVec&, const BitVec&) = default;

  // Order that reads the vector as a bit string with coordinate 0 first.
  bool lex_less(const BitVec& o) const;

  std::string to_string() const;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

int inner(const BitVec& u, const BitVec& v);

class BitMat {
 public:
  BitMat() = default;
  BitMat(int rows, int cols) : cols_(cols), rows_(rows, BitVec(cols)) {}
  explicit BitMat(std::vector<BitVec> rows);

  static BitMat identity(int n);

  int rows() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }
  const BitVec& row(int i) const { return rows_[i]; }
  BitVec& row(int i) { return rows_[i]; }
  const std::vector<BitVec>& row_list() const { return rows_; }

  void append_row(BitVec r);

  friend bool operator==(const BitMat&, const BitMat&) = default;

 private:
  int cols_ = 0;
  std::vector<BitVec> rows_;
};

struct Rref {
  BitMat mat;
  int rank = 0;
  std::vector<int> pivots;
};

Rref rref(const BitMat& m);
BitMat kernel(const BitMat& m);

// Canonical coset representative of v modulo the row space (v reduced by
// every pivot). Requires code_rref to be in reduced row-echelon form.
BitVec reduce(const BitMat& code_rref, const BitVec& v);
bool member(const BitMat& code_rref, const BitVec& v);

// Visits codewords base + sum(rows selected by gray(m)) for messages m in
// [first, last), in reflected-binary order with row 0 toggling fastest.
// visit receives the packed words and the weight of the current vector.
template <typename Visit>
void gray_visit(const BitMat& rows, const BitVec& base, std::uint64_t first,
                std::uint64_t last, Visit&& visit) {
  const int k = rows.rows();
  assert(k < 64);
  assert(base.length() == (k ? rows.cols() : base.length()));
  if (first >= last) return;
  const int nw = base.word_count();
  std::vector<std::uint64_t> cw(base.words(), base.words() + nw);
  std::uint64_t g = first ^ (first >> 1);
  for (int j = 0; j < k; ++j)
    if ((g >> j) & 1) {
      const std::uint64_t* rw = rows.row(j).words();
      for (int i = 0; i < nw; ++i) cw[i] ^= rw[i];
    }
  int wt = 0;
  for (int i = 0; i < nw; ++i) wt += std::popcount(cw[i]);
  visit(cw.data(), wt);
  for (std::uint64_t m = first + 1; m < last; ++m) {
    const std::uint64_t* rw = rows.row(std::countr_zero(m)).words();
    wt = 0;
    for (int i = 0; i < nw; ++i) {
      cw[i] ^= rw[i];
      wt += std::popcount(cw[i]);
    }
    visit(cw.data(), wt);
  }
}

namespace detail {

template <typename Step>
void rd_fwd(int n, int t, Step& step);
template <typename Step>
void rd_bwd(int n, int t, Step& step);

template <typename Step>
void rd_fwd(int n, int t, Step& step) {
  if (t == 0 || t == n) return;
  rd_fwd(n - 1, t, step);
  step(t >= 2 ? t - 2 : n - 2, n - 1);
  rd_bwd(n - 1, t - 1, step);
}

template <typename Step>
void rd_bwd(int n, int t, Step& step) {
  if (t == 0 || t == n) return;
  rd_fwd(n - 1, t - 1, step);
  step(n - 1, t >= 2 ? t - 2 : n - 2);
  rd_bwd(n - 1, t, step);
}

}  // namespace detail

// Revolving-door traversal of all t-subsets of {0..n-1}. The caller prepares
// its state for the initial subset {0..t-1}; each call step(out, in) moves to
// the next subset by removing `out` and adding `in`. C(n,t)-1 steps total.
template <typename Step>
void revolving_door(int n, int t, Step&& step) {
  assert(t >= 0 && t <= n);
  detail::rd_fwd(n, t, step);
}

}  // namespace sdw

#endif
