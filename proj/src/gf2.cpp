#include "sdw/gf2.hpp"

#include <algorithm>

namespace sdw {

BitVec BitVec::from_string(const std::string& bits) {
  BitVec v(static_cast<int>(bits.size()));
  for (int i = 0; i < v.n_; ++i) {
    char c = bits[static_cast<std::size_t>(i)];
    if (c == '1')
      v.set(i, true);
    else if (c != '0')
      fail(errc::parse_error, "bit string may contain only 0 and 1");
  }
  return v;
}

BitVec BitVec::from_support0(int n, const std::vector<int>& coords) {
  BitVec v(n);
  for (int c : coords) {
    if (c < 0 || c >= n)
      fail(errc::invalid_argument, "support coordinate out of range");
    v.set(c, true);
  }
  return v;
}

std::vector<int> BitVec::support0() const {
  std::vector<int> s;
  for (std::size_t iw = 0; iw < w_.size(); ++iw) {
    std::uint64_t w = w_[iw];
    while (w) {
      s.push_back(static_cast<int>(iw * 64 + std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return s;
}

bool BitVec::lex_less(const BitVec& o) const {
  assert(n_ == o.n_);
  for (std::size_t i = 0; i < w_.size(); ++i) {
    std::uint64_t d = w_[i] ^ o.w_[i];
    if (d) {
      // The lowest differing bit is the earliest differing coordinate;
      // whichever vector has 0 there reads as the smaller string.
      std::uint64_t m = d & (~d + 1);
      return (w_[i] & m) == 0;
    }
  }
  return false;
}

std::string BitVec::to_string() const {
  std::string s(static_cast<std::size_t>(n_), '0');
  for (int i = 0; i < n_; ++i)
    if (get(i)) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

int inner(const BitVec& u, const BitVec& v) {
  if (u.length() != v.length())
    fail(errc::length_mismatch, "inner product of unequal lengths");
  int s = 0;
  const std::uint64_t* a = u.words();
  const std::uint64_t* b = v.words();
  for (int i = 0; i < u.word_count(); ++i) s += std::popcount(a[i] & b[i]);
  return s & 1;
}

BitMat::BitMat(std::vector<BitVec> rows) : rows_(std::move(rows)) {
  if (!rows_.empty()) {
    cols_ = rows_[0].length();
    for (const BitVec& r : rows_)
      if (r.length() != cols_)
        fail(errc::length_mismatch, "matrix rows of unequal length");
  }
}

BitMat BitMat::identity(int n) {
  BitMat m(n, n);
  for (int i = 0; i < n; ++i) m.rows_[static_cast<std::size_t>(i)].set(i, true);
  return m;
}

void BitMat::append_row(BitVec r) {
  if (rows_.empty())
    cols_ = r.length();
  else if (r.length() != cols_)
    fail(errc::length_mismatch, "appending row of different length");
  rows_.push_back(std::move(r));
}

Rref rref(const BitMat& m) {
  Rref out;
  std::vector<BitVec> rows = m.row_list();
  const int nr = static_cast<int>(rows.size());
  const int nc = m.cols();
  int r = 0;
  for (int c = 0; c < nc && r < nr; ++c) {
    int piv = -1;
    for (int i = r; i < nr; ++i)
      if (rows[static_cast<std::size_t>(i)].get(c)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[static_cast<std::size_t>(r)], rows[static_cast<std::size_t>(piv)]);
    for (int i = 0; i < nr; ++i)
      if (i != r && rows[static_cast<std::size_t>(i)].get(c))
        rows[static_cast<std::size_t>(i)] ^= rows[static_cast<std::size_t>(r)];
    out.pivots.push_back(c);
    ++r;
  }
  rows.resize(static_cast<std::size_t>(r));
  out.mat = BitMat(std::move(rows));
  if (out.mat.cols() == 0 && nc > 0) out.mat = BitMat(0, nc);
  out.rank = r;
  return out;
}

BitMat kernel(const BitMat& m) {
  Rref rr = rref(m);
  const int nc = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(nc), false);
  for (int p : rr.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<BitVec> basis;
  basis.reserve(static_cast<std::size_t>(nc - rr.rank));
  for (int c = 0; c < nc; ++c) {
    if (is_pivot[static_cast<std::size_t>(c)]) continue;
    BitVec v(nc);
    v.set(c, true);
    for (int i = 0; i < rr.rank; ++i)
      if (rr.mat.row(i).get(c)) v.set(rr.pivots[static_cast<std::size_t>(i)], true);
    basis.push_back(std::move(v));
  }
  BitMat out(std::move(basis));
  if (out.rows() == 0) out = BitMat(0, nc);
  return out;
}

BitVec reduce(const BitMat& code_rref, const BitVec& v) {
  if (code_rref.rows() > 0 && code_rref.cols() != v.length())
    fail(errc::length_mismatch, "vector length does not match code length");
  BitVec r = v;
  for (int i = 0; i < code_rref.rows(); ++i) {
    int p = code_rref.row(i).leading();
    assert(p >= 0);
    if (r.get(p)) r ^= code_rref.row(i);
  }
  return r;
}

bool member(const BitMat& code_rref, const BitVec& v) {
  return reduce(code_rref, v).is_zero();
}

}  // namespace sdw
