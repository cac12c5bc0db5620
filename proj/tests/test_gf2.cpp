#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "sdw/catalog.hpp"
#include "sdw/gf2.hpp"

using namespace sdw;

namespace {

BitMat random_mat(int rows, int cols, std::mt19937& rng) {
  BitMat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (rng() & 1) m.row(i).set(j, true);
  return m;
}

// Plain bool-matrix elimination, no packing, no pivot bookkeeping. Serves as
// an independent rank oracle for rref().
int rank_oracle(const BitMat& m) {
  std::vector<std::vector<bool>> a(static_cast<std::size_t>(m.rows()),
                                   std::vector<bool>(static_cast<std::size_t>(m.cols())));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) a[i][j] = m.row(i).get(j);
  int rank = 0;
  for (int col = 0; col < m.cols(); ++col) {
    int piv = -1;
    for (int r = rank; r < m.rows(); ++r)
      if (a[r][col]) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[static_cast<std::size_t>(rank)], a[static_cast<std::size_t>(piv)]);
    for (int r = 0; r < m.rows(); ++r)
      if (r != rank && a[r][col])
        for (int j = 0; j < m.cols(); ++j)
          a[r][j] = a[r][j] != a[rank][j];
    ++rank;
  }
  return rank;
}

std::vector<BitVec> span_of(const BitMat& m) {
  std::vector<BitVec> words;
  const int k = m.rows();
  REQUIRE(k <= 16);
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    BitVec w(m.cols());
    for (int j = 0; j < k; ++j)
      if ((mask >> j) & 1) w ^= m.row(j);
    words.push_back(std::move(w));
  }
  return words;
}

}  // namespace

TEST_SUITE("gf2") {

TEST_CASE("bit vector basics") {
  BitVec v = BitVec::from_string("0100110");
  CHECK(v.length() == 7);
  CHECK(v.weight() == 3);
  CHECK(v.get(1));
  CHECK_FALSE(v.get(0));
  CHECK(v.to_string() == "0100110");
  CHECK(v.support0() == std::vector<int>{1, 4, 5});
  CHECK(v.leading() == 1);
  CHECK(BitVec::from_support0(7, {1, 4, 5}) == v);

  BitVec z(70);
  CHECK(z.is_zero());
  CHECK(z.leading() == -1);
  z.flip(69);
  CHECK(z.weight() == 1);
  CHECK(z.leading() == 69);

  CHECK_THROWS_AS(BitVec::from_string("012"), error);
  CHECK_THROWS_AS(static_cast<void>(BitVec::from_support0(4, {4})), error);
}

TEST_CASE("lex order reads coordinate 0 first") {
  BitVec a = BitVec::from_string("01");
  BitVec b = BitVec::from_string("10");
  CHECK(a.lex_less(b));
  CHECK_FALSE(b.lex_less(a));
  CHECK_FALSE(a.lex_less(a));

  // Across word boundaries.
  BitVec c(130), d(130);
  c.set(100, true);
  d.set(99, true);
  CHECK(c.lex_less(d));
}

TEST_CASE("inner product matches a coordinate loop") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + static_cast<int>(rng() % 150);
    BitVec u(n), v(n);
    for (int i = 0; i < n; ++i) {
      if (rng() & 1) u.set(i, true);
      if (rng() & 1) v.set(i, true);
    }
    int expect = 0;
    for (int i = 0; i < n; ++i) expect ^= (u.get(i) && v.get(i)) ? 1 : 0;
    CHECK(inner(u, v) == expect);
  }
}

TEST_CASE("rref rank agrees with plain elimination") {
  std::mt19937 rng(22);
  for (int trial = 0; trial < 40; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 12);
    int cols = 1 + static_cast<int>(rng() % 24);
    BitMat m = random_mat(rows, cols, rng);
    Rref r = rref(m);
    CHECK(r.rank == rank_oracle(m));
    CHECK(r.mat.rows() == r.rank);
    CHECK(static_cast<int>(r.pivots.size()) == r.rank);

    // Reduced form: each pivot column has a single 1, pivots increase.
    for (int i = 0; i < r.rank; ++i) {
      if (i > 0) CHECK(r.pivots[i] > r.pivots[i - 1]);
      CHECK(r.mat.row(i).leading() == r.pivots[i]);
      for (int i2 = 0; i2 < r.rank; ++i2)
        CHECK(r.mat.row(i2).get(r.pivots[i]) == (i2 == i));
    }

    // Same row space both ways.
    for (int i = 0; i < rows; ++i) CHECK(member(r.mat, m.row(i)));
    Rref back = rref(r.mat);
    CHECK(back.mat == r.mat);
  }
}

TEST_CASE("kernel is the orthogonal complement") {
  std::mt19937 rng(33);
  for (int trial = 0; trial < 30; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 10);
    int cols = 2 + static_cast<int>(rng() % 20);
    BitMat m = random_mat(rows, cols, rng);
    BitMat ker = kernel(m);
    Rref r = rref(m);
    CHECK(ker.rows() == cols - r.rank);
    for (int i = 0; i < ker.rows(); ++i)
      for (int j = 0; j < rows; ++j) CHECK(inner(ker.row(i), m.row(j)) == 0);
    CHECK(rref(ker).rank == ker.rows());

    BitMat back = kernel(ker);
    Rref orig = rref(m);
    Rref twice = rref(back);
    CHECK(orig.mat == twice.mat);
  }
}

TEST_CASE("coset reduction returns the lex-smallest member") {
  std::mt19937 rng(44);
  for (int trial = 0; trial < 20; ++trial) {
    int cols = 4 + static_cast<int>(rng() % 8);
    int rows = 1 + static_cast<int>(rng() % 5);
    Rref r = rref(random_mat(rows, cols, rng));
    if (r.rank == 0) continue;
    std::vector<BitVec> words = span_of(r.mat);
    for (int vt = 0; vt < 5; ++vt) {
      BitVec v(cols);
      for (int i = 0; i < cols; ++i)
        if (rng() & 1) v.set(i, true);
      BitVec red = reduce(r.mat, v);
      CHECK(member(r.mat, red ^ v));
      for (const BitVec& w : words) {
        BitVec member_vec = v ^ w;
        CHECK_FALSE(member_vec.lex_less(red));
      }
    }
  }
}

TEST_CASE("membership over the full Golay code") {
  LinearCode golay = extended_qr(23);
  const BitMat& gen = golay.generator();
  std::set<std::string> seen;
  BitVec zero(24);
  gray_visit(gen, zero, 0, std::uint64_t{1} << 12,
             [&](const std::uint64_t* w, int wt) {
               BitVec v(24);
               v.words()[0] = w[0];
               CHECK(v.weight() == wt);
               CHECK(member(gen, v));
               seen.insert(v.to_string());
             });
  CHECK(seen.size() == 4096);

  std::mt19937 rng(55);
  for (int trial = 0; trial < 200; ++trial) {
    BitVec v(24);
    for (int i = 0; i < 24; ++i)
      if (rng() & 1) v.set(i, true);
    bool in = seen.count(v.to_string()) > 0;
    CHECK(member(gen, v) == in);
    CHECK(golay.contains(v) == in);
  }
}

TEST_CASE("gray traversal starts anywhere and partitions") {
  LinearCode c = reed_muller(1, 3);
  const BitMat& gen = c.generator();
  BitVec base(8);
  base.set(0, true);

  std::vector<std::string> full;
  gray_visit(gen, base, 0, 16, [&](const std::uint64_t* w, int) {
    BitVec v(8);
    v.words()[0] = w[0];
    full.push_back(v.to_string());
  });
  CHECK(std::set<std::string>(full.begin(), full.end()).size() == 16);

  // Chunked traversal visits the same words in the same order.
  std::vector<std::string> chunked;
  for (std::uint64_t lo : {0, 5, 9}) {
    std::uint64_t hi = lo == 0 ? 5 : (lo == 5 ? 9 : 16);
    gray_visit(gen, base, lo, hi, [&](const std::uint64_t* w, int) {
      BitVec v(8);
      v.words()[0] = w[0];
      chunked.push_back(v.to_string());
    });
  }
  CHECK(chunked == full);
}

TEST_CASE("revolving door visits every subset once") {
  for (int n = 1; n <= 10; ++n) {
    for (int t = 0; t <= n; ++t) {
      std::vector<int> cur(static_cast<std::size_t>(t));
      for (int i = 0; i < t; ++i) cur[static_cast<std::size_t>(i)] = i;
      std::set<std::vector<int>> seen;
      auto record = [&] {
        std::vector<int> s = cur;
        std::sort(s.begin(), s.end());
        CHECK(std::adjacent_find(s.begin(), s.end()) == s.end());
        if (t > 0) {
          CHECK(s.front() >= 0);
          CHECK(s.back() < n);
        }
        CHECK(seen.insert(s).second);
      };
      record();
      revolving_door(n, t, [&](int out, int in) {
        bool replaced = false;
        for (int& x : cur)
          if (x == out) {
            x = in;
            replaced = true;
            break;
          }
        CHECK(replaced);
        record();
      });
      mpz_class total;
      mpz_bin_uiui(total.get_mpz_t(), static_cast<unsigned long>(n),
                   static_cast<unsigned long>(t));
      CHECK(mpz_class(static_cast<unsigned long>(seen.size())) == total);
    }
  }
}

}  // TEST_SUITE
