#include "sdw/code.hpp"

#include <algorithm>
#include <climits>
#include <string>
#include <thread>

namespace sdw {

const char* parity_name(ParityClass p) {
  switch (p) {
    case ParityClass::DoublyEven:
      return "doubly even";
    case ParityClass::SinglyEven:
      return "singly even";
    case ParityClass::Odd:
      return "odd";
  }
  return "?";
}

mpz_class WeightEnum::mass() const {
  mpz_class s = 0;
  for (const mpz_class& c : coeffs) s += c;
  return s;
}

int WeightEnum::min_positive_weight() const {
  for (int i = 1; i <= n; ++i)
    if (coeffs[static_cast<std::size_t>(i)] != 0) return i;
  return -1;
}

LinearCode::LinearCode(const BitMat& generator) {
  if (generator.cols() <= 0)
    fail(errc::invalid_argument, "code length must be positive");
  Rref rr = rref(generator);
  n_ = generator.cols();
  k_ = rr.rank;
  gen_ = std::move(rr.mat);
  pivots_ = std::move(rr.pivots);
}

bool is_self_dual(const LinearCode& c) {
  if (2 * c.dim() != c.length()) return false;
  const BitMat& g = c.generator();
  for (int i = 0; i < g.rows(); ++i)
    for (int j = i; j < g.rows(); ++j)
      if (inner(g.row(i), g.row(j))) return false;
  return true;
}

ParityClass parity_class(const LinearCode& c) {
  const BitMat& g = c.generator();
  bool singly = false;
  for (int i = 0; i < g.rows(); ++i) {
    int w = g.row(i).weight();
    if (w & 1) return ParityClass::Odd;
    if (w % 4 == 2) singly = true;
  }
  // Row weights mod 4 classify the whole code only over a self-orthogonal
  // span, so a violated precondition must not silently misreport.
  for (int i = 0; i < g.rows(); ++i)
    for (int j = i + 1; j < g.rows(); ++j)
      if (inner(g.row(i), g.row(j)))
        fail(errc::precondition_failed, "parity class needs a self-orthogonal code");
  return singly ? ParityClass::SinglyEven : ParityClass::DoublyEven;
}

std::vector<std::uint64_t> coset_weight_tally(const BitMat& rows,
                                              const BitVec& base,
                                              const Budget& budget) {
  const int k = rows.rows();
  const int n = base.length();
  if (rows.rows() > 0 && rows.cols() != n)
    fail(errc::length_mismatch, "base vector length does not match rows");
  if (k >= 63 || (std::uint64_t{1} << k) > budget.enum_visits)
    fail(errc::budget_exceeded,
         "enumeration of 2^" + std::to_string(k) + " vectors exceeds budget");
  const std::uint64_t total = std::uint64_t{1} << k;

  int workers = std::max(1, budget.workers);
  if (static_cast<std::uint64_t>(workers) > total) workers = 1;

  if (workers == 1) {
    std::vector<std::uint64_t> tally(static_cast<std::size_t>(n) + 1, 0);
    gray_visit(rows, base, 0, total,
               [&](const std::uint64_t*, int w) { ++tally[static_cast<std::size_t>(w)]; });
    return tally;
  }

  std::vector<std::vector<std::uint64_t>> parts(
      static_cast<std::size_t>(workers),
      std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0));
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(workers));
  for (int t = 0; t < workers; ++t) {
    std::uint64_t lo = total / static_cast<std::uint64_t>(workers) * static_cast<std::uint64_t>(t);
    std::uint64_t hi = (t + 1 == workers)
                           ? total
                           : total / static_cast<std::uint64_t>(workers) * static_cast<std::uint64_t>(t + 1);
    threads.emplace_back([&, t, lo, hi] {
      std::vector<std::uint64_t>& mine = parts[static_cast<std::size_t>(t)];
      gray_visit(rows, base, lo, hi,
                 [&](const std::uint64_t*, int w) { ++mine[static_cast<std::size_t>(w)]; });
    });
  }
  for (std::thread& th : threads) th.join();
  std::vector<std::uint64_t> tally(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& p : parts)
    for (std::size_t i = 0; i < tally.size(); ++i) tally[i] += p[i];
  return tally;
}

WeightEnum weight_enumerator(const LinearCode& c, const Budget& budget) {
  std::vector<std::uint64_t> tally =
      coset_weight_tally(c.generator(), BitVec(c.length()), budget);
  WeightEnum we(c.length());
  for (std::size_t i = 0; i < tally.size(); ++i) we.coeffs[i] = mpz_class(tally[i]);
  return we;
}

int min_weight_full(const LinearCode& c, const Budget& budget) {
  if (c.dim() == 0) fail(errc::invalid_argument, "zero-dimensional code has no minimum weight");
  std::vector<std::uint64_t> tally =
      coset_weight_tally(c.generator(), BitVec(c.length()), budget);
  for (std::size_t w = 1; w < tally.size(); ++w)
    if (tally[w]) return static_cast<int>(w);
  fail(errc::invalid_argument, "no nonzero codeword found");
}

namespace {

struct InfoSet {
  BitMat rows;  // k x n basis of the code, systematic on `rank` fresh columns
  int rank = 0;
};

std::vector<InfoSet> disjoint_info_sets(const LinearCode& c) {
  const int n = c.length();
  const int k = c.dim();
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::vector<InfoSet> sets;
  std::vector<BitVec> rows = c.generator().row_list();
  while (true) {
    int r = 0;
    std::vector<int> pivcols;
    for (int col = 0; col < n && r < k; ++col) {
      if (used[static_cast<std::size_t>(col)]) continue;
      int piv = -1;
      for (int i = r; i < k; ++i)
        if (rows[static_cast<std::size_t>(i)].get(col)) {
          piv = i;
          break;
        }
      if (piv < 0) continue;
      std::swap(rows[static_cast<std::size_t>(r)], rows[static_cast<std::size_t>(piv)]);
      for (int i = 0; i < k; ++i)
        if (i != r && rows[static_cast<std::size_t>(i)].get(col))
          rows[static_cast<std::size_t>(i)] ^= rows[static_cast<std::size_t>(r)];
      pivcols.push_back(col);
      ++r;
    }
    if (r == 0) break;
    for (int col : pivcols) used[static_cast<std::size_t>(col)] = true;
    sets.push_back(InfoSet{BitMat(rows), r});
  }
  return sets;
}

}  // namespace

BzResult min_weight_bz(const LinearCode& c, std::optional<int> target_cap) {
  const int k = c.dim();
  if (k == 0) fail(errc::invalid_argument, "zero-dimensional code has no minimum weight");
  const int nw = (c.length() + 63) / 64;
  std::vector<InfoSet> sets = disjoint_info_sets(c);
  int d_ub = INT_MAX;
  std::vector<int> done(sets.size(), 0);
  for (int w = 1; w <= k; ++w) {
    for (std::size_t j = 0; j < sets.size(); ++j) {
      const std::vector<BitVec>& rows = sets[j].rows.row_list();
      std::vector<std::uint64_t> cw(static_cast<std::size_t>(nw), 0);
      for (int i = 0; i < w; ++i) {
        const std::uint64_t* rw = rows[static_cast<std::size_t>(i)].words();
        for (int q = 0; q < nw; ++q) cw[static_cast<std::size_t>(q)] ^= rw[q];
      }
      int wt = 0;
      for (int q = 0; q < nw; ++q) wt += std::popcount(cw[static_cast<std::size_t>(q)]);
      if (wt < d_ub) d_ub = wt;
      revolving_door(k, w, [&](int out, int in) {
        const std::uint64_t* a = rows[static_cast<std::size_t>(out)].words();
        const std::uint64_t* b = rows[static_cast<std::size_t>(in)].words();
        int s = 0;
        for (int q = 0; q < nw; ++q) {
          cw[static_cast<std::size_t>(q)] ^= a[q] ^ b[q];
          s += std::popcount(cw[static_cast<std::size_t>(q)]);
        }
        if (s < d_ub) d_ub = s;
      });
      done[j] = w;
      int lb = 0;
      for (std::size_t j2 = 0; j2 < sets.size(); ++j2)
        lb += std::max(0, done[j2] + 1 - (k - sets[j2].rank));
      if (lb >= d_ub) return {d_ub, true};
      if (target_cap && lb >= *target_cap) return {*target_cap, false};
    }
  }
  return {d_ub, true};
}

int rains_bound(int n) {
  if (n <= 0 || n % 2 != 0)
    fail(errc::invalid_argument, "bound defined for positive even lengths");
  int b = 4 * (n / 24) + 4;
  if (n % 24 == 22) b += 2;
  return b;
}

bool is_extremal(const LinearCode& c) {
  if (!is_self_dual(c)) fail(errc::not_self_dual, "extremality requires a self-dual code");
  return min_weight_bz(c).weight == rains_bound(c.length());
}

namespace {

// pascal[i][j] = C(i, j) for j <= tmax, clamped into uint64 (guarded by the
// caller's budget check before use).
std::vector<std::vector<std::uint64_t>> pascal_u64(int n, int tmax) {
  std::vector<std::vector<std::uint64_t>> p(
      static_cast<std::size_t>(n) + 1,
      std::vector<std::uint64_t>(static_cast<std::size_t>(tmax) + 1, 0));
  for (int i = 0; i <= n; ++i) {
    p[static_cast<std::size_t>(i)][0] = 1;
    for (int j = 1; j <= std::min(i, tmax); ++j) {
      std::uint64_t a = p[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j) - 1];
      std::uint64_t b = p[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j)];
      p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a + b;
    }
  }
  return p;
}

mpz_class binom_mpz(int n, int t) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(t));
  return r;
}

}  // namespace

DesignCheck design_check(const LinearCode& c, int w, int t, const Budget& budget) {
  const int n = c.length();
  const int k = c.dim();
  if (w < 0 || w > n) fail(errc::invalid_argument, "block weight out of range");
  if (t < 0 || t > w) fail(errc::invalid_argument, "design strength must satisfy 0 <= t <= w");
  if (k >= 63 || (std::uint64_t{1} << k) > budget.enum_visits)
    fail(errc::budget_exceeded,
         "enumeration of 2^" + std::to_string(k) + " codewords exceeds budget");

  mpz_class nt = binom_mpz(n, t);
  std::uint64_t max_blocks =
      nt > budget.enum_visits ? 0 : budget.enum_visits / nt.get_ui();
  std::vector<std::vector<int>> blocks;
  gray_visit(c.generator(), BitVec(n), 1, std::uint64_t{1} << k,
             [&](const std::uint64_t* words, int wt) {
               if (wt != w) return;
               if (blocks.size() >= max_blocks)
                 fail(errc::budget_exceeded, "t-subset scan exceeds budget");
               std::vector<int> sup;
               sup.reserve(static_cast<std::size_t>(w));
               for (int q = 0; q < (n + 63) / 64; ++q) {
                 std::uint64_t x = words[q];
                 while (x) {
                   sup.push_back(q * 64 + std::countr_zero(x));
                   x &= x - 1;
                 }
               }
               blocks.push_back(std::move(sup));
             });
  if (blocks.empty()) return {false, 0};

  auto pas = pascal_u64(n, t);
  std::vector<std::uint64_t> counts(nt.get_ui(), 0);
  std::vector<int> idx(static_cast<std::size_t>(t));
  for (const std::vector<int>& sup : blocks) {
    for (int i = 0; i < t; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
      std::uint64_t rank = 0;
      for (int i = 0; i < t; ++i)
        rank += pas[static_cast<std::size_t>(sup[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])])]
                   [static_cast<std::size_t>(i) + 1];
      ++counts[rank];
      int i = t - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == w - t + i) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int q = i + 1; q < t; ++q)
        idx[static_cast<std::size_t>(q)] = idx[static_cast<std::size_t>(q) - 1] + 1;
    }
  }
  std::uint64_t lambda = counts[0];
  for (std::uint64_t v : counts)
    if (v != lambda) return {false, 0};
  return {true, lambda};
}

WeightEnum macwilliams(const WeightEnum& we, int k) {
  const int n = we.n;
  if (k < 0 || k > n) fail(errc::invalid_argument, "dimension out of range");
  if (static_cast<int>(we.coeffs.size()) != n + 1)
    fail(errc::invalid_argument, "coefficient vector does not match length");

  // Horner over y-polynomials: R_i = R_{i+1}*(1-y) + A_i*(1+y)^{n-i}, so
  // R_0 = sum_i A_i (1-y)^i (1+y)^{n-i}.
  std::vector<mpz_class> r(static_cast<std::size_t>(n) + 1, 0);
  std::vector<mpz_class> pow(static_cast<std::size_t>(n) + 1, 0);
  pow[0] = 1;
  int pow_deg = 0;
  for (int i = n; i >= 0; --i) {
    if (i < n) {
      for (int j = n; j >= 1; --j) r[static_cast<std::size_t>(j)] -= r[static_cast<std::size_t>(j) - 1];
    }
    const mpz_class& a = we.coeffs[static_cast<std::size_t>(i)];
    if (a != 0)
      for (int j = 0; j <= pow_deg; ++j) r[static_cast<std::size_t>(j)] += a * pow[static_cast<std::size_t>(j)];
    if (i > 0) {
      for (int j = ++pow_deg; j >= 1; --j) pow[static_cast<std::size_t>(j)] += pow[static_cast<std::size_t>(j) - 1];
    }
  }
  mpz_class div = mpz_class(1) << k;
  WeightEnum out(n);
  for (int j = 0; j <= n; ++j) {
    mpz_class q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), r[static_cast<std::size_t>(j)].get_mpz_t(), div.get_mpz_t());
    if (rem != 0)
      fail(errc::non_integral, "transform is not integral; input is not a valid enumerator");
    if (q < 0)
      fail(errc::non_integral, "transform has a negative count; input is not a valid enumerator");
    out.coeffs[static_cast<std::size_t>(j)] = q;
  }
  return out;
}

}  // namespace sdw
