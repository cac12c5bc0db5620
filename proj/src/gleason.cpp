#include "sdw/gleason.hpp"

#include <algorithm>
#include <chrono>
#include <string>
#include <thread>
#include <utility>

namespace sdw {

int family_length(Family f, int k) {
  if (k < 1) fail(errc::invalid_argument, "family index must be at least 1");
  return 24 * k + (f == Family::n24k8 ? 8 : 16);
}

namespace {

using Poly = std::vector<mpz_class>;

// In-place coefficient passes. All polynomials are truncated to the vector
// length; dropped coefficients are never needed by the callers.
void mul_u(Poly& p) {
  for (std::size_t i = p.size() - 1; i >= 1; --i) p[i] = p[i - 1];
  p[0] = 0;
}

void mul_one_minus_u(Poly& p) {
  for (std::size_t i = p.size() - 1; i >= 1; --i) p[i] -= p[i - 1];
}

void div_one_plus_u(Poly& p) {
  for (std::size_t i = 1; i < p.size(); ++i) p[i] -= p[i - 1];
}

// (1+u)^m truncated to the vector length.
Poly binomial_row(int m, std::size_t len) {
  Poly p(len, 0);
  mpz_class c = 1;
  p[0] = 1;
  for (std::size_t t = 1; t < len; ++t) {
    c *= m - static_cast<long>(t) + 1;
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(t));
    if (c == 0) break;
    p[t] = c;
  }
  return p;
}

// c_j -> c_{j+1}: divide by (1+u)^4, then multiply by u (1-u)^2.
void advance_chain(Poly& p) {
  div_one_plus_u(p);
  div_one_plus_u(p);
  div_one_plus_u(p);
  div_one_plus_u(p);
  mul_u(p);
  mul_one_minus_u(p);
  mul_one_minus_u(p);
}

mpq_class shadow_coeff(int n2, int j, int t) {
  const int lead = n2 - 4 * j;
  const int num = 2 * t - lead;
  if (num < 0 || num % 4 != 0) return mpq_class(0);
  const int s = num / 4;
  if (s > 2 * j) return mpq_class(0);
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(2 * j),
               static_cast<unsigned long>(s));
  if ((j + s) % 2 != 0) c = -c;
  const int e = n2 - 6 * j;
  if (e >= 0) return mpq_class(c * (mpz_class(1) << e));
  mpq_class q(c, mpz_class(1) << (-e));
  q.canonicalize();
  return q;
}

struct SolveData {
  GleasonSolution gs;
  bool consistent = true;
};

SolveData solve_impl(Family fam, int k) {
  const int n = family_length(fam, k);
  const int n2 = n / 2;
  const int n8 = n / 8;
  const int J = n8 + 1;
  const int tc = (fam == Family::n24k8) ? 2 * k : 2 * k + 1;
  const int ts = 2 * k + 1;

  // Truncated code-side basis columns, assembled incrementally.
  std::vector<Poly> ct;
  ct.reserve(static_cast<std::size_t>(J));
  {
    Poly cur = binomial_row(n2, static_cast<std::size_t>(tc) + 1);
    ct.push_back(cur);
    for (int j = 1; j < J; ++j) {
      advance_chain(cur);
      ct.push_back(cur);
    }
  }

  const int rows = (tc + 1) + (ts + 1);
  std::vector<std::vector<mpq_class>> m(
      static_cast<std::size_t>(rows),
      std::vector<mpq_class>(static_cast<std::size_t>(J) + 1));
  for (int t = 0; t <= tc; ++t) {
    auto& row = m[static_cast<std::size_t>(t)];
    for (int j = 0; j < J; ++j) row[static_cast<std::size_t>(j)] = ct[static_cast<std::size_t>(j)][static_cast<std::size_t>(t)];
    row[static_cast<std::size_t>(J)] = (t == 0) ? 1 : 0;
  }
  for (int t = 0; t <= ts; ++t) {
    auto& row = m[static_cast<std::size_t>(tc + 1 + t)];
    for (int j = 0; j < J; ++j) row[static_cast<std::size_t>(j)] = shadow_coeff(n2, j, t);
  }

  int rank = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col < J && rank < rows; ++col) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[static_cast<std::size_t>(rank)], m[static_cast<std::size_t>(piv)]);
    auto& prow = m[static_cast<std::size_t>(rank)];
    if (prow[static_cast<std::size_t>(col)] != 1) {
      mpq_class d = prow[static_cast<std::size_t>(col)];
      for (int c = col; c <= J; ++c)
        if (prow[static_cast<std::size_t>(c)] != 0) prow[static_cast<std::size_t>(c)] /= d;
    }
    for (int r = rank + 1; r < rows; ++r) {
      mpq_class& lead = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
      if (lead == 0) continue;
      mpq_class f = lead;
      for (int c = col; c <= J; ++c)
        if (prow[static_cast<std::size_t>(c)] != 0)
          m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -= f * prow[static_cast<std::size_t>(c)];
    }
    pivot_col.push_back(col);
    ++rank;
  }

  SolveData out;
  out.gs.family = fam;
  out.gs.k = k;
  out.gs.n = n;
  out.gs.unique = (rank == J);
  for (int r = rank; r < rows; ++r)
    if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(J)] != 0) {
      out.consistent = false;
      return out;
    }

  std::vector<mpq_class> a(static_cast<std::size_t>(J), mpq_class(0));
  for (int r = rank - 1; r >= 0; --r) {
    mpq_class val = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(J)];
    for (int c = pivot_col[static_cast<std::size_t>(r)] + 1; c < J; ++c) {
      const mpq_class& e = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      if (e != 0) val -= e * a[static_cast<std::size_t>(c)];
    }
    a[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(r)])] = val;
  }
  out.gs.a = a;

  int jmax = -1;
  for (int j = 0; j < J; ++j)
    if (a[static_cast<std::size_t>(j)] != 0) jmax = j;

  std::vector<mpq_class> A(static_cast<std::size_t>(n2) + 1, mpq_class(0));
  if (jmax >= 0) {
    Poly cur = binomial_row(n2, static_cast<std::size_t>(n2) + 1);
    for (int j = 0; j <= jmax; ++j) {
      if (j > 0) advance_chain(cur);
      const mpq_class& aj = a[static_cast<std::size_t>(j)];
      if (aj == 0) continue;
      for (int t = j; t <= n2 - j; ++t) {
        const mpz_class& cv = cur[static_cast<std::size_t>(t)];
        if (cv != 0) A[static_cast<std::size_t>(t)] += aj * cv;
      }
    }
  }

  std::vector<mpq_class> B(static_cast<std::size_t>(n2) + 1, mpq_class(0));
  for (int j = 0; j <= jmax; ++j) {
    const mpq_class& aj = a[static_cast<std::size_t>(j)];
    if (aj == 0) continue;
    const int lead = n2 - 4 * j;
    for (int s = 0; s <= 2 * j; ++s) {
      const int deg = lead + 4 * s;  // y-degree 2t
      if (deg % 2 != 0) continue;
      const int t = deg / 2;
      if (t < 0 || t > n2) continue;
      B[static_cast<std::size_t>(t)] += aj * shadow_coeff(n2, j, t);
    }
  }

  out.gs.code_we.assign(static_cast<std::size_t>(n) + 1, mpq_class(0));
  out.gs.shadow_we.assign(static_cast<std::size_t>(n) + 1, mpq_class(0));
  for (int t = 0; t <= n2; ++t) {
    out.gs.code_we[static_cast<std::size_t>(2 * t)] = A[static_cast<std::size_t>(t)];
    out.gs.shadow_we[static_cast<std::size_t>(2 * t)] = B[static_cast<std::size_t>(t)];
  }
  return out;
}

}  // namespace

GleasonBasisTerm basis_term(int n, int j, int max_t) {
  if (n < 8 || n % 8 != 0) fail(errc::invalid_argument, "length must be a positive multiple of 8");
  const int n2 = n / 2;
  const int n8 = n / 8;
  if (j < 0 || j > n8) fail(errc::invalid_argument, "term index out of range");
  if (max_t < 0 || max_t > n2) fail(errc::invalid_argument, "coefficient range out of bounds");

  GleasonBasisTerm out;
  out.n = n;
  out.j = j;
  const std::size_t len = static_cast<std::size_t>(max_t) + 1;
  Poly p = binomial_row(n2 - 4 * j, len);
  for (int i = 0; i < 2 * j; ++i) mul_one_minus_u(p);
  for (int i = 0; i < j; ++i) mul_u(p);
  out.code = std::move(p);
  out.shadow.resize(len);
  for (int t = 0; t <= max_t; ++t)
    out.shadow[static_cast<std::size_t>(t)] = shadow_coeff(n2, j, t);
  return out;
}

GleasonSolution solve_s_extremal(Family family, int k) {
  if (k < 1) fail(errc::invalid_argument, "family index must be at least 1");
  SolveData sd = solve_impl(family, k);
  if (!sd.consistent)
    fail(errc::inconsistent_system,
         "no enumerator satisfies the constraints at k=" + std::to_string(k));
  if (!sd.gs.unique)
    fail(errc::non_unique_solution,
         "constraint system is underdetermined at k=" + std::to_string(k));
  return std::move(sd.gs);
}

MinCoefficients min_coefficient(const GleasonSolution& gs) {
  MinCoefficients out;
  out.code_min = gs.code_we.empty() ? mpq_class(0) : gs.code_we[0];
  for (const mpq_class& q : gs.code_we)
    if (q < out.code_min) out.code_min = q;
  out.shadow_min = gs.shadow_we.empty() ? mpq_class(0) : gs.shadow_we[0];
  for (const mpq_class& q : gs.shadow_we)
    if (q < out.shadow_min) out.shadow_min = q;
  return out;
}

namespace {

ScanRow scan_one(Family family, int k) {
  auto start = std::chrono::steady_clock::now();
  ScanRow row;
  row.k = k;
  row.n = family_length(family, k);
  SolveData sd = solve_impl(family, k);
  row.unique = sd.gs.unique;
  row.consistent = sd.consistent;
  if (sd.consistent) {
    MinCoefficients mc = min_coefficient(sd.gs);
    row.code_min_sign = sgn(mc.code_min);
    row.shadow_min_sign = sgn(mc.shadow_min);
    for (int i = 0; i <= sd.gs.n; ++i)
      if (sd.gs.code_we[static_cast<std::size_t>(i)] < 0 ||
          sd.gs.shadow_we[static_cast<std::size_t>(i)] < 0) {
        row.first_negative_weight = i;
        break;
      }
  }
  row.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return row;
}

}  // namespace

std::vector<ScanRow> scan_family(Family family, int k_from, int k_to, int workers) {
  if (k_from < 1 || k_to < k_from) fail(errc::invalid_argument, "bad scan range");
  const int count = k_to - k_from + 1;
  std::vector<ScanRow> rows(static_cast<std::size_t>(count));
  workers = std::max(1, std::min(workers, count));
  if (workers == 1) {
    for (int i = 0; i < count; ++i) rows[static_cast<std::size_t>(i)] = scan_one(family, k_from + i);
    return rows;
  }
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(workers));
  for (int id = 0; id < workers; ++id) {
    threads.emplace_back([&, id] {
      for (int i = id; i < count; i += workers)
        rows[static_cast<std::size_t>(i)] = scan_one(family, k_from + i);
    });
  }
  for (std::thread& th : threads) th.join();
  return rows;
}

WeightEnum to_weight_enum(const std::vector<mpq_class>& by_weight, int n) {
  if (static_cast<int>(by_weight.size()) != n + 1)
    fail(errc::invalid_argument, "coefficient vector does not match length");
  WeightEnum we(n);
  for (int i = 0; i <= n; ++i) {
    const mpq_class& q = by_weight[static_cast<std::size_t>(i)];
    if (q.get_den() != 1)
      fail(errc::non_integral, "coefficient at weight " + std::to_string(i) + " is not an integer");
    if (q < 0)
      fail(errc::non_integral, "coefficient at weight " + std::to_string(i) + " is negative");
    we.coeffs[static_cast<std::size_t>(i)] = q.get_num();
  }
  return we;
}

WeightEnum coset_weight_enumerator(const GleasonSolution& gs) {
  if (gs.family != Family::n24k8)
    fail(errc::invalid_argument, "coset enumerator is defined for the 24k+8 family");
  std::vector<mpq_class> v(static_cast<std::size_t>(gs.n) + 1, mpq_class(0));
  for (int i = 0; i <= gs.n; ++i) {
    mpq_class val = gs.shadow_we[static_cast<std::size_t>(i)] / 2;
    if (i % 4 == 2) val += gs.code_we[static_cast<std::size_t>(i)];
    v[static_cast<std::size_t>(i)] = val;
  }
  return to_weight_enum(v, gs.n);
}

WeightEnum neighbor_weight_enum(const GleasonSolution& gs) {
  std::vector<mpq_class> v(static_cast<std::size_t>(gs.n) + 1, mpq_class(0));
  for (int i = 0; i <= gs.n; ++i) {
    mpq_class val = gs.shadow_we[static_cast<std::size_t>(i)] / 2;
    if (i % 4 == 0) val += gs.code_we[static_cast<std::size_t>(i)];
    v[static_cast<std::size_t>(i)] = val;
  }
  return to_weight_enum(v, gs.n);
}

}  // namespace sdw
