#include "sdw/coset.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <istream>
#include <ostream>
#include <string>
#include <thread>

namespace sdw {

namespace {

constexpr std::uint8_t kUnseen = 255;

std::vector<std::uint64_t> column_syndromes(const LinearCode& c) {
  BitMat h = kernel(c.generator());
  const int r = h.rows();
  std::vector<std::uint64_t> cols(static_cast<std::size_t>(c.length()), 0);
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < c.length(); ++i)
      if (h.row(j).get(i)) cols[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
  return cols;
}

// All weight-w vectors whose smallest set coordinate is f, one revolving-door
// pass over the remaining coordinates. visit(syndrome) for the serial path;
// track(out, in) is also informed so callers can mirror the vector itself.
template <typename Visit, typename Track>
void scan_layer_from(const std::vector<std::uint64_t>& col, int n, int w, int f,
                     Visit&& visit, Track&& track) {
  const int m = n - 1 - f;  // coordinates above f
  if (w - 1 > m) return;
  std::uint64_t syn = col[static_cast<std::size_t>(f)];
  for (int i = 0; i < w - 1; ++i) syn ^= col[static_cast<std::size_t>(f + 1 + i)];
  visit(syn);
  revolving_door(m, w - 1, [&](int out, int in) {
    syn ^= col[static_cast<std::size_t>(f + 1 + out)] ^ col[static_cast<std::size_t>(f + 1 + in)];
    track(f + 1 + out, f + 1 + in);
    visit(syn);
  });
}

}  // namespace

SyndromeTable::SyndromeTable(LinearCode code, std::vector<std::uint64_t> col_synd,
                             std::vector<std::uint8_t> weights,
                             std::vector<BitVec> leaders, int radius)
    : code_(std::move(code)),
      col_synd_(std::move(col_synd)),
      weights_(std::move(weights)),
      leaders_(std::move(leaders)),
      radius_(radius) {}

std::uint64_t SyndromeTable::syndrome(const BitVec& v) const {
  if (v.length() != code_.length())
    fail(errc::length_mismatch, "vector length does not match code length");
  std::uint64_t s = 0;
  for (int i : v.support0()) s ^= col_synd_[static_cast<std::size_t>(i)];
  return s;
}

SyndromeTable build_syndrome_table(const LinearCode& c, const Budget& budget,
                                   bool store_leaders) {
  const int n = c.length();
  const int r = n - c.dim();
  if (r >= 63 || (std::uint64_t{1} << r) > budget.synd_entries)
    fail(errc::budget_exceeded,
         "syndrome table of 2^" + std::to_string(r) + " entries exceeds budget");
  const std::uint64_t size = std::uint64_t{1} << r;
  std::vector<std::uint64_t> col = column_syndromes(c);
  std::vector<std::uint8_t> weights(size, kUnseen);
  std::vector<BitVec> leaders;
  if (store_leaders) leaders.assign(size, BitVec(n));
  weights[0] = 0;
  std::uint64_t remaining = size - 1;
  int radius = 0;

  int workers = std::max(1, budget.workers);
  for (int w = 1; w <= n && remaining > 0; ++w) {
    std::uint64_t marked = 0;
    if (workers == 1 || store_leaders) {
      BitVec cur(n);
      for (int f = 0; f + w <= n; ++f) {
        for (int i = 0; i < n; ++i) cur.set(i, i >= f && i < f + w);
        scan_layer_from(
            col, n, w, f,
            [&](std::uint64_t syn) {
              if (weights[syn] == kUnseen) {
                weights[syn] = static_cast<std::uint8_t>(w);
                if (store_leaders) leaders[syn] = cur;
                ++marked;
              }
            },
            [&](int out, int in) {
              if (store_leaders) {
                cur.flip(out);
                cur.flip(in);
              }
            });
      }
    } else {
      std::vector<std::uint64_t> part(static_cast<std::size_t>(workers), 0);
      std::vector<std::thread> threads;
      threads.reserve(static_cast<std::size_t>(workers));
      for (int id = 0; id < workers; ++id) {
        threads.emplace_back([&, id] {
          std::uint64_t mine = 0;
          for (int f = id; f + w <= n; f += workers) {
            scan_layer_from(
                col, n, w, f,
                [&](std::uint64_t syn) {
                  std::atomic_ref<std::uint8_t> cell(weights[syn]);
                  std::uint8_t expect = kUnseen;
                  if (cell.load(std::memory_order_relaxed) == kUnseen &&
                      cell.compare_exchange_strong(expect, static_cast<std::uint8_t>(w),
                                                   std::memory_order_relaxed))
                    ++mine;
                },
                [](int, int) {});
          }
          part[static_cast<std::size_t>(id)] = mine;
        });
      }
      for (std::thread& th : threads) th.join();
      for (std::uint64_t p : part) marked += p;
    }
    if (marked > 0) radius = w;
    remaining -= marked;
  }
  if (remaining != 0) fail(errc::invalid_argument, "syndrome layering did not converge");
  return SyndromeTable(c, std::move(col), std::move(weights), std::move(leaders), radius);
}

int covering_radius(const SyndromeTable& t) { return t.max_leader_weight(); }

CosetBound coset_min_weight(const LinearCode& c, const BitVec& v,
                            const Budget& budget) {
  if (v.length() != c.length())
    fail(errc::length_mismatch, "vector length does not match code length");
  const int k = c.dim();
  if (k < 63 && (std::uint64_t{1} << k) <= budget.enum_visits) {
    int best = INT_MAX;
    gray_visit(c.generator(), v, 0, std::uint64_t{1} << k,
               [&](const std::uint64_t*, int w) {
                 if (w < best) best = w;
               });
    return {best, true};
  }
  // Over budget: evaluate the given representative and its single-row
  // perturbations; an upper bound, reported as such.
  int best = v.weight();
  for (int i = 0; i < c.generator().rows(); ++i) {
    int w = (v ^ c.generator().row(i)).weight();
    if (w < best) best = w;
  }
  return {best, false};
}

int coset_min_weight(const SyndromeTable& t, const BitVec& v) {
  return t.leader_weight(t.syndrome(v));
}

CosetWE coset_weight_enumerator(const LinearCode& c, const BitVec& v,
                                const Budget& budget) {
  if (v.length() != c.length())
    fail(errc::length_mismatch, "vector length does not match code length");
  std::vector<std::uint64_t> tally = coset_weight_tally(c.generator(), v, budget);
  CosetWE out;
  out.rep = reduce(c.generator(), v);
  out.we = WeightEnum(c.length());
  for (std::size_t i = 0; i < tally.size(); ++i) out.we.coeffs[i] = mpz_class(tally[i]);
  return out;
}

int delsarte_bound(const WeightEnum& we_dual) {
  int count = 0;
  for (int i = 1; i <= we_dual.n; ++i)
    if (we_dual.coeffs[static_cast<std::size_t>(i)] != 0) ++count;
  return count;
}

int delsarte_bound_from_min_weight(int n, int d, ParityClass parity) {
  if (n <= 0 || n % 2 != 0 || d <= 0 || 2 * d > n)
    fail(errc::invalid_argument, "need even n and 0 < d <= n/2");
  int step;
  switch (parity) {
    case ParityClass::DoublyEven:
      step = 4;
      break;
    case ParityClass::SinglyEven:
      step = 2;
      break;
    default:
      fail(errc::invalid_argument, "self-dual codes are even");
  }
  return (n - 2 * d) / step + 2;
}

std::uint64_t census_min_weight_cosets(const SyndromeTable& t, int w) {
  std::uint64_t count = 0;
  for (std::uint64_t s = 0; s < t.size(); ++s)
    if (t.leader_weight(s) == w) ++count;
  return count;
}

std::vector<std::pair<std::uint64_t, BitVec>> min_weight_coset_members(
    const SyndromeTable& t, int w) {
  std::vector<std::pair<std::uint64_t, BitVec>> out;
  if (w <= 0) {
    if (w == 0) out.emplace_back(0, BitVec(t.code().length()));
    return out;
  }
  if (t.has_leaders()) {
    for (std::uint64_t s = 0; s < t.size(); ++s)
      if (t.leader_weight(s) == w) out.emplace_back(s, t.leader(s));
    return out;
  }
  const LinearCode& c = t.code();
  const int n = c.length();
  std::vector<std::uint64_t> col = column_syndromes(c);
  std::vector<bool> taken(t.size(), false);
  BitVec cur(n);
  for (int f = 0; f + w <= n; ++f) {
    for (int i = 0; i < n; ++i) cur.set(i, i >= f && i < f + w);
    scan_layer_from(
        col, n, w, f,
        [&](std::uint64_t syn) {
          if (t.leader_weight(syn) == w && !taken[syn]) {
            taken[syn] = true;
            out.emplace_back(syn, cur);
          }
        },
        [&](int out_c, int in_c) {
          cur.flip(out_c);
          cur.flip(in_c);
        });
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

namespace {

void put_u32(std::ostream& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.put(static_cast<char>((v >> (8 * i)) & 0xFF));
}

void put_u64(std::ostream& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.put(static_cast<char>((v >> (8 * i)) & 0xFF));
}

std::uint32_t get_u32(std::istream& in) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) {
    int c = in.get();
    if (c < 0) fail(errc::parse_error, "truncated syndrome dump");
    v |= static_cast<std::uint32_t>(c & 0xFF) << (8 * i);
  }
  return v;
}

std::uint64_t get_u64(std::istream& in) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) {
    int c = in.get();
    if (c < 0) fail(errc::parse_error, "truncated syndrome dump");
    v |= static_cast<std::uint64_t>(c & 0xFF) << (8 * i);
  }
  return v;
}

}  // namespace

void save_syndrome_weights(const SyndromeTable& t, std::ostream& out) {
  put_u32(out, static_cast<std::uint32_t>(t.code().length()));
  put_u32(out, static_cast<std::uint32_t>(t.code().dim()));
  put_u64(out, t.size());
  out.write(reinterpret_cast<const char*>(t.leader_weights().data()),
            static_cast<std::streamsize>(t.size()));
}

SyndromeDump load_syndrome_weights(std::istream& in) {
  SyndromeDump d;
  d.n = static_cast<int>(get_u32(in));
  d.k = static_cast<int>(get_u32(in));
  std::uint64_t count = get_u64(in);
  if (d.n <= 0 || d.k < 0 || d.k > d.n || d.n - d.k >= 63 ||
      count != (std::uint64_t{1} << (d.n - d.k)))
    fail(errc::parse_error, "syndrome dump header is inconsistent");
  d.weights.resize(count);
  in.read(reinterpret_cast<char*>(d.weights.data()), static_cast<std::streamsize>(count));
  if (static_cast<std::uint64_t>(in.gcount()) != count)
    fail(errc::parse_error, "truncated syndrome dump");
  return d;
}

}  // namespace sdw
