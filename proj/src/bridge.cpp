#include "sdw/bridge.hpp"

#include <string>
#include <utility>

namespace sdw {

void BridgeReport::note(std::string what, std::string value, bool verified) {
  checks.push_back(BridgeCheck{std::move(what), std::move(value), verified});
}

int family_index(int n) {
  if (n < 32 || n % 24 != 8)
    fail(errc::precondition_failed,
         "length must be 24k+8 with k >= 1, got " + std::to_string(n));
  return (n - 8) / 24;
}

namespace {

void check_extremal_doubly_even(const LinearCode& d, int k,
                                const BridgeOptions& opt, BridgeReport* report) {
  if (!is_self_dual(d)) fail(errc::precondition_failed, "input code is not self-dual");
  if (parity_class(d) != ParityClass::DoublyEven)
    fail(errc::precondition_failed, "input code is not doubly even");
  if (!opt.assume_preconditions) {
    int dmin = min_weight_bz(d).weight;
    if (dmin != 4 * k + 4)
      fail(errc::precondition_failed,
           "input minimum weight " + std::to_string(dmin) + ", expected " +
               std::to_string(4 * k + 4));
    if (report) report->note("input minimum weight", std::to_string(dmin), true);
  }
}

mpz_class sphere_size(int n, int radius) {
  mpz_class total = 0;
  for (int w = 0; w <= radius; ++w) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(w));
    total += b;
  }
  return total;
}

}  // namespace

LinearCode from_doubly_even(const LinearCode& d, const BitVec& v,
                            const BridgeOptions& opt, BridgeReport* report) {
  const int n = d.length();
  const int k = family_index(n);
  if (report) *report = {"from doubly even", {}};
  if (v.length() != n)
    fail(errc::length_mismatch, "vector length does not match code length");
  check_extremal_doubly_even(d, k, opt, report);
  if (v.weight() % 2 != 0)
    fail(errc::precondition_failed, "coset vector must have even weight");
  if (d.contains(v))
    fail(errc::precondition_failed, "vector lies in the code; pick a proper coset");
  if (!opt.assume_preconditions) {
    CosetBound cb = coset_min_weight(d, v, opt.budget);
    if (!cb.exact)
      fail(errc::budget_exceeded,
           "coset minimum weight not verifiable within budget; "
           "set assume_preconditions to override");
    if (cb.weight != 4 * k + 2)
      fail(errc::precondition_failed,
           "coset minimum weight " + std::to_string(cb.weight) + ", expected " +
               std::to_string(4 * k + 2));
    if (report) report->note("coset minimum weight", std::to_string(cb.weight), true);
  }

  std::vector<BitVec> rows = d.generator().row_list();
  int star = -1;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (inner(v, rows[i])) {
      star = static_cast<int>(i);
      break;
    }
  assert(star >= 0);  // v outside a self-dual code can not be orthogonal to it
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (static_cast<int>(i) != star && inner(v, rows[i]))
      rows[i] ^= rows[static_cast<std::size_t>(star)];

  BitVec rep = v;
  if (rep.weight() % 4 != 2) rep ^= rows[static_cast<std::size_t>(star)];
  assert(rep.weight() % 4 == 2);
  rows[static_cast<std::size_t>(star)] = std::move(rep);
  LinearCode out{BitMat(std::move(rows))};

  if (out.dim() != n / 2 || !is_self_dual(out) ||
      parity_class(out) != ParityClass::SinglyEven)
    fail(errc::precondition_failed, "construction did not yield a singly even self-dual code");
  if (!opt.assume_preconditions) {
    int dmin = min_weight_bz(out).weight;
    if (dmin != 4 * k + 2)
      fail(errc::precondition_failed,
           "constructed code has minimum weight " + std::to_string(dmin) +
               ", expected " + std::to_string(4 * k + 2));
    if (report) report->note("output minimum weight", std::to_string(dmin), true);
    if (n / 2 < 63 && (std::uint64_t{1} << (n / 2)) <= opt.budget.enum_visits) {
      SExtremal se = s_extremal_check(out, opt.budget);
      if (!se.is_s_extremal || se.d_shadow != 4 * k + 4)
        fail(errc::precondition_failed, "constructed code is not s-extremal");
      if (report)
        report->note("output shadow minimum weight", std::to_string(se.d_shadow), true);
    } else if (report) {
      report->note("output shadow minimum weight", std::to_string(4 * k + 4), false);
    }
  }
  return out;
}

ToDoublyEven to_doubly_even(const LinearCode& c, const BridgeOptions& opt,
                            BridgeReport* report) {
  const int n = c.length();
  const int k = family_index(n);
  if (report) *report = {"to doubly even", {}};

  SExtremal se = s_extremal_check(c, opt.budget);
  if (!se.is_s_extremal)
    fail(errc::not_s_extremal,
         "input has d=" + std::to_string(se.d_code) +
             ", d(S)=" + std::to_string(se.d_shadow) + " and is not s-extremal");
  if (se.d_code != 4 * k + 2)
    fail(errc::not_s_extremal,
         "correspondence needs minimum weight 4k+2 = " + std::to_string(4 * k + 2) +
             ", got " + std::to_string(se.d_code));
  if (report) {
    report->note("input minimum weight", std::to_string(se.d_code), true);
    report->note("input shadow minimum weight", std::to_string(se.d_shadow), true);
  }

  ShadowDecomp sd = decompose(c);
  auto [n1, n3] = doubly_even_neighbors(sd);
  for (const LinearCode* nb : {&n1, &n3}) {
    if (!is_extremal(*nb))
      fail(errc::precondition_failed, "neighbor is not extremal");
  }
  if (report) report->note("neighbor minimum weight", std::to_string(4 * k + 4), true);

  // rep2 + N1 is C2 u C3 and rep2 + N3 is C1 u C2; both must be cosets of
  // minimum weight 4k+2.
  for (const LinearCode* nb : {&n1, &n3}) {
    CosetBound cb = coset_min_weight(*nb, sd.rep2, opt.budget);
    if (!cb.exact)
      fail(errc::budget_exceeded, "coset verification exceeds budget");
    if (cb.weight != 4 * k + 2)
      fail(errc::precondition_failed, "code coset of neighbor has unexpected minimum weight " +
                                          std::to_string(cb.weight));
  }
  if (report) report->note("coset minimum weight", std::to_string(4 * k + 2), true);

  std::uint64_t entries = std::uint64_t{1} << (n / 2);
  bool radius_feasible = (n / 2) < 63 && entries <= opt.budget.synd_entries &&
                         sphere_size(n, 4 * k + 2) <= opt.budget.enum_visits;
  if (radius_feasible) {
    for (const LinearCode* nb : {&n1, &n3}) {
      SyndromeTable t = build_syndrome_table(*nb, opt.budget);
      if (covering_radius(t) != 4 * k + 2)
        fail(errc::precondition_failed,
             "neighbor covering radius " + std::to_string(covering_radius(t)) +
                 ", expected " + std::to_string(4 * k + 2));
    }
    if (report) report->note("neighbor covering radius", std::to_string(4 * k + 2), true);
  } else if (report) {
    report->note("neighbor covering radius", std::to_string(4 * k + 2), false);
  }

  return {std::move(n1), std::move(n3), 4 * k + 2};
}

std::vector<LinearCode> census_from_cosets(const LinearCode& d,
                                           const BridgeOptions& opt,
                                           BridgeReport* report) {
  const int n = d.length();
  const int k = family_index(n);
  if (report) *report = {"census from cosets", {}};
  check_extremal_doubly_even(d, k, opt, report);

  SyndromeTable table = build_syndrome_table(d, opt.budget);
  std::vector<std::pair<std::uint64_t, BitVec>> members =
      min_weight_coset_members(table, 4 * k + 2);
  if (report)
    report->note("cosets of minimum weight " + std::to_string(4 * k + 2),
                 std::to_string(members.size()), true);

  BridgeOptions fast = opt;
  fast.assume_preconditions = true;
  std::vector<LinearCode> out;
  out.reserve(members.size());
  for (const auto& [syn, vec] : members) {
    (void)syn;
    out.push_back(from_doubly_even(d, vec, fast, nullptr));
  }
  return out;
}

}  // namespace sdw
