#include <doctest.h>

#include <random>
#include <set>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "sdw/catalog.hpp"
#include "sdw/shadow.hpp"

using namespace sdw;
using sdw::testing::direct_sum;
using sdw::testing::i2_power;
using sdw::testing::random_self_dual;

namespace {

std::set<std::string> word_set(const BitMat& gen, int n) {
  std::set<std::string> out;
  const int k = gen.rows();
  REQUIRE(k <= 20);
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    BitVec w(n);
    for (int j = 0; j < k; ++j)
      if ((mask >> j) & 1) w ^= gen.row(j);
    out.insert(w.to_string());
  }
  return out;
}

// Shadow as a plain set difference, computed from scratch: filter the
// doubly even words of C, take the kernel of their span, subtract C.
std::set<std::string> brute_shadow(const LinearCode& c) {
  std::set<std::string> code_words = word_set(c.generator(), c.length());
  BitMat even(0, c.length());
  for (const std::string& s : code_words) {
    BitVec w = BitVec::from_string(s);
    if (w.weight() % 4 == 0) even.append_row(w);
  }
  Rref r = rref(even);
  std::set<std::string> dual = word_set(kernel(r.mat), c.length());
  std::set<std::string> shadow;
  for (const std::string& s : dual)
    if (!code_words.count(s)) shadow.insert(s);
  return shadow;
}

}  // namespace

TEST_SUITE("shadow") {

TEST_CASE("smallest instance, two pair blocks") {
  LinearCode c = i2_power(4);
  ShadowDecomp sd = decompose(c);
  CHECK(sd.c0.dim() == 1);
  CHECK(sd.c0.contains(BitVec::from_string("1111")));
  CHECK(sd.rep2.weight() % 4 == 2);
  CHECK(c.contains(sd.rep2));

  std::set<std::string> shadow;
  for (const BitVec& rep : {sd.rep1, sd.rep3}) {
    shadow.insert(rep.to_string());
    shadow.insert((rep ^ BitVec::from_string("1111")).to_string());
  }
  CHECK(shadow == std::set<std::string>{"1010", "0101", "1001", "0110"});
  CHECK(shadow == brute_shadow(c));
}

TEST_CASE("type errors") {
  try {
    static_cast<void>(decompose(extended_qr(23)));
    FAIL("doubly even input must be rejected");
  } catch (const error& e) {
    CHECK(e.code() == errc::not_singly_even);
  }
  try {
    static_cast<void>(decompose(reed_muller(0, 3)));
    FAIL("non-self-dual input must be rejected");
  } catch (const error& e) {
    CHECK(e.code() == errc::not_self_dual);
  }
}

TEST_CASE("decomposition invariants over a random corpus") {
  std::mt19937 rng(404);
  int singly_even_seen = 0;
  for (int trial = 0; trial < 24; ++trial) {
    int n = 4 + 4 * static_cast<int>(rng() % 4);  // 4..16
    LinearCode c = random_self_dual(n, 3, rng);
    if (parity_class(c) != ParityClass::SinglyEven) continue;
    ++singly_even_seen;
    ShadowDecomp sd = decompose(c);

    CHECK(sd.c0.dim() == n / 2 - 1);
    for (int i = 0; i < sd.c0.dim(); ++i) {
      CHECK(sd.c0.generator().row(i).weight() % 4 == 0);
      CHECK(c.contains(sd.c0.generator().row(i)));
    }

    std::set<std::string> code_words = word_set(c.generator(), n);
    std::set<std::string> c0_words = word_set(sd.c0.generator(), n);

    // Reassembly: C0 and rep2 + C0 tile exactly C.
    std::set<std::string> rebuilt = c0_words;
    for (const std::string& s : c0_words)
      rebuilt.insert((BitVec::from_string(s) ^ sd.rep2).to_string());
    CHECK(rebuilt == code_words);

    // The four cosets partition the dual of C0.
    std::set<std::string> dual = word_set(kernel(sd.c0.generator()), n);
    CHECK(dual.size() == 4 * c0_words.size());
    std::set<std::string> tiled;
    for (const BitVec& rep :
         {BitVec(n), sd.rep1, sd.rep2, sd.rep3})
      for (const std::string& s : c0_words)
        tiled.insert((BitVec::from_string(s) ^ rep).to_string());
    CHECK(tiled == dual);

    // Shadow members are orthogonal to all of C0 and lie outside C.
    std::set<std::string> shadow = brute_shadow(c);
    for (const BitVec& rep : {sd.rep1, sd.rep3}) {
      CHECK(shadow.count(rep.to_string()) == 1);
      for (const std::string& s : c0_words)
        CHECK(inner(rep, BitVec::from_string(s)) == 0);
    }

    // Canonical labels: both reps reduced, rep1 the lex-smaller one.
    CHECK(reduce(sd.c0.generator(), sd.rep1) == sd.rep1);
    CHECK(reduce(sd.c0.generator(), sd.rep3) == sd.rep3);
    CHECK(sd.rep1.lex_less(sd.rep3));

    // Enumerator equals the brute tally.
    WeightEnum we = shadow_weight_enumerator(sd);
    WeightEnum brute(n);
    for (const std::string& s : shadow)
      ++brute.coeffs[static_cast<std::size_t>(BitVec::from_string(s).weight())];
    CHECK(we == brute);
  }
  CHECK(singly_even_seen >= 8);
}

TEST_CASE("neighbors at length 8") {
  LinearCode c = i2_power(8);
  ShadowDecomp sd = decompose(c);
  auto [n1, n3] = doubly_even_neighbors(sd);
  for (const LinearCode& nb : {n1, n3}) {
    CHECK(nb.length() == 8);
    CHECK(nb.dim() == 4);
    CHECK(is_self_dual(nb));
    CHECK(parity_class(nb) == ParityClass::DoublyEven);
    // Intersection with C is exactly C0.
    std::set<std::string> meet;
    for (const std::string& s : word_set(nb.generator(), 8))
      if (c.contains(BitVec::from_string(s))) meet.insert(s);
    CHECK(meet == word_set(sd.c0.generator(), 8));
  }
  CHECK_FALSE(n1 == n3);
}

TEST_CASE("neighbor construction needs length divisible by 8") {
  try {
    static_cast<void>(doubly_even_neighbors(decompose(i2_power(4))));
    FAIL("length 4 must be rejected");
  } catch (const error& e) {
    CHECK(e.code() == errc::length_not_multiple_of_8);
  }
}

TEST_CASE("shadow minimum distance bound") {
  SExtremal tiny = s_extremal_check(i2_power(2));
  CHECK(tiny.is_s_extremal);
  CHECK(tiny.d_code == 2);
  CHECK(tiny.d_shadow == 1);

  // All-pairs [16,8,2]: shadow minimum 8 meets 16/2 + 4 - 4.
  SExtremal pairs = s_extremal_check(i2_power(16));
  CHECK(pairs.is_s_extremal);
  CHECK(pairs.d_code == 2);
  CHECK(pairs.d_shadow == 8);

  // Half pairs, half extended Hamming: shadow minimum drops to 4.
  SExtremal mixed = s_extremal_check(direct_sum(i2_power(8), reed_muller(1, 3)));
  CHECK_FALSE(mixed.is_s_extremal);
  CHECK(mixed.d_code == 2);
  CHECK(mixed.d_shadow == 4);
}

TEST_CASE("length 22 mod 24 is reported but never flagged") {
  SExtremal se = s_extremal_check(i2_power(22));
  CHECK_FALSE(se.is_s_extremal);
  CHECK(se.d_code == 2);
  CHECK(se.d_shadow == 11);
}

}  // TEST_SUITE
