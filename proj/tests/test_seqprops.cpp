#include <doctest.h>

#include <random>

#include "qf/seqprops.hpp"
#include "test_support.hpp"

using namespace qf;

namespace {

std::vector<Rat> v(std::initializer_list<Rat> xs) { return xs; }

Rat slack_at(const SeqVerdict& s, int i) {
  for (const auto& w : s.witnesses)
    if (w.indices.size() == 1 && w.indices[0] == i) return w.slack;
  FAIL("no witness at index " << i);
  return Rat(0);
}

// Second differences are all <= 0 (sign = -1) or all >= 0 (sign = +1).
std::vector<Rat> random_curved(std::mt19937_64& rng, int len, int sign, bool allow_flat) {
  std::vector<Rat> a{test::random_rat(rng), test::random_rat(rng)};
  Rat step = a[1] - a[0];
  std::uniform_int_distribution<int> coin(0, 2);
  while (static_cast<int>(a.size()) < len) {
    Rat bend = abs(test::random_rat(rng, 8, 5));
    if (allow_flat && coin(rng) == 0) bend = 0;
    step += Rat(sign) * bend;
    a.push_back(a.back() + step);
  }
  return a;
}

}  // namespace

TEST_CASE("concavity examples") {
  CHECK(is_concave(v({0, 1, 0})).holds);
  const SeqVerdict c = is_concave(v({1, 2, 1}));
  CHECK(c.holds);
  CHECK(slack_at(c, 1) == -2);
  const SeqVerdict f = is_concave(v({4, 2, 1}));
  CHECK_FALSE(f.holds);
  CHECK(slack_at(f, 1) == 1);
}

TEST_CASE("convexity examples") {
  const SeqVerdict tight = is_convex(v({Rat(3, 4), Rat(1, 2), Rat(1, 4)}));
  CHECK(tight.holds);
  CHECK(slack_at(tight, 1) == 0);
  CHECK(tight.equality_indices == std::vector<int>{1});

  const SeqVerdict bump = is_convex(v({1, 2, 1}));
  CHECK_FALSE(bump.holds);
  CHECK(slack_at(bump, 1) == -2);

  const SeqVerdict pair = is_convex(v({1, 1, Rat(1, 2)}));
  CHECK_FALSE(pair.holds);
  CHECK(slack_at(pair, 1) == Rat(-1, 2));
}

TEST_CASE("log-concavity examples") {
  const SeqVerdict a = is_log_concave(v({1, 2, 1}));
  CHECK(a.holds);
  CHECK(slack_at(a, 1) == 3);
  const SeqVerdict b = is_log_concave(v({Rat(3, 4), Rat(1, 2), Rat(1, 4)}));
  CHECK(b.holds);
  CHECK(slack_at(b, 1) == Rat(1, 16));
  CHECK_FALSE(is_log_concave(v({1, 1, 2})).holds);
  CHECK_THROWS_AS(is_log_concave(v({1, 0, 1})), Error);
  CHECK_THROWS_AS(is_log_concave(v({1, -1, 1})), Error);
}

TEST_CASE("short sequences are vacuous") {
  for (const auto& s : {v({}), v({5}), v({1, 9})}) {
    CHECK(is_concave(s).holds);
    CHECK(is_convex(s).holds);
    CHECK(s.empty() ? true : is_log_concave(s).holds);
    CHECK(is_convex(s).witnesses.empty());
  }
}

TEST_CASE("three-term combination") {
  CHECK(three_term(v({4, 2, 1}), 0, 1, 2) == 1);
  CHECK(three_term(v({8, 4, 2, 1}), 0, 1, 3) == 5);
  CHECK_THROWS_AS(three_term(v({1, 2, 3}), 0, 0, 2), Error);
  CHECK_THROWS_AS(three_term(v({1, 2, 3}), 0, 1, 3), Error);
  CHECK_THROWS_AS(three_term(v({1, 2, 3}), 2, 1, 0), Error);
  std::mt19937_64 rng(2);
  for (int t = 0; t < 30; ++t) {
    const Rat a0 = test::random_rat(rng), d = test::random_rat(rng);
    std::vector<Rat> ap;
    for (int i = 0; i < 9; ++i) ap.push_back(a0 + Rat(i) * d);
    for (int i = 0; i < 9; ++i)
      for (int j = i + 1; j < 9; ++j)
        for (int k = j + 1; k < 9; ++k) CHECK(three_term(ap, i, j, k) == 0);
  }
}

TEST_CASE("three-term sign follows curvature") {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 60; ++t) {
    const int sign = t % 2 == 0 ? -1 : 1;
    const auto a = random_curved(rng, 3 + t % 8, sign, true);
    const SeqVerdict verdict = sign < 0 ? is_concave(a) : is_convex(a);
    REQUIRE(verdict.holds);
    const int len = static_cast<int>(a.size());
    for (int i = 0; i < len; ++i)
      for (int j = i + 1; j < len; ++j)
        for (int k = j + 1; k < len; ++k) {
          const Rat s = three_term(a, i, j, k);
          CHECK(Rat(sign) * s >= 0);
          bool flat = true;
          for (int r = i + 1; r < k; ++r) flat = flat && slack_at(verdict, r).is_zero();
          CHECK(s.is_zero() == flat);
        }
  }
}

TEST_CASE("concave and convex together means affine") {
  std::mt19937_64 rng(10);
  for (int t = 0; t < 80; ++t) {
    std::vector<Rat> a;
    const Rat a0 = test::random_rat(rng), d = test::random_rat(rng);
    std::uniform_int_distribution<int> pos(0, 6), coin(0, 1);
    for (int i = 0; i < 7; ++i) a.push_back(a0 + Rat(i) * d);
    if (coin(rng)) a[static_cast<std::size_t>(pos(rng))] += test::random_rat(rng, 3, 2) + Rat(1, 7);
    bool affine = true;
    for (std::size_t i = 1; i + 1 < a.size(); ++i) affine = affine && (a[i - 1] - Rat(2) * a[i] + a[i + 1]).is_zero();
    CHECK((is_concave(a).holds && is_convex(a).holds) == affine);
  }
}
