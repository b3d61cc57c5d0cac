#include "doctest.h"

#include <algorithm>
#include <set>

#include "rlc/errors.hpp"
#include "rlc/linalg.hpp"
#include "rlc/min_distance.hpp"
#include "rlc/rng.hpp"
#include "rlc/span.hpp"

using namespace rlc;

namespace {

GeneratorSet random_generator(const Field& f, int k, int n, std::uint64_t seed) {
  CounterRng rng(seed);
  ElementSampler draw(f.q());
  FqMatrix m(k, n);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = static_cast<Elem>(draw(rng));
  return GeneratorSet(f, m);
}

// Minimum nonzero weight over every message, no projective reduction.
int brute_min_weight(const GeneratorSet& g) {
  const unsigned q = g.field().q();
  std::uint64_t total = 1;
  for (int i = 0; i < g.k(); ++i) total *= q;
  int best = 0;
  std::vector<Elem> msg(g.k());
  for (std::uint64_t x = 1; x < total; ++x) {
    std::uint64_t y = x;
    for (auto& m : msg) {
      m = static_cast<Elem>(y % q);
      y /= q;
    }
    const int w = encode(g, msg).weight();
    if (w > 0 && (best == 0 || w < best)) best = w;
  }
  return best;
}

}  // namespace

TEST_CASE("rank of a generator set") {
  const auto f = Field::of_order(2);
  CHECK(rank(GeneratorSet(f, {FqVector{1, 0, 1}, FqVector{0, 1, 1}})) == 2);
  CHECK(rank(GeneratorSet(f, {FqVector{1, 1, 0}, FqVector{1, 1, 0}})) == 1);
  CHECK(rank(GeneratorSet(f, {FqVector{0, 0, 0}})) == 0);
  const auto f3 = Field::of_order(3);
  CHECK(rank(GeneratorSet(f3, {FqVector{1, 2, 0}, FqVector{2, 1, 0}})) == 1);
}

TEST_CASE("packed and dense elimination agree over F_2") {
  const auto f = Field::of_order(2);
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto g = random_generator(f, 5, 70, seed);
    FqMatrix dense = g.matrix();
    BitMatrix bits = to_bits(dense);
    const auto p1 = reduce_rows(f, dense);
    const auto p2 = reduce_rows(bits);
    CHECK(p1 == p2);
    CHECK(from_bits(bits) == dense);
  }
}

TEST_CASE("projective walk visits each class once in Gray order") {
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    const auto f = Field::of_order(q);
    const int k = 3;
    const auto reps = projective_representatives(f, k);
    CHECK(reps.size() == ProjectiveWalk::class_count(q, k));
    std::set<std::vector<Elem>> seen(reps.begin(), reps.end());
    CHECK(seen.size() == reps.size());
    for (const auto& r : reps) {
      const auto lead = std::find_if(r.begin(), r.end(), [](Elem x) { return x != 0; });
      REQUIRE(lead != r.end());
      CHECK(*lead == 1);
    }
    for (std::size_t i = 1; i < reps.size(); ++i) {
      const auto lead_a = std::find(reps[i - 1].begin(), reps[i - 1].end(), 1) - reps[i - 1].begin();
      const auto lead_b = std::find(reps[i].begin(), reps[i].end(), 1) - reps[i].begin();
      if (lead_a != lead_b) continue;
      int changed = 0;
      for (int c = 0; c < k; ++c) changed += reps[i - 1][c] != reps[i][c];
      CHECK(changed == 1);
    }
  }
}

TEST_CASE("binary walk order for k = 2") {
  const auto reps = projective_representatives(Field::of_order(2), 2);
  REQUIRE(reps.size() == 3);
  CHECK(reps[0] == std::vector<Elem>{1, 0});
  CHECK(reps[1] == std::vector<Elem>{1, 1});
  CHECK(reps[2] == std::vector<Elem>{0, 1});
}

TEST_CASE("span weights match direct encoding") {
  for (unsigned q : {2u, 3u, 4u}) {
    const auto f = Field::of_order(q);
    const auto g = random_generator(f, 3, 9, 100 + q);
    const auto reps = projective_representatives(f, 3);
    const auto w = span_weights(g);
    REQUIRE(w.size() == reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i) CHECK(w[i] == encode(g, reps[i]).weight());
  }
}

TEST_CASE("weight histogram of the [7,4] Hamming code") {
  const auto f = Field::of_order(2);
  GeneratorSet g(f, {FqVector{1, 0, 0, 0, 1, 1, 0}, FqVector{0, 1, 0, 0, 1, 0, 1}, FqVector{0, 0, 1, 0, 0, 1, 1},
                     FqVector{0, 0, 0, 1, 1, 1, 1}});
  const auto h = span_weight_histogram(g);
  CHECK(h[3] == 7);
  CHECK(h[4] == 7);
  CHECK(h[7] == 1);
  CHECK(min_span_weight(g) == 3);
  CHECK(min_distance(g).distance == 3);
  CHECK(min_distance_at_least(g, 3).at_least);
  CHECK_FALSE(min_distance_at_least(g, 4).at_least);
}

TEST_CASE("zero and rank-deficient spans") {
  const auto f = Field::of_order(3);
  GeneratorSet zero(f, {FqVector{0, 0, 0}, FqVector{0, 0, 0}});
  CHECK(min_span_weight(zero) == 0);
  CHECK(min_distance(zero).distance == 0);
  GeneratorSet dup(f, {FqVector{1, 2, 0}, FqVector{2, 1, 0}});
  CHECK(min_span_weight(dup) == 2);
  CHECK(min_distance(dup).distance == 2);
}

TEST_CASE("information-set distance equals exhaustive distance") {
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    const auto f = Field::of_order(q);
    for (int trial = 0; trial < 25; ++trial) {
      const int k = 2 + trial % 4, n = k + 3 + trial % 7;
      const auto g = random_generator(f, k, n, 1000 * q + trial);
      CAPTURE(q);
      CAPTURE(trial);
      const int d = brute_min_weight(g);
      CHECK(min_span_weight(g) == d);
      CHECK(min_distance(g).distance == d);
      if (d > 0) {
        CHECK(min_distance_at_least(g, d).at_least);
        CHECK_FALSE(min_distance_at_least(g, d + 1).at_least);
      }
    }
  }
}

TEST_CASE("information sets on a binary code of length 64") {
  const auto f = Field::of_order(2);
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const auto g = random_generator(f, 14, 64, 7 + seed);
    CHECK(min_distance(g).distance == min_span_weight(g));
  }
}
