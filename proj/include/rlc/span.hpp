#pragma once

#include <cstdint>
#include <vector>

#include "rlc/linalg.hpp"

namespace rlc {

/// Walks one representative per proportionality class of F_q^k \ {0}: the
/// messages whose first nonzero coordinate is 1.
///
/// Order: messages are grouped by leader position j = 0..k-1 (the index of
/// the leading 1). Within a group the trailing coordinates j+1..k-1 run
/// through the base-q reflected Gray code with coordinate k-1 moving
/// fastest, so consecutive messages in a group differ in exactly one
/// coordinate, by one step up or down in the integer encoding of F_q.
/// This order is part of the output contract: traces of span_weights are
/// produced in it.
class ProjectiveWalk {
 public:
  struct Step {
    bool restart;  // a new leader group begins; message = e_leader
    int leader;
    int coord;  // changed coordinate when !restart
    Elem from, to;
  };

  // Throws ParameterError unless 1 <= k and k * ceil(log2 q) <= 64.
  ProjectiveWalk(const Field& f, int k);

  const std::vector<Elem>& message() const noexcept { return msg_; }
  // Moves to the next representative; false once every class was visited.
  // The first call positions the walk on the first message.
  bool next(Step& step);

  static std::uint64_t class_count(unsigned q, int k);

 private:
  unsigned q_;
  int k_;
  int leader_ = -1;
  std::vector<Elem> msg_;
  std::vector<signed char> dir_;
};

/// All (q^k-1)/(q-1) projective representatives, in walk order.
std::vector<std::vector<Elem>> projective_representatives(const Field& f, int k);

/// Weights of one codeword per proportional message class, in walk order.
/// Each step updates the running codeword with one scaled generator row, so
/// the cost is O(n) per class. Rank-deficient inputs are allowed; classes
/// whose codeword is zero contribute weight 0.
std::vector<int> span_weights(const GeneratorSet& g);

/// Histogram h[w] = number of classes whose codeword has weight w (w = 0..n).
std::vector<std::uint64_t> span_weight_histogram(const GeneratorSet& g);

/// Minimum nonzero codeword weight over the span, by exhaustive Gray
/// traversal; 0 when every codeword is zero. If `stop_below` > 0 the walk
/// stops as soon as a nonzero weight < stop_below is seen.
int min_span_weight(const GeneratorSet& g, int stop_below = 0);

}  // namespace rlc
