#include "rlc/span.hpp"

#include <bit>
#include <string>

#include "rlc/errors.hpp"

namespace rlc {

ProjectiveWalk::ProjectiveWalk(const Field& f, int k) : q_(f.q()), k_(k), msg_(k > 0 ? k : 0, 0), dir_(msg_.size(), 1) {
  const int bits = std::bit_width(q_ - 1);
  if (k < 1 || static_cast<long>(k) * bits > 64)
    throw ParameterError("message dimension k = " + std::to_string(k) + " out of range for q = " + std::to_string(q_));
}

bool ProjectiveWalk::next(Step& step) {
  if (leader_ >= 0) {
    for (int pos = k_ - 1; pos > leader_; --pos) {
      const int to = static_cast<int>(msg_[pos]) + dir_[pos];
      if (to >= 0 && to < static_cast<int>(q_)) {
        step = {false, leader_, pos, msg_[pos], static_cast<Elem>(to)};
        msg_[pos] = static_cast<Elem>(to);
        return true;
      }
      dir_[pos] = static_cast<signed char>(-dir_[pos]);
    }
  }
  if (++leader_ >= k_) return false;
  std::fill(msg_.begin(), msg_.end(), Elem{0});
  std::fill(dir_.begin(), dir_.end(), static_cast<signed char>(1));
  msg_[leader_] = 1;
  step = {true, leader_, leader_, 0, 1};
  return true;
}

std::uint64_t ProjectiveWalk::class_count(unsigned q, int k) {
  std::uint64_t total = 0, power = 1;
  for (int i = 0; i < k; ++i) {
    total += power;
    if (i + 1 < k) power *= q;
  }
  return total;
}

std::vector<std::vector<Elem>> projective_representatives(const Field& f, int k) {
  ProjectiveWalk walk(f, k);
  std::vector<std::vector<Elem>> out;
  out.reserve(ProjectiveWalk::class_count(f.q(), k));
  ProjectiveWalk::Step s;
  while (walk.next(s)) out.push_back(walk.message());
  return out;
}

namespace {

// Calls visit(weight) for each class in walk order; stops early when visit
// returns false.
template <class Visit>
void walk_span(const GeneratorSet& g, Visit&& visit) {
  if (g.k() == 0) return;
  ProjectiveWalk walk(g.field(), g.k());
  ProjectiveWalk::Step s;
  if (g.field().q() == 2) {
    const BitMatrix rows = to_bits(g.matrix());
    std::vector<std::uint64_t> c(rows.words(), 0);
    while (walk.next(s)) {
      const auto r = rows.row(s.coord);
      if (s.restart)
        std::copy(r.begin(), r.end(), c.begin());
      else
        for (std::size_t w = 0; w < c.size(); ++w) c[w] ^= r[w];
      if (!visit(popcount(c))) return;
    }
    return;
  }
  const Field& f = g.field();
  const FqMatrix& m = g.matrix();
  std::vector<Elem> c(g.n(), 0);
  int weight = 0;
  while (walk.next(s)) {
    const auto r = m.row(s.coord);
    if (s.restart) {
      std::copy(r.begin(), r.end(), c.begin());
      weight = 0;
      for (Elem x : c) weight += (x != 0);
    } else {
      const Elem delta = f.sub(s.to, s.from);
      for (int t = 0; t < g.n(); ++t) {
        if (r[t] == 0) continue;
        const Elem before = c[t];
        c[t] = f.add(before, f.mul(delta, r[t]));
        weight += (c[t] != 0) - (before != 0);
      }
    }
    if (!visit(weight)) return;
  }
}

}  // namespace

std::vector<int> span_weights(const GeneratorSet& g) {
  std::vector<int> out;
  if (g.k() > 0) out.reserve(ProjectiveWalk::class_count(g.field().q(), g.k()));
  walk_span(g, [&](int w) {
    out.push_back(w);
    return true;
  });
  return out;
}

std::vector<std::uint64_t> span_weight_histogram(const GeneratorSet& g) {
  std::vector<std::uint64_t> h(g.n() + 1, 0);
  walk_span(g, [&](int w) {
    ++h[w];
    return true;
  });
  return h;
}

int min_span_weight(const GeneratorSet& g, int stop_below) {
  int best = 0;
  walk_span(g, [&](int w) {
    if (w > 0 && (best == 0 || w < best)) best = w;
    return !(stop_below > 0 && best > 0 && best < stop_below);
  });
  return best;
}

}  // namespace rlc
