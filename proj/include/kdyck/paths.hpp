#pragma once

// Ground-truth engine: exhaustive enumeration of k-Dyck paths, their turn
// profiles, and a lattice-walk count for path suffixes. Everything here
// is deliberately direct; it is the oracle the analytic routes are
// checked against.

#include "kdyck/closed_form.hpp"
#include "kdyck/numeric.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kdyck {

enum class Step : std::uint8_t { Up, Down };

struct DyckPath {
  int k = 1;
  std::vector<Step> steps;

  bool is_valid() const {
    long long level = 0;
    for (Step st : steps) {
      level += st == Step::Up ? k : -1;
      if (level < 0) return false;
    }
    return level == 0;
  }

  std::string to_string() const {
    std::string out;
    out.reserve(steps.size());
    for (Step st : steps) out.push_back(st == Step::Up ? 'U' : 'D');
    return out;
  }
};

// Levels at the top of each up-step (max-turns) and after the maximal
// down-run following it (min-turns); entry s-1 belongs to the s-th
// up-step. Both vectors have one entry per up-step.
struct TurnProfile {
  std::vector<int> max_levels;
  std::vector<int> min_levels;
};

enum class TurnKind { Min, Max, Osc };

// Visits every k-Dyck path with N up-steps exactly once, in lexicographic
// step order with Up before Down. The path reference passed to the
// visitor is only valid during that call.
template <typename Visitor>
void enumerate_paths(int k, int N, Visitor&& visit) {
  validate_path_class(k, N);
  DyckPath path;
  path.k = k;
  path.steps.reserve(static_cast<std::size_t>(k + 1) * N);
  auto rec = [&](auto&& self, long long level, int ups_left, long long downs_left) -> void {
    if (ups_left == 0 && downs_left == 0) {
      visit(std::as_const(path));
      return;
    }
    if (ups_left > 0) {
      path.steps.push_back(Step::Up);
      self(self, level + k, ups_left - 1, downs_left);
      path.steps.pop_back();
    }
    if (level > 0) {
      path.steps.push_back(Step::Down);
      self(self, level - 1, ups_left, downs_left - 1);
      path.steps.pop_back();
    }
  };
  rec(rec, 0, N, static_cast<long long>(k) * N);
}

// Walks the path slice by slice (an up-step plus its down-run) and
// records the turn levels. Throws on input that is not a k-Dyck path.
inline TurnProfile turn_profile(const DyckPath& p) {
  TurnProfile profile;
  long long level = 0;
  const std::size_t n = p.steps.size();
  std::size_t i = 0;
  while (i < n) {
    if (p.steps[i] != Step::Up)
      throw std::invalid_argument("turn_profile: expected an up-step at position " +
                                  std::to_string(i));
    level += p.k;
    profile.max_levels.push_back(static_cast<int>(level));
    ++i;
    while (i < n && p.steps[i] == Step::Down) {
      --level;
      if (level < 0) throw std::invalid_argument("turn_profile: path dips below the axis");
      ++i;
    }
    profile.min_levels.push_back(static_cast<int>(level));
  }
  if (level != 0) throw std::invalid_argument("turn_profile: path does not end on the axis");
  return profile;
}

// Cumulative s-th turn statistics for every s at once, from one
// enumeration pass. path_count doubles as a sanity check against
// fuss_catalan.
struct TurnSums {
  int k = 1;
  int N = 0;
  Int path_count;
  std::vector<Int> min_sums;  // entry s-1 holds the s-th sum
  std::vector<Int> max_sums;
  std::vector<Int> osc_sums;
};

inline TurnSums oracle_turn_sums(int k, int N) {
  validate_path_class(k, N);
  TurnSums sums;
  sums.k = k;
  sums.N = N;
  sums.path_count = 0;
  sums.min_sums.assign(N, Int(0));
  sums.max_sums.assign(N, Int(0));
  sums.osc_sums.assign(N, Int(0));
  enumerate_paths(k, N, [&](const DyckPath& p) {
    const TurnProfile prof = turn_profile(p);
    ++sums.path_count;
    for (int i = 0; i < N; ++i) {
      sums.min_sums[i] += prof.min_levels[i];
      sums.max_sums[i] += prof.max_levels[i];
      sums.osc_sums[i] += prof.max_levels[i] - prof.min_levels[i];
    }
  });
  return sums;
}

// Cumulative s-th turn statistic of one kind, by enumeration.
inline Int oracle_sum(int k, int N, int s, TurnKind kind) {
  validate(StatRequest{k, N, s});
  Int total = 0;
  enumerate_paths(k, N, [&](const DyckPath& p) {
    const TurnProfile prof = turn_profile(p);
    switch (kind) {
      case TurnKind::Min: total += prof.min_levels[s - 1]; break;
      case TurnKind::Max: total += prof.max_levels[s - 1]; break;
      case TurnKind::Osc: total += prof.max_levels[s - 1] - prof.min_levels[s - 1]; break;
    }
  });
  return total;
}

// Number of length-L step sequences from level h down to level 0 that
// never go below 0, with the first step forced to be an up-step when
// must_start_up is set. Dynamic program over (steps left, level); levels
// above the cap cannot return to 0 in the remaining length, so the
// table stays small.
inline Int suffix_count(int k, int h, long long L, bool must_start_up) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (h < 0) throw std::invalid_argument("suffix_count: h must be >= 0");
  if (L < 0) throw std::invalid_argument("suffix_count: L must be >= 0");
  if (must_start_up) {
    if (L == 0) return 0;
    return suffix_count(k, h + k, L - 1, false);
  }
  const long long cap = std::min<long long>(L, h + k * ((L + k) / (k + 1)));
  if (h > cap) return 0;
  std::vector<Int> ways(static_cast<std::size_t>(cap) + 1, Int(0));
  ways[0] = 1;
  for (long long t = 1; t <= L; ++t) {
    std::vector<Int> next(static_cast<std::size_t>(cap) + 1, Int(0));
    for (long long lvl = 0; lvl <= cap; ++lvl) {
      Int v = lvl + k <= cap ? ways[static_cast<std::size_t>(lvl + k)] : Int(0);
      if (lvl >= 1) v += ways[static_cast<std::size_t>(lvl - 1)];
      next[static_cast<std::size_t>(lvl)] = std::move(v);
    }
    ways.swap(next);
  }
  return ways[static_cast<std::size_t>(h)];
}

}  // namespace kdyck
