#pragma once

// Test-only brute-force enumeration of synchronized walker pairs. Kept
// deliberately independent of the production counting code: walkers are
// simulated step by step and configurations are counted by exhaustion.

#include <functional>
#include <map>

namespace oracle {

struct PairState {
  long ax, ay, bx, by;
};

// Pairs of up/right walks from (ell/2, 0) and (0, ell/2) whose first
// coincidence is at (x, y). Walks stop on meeting.
inline long first_meet_count(long x, long y, long ell) {
  const long half = ell / 2;
  const long tau = x + y - half;
  if (tau < 0) return 0;
  long count = 0;
  std::function<void(PairState, long)> go = [&](PairState s, long step) {
    if (s.ax == s.bx && s.ay == s.by) {
      if (step == tau && s.ax == x && s.ay == y) ++count;
      return;
    }
    if (step == tau) return;
    for (int da = 0; da < 2; ++da)
      for (int db = 0; db < 2; ++db) {
        PairState n = s;
        if (da) ++n.ax; else ++n.ay;
        if (db) ++n.bx; else ++n.by;
        go(n, step + 1);
      }
  };
  go({half, 0, 0, half}, 0);
  return count;
}

inline long first_meet_diagonal(long z, long ell) {
  long total = 0;
  for (long x = 0; x <= z; ++x) total += first_meet_count(x, z - x, ell);
  return total;
}

// Surviving walker-pair configurations after T steps, keyed by the final
// l1-separation r. Meeting strictly before step T prunes the branch;
// meeting exactly at step T lands in r = 0.
inline std::map<long, long> j_by_sep(long T, long ell) {
  const long half = ell / 2;
  std::map<long, long> out;
  std::function<void(PairState, long)> go = [&](PairState s, long step) {
    const bool met = (s.ax == s.bx && s.ay == s.by);
    if (met && step < T) return;  // merged earlier; not a truncation survivor
    if (step == T) {
      const long r = std::abs(s.ax - s.bx) + std::abs(s.ay - s.by);
      ++out[r];
      return;
    }
    if (met) return;
    for (int da = 0; da < 2; ++da)
      for (int db = 0; db < 2; ++db) {
        PairState n = s;
        if (da) ++n.ax; else ++n.ay;
        if (db) ++n.bx; else ++n.by;
        go(n, step + 1);
      }
  };
  go({half, 0, 0, half}, 0);
  return out;
}

inline long j_total(long T, long ell) {
  long total = 0;
  for (const auto& [r, c] : j_by_sep(T, ell)) total += c;
  return total;
}

}  // namespace oracle
