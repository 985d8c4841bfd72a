#pragma once

#include <set>
#include <string_view>
#include <vector>

#include "baxter/permutation.hpp"

namespace baxter {

/// The five lattice congruences on the weak order handled here.
enum class CongruenceKind { C231, C312, CSUB, CTB, C3412 };

inline CongruenceKind parse_congruence(std::string_view name) {
  if (name == "231") return CongruenceKind::C231;
  if (name == "312") return CongruenceKind::C312;
  if (name == "sub") return CongruenceKind::CSUB;
  if (name == "tb") return CongruenceKind::CTB;
  if (name == "3412") return CongruenceKind::C3412;
  throw InvalidInput("unknown congruence: " + std::string(name));
}

inline const char* congruence_name(CongruenceKind k) {
  switch (k) {
    case CongruenceKind::C231: return "231";
    case CongruenceKind::C312: return "312";
    case CongruenceKind::CSUB: return "sub";
    case CongruenceKind::CTB: return "tb";
    case CongruenceKind::C3412: return "3412";
  }
  return "?";
}

enum class MoveKind { m231_213, m312_132, m3412_3142, m2413_2143 };
enum class MoveDirection { down, up };

/// A single rewriting move: swap the adjacent pair at word positions
/// (position, position+1), 0-based.  Applying a move and then its reverse
/// is the identity.
struct Move {
  int position = 0;
  MoveDirection direction = MoveDirection::down;
  MoveKind kind = MoveKind::m231_213;
};

namespace detail {

inline Permutation swap_adjacent(const Permutation& x, int i) {
  std::vector<int> w = x.word();
  std::swap(w[static_cast<size_t>(i)], w[static_cast<size_t>(i) + 1]);
  return Permutation(unchecked, std::move(w));
}

// Witness data at word positions (i, i+1): values strictly between the
// two swapped entries, split by side.
struct Witnesses {
  int minL, maxL, minR, maxR;
  bool has_left() const { return maxL > 0; }
  bool has_right() const { return maxR > 0; }
};

inline Witnesses witnesses_at(const Permutation& x, int i) {
  const int n = x.size();
  int lo = std::min(x[i], x[i + 1]), hi = std::max(x[i], x[i + 1]);
  Witnesses w{n + 1, 0, n + 1, 0};
  for (int j = 0; j < i; ++j) {
    int v = x[j];
    if (v > lo && v < hi) { w.minL = std::min(w.minL, v); w.maxL = std::max(w.maxL, v); }
  }
  for (int j = i + 2; j < n; ++j) {
    int v = x[j];
    if (v > lo && v < hi) { w.minR = std::min(w.minR, v); w.maxR = std::max(w.maxR, v); }
  }
  return w;
}

inline bool move_applies(MoveKind k, const Witnesses& w) {
  switch (k) {
    case MoveKind::m231_213: return w.has_left();
    case MoveKind::m312_132: return w.has_right();
    case MoveKind::m3412_3142: return w.has_left() && w.has_right() && w.minR < w.maxL;
    case MoveKind::m2413_2143: return w.has_left() && w.has_right() && w.minL < w.maxR;
  }
  return false;
}

// One move per applicable position.  When several kinds of a union
// congruence apply at the same position, the resulting cover is the same
// permutation; the first applicable kind is reported.
inline bool position_move(CongruenceKind c, const Permutation& x, int i, MoveKind* out) {
  const Witnesses w = witnesses_at(x, i);
  switch (c) {
    case CongruenceKind::C231:
      if (move_applies(MoveKind::m231_213, w)) { *out = MoveKind::m231_213; return true; }
      return false;
    case CongruenceKind::C312:
      if (move_applies(MoveKind::m312_132, w)) { *out = MoveKind::m312_132; return true; }
      return false;
    case CongruenceKind::CSUB:
      // Direct condition: swapped entries differ in value by two or more.
      if (std::abs(x[i] - x[i + 1]) >= 2) {
        *out = w.has_left() ? MoveKind::m231_213 : MoveKind::m312_132;
        return true;
      }
      return false;
    case CongruenceKind::CTB:
      if (move_applies(MoveKind::m3412_3142, w)) { *out = MoveKind::m3412_3142; return true; }
      if (move_applies(MoveKind::m2413_2143, w)) { *out = MoveKind::m2413_2143; return true; }
      return false;
    case CongruenceKind::C3412:
      if (move_applies(MoveKind::m3412_3142, w)) { *out = MoveKind::m3412_3142; return true; }
      return false;
  }
  return false;
}

}  // namespace detail

/// All covers x <. y with x congruent to y mod the given congruence,
/// obtained by swapping an adjacent descent of y.
inline std::vector<std::pair<Move, Permutation>> down_moves(const Permutation& y,
                                                            CongruenceKind k) {
  std::vector<std::pair<Move, Permutation>> out;
  for (int i = 0; i + 1 < y.size(); ++i) {
    if (y[i] <= y[i + 1]) continue;
    MoveKind kind;
    if (detail::position_move(k, y, i, &kind))
      out.push_back({Move{i, MoveDirection::down, kind}, detail::swap_adjacent(y, i)});
  }
  return out;
}

/// All covers y >. x with y congruent to x, obtained by swapping an
/// adjacent ascent of x.
inline std::vector<std::pair<Move, Permutation>> up_moves(const Permutation& x,
                                                          CongruenceKind k) {
  std::vector<std::pair<Move, Permutation>> out;
  for (int i = 0; i + 1 < x.size(); ++i) {
    if (x[i] >= x[i + 1]) continue;
    MoveKind kind;
    if (detail::position_move(k, x, i, &kind))
      out.push_back({Move{i, MoveDirection::up, kind}, detail::swap_adjacent(x, i)});
  }
  return out;
}

/// Minimal element of the congruence class: repeatedly applies the
/// applicable down-move with the smallest position.
inline Permutation project_down(Permutation y, CongruenceKind k) {
  for (;;) {
    bool moved = false;
    for (int i = 0; i + 1 < y.size() && !moved; ++i) {
      if (y[i] <= y[i + 1]) continue;
      MoveKind kind;
      if (detail::position_move(k, y, i, &kind)) {
        y = detail::swap_adjacent(y, i);
        moved = true;
      }
    }
    if (!moved) return y;
  }
}

/// Maximal element of the congruence class.
inline Permutation project_up(Permutation x, CongruenceKind k) {
  for (;;) {
    bool moved = false;
    for (int i = 0; i + 1 < x.size() && !moved; ++i) {
      if (x[i] >= x[i + 1]) continue;
      MoveKind kind;
      if (detail::position_move(k, x, i, &kind)) {
        x = detail::swap_adjacent(x, i);
        moved = true;
      }
    }
    if (!moved) return x;
  }
}

/// The full congruence class of x: closure under moves in both
/// directions (classes are weak-order intervals, so this BFS reaches
/// every member).
inline std::set<Permutation> congruence_class(const Permutation& x, CongruenceKind k) {
  std::set<Permutation> seen{x};
  std::vector<Permutation> queue{x};
  while (!queue.empty()) {
    Permutation cur = queue.back();
    queue.pop_back();
    for (auto& [m, next] : down_moves(cur, k))
      if (seen.insert(next).second) queue.push_back(next);
    for (auto& [m, next] : up_moves(cur, k))
      if (seen.insert(next).second) queue.push_back(next);
  }
  return seen;
}

}  // namespace baxter
