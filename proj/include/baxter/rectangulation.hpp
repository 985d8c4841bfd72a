#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "baxter/congruence.hpp"
#include "baxter/permutation.hpp"
#include "baxter/tree.hpp"

namespace baxter {

/// Axis-parallel rectangle with integer corners, y-axis pointing up.
struct Rect {
  int x1, y1, x2, y2;
  auto operator<=>(const Rect&) const = default;
};

struct Wall {
  GridSegment seg;
  int diag_point;  // wall through (k, n-k) lies on x = k or y = n-k
};

enum class VertexKind { corner, up, down, left, right };

struct VertexInfo {
  int x, y;
  VertexKind kind;
};

struct EdgeInfo {
  int x1, y1, x2, y2;  // endpoints, (x1,y1) <= (x2,y2) lexicographically
  bool locked = false;
  int lock_x = 0, lock_y = 0;  // locking vertex or corner, valid when locked
  bool vertical() const { return x1 == x2; }
};

/// Canonical integral representative of a diagonal rectangulation of
/// [0,n]^2: n rectangles in diagonal order (rectangle i crosses the open
/// antidiagonal segment from (i-1, n-i+1) to (i, n-i)), every wall on the
/// line x = k or y = n-k through its antidiagonal point (k, n-k).
class DiagonalRectangulation {
 public:
  DiagonalRectangulation() : n_(0) {}

  DiagonalRectangulation(int n, std::vector<Rect> rects) : n_(n), rects_(std::move(rects)) {
    canonicalize_and_validate();
  }

  static DiagonalRectangulation unit_square() { return DiagonalRectangulation(1, {{0, 0, 1, 1}}); }

  static DiagonalRectangulation vertical_strips(int n) {
    std::vector<Rect> r;
    for (int i = 0; i < n; ++i) r.push_back({i, 0, i + 1, n});
    return DiagonalRectangulation(n, std::move(r));
  }

  static DiagonalRectangulation horizontal_strips(int n) {
    std::vector<Rect> r;
    for (int i = 0; i < n; ++i) r.push_back({0, n - i - 1, n, n - i});
    return DiagonalRectangulation(n, std::move(r));
  }

  int size() const { return n_; }
  bool empty() const { return n_ == 0; }
  const std::vector<Rect>& rects() const { return rects_; }

  /// Maximal interior segments; n-1 of them, one through each
  /// antidiagonal point.
  std::vector<Wall> walls() const {
    std::vector<Wall> out;
    for (bool vertical : {true, false}) {
      for (int c = 1; c < n_; ++c) {
        // Covered intervals on the line x = c (resp. y = c).
        std::vector<std::pair<int, int>> runs;
        for (const Rect& r : rects_) {
          int s1 = vertical ? r.x1 : r.y1, s2 = vertical ? r.x2 : r.y2;
          int t1 = vertical ? r.y1 : r.x1, t2 = vertical ? r.y2 : r.x2;
          if (s1 == c || s2 == c) runs.push_back({t1, t2});
        }
        std::sort(runs.begin(), runs.end());
        for (size_t i = 0; i < runs.size();) {
          int lo = runs[i].first, hi = runs[i].second;
          size_t j = i + 1;
          while (j < runs.size() && runs[j].first <= hi) {
            hi = std::max(hi, runs[j].second);
            ++j;
          }
          int diag = vertical ? c : n_ - c;
          out.push_back({GridSegment{vertical, c, lo, hi}, diag});
          i = j;
        }
      }
    }
    return out;
  }

  bool operator==(const DiagonalRectangulation&) const = default;
  auto operator<=>(const DiagonalRectangulation&) const = default;

 private:
  void canonicalize_and_validate();

  int n_;
  std::vector<Rect> rects_;
};

inline void DiagonalRectangulation::canonicalize_and_validate() {
  const int n = n_;
  if (n < 0) throw InvalidInput("rectangulation size must be >= 0");
  if (static_cast<int>(rects_.size()) != n)
    throw InvalidInput("rectangulation must have exactly n rectangles");
  if (n == 0) return;
  if (n > max_permutation_size())
    throw ResourceLimit("rectangulation size exceeds cap");

  // Rectangles are well-formed, tile the square, and cross the diagonal.
  std::vector<std::vector<int>> cover(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), -1));
  for (size_t ri = 0; ri < rects_.size(); ++ri) {
    const Rect& r = rects_[ri];
    if (!(0 <= r.x1 && r.x1 < r.x2 && r.x2 <= n && 0 <= r.y1 && r.y1 < r.y2 && r.y2 <= n))
      throw InvalidInput("malformed rectangle");
    if (!(r.x1 + r.y1 < n && r.x2 + r.y2 > n))
      throw InvalidInput("rectangle interior misses the antidiagonal");
    for (int x = r.x1; x < r.x2; ++x)
      for (int y = r.y1; y < r.y2; ++y) {
        if (cover[static_cast<size_t>(x)][static_cast<size_t>(y)] != -1)
          throw InvalidInput("overlapping rectangles");
        cover[static_cast<size_t>(x)][static_cast<size_t>(y)] = static_cast<int>(ri);
      }
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (cover[static_cast<size_t>(x)][static_cast<size_t>(y)] == -1)
        throw InvalidInput("rectangles do not cover the square");

  // Diagonal order: gap i runs from (i-1, n-i+1) to (i, n-i).
  std::vector<Rect> ordered(static_cast<size_t>(n));
  std::vector<bool> used(static_cast<size_t>(n), false);
  for (int gap = 1; gap <= n; ++gap) {
    int found = -1;
    for (size_t ri = 0; ri < rects_.size(); ++ri) {
      const Rect& r = rects_[ri];
      if (r.x1 <= gap - 1 && gap <= r.x2 && r.y1 <= n - gap && n - gap + 1 <= r.y2) {
        found = static_cast<int>(ri);
        break;
      }
    }
    if (found < 0)
      throw InvalidInput("diagonal gap not inside a single rectangle (non-canonical coordinates)");
    if (used[static_cast<size_t>(found)])
      throw InvalidInput("rectangle crosses two diagonal gaps");
    used[static_cast<size_t>(found)] = true;
    ordered[static_cast<size_t>(gap - 1)] = rects_[static_cast<size_t>(found)];
  }
  rects_ = std::move(ordered);

  // Wall anatomy: n-1 walls, one through each antidiagonal point,
  // pairwise interior-disjoint.
  std::vector<Wall> ws = walls();
  if (static_cast<int>(ws.size()) != n - 1)
    throw InvalidInput("rectangulation must have exactly n-1 walls");
  std::vector<bool> seen_point(static_cast<size_t>(n), false);
  for (const Wall& w : ws) {
    int k = w.diag_point;
    if (k < 1 || k >= n || seen_point[static_cast<size_t>(k)])
      throw InvalidInput("walls do not match antidiagonal points");
    seen_point[static_cast<size_t>(k)] = true;
    int cross = w.seg.vertical ? n - k : k;
    if (!(w.seg.lo < cross && cross < w.seg.hi))
      throw InvalidInput("wall does not cross its antidiagonal point");
  }
  for (const Wall& a : ws)
    for (const Wall& b : ws)
      if (a.seg.vertical && !b.seg.vertical)
        if (b.seg.lo < a.seg.coord && a.seg.coord < b.seg.hi &&
            a.seg.lo < b.seg.coord && b.seg.coord < a.seg.hi)
          throw InvalidInput("wall interiors intersect");
}

// ---------------------------------------------------------------------------
// The map rho and its inverses

namespace detail {

// Point membership in T = left edge + bottom edge + placed rectangles
// (all closed).
struct Staircase {
  int n;
  std::vector<Rect> placed;

  bool contains(int x, int y) const {
    if (x == 0 || y == 0) return true;
    for (const Rect& r : placed)
      if (r.x1 <= x && x <= r.x2 && r.y1 <= y && y <= r.y2) return true;
    return false;
  }
  // Highest filled point directly above (x, *); the left edge reaches n.
  int column_top(int x) const {
    int best = (x == 0) ? n : 0;
    for (const Rect& r : placed)
      if (r.x1 <= x && x <= r.x2) best = std::max(best, r.y2);
    return best;
  }
  // Rightmost filled point on the row y; the bottom edge reaches n.
  int row_right(int y) const {
    int best = (y == 0) ? n : 0;
    for (const Rect& r : placed)
      if (r.y1 <= y && y <= r.y2) best = std::max(best, r.x2);
    return best;
  }
  // Rightmost x <= limit with (x, y) in T.
  int rightmost_left_of(int y, int limit) const {
    int best = 0;
    for (const Rect& r : placed)
      if (r.y1 <= y && y <= r.y2 && r.x2 <= limit) best = std::max(best, r.x2);
    return best;
  }
  // Highest y <= limit with (x, y) in T.
  int highest_below(int x, int limit) const {
    int best = 0;
    for (const Rect& r : placed)
      if (r.x1 <= x && x <= r.x2 && r.y2 <= limit) best = std::max(best, r.y2);
    return best;
  }
};

}  // namespace detail

/// The staircase construction: reads x left to right and draws one
/// left/bottom-justified rectangle per entry, anchored at the
/// antidiagonal points flanking gap x_i.
inline DiagonalRectangulation rho(const Permutation& x) {
  const int n = x.size();
  if (n == 0) return DiagonalRectangulation();
  detail::Staircase T{n, {}};
  for (int step = 0; step < n; ++step) {
    const int e = x[step];
    const int px = e - 1, py = n - e + 1;   // antidiagonal point above/left of gap e
    const int qx = e, qy = n - e;           // antidiagonal point below/right of gap e
    int tlx, tly, brx, bry;
    if (T.contains(px, py)) {
      tlx = px;
      tly = T.column_top(px);
    } else {
      tlx = T.rightmost_left_of(py, px);
      tly = py;
    }
    if (T.contains(qx, qy)) {
      brx = T.row_right(qy);
      bry = qy;
    } else {
      brx = qx;
      bry = T.highest_below(qx, qy);
    }
    detail::check(tlx < brx && bry < tly, "degenerate rectangle in rho");
    T.placed.push_back({tlx, bry, brx, tly});
  }
  return DiagonalRectangulation(n, std::move(T.placed));
}

/// Concatenates the rotated trees at (0,0) and (n,n); returns the
/// rectangulation when the union of their edges tiles the square,
/// and nothing otherwise.
inline std::optional<DiagonalRectangulation> from_twin_trees(const PlanarBinaryTree& bottom,
                                                             const PlanarBinaryTree& top) {
  if (bottom.orientation() != TreeOrientation::bottom ||
      top.orientation() != TreeOrientation::top)
    throw InvalidInput("from_twin_trees expects a (bottom, top) pair");
  if (bottom.size() != top.size()) throw InvalidInput("from_twin_trees: size mismatch");
  const int n = bottom.size();
  if (n == 0) return DiagonalRectangulation();

  // Unit-edge presence maps, boundary included.
  std::vector<std::vector<bool>> vert(static_cast<size_t>(n) + 1,
                                      std::vector<bool>(static_cast<size_t>(n), false));
  std::vector<std::vector<bool>> horiz(static_cast<size_t>(n),
                                       std::vector<bool>(static_cast<size_t>(n) + 1, false));
  auto mark = [&](const GridSegment& s) {
    if (s.vertical)
      for (int y = s.lo; y < s.hi; ++y) vert[static_cast<size_t>(s.coord)][static_cast<size_t>(y)] = true;
    else
      for (int x = s.lo; x < s.hi; ++x) horiz[static_cast<size_t>(x)][static_cast<size_t>(s.coord)] = true;
  };
  mark({true, 0, 0, n});
  mark({true, n, 0, n});
  mark({false, 0, 0, n});
  mark({false, n, 0, n});
  for (const GridSegment& s : rotated_drawing(bottom)) mark(s);
  for (const GridSegment& s : rotated_drawing(top)) mark(s);

  // Flood-fill cells into regions separated by present edges.
  std::vector<std::vector<int>> region(static_cast<size_t>(n),
                                       std::vector<int>(static_cast<size_t>(n), -1));
  int regions = 0;
  for (int x0 = 0; x0 < n; ++x0)
    for (int y0 = 0; y0 < n; ++y0) {
      if (region[static_cast<size_t>(x0)][static_cast<size_t>(y0)] != -1) continue;
      std::vector<std::pair<int, int>> stack{{x0, y0}};
      region[static_cast<size_t>(x0)][static_cast<size_t>(y0)] = regions;
      while (!stack.empty()) {
        auto [x, y] = stack.back();
        stack.pop_back();
        auto visit = [&](int nx, int ny) {
          if (region[static_cast<size_t>(nx)][static_cast<size_t>(ny)] == -1) {
            region[static_cast<size_t>(nx)][static_cast<size_t>(ny)] = regions;
            stack.push_back({nx, ny});
          }
        };
        if (x > 0 && !vert[static_cast<size_t>(x)][static_cast<size_t>(y)]) visit(x - 1, y);
        if (x + 1 < n && !vert[static_cast<size_t>(x) + 1][static_cast<size_t>(y)]) visit(x + 1, y);
        if (y > 0 && !horiz[static_cast<size_t>(x)][static_cast<size_t>(y)]) visit(x, y - 1);
        if (y + 1 < n && !horiz[static_cast<size_t>(x)][static_cast<size_t>(y) + 1]) visit(x, y + 1);
      }
      ++regions;
    }
  if (regions != n) return std::nullopt;

  // Every marked interior edge must separate two regions (no dangling
  // segments inside a region).
  for (int x = 1; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (vert[static_cast<size_t>(x)][static_cast<size_t>(y)] &&
          region[static_cast<size_t>(x) - 1][static_cast<size_t>(y)] ==
              region[static_cast<size_t>(x)][static_cast<size_t>(y)])
        return std::nullopt;
  for (int x = 0; x < n; ++x)
    for (int y = 1; y < n; ++y)
      if (horiz[static_cast<size_t>(x)][static_cast<size_t>(y)] &&
          region[static_cast<size_t>(x)][static_cast<size_t>(y) - 1] ==
              region[static_cast<size_t>(x)][static_cast<size_t>(y)])
        return std::nullopt;

  std::vector<Rect> rects(static_cast<size_t>(n), Rect{n, n, 0, 0});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Rect& r = rects[static_cast<size_t>(region[static_cast<size_t>(x)][static_cast<size_t>(y)])];
      r.x1 = std::min(r.x1, x);
      r.y1 = std::min(r.y1, y);
      r.x2 = std::max(r.x2, x + 1);
      r.y2 = std::max(r.y2, y + 1);
    }
  // Region = bounding box, or the union was not a rectangle tiling.
  long long area = 0;
  for (const Rect& r : rects) area += static_cast<long long>(r.x2 - r.x1) * (r.y2 - r.y1);
  if (area != static_cast<long long>(n) * n) return std::nullopt;
  try {
    return DiagonalRectangulation(n, std::move(rects));
  } catch (const InvalidInput&) {
    return std::nullopt;
  }
}

// ---------------------------------------------------------------------------
// Adjacency poset, fibers, tau

/// Partial order on the rectangle labels {1..n}: i < j when the bottom or
/// left edge of rectangle j rests on the top or right edge of rectangle i.
struct AdjacencyPoset {
  int n = 0;
  std::vector<std::vector<bool>> leq;  // leq[i][j], 0-based labels

  bool less(int i, int j) const { return i != j && leq[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
};

namespace detail {

inline bool overlap_positive(int a1, int a2, int b1, int b2) {
  return std::min(a2, b2) > std::max(a1, b1);
}

// Direct contact: bottom or left edge of b on top or right edge of a.
inline bool rect_precedes(const Rect& a, const Rect& b) {
  if (b.y1 == a.y2 && overlap_positive(a.x1, a.x2, b.x1, b.x2)) return true;
  if (b.x1 == a.x2 && overlap_positive(a.y1, a.y2, b.y1, b.y2)) return true;
  return false;
}

}  // namespace detail

inline AdjacencyPoset adjacency_poset(const DiagonalRectangulation& R) {
  const int n = R.size();
  AdjacencyPoset P;
  P.n = n;
  P.leq.assign(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(n), false));
  for (int i = 0; i < n; ++i) P.leq[static_cast<size_t>(i)][static_cast<size_t>(i)] = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && detail::rect_precedes(R.rects()[static_cast<size_t>(i)], R.rects()[static_cast<size_t>(j)]))
        P.leq[static_cast<size_t>(i)][static_cast<size_t>(j)] = true;
  // Reflexive-transitive closure; the direct relation is acyclic.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (P.leq[static_cast<size_t>(i)][static_cast<size_t>(k)])
        for (int j = 0; j < n; ++j)
          if (P.leq[static_cast<size_t>(k)][static_cast<size_t>(j)])
            P.leq[static_cast<size_t>(i)][static_cast<size_t>(j)] = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && P.leq[static_cast<size_t>(i)][static_cast<size_t>(j)] &&
          P.leq[static_cast<size_t>(j)][static_cast<size_t>(i)])
        throw std::logic_error("adjacency relation is cyclic");
  return P;
}

/// rho^{-1}(R): all linear extensions of the adjacency poset, read as
/// words of rectangle labels.
inline std::set<Permutation> fiber(const DiagonalRectangulation& R) {
  const int n = R.size();
  AdjacencyPoset P = adjacency_poset(R);
  std::set<Permutation> out;
  std::vector<int> word;
  std::vector<bool> placed(static_cast<size_t>(n), false);
  std::function<void()> go = [&]() {
    if (static_cast<int>(word.size()) == n) {
      out.insert(Permutation(detail::unchecked, word));
      return;
    }
    for (int j = 0; j < n; ++j) {
      if (placed[static_cast<size_t>(j)]) continue;
      bool ready = true;
      for (int i = 0; i < n && ready; ++i)
        if (!placed[static_cast<size_t>(i)] && P.less(i, j)) ready = false;
      if (!ready) continue;
      placed[static_cast<size_t>(j)] = true;
      word.push_back(j + 1);
      go();
      word.pop_back();
      placed[static_cast<size_t>(j)] = false;
    }
  };
  go();
  return out;
}

namespace detail {

// True when [lo, hi] is covered by the union of the given intervals.
inline bool covered(int lo, int hi, std::vector<std::pair<int, int>> iv) {
  std::sort(iv.begin(), iv.end());
  int reach = lo;
  for (auto& [a, b] : iv) {
    if (a > reach) break;
    reach = std::max(reach, b);
  }
  return reach >= hi;
}

// Left and bottom edges of r lie in T = placed rectangles + the left and
// bottom edges of the square.
inline bool edges_in_region(const Rect& r, const std::vector<Rect>& placed,
                            const std::vector<bool>& is_placed) {
  std::vector<std::pair<int, int>> iv;
  if (r.x1 != 0) {
    for (size_t i = 0; i < placed.size(); ++i)
      if (is_placed[i] && placed[i].x2 == r.x1)
        iv.push_back({std::max(placed[i].y1, r.y1), std::min(placed[i].y2, r.y2)});
    if (!covered(r.y1, r.y2, std::move(iv))) return false;
  }
  if (r.y1 != 0) {
    iv.clear();
    for (size_t i = 0; i < placed.size(); ++i)
      if (is_placed[i] && placed[i].y2 == r.y1)
        iv.push_back({std::max(placed[i].x1, r.x1), std::min(placed[i].x2, r.x2)});
    if (!covered(r.x1, r.x2, std::move(iv))) return false;
  }
  return true;
}

}  // namespace detail

/// Greedy inverse of rho: at each step the smallest-labeled rectangle
/// whose left and bottom edges lie in the region built so far.  The
/// output is the minimal element of the fiber, a twisted Baxter
/// permutation.
inline Permutation tau(const DiagonalRectangulation& R) {
  const int n = R.size();
  std::vector<bool> placed(static_cast<size_t>(n), false);
  std::vector<int> word;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int j = 0; j < n; ++j) {
      if (placed[static_cast<size_t>(j)]) continue;
      if (detail::edges_in_region(R.rects()[static_cast<size_t>(j)], R.rects(), placed)) {
        pick = j;
        break;
      }
    }
    detail::check(pick >= 0, "tau: no placeable rectangle");
    placed[static_cast<size_t>(pick)] = true;
    word.push_back(pick + 1);
  }
  return Permutation(detail::unchecked, std::move(word));
}

// ---------------------------------------------------------------------------
// Vertex and edge anatomy

namespace detail {

enum Dir { DIR_UP = 0, DIR_DOWN = 1, DIR_LEFT = 2, DIR_RIGHT = 3 };

inline int opposite(int d) { return d ^ 1; }  // up<->down, left<->right

// Which of the four directions carry an edge leaving (x, y).
inline std::array<bool, 4> directions_at(const DiagonalRectangulation& R, int x, int y) {
  std::array<bool, 4> dirs{false, false, false, false};
  for (const Rect& r : R.rects()) {
    if ((r.x1 == x || r.x2 == x) && r.y1 <= y && y < r.y2) dirs[DIR_UP] = true;
    if ((r.x1 == x || r.x2 == x) && r.y1 < y && y <= r.y2) dirs[DIR_DOWN] = true;
    if ((r.y1 == y || r.y2 == y) && r.x1 < x && x <= r.x2) dirs[DIR_LEFT] = true;
    if ((r.y1 == y || r.y2 == y) && r.x1 <= x && x < r.x2) dirs[DIR_RIGHT] = true;
  }
  return dirs;
}

}  // namespace detail

/// All rectangle corners with their up/down/left/right classification.
/// Every non-corner vertex is incident to exactly three edges; its kind
/// is the direction of the unmatched edge.
inline std::vector<VertexInfo> vertices(const DiagonalRectangulation& R) {
  const int n = R.size();
  std::set<std::pair<int, int>> pts;
  for (const Rect& r : R.rects()) {
    pts.insert({r.x1, r.y1});
    pts.insert({r.x1, r.y2});
    pts.insert({r.x2, r.y1});
    pts.insert({r.x2, r.y2});
  }
  std::vector<VertexInfo> out;
  for (auto [x, y] : pts) {
    bool corner = (x == 0 || x == n) && (y == 0 || y == n);
    if (corner) {
      out.push_back({x, y, VertexKind::corner});
      continue;
    }
    auto dirs = detail::directions_at(R, x, y);
    int present = dirs[0] + dirs[1] + dirs[2] + dirs[3];
    detail::check(present == 3, "non-corner vertex must have exactly three edges");
    detail::check(x + y != n, "three-edge vertex on the antidiagonal");
    int missing = 0;
    while (dirs[static_cast<size_t>(missing)]) ++missing;
    int unmatched = detail::opposite(missing);
    VertexKind kind = unmatched == detail::DIR_UP     ? VertexKind::up
                      : unmatched == detail::DIR_DOWN ? VertexKind::down
                      : unmatched == detail::DIR_LEFT ? VertexKind::left
                                                      : VertexKind::right;
    // Left and down vertices sit above the antidiagonal, right and up
    // vertices below.
    if (kind == VertexKind::left || kind == VertexKind::down)
      detail::check(x + y > n, "left/down vertex below the antidiagonal");
    else
      detail::check(x + y < n, "right/up vertex above the antidiagonal");
    out.push_back({x, y, kind});
  }
  return out;
}

/// Minimal vertex-to-vertex segments along rectangle boundaries, with
/// locked flags per the corner convention and the per-vertex rule.
inline std::vector<EdgeInfo> edges(const DiagonalRectangulation& R) {
  const int n = R.size();
  std::vector<VertexInfo> vs = vertices(R);
  std::set<std::pair<int, int>> vset;
  for (const VertexInfo& v : vs) vset.insert({v.x, v.y});

  // Collect covered lines: walls plus the four boundary edges.
  std::vector<GridSegment> lines;
  for (const Wall& w : R.walls()) lines.push_back(w.seg);
  lines.push_back({true, 0, 0, n});
  lines.push_back({true, n, 0, n});
  lines.push_back({false, 0, 0, n});
  lines.push_back({false, n, 0, n});

  std::vector<EdgeInfo> out;
  for (const GridSegment& s : lines) {
    std::vector<int> stops;
    for (auto [x, y] : vset) {
      if (s.vertical && x == s.coord && s.lo <= y && y <= s.hi) stops.push_back(y);
      if (!s.vertical && y == s.coord && s.lo <= x && x <= s.hi) stops.push_back(x);
    }
    std::sort(stops.begin(), stops.end());
    detail::check(!stops.empty() && stops.front() == s.lo && stops.back() == s.hi,
                  "segment endpoints must be vertices");
    for (size_t i = 0; i + 1 < stops.size(); ++i) {
      EdgeInfo e;
      if (s.vertical) {
        e.x1 = e.x2 = s.coord;
        e.y1 = stops[i];
        e.y2 = stops[i + 1];
      } else {
        e.y1 = e.y2 = s.coord;
        e.x1 = stops[i];
        e.x2 = stops[i + 1];
      }
      out.push_back(e);
    }
  }

  auto edge_at = [&](int x, int y, int dir) -> EdgeInfo* {
    for (EdgeInfo& e : out) {
      if (dir == detail::DIR_UP && e.vertical() && e.x1 == x && e.y1 == y) return &e;
      if (dir == detail::DIR_DOWN && e.vertical() && e.x1 == x && e.y2 == y) return &e;
      if (dir == detail::DIR_LEFT && !e.vertical() && e.y1 == y && e.x2 == x) return &e;
      if (dir == detail::DIR_RIGHT && !e.vertical() && e.y1 == y && e.x1 == x) return &e;
    }
    return nullptr;
  };

  // Corner convention: edges incident to a corner of the square are locked.
  for (EdgeInfo& e : out) {
    for (auto [cx, cy] : {std::pair{0, 0}, {0, n}, {n, 0}, {n, n}}) {
      bool incident = (e.x1 == cx && e.y1 == cy) || (e.x2 == cx && e.y2 == cy);
      if (incident && !e.locked) {
        e.locked = true;
        e.lock_x = cx;
        e.lock_y = cy;
      }
    }
  }
  // Each non-corner vertex locks the matched edge leaving it toward the
  // antidiagonal.
  for (const VertexInfo& v : vs) {
    if (v.kind == VertexKind::corner) continue;
    bool above = v.x + v.y > n;
    int toward[2] = {above ? detail::DIR_DOWN : detail::DIR_UP,
                     above ? detail::DIR_LEFT : detail::DIR_RIGHT};
    int unmatched = v.kind == VertexKind::up     ? detail::DIR_UP
                    : v.kind == VertexKind::down ? detail::DIR_DOWN
                    : v.kind == VertexKind::left ? detail::DIR_LEFT
                                                 : detail::DIR_RIGHT;
    for (int d : toward) {
      if (d == unmatched) continue;
      EdgeInfo* e = edge_at(v.x, v.y, d);
      detail::check(e != nullptr, "missing matched edge toward the antidiagonal");
      if (!e->locked) {
        e->locked = true;
        e->lock_x = v.x;
        e->lock_y = v.y;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Pivots

enum class PivotKind { diagonal, vertex };

struct PivotMove {
  EdgeInfo edge;
  PivotKind kind;
  DiagonalRectangulation result;
};

/// One pivot per non-locked edge: replace the edge by the transversal cut
/// of the two incident rectangles.  Pivoting is an involution.
inline std::vector<PivotMove> pivots(const DiagonalRectangulation& R) {
  const int n = R.size();
  std::vector<VertexInfo> vs = vertices(R);
  std::map<std::pair<int, int>, VertexKind> vkind;
  for (const VertexInfo& v : vs) vkind[{v.x, v.y}] = v.kind;

  auto unmatched_dir = [&](VertexKind k) -> int {
    switch (k) {
      case VertexKind::up: return detail::DIR_UP;
      case VertexKind::down: return detail::DIR_DOWN;
      case VertexKind::left: return detail::DIR_LEFT;
      case VertexKind::right: return detail::DIR_RIGHT;
      default: return -1;
    }
  };

  std::vector<PivotMove> out;
  for (const EdgeInfo& e : edges(R)) {
    if (e.locked) continue;
    // Directions of e as seen from its two endpoints.
    int dir_from_a = e.vertical() ? detail::DIR_UP : detail::DIR_RIGHT;
    int dir_from_b = e.vertical() ? detail::DIR_DOWN : detail::DIR_LEFT;
    VertexKind ka = vkind.at({e.x1, e.y1});
    VertexKind kb = vkind.at({e.x2, e.y2});
    bool unmatched_a = unmatched_dir(ka) == dir_from_a;
    bool unmatched_b = unmatched_dir(kb) == dir_from_b;

    // The two rectangles sharing e.
    const Rect* lower = nullptr;
    const Rect* upper = nullptr;
    for (const Rect& r : R.rects()) {
      if (e.vertical()) {
        if (r.x2 == e.x1 && r.y1 <= e.y1 && e.y2 <= r.y2) lower = &r;  // left side
        if (r.x1 == e.x1 && r.y1 <= e.y1 && e.y2 <= r.y2) upper = &r;  // right side
      } else {
        if (r.y2 == e.y1 && r.x1 <= e.x1 && e.x2 <= r.x2) lower = &r;  // below
        if (r.y1 == e.y1 && r.x1 <= e.x1 && e.x2 <= r.x2) upper = &r;  // above
      }
    }
    detail::check(lower && upper, "non-locked edge must separate two rectangles");

    std::vector<Rect> rects;
    for (const Rect& r : R.rects())
      if (&r != lower && &r != upper) rects.push_back(r);

    if (unmatched_a && unmatched_b) {
      // Diagonal pivot: e crosses the antidiagonal; cut the combined
      // rectangle the other way through the shared point.
      if (e.vertical()) {
        int k = e.x1;
        detail::check(e.y1 < n - k && n - k < e.y2, "diagonal pivot edge misses its point");
        detail::check(lower->y1 == upper->y1 && lower->y2 == upper->y2,
                      "diagonal pivot pieces must form a rectangle");
        rects.push_back({lower->x1, lower->y1, upper->x2, n - k});
        rects.push_back({lower->x1, n - k, upper->x2, lower->y2});
      } else {
        int c = e.y1;
        int k = n - c;
        detail::check(e.x1 < k && k < e.x2, "diagonal pivot edge misses its point");
        detail::check(lower->x1 == upper->x1 && lower->x2 == upper->x2,
                      "diagonal pivot pieces must form a rectangle");
        rects.push_back({lower->x1, lower->y1, k, upper->y2});
        rects.push_back({k, lower->y1, lower->x2, upper->y2});
      }
      out.push_back({e, PivotKind::diagonal, DiagonalRectangulation(n, std::move(rects))});
    } else {
      detail::check(unmatched_a != unmatched_b, "unlocked edge matched at both endpoints");
      // Vertex pivot: the union is an L-shape; the new edge leaves the
      // reflex corner perpendicular to e.
      if (e.vertical()) {
        const Rect *shrt = lower, *lng = upper;
        if (lower->y2 - lower->y1 > upper->y2 - upper->y1) std::swap(shrt, lng);
        detail::check(shrt->y1 == e.y1 && shrt->y2 == e.y2, "pivot side mismatch");
        rects.push_back({std::min(lower->x1, upper->x1), e.y1,
                         std::max(lower->x2, upper->x2), e.y2});
        if (lng->y1 < e.y1)
          rects.push_back({lng->x1, lng->y1, lng->x2, e.y1});
        else
          rects.push_back({lng->x1, e.y2, lng->x2, lng->y2});
      } else {
        const Rect *shrt = lower, *lng = upper;
        if (lower->x2 - lower->x1 > upper->x2 - upper->x1) std::swap(shrt, lng);
        detail::check(shrt->x1 == e.x1 && shrt->x2 == e.x2, "pivot side mismatch");
        rects.push_back({e.x1, std::min(lower->y1, upper->y1),
                         e.x2, std::max(lower->y2, upper->y2)});
        if (lng->x1 < e.x1)
          rects.push_back({lng->x1, lng->y1, e.x1, lng->y2});
        else
          rects.push_back({e.x2, lng->y1, lng->x2, lng->y2});
      }
      out.push_back({e, PivotKind::vertex, DiagonalRectangulation(n, std::move(rects))});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// The Baxter representative

/// Walks the staircase boundary from the top-right corner of the last
/// placed rectangle: left to the first upward turn (U_A) or down to the
/// first rightward turn (U_B), choosing by the vertex kind of that
/// corner.  The output is the Baxter member of the fiber.
inline Permutation beta(const DiagonalRectangulation& R) {
  const int n = R.size();
  if (n == 0) return Permutation();
  std::vector<VertexInfo> vs = vertices(R);
  std::map<std::pair<int, int>, VertexKind> vkind;
  for (const VertexInfo& v : vs) vkind[{v.x, v.y}] = v.kind;

  std::vector<bool> placed(static_cast<size_t>(n), false);
  std::vector<int> word;
  auto find_rect = [&](int x1, int y1) {
    for (int j = 0; j < n; ++j) {
      const Rect& r = R.rects()[static_cast<size_t>(j)];
      if (!placed[static_cast<size_t>(j)] && r.x1 == x1 && r.y1 == y1) return j;
    }
    detail::check(false, "beta: expected rectangle not found");
    return -1;
  };

  int cur = find_rect(0, 0);
  placed[static_cast<size_t>(cur)] = true;
  word.push_back(cur + 1);
  while (static_cast<int>(word.size()) < n) {
    const Rect& u = R.rects()[static_cast<size_t>(cur)];
    const int px = u.x2, py = u.y2;
    detail::check(!(px == n && py == n), "beta: reached the far corner early");
    VertexKind k = vkind.at({px, py});
    detail::check(k == VertexKind::left || k == VertexKind::down,
                  "beta: corner of last rectangle is not a left or down vertex");
    int next;
    if (k == VertexKind::left) {
      // Column heights of the placed region.
      std::vector<int> h(static_cast<size_t>(n), 0);
      for (int j = 0; j < n; ++j)
        if (placed[static_cast<size_t>(j)]) {
          const Rect& r = R.rects()[static_cast<size_t>(j)];
          for (int c = r.x1; c < r.x2; ++c)
            h[static_cast<size_t>(c)] = std::max(h[static_cast<size_t>(c)], r.y2);
        }
      int a = px;
      while (a > 0 && h[static_cast<size_t>(a - 1)] == py) --a;
      next = find_rect(a, py);
    } else {
      std::vector<int> w(static_cast<size_t>(n), 0);
      for (int j = 0; j < n; ++j)
        if (placed[static_cast<size_t>(j)]) {
          const Rect& r = R.rects()[static_cast<size_t>(j)];
          for (int row = r.y1; row < r.y2; ++row)
            w[static_cast<size_t>(row)] = std::max(w[static_cast<size_t>(row)], r.x2);
        }
      int b = py;
      while (b > 0 && w[static_cast<size_t>(b - 1)] == px) --b;
      next = find_rect(px, b);
    }
    placed[static_cast<size_t>(next)] = true;
    word.push_back(next + 1);
    cur = next;
  }
  return Permutation(detail::unchecked, std::move(word));
}

// ---------------------------------------------------------------------------
// Restrictions

/// Restriction to the principal subsquare [0,p] x [n-p,n], recanonicalized
/// to size p.
inline DiagonalRectangulation tl_restrict(const DiagonalRectangulation& R, int p) {
  const int n = R.size();
  if (p < 0 || p > n) throw InvalidInput("tl_restrict: p out of range");
  std::vector<Rect> out;
  for (const Rect& r : R.rects()) {
    int x1 = std::max(r.x1, 0), x2 = std::min(r.x2, p);
    int y1 = std::max(r.y1, n - p), y2 = std::min(r.y2, n);
    if (x1 < x2 && y1 < y2) out.push_back({x1, y1 - (n - p), x2, y2 - (n - p)});
  }
  return DiagonalRectangulation(p, std::move(out));
}

/// Restriction to [n-q,n] x [0,q], recanonicalized to size q.
inline DiagonalRectangulation br_restrict(const DiagonalRectangulation& R, int q) {
  const int n = R.size();
  if (q < 0 || q > n) throw InvalidInput("br_restrict: q out of range");
  std::vector<Rect> out;
  for (const Rect& r : R.rects()) {
    int x1 = std::max(r.x1, n - q), x2 = std::min(r.x2, n);
    int y1 = std::max(r.y1, 0), y2 = std::min(r.y2, q);
    if (x1 < x2 && y1 < y2) out.push_back({x1 - (n - q), y1, x2, y2});
  }
  return DiagonalRectangulation(q, std::move(out));
}

// ---------------------------------------------------------------------------
// Enumeration

/// Diagonal rectangulations of size n, ordered by their twisted Baxter
/// representatives (cached).
inline const std::vector<DiagonalRectangulation>& diagonal_rectangulations(int n) {
  if (n < 0 || n > 9) throw ResourceLimit("diagonal rectangulation enumeration capped at n <= 9");
  static std::map<int, std::vector<DiagonalRectangulation>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::vector<DiagonalRectangulation> out;
    for (const Permutation& x : twisted_baxter_permutations(n)) out.push_back(rho(x));
    it = cache.emplace(n, std::move(out)).first;
  }
  return it->second;
}

}  // namespace baxter

template <>
struct std::hash<baxter::DiagonalRectangulation> {
  size_t operator()(const baxter::DiagonalRectangulation& r) const noexcept {
    size_t h = 1469598103934665603ull;
    auto mix = [&](int v) {
      h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    mix(r.size());
    for (const baxter::Rect& q : r.rects()) {
      mix(q.x1);
      mix(q.y1);
      mix(q.x2);
      mix(q.y2);
    }
    return h;
  }
};
