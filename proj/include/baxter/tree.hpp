#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "baxter/permutation.hpp"

namespace baxter {

enum class TreeOrientation { top, bottom };

/// A planar binary tree: every vertex has zero or two children.  Stored
/// as the canonical balanced-parenthesis encoding over the internal-node
/// preorder: enc(leaf) = "", enc(node(L,R)) = "(" enc(L) ")" enc(R).
/// n = number of internal nodes = leaves - 1 (n = 0 is a single leaf).
class PlanarBinaryTree {
 public:
  PlanarBinaryTree() : orientation_(TreeOrientation::bottom) {}
  PlanarBinaryTree(TreeOrientation o, std::string encoding)
      : orientation_(o), enc_(std::move(encoding)) {
    validate();
  }

  static PlanarBinaryTree leaf(TreeOrientation o) { return PlanarBinaryTree(o, ""); }

  TreeOrientation orientation() const { return orientation_; }
  const std::string& encoding() const { return enc_; }
  int size() const { return static_cast<int>(enc_.size() / 2); }

  /// Splits a nonempty encoding into (left enc, right enc).
  static std::pair<std::string_view, std::string_view> split(std::string_view enc) {
    detail::check(!enc.empty() && enc.front() == '(', "split of a leaf encoding");
    int depth = 0;
    for (size_t i = 0; i < enc.size(); ++i) {
      if (enc[i] == '(') ++depth;
      if (enc[i] == ')' && --depth == 0)
        return {enc.substr(1, i - 1), enc.substr(i + 1)};
    }
    detail::check(false, "unbalanced tree encoding");
    return {};
  }

  bool operator==(const PlanarBinaryTree&) const = default;
  auto operator<=>(const PlanarBinaryTree&) const = default;

 private:
  void validate() const {
    int depth = 0;
    for (char c : enc_) {
      if (c == '(') ++depth;
      else if (c == ')') --depth;
      else throw InvalidInput("tree encoding must consist of parentheses");
      if (depth < 0) throw InvalidInput("unbalanced tree encoding");
    }
    if (depth != 0) throw InvalidInput("unbalanced tree encoding");
  }

  TreeOrientation orientation_;
  std::string enc_;
};

namespace detail {

// seq is a sequence of distinct values; the root gap is seq[0] (bottom
// trees) or seq.back() (top trees), and the subtrees come from the
// subsequences of smaller resp. larger values.
inline std::string tree_encoding(const std::vector<int>& seq, bool root_is_first) {
  if (seq.empty()) return "";
  int pivot = root_is_first ? seq.front() : seq.back();
  std::vector<int> left, right;
  for (int v : seq) {
    if (v < pivot) left.push_back(v);
    else if (v > pivot) right.push_back(v);
  }
  return "(" + tree_encoding(left, root_is_first) + ")" + tree_encoding(right, root_is_first);
}

}  // namespace detail

/// Bottom tree: x_1 labels the gap between the root's two subtrees, and
/// the construction recurses on the subsequences of smaller and larger
/// values.
inline PlanarBinaryTree rho_b(const Permutation& x) {
  return PlanarBinaryTree(TreeOrientation::bottom, detail::tree_encoding(x.word(), true));
}

/// Top tree, built leaves-upward; equivalently the reversed recursion in
/// which the last entry of x gives the root gap.
inline PlanarBinaryTree rho_t(const Permutation& x) {
  return PlanarBinaryTree(TreeOrientation::top, detail::tree_encoding(x.word(), false));
}

/// All planar binary trees with n internal nodes, in recursive
/// left-size order.
inline std::vector<std::string> all_tree_encodings(int n) {
  if (n < 0 || n > 14) throw ResourceLimit("tree enumeration capped at n <= 14");
  if (n == 0) return {""};
  std::vector<std::string> out;
  for (int k = 0; k < n; ++k) {
    for (const std::string& l : all_tree_encodings(k))
      for (const std::string& r : all_tree_encodings(n - 1 - k))
        out.push_back("(" + l + ")" + r);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rotated drawings.  After the clockwise eighth-turn of the construction
// of diagonal rectangulations, a bottom tree with root at the origin has
// its leaves at the diagonal points (k, n-k); the node spanning leaves
// [a..b] sits at (a, n-b).  A top tree with root at (n, n) has the node
// spanning leaves [a..b] at (b, n-a).  Edges become axis-parallel unit
// segments.

struct GridSegment {
  bool vertical;
  int coord;  // line x = coord (vertical) or y = coord (horizontal)
  int lo, hi;

  auto operator<=>(const GridSegment&) const = default;
};

namespace detail {

inline void emit_tree_segments(std::string_view enc, int a, int b, int n, bool bottom,
                               std::vector<GridSegment>* out) {
  if (enc.empty()) return;  // leaf
  auto [l, r] = PlanarBinaryTree::split(enc);
  int g = a + static_cast<int>(l.size() / 2) + 1;  // root gap; left child spans [a..g-1]
  if (bottom) {
    // node at (a, n-b); left child at (a, n-g+1); right child at (g, n-b)
    out->push_back({true, a, n - b, n - g + 1});
    out->push_back({false, n - b, a, g});
  } else {
    // node at (b, n-a); left child at (g-1, n-a); right child at (b, n-g)
    out->push_back({false, n - a, g - 1, b});
    out->push_back({true, b, n - g, n - a});
  }
  emit_tree_segments(l, a, g - 1, n, bottom, out);
  emit_tree_segments(r, g, b, n, bottom, out);
}

}  // namespace detail

/// Axis-parallel segments of the rotated drawing on [0,n]^2 (includes
/// the two boundary edges adjacent to the root).
inline std::vector<GridSegment> rotated_drawing(const PlanarBinaryTree& t) {
  std::vector<GridSegment> out;
  const int n = t.size();
  detail::emit_tree_segments(t.encoding(), 0, n,
                             n, t.orientation() == TreeOrientation::bottom, &out);
  return out;
}

}  // namespace baxter
