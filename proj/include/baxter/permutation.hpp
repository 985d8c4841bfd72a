#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "baxter/common.hpp"

namespace baxter {

class Permutation;

namespace detail {
struct unchecked_t {};
inline constexpr unchecked_t unchecked{};
}  // namespace detail

/// A permutation of {1..n} in one-line notation.  n = 0 is the empty
/// permutation.  Immutable after construction; equality is word equality.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> word) : word_(std::move(word)) {
    validate();
  }

  Permutation(detail::unchecked_t, std::vector<int> word) : word_(std::move(word)) {}

  static Permutation identity(int n) {
    std::vector<int> w(static_cast<size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(detail::unchecked, std::move(w));
  }

  /// The longest element w0 = n (n-1) ... 2 1.
  static Permutation longest(int n) {
    std::vector<int> w(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = n - i;
    return Permutation(detail::unchecked, std::move(w));
  }

  /// Accepts a compact digit string for n <= 9 (e.g. "3412"), a
  /// comma-separated list for any n, or "e" / "" for the empty
  /// permutation.  Sizes beyond max_permutation_size() are rejected.
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(word_.size()); }
  bool empty() const { return word_.empty(); }
  const std::vector<int>& word() const { return word_; }

  /// 0-based position access; values are 1-based.
  int operator[](int pos) const { return word_[static_cast<size_t>(pos)]; }

  /// 0-based position of a value in the word.
  int position_of(int value) const {
    for (int i = 0; i < size(); ++i)
      if (word_[static_cast<size_t>(i)] == value) return i;
    throw InvalidInput("value " + std::to_string(value) + " not in permutation");
  }

  std::string str() const {
    if (empty()) return "e";
    std::string out;
    if (size() <= 9) {
      for (int v : word_) out += static_cast<char>('0' + v);
    } else {
      for (size_t i = 0; i < word_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(word_[i]);
      }
    }
    return out;
  }

  /// Packs the word into 4-bit nibbles; requires n <= 15.  Used as a
  /// cheap set key in exhaustive scans.
  std::uint64_t packed() const {
    detail::check(size() <= 15, "packed() requires n <= 15");
    std::uint64_t key = 0;
    for (int i = 0; i < size(); ++i)
      key |= static_cast<std::uint64_t>(word_[static_cast<size_t>(i)]) << (4 * i);
    return key;
  }

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation& o) const {
    return std::lexicographical_compare_three_way(word_.begin(), word_.end(),
                                                  o.word_.begin(), o.word_.end());
  }

 private:
  void validate() const {
    const int n = size();
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    for (int v : word_) {
      if (v < 1 || v > n || seen[static_cast<size_t>(v)])
        throw InvalidInput("word is not a permutation of 1..n");
      seen[static_cast<size_t>(v)] = true;
    }
  }

  std::vector<int> word_;
};

inline Permutation Permutation::parse(std::string_view text) {
  auto strip = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = strip(text);
  if (text.empty() || text == "e") return Permutation();
  std::vector<int> w;
  if (text.find(',') != std::string_view::npos) {
    size_t pos = 0;
    while (pos <= text.size()) {
      size_t comma = text.find(',', pos);
      std::string_view tok = strip(text.substr(pos, comma == std::string_view::npos
                                                         ? std::string_view::npos
                                                         : comma - pos));
      if (tok.empty()) throw InvalidInput("empty entry in permutation text");
      int v = 0;
      for (char c : tok) {
        if (c < '0' || c > '9') throw InvalidInput("bad character in permutation text");
        v = v * 10 + (c - '0');
      }
      w.push_back(v);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  } else {
    // Compact digit form is unambiguous only for n <= 9.
    if (text.size() > 9) throw InvalidInput("compact permutation text limited to n <= 9");
    for (char c : text) {
      if (c < '1' || c > '9') throw InvalidInput("bad character in permutation text");
      w.push_back(c - '0');
    }
  }
  if (static_cast<int>(w.size()) > max_permutation_size())
    throw ResourceLimit("permutation size exceeds cap " +
                        std::to_string(max_permutation_size()));
  return Permutation(std::move(w));
}

/// The unique permutation with the same relative order as the sequence.
inline Permutation standardize(const std::vector<int>& seq) {
  const int k = static_cast<int>(seq.size());
  std::vector<int> idx(static_cast<size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](int a, int b) { return seq[static_cast<size_t>(a)] < seq[static_cast<size_t>(b)]; });
  std::vector<int> w(static_cast<size_t>(k));
  for (int rank = 0; rank < k; ++rank) {
    if (rank > 0 && seq[static_cast<size_t>(idx[static_cast<size_t>(rank)])] ==
                        seq[static_cast<size_t>(idx[static_cast<size_t>(rank - 1)])])
      throw InvalidInput("standardize: entries not distinct");
    w[static_cast<size_t>(idx[static_cast<size_t>(rank)])] = rank + 1;
  }
  return Permutation(detail::unchecked, std::move(w));
}

inline Permutation inverse(const Permutation& x) {
  std::vector<int> w(static_cast<size_t>(x.size()));
  for (int i = 0; i < x.size(); ++i) w[static_cast<size_t>(x[i] - 1)] = i + 1;
  return Permutation(detail::unchecked, std::move(w));
}

/// rv = w0 . x : replaces each value v by n+1-v.
inline Permutation rv(const Permutation& x) {
  const int n = x.size();
  std::vector<int> w(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = n + 1 - x[i];
  return Permutation(detail::unchecked, std::move(w));
}

/// rp = x . w0 : reverses the word.
inline Permutation rp(const Permutation& x) {
  std::vector<int> w(x.word().rbegin(), x.word().rend());
  return Permutation(detail::unchecked, std::move(w));
}

/// Subsequence of the word consisting of the entries in V, order preserved.
inline std::vector<int> restrict_to_values(const Permutation& x, const std::vector<int>& values) {
  std::vector<bool> keep(static_cast<size_t>(x.size()) + 1, false);
  for (int v : values) {
    if (v < 1 || v > x.size()) throw InvalidInput("restrict_to_values: value out of range");
    keep[static_cast<size_t>(v)] = true;
  }
  std::vector<int> out;
  for (int v : x.word())
    if (keep[static_cast<size_t>(v)]) out.push_back(v);
  return out;
}

// ---------------------------------------------------------------------------
// Vincular patterns

/// A pattern whose dash-free adjacent letters must occupy consecutive
/// positions in an occurrence.  `adjacent` holds the 1-based positions i
/// such that occurrence positions i and i+1 must be adjacent.
struct VincularPattern {
  Permutation values;
  std::vector<int> adjacent;

  /// Parses notation like "3-41-2": letters in one dash-separated group
  /// are adjacency-constrained.
  static VincularPattern parse(std::string_view text) {
    VincularPattern p;
    std::vector<int> vals;
    std::vector<int> adj;
    for (char c : text) {
      if (c == '-') {
        if (vals.empty()) throw InvalidInput("bad vincular pattern");
        continue;
      }
      if (c < '1' || c > '9') throw InvalidInput("bad vincular pattern");
      vals.push_back(c - '0');
    }
    // Recompute adjacency by walking groups.
    size_t pos = 0;
    int letter = 0;
    while (pos < text.size()) {
      size_t dash = text.find('-', pos);
      size_t len = (dash == std::string_view::npos ? text.size() : dash) - pos;
      for (size_t i = 0; i + 1 < len; ++i) adj.push_back(letter + static_cast<int>(i) + 1);
      letter += static_cast<int>(len);
      if (dash == std::string_view::npos) break;
      pos = dash + 1;
    }
    p.values = Permutation(std::move(vals));
    for (int a : adj)
      if (a < 1 || a >= p.values.size()) throw InvalidInput("bad adjacency in pattern");
    p.adjacent = std::move(adj);
    return p;
  }
};

/// True iff x contains an occurrence of p respecting the adjacency
/// constraints.  Backtracking over occurrence positions; pattern lengths
/// in this project are at most 4.
inline bool contains_vincular(const Permutation& x, const VincularPattern& p) {
  const int n = x.size();
  const int k = p.values.size();
  if (k == 0) return true;
  if (k > n) return false;
  std::vector<bool> must_adjoin(static_cast<size_t>(k), false);
  for (int a : p.adjacent) must_adjoin[static_cast<size_t>(a - 1)] = true;  // between slot a-1 and a (0-based)
  std::vector<int> chosen(static_cast<size_t>(k), -1);
  std::function<bool(int, int)> go = [&](int slot, int from) -> bool {
    if (slot == k) return true;
    int lo = from, hi = n - (k - slot);
    if (slot > 0 && must_adjoin[static_cast<size_t>(slot - 1)]) hi = lo = from;
    for (int i = lo; i <= hi; ++i) {
      bool ok = true;
      for (int s = 0; s < slot && ok; ++s) {
        bool val_lt = x[i] < x[chosen[static_cast<size_t>(s)]];
        bool pat_lt = p.values[slot] < p.values[s];
        ok = (val_lt == pat_lt);
      }
      if (!ok) continue;
      chosen[static_cast<size_t>(slot)] = i;
      if (go(slot + 1, i + 1)) return true;
    }
    return false;
  };
  return go(0, 0);
}

namespace detail {

// Witness scan shared by the four length-4 vincular patterns.  At a
// descent pair (d, a) (or ascent for the x-14-x patterns), L and R are
// the values strictly between the pair located left resp. right of it.
enum class Vin4 { p3_41_2, p2_41_3, p3_14_2, p2_14_3 };

inline bool contains_vin4(const Permutation& x, Vin4 which) {
  const int n = x.size();
  const bool at_descent = (which == Vin4::p3_41_2 || which == Vin4::p2_41_3);
  for (int i = 0; i + 1 < n; ++i) {
    int u = x[i], v = x[i + 1];
    if (at_descent ? (u < v) : (u > v)) continue;
    int lo = std::min(u, v), hi = std::max(u, v);
    if (hi - lo < 2) continue;
    int maxL = 0, minL = n + 1, maxR = 0, minR = n + 1;
    for (int j = 0; j < i; ++j) {
      int w = x[j];
      if (w > lo && w < hi) { maxL = std::max(maxL, w); minL = std::min(minL, w); }
    }
    for (int j = i + 2; j < n; ++j) {
      int w = x[j];
      if (w > lo && w < hi) { maxR = std::max(maxR, w); minR = std::min(minR, w); }
    }
    switch (which) {
      case Vin4::p3_41_2:  // c left, b right, b < c
      case Vin4::p3_14_2:
        if (maxL > 0 && minR <= n && minR < maxL) return true;
        break;
      case Vin4::p2_41_3:  // b left, c right, b < c
      case Vin4::p2_14_3:
        if (minL <= n && maxR > 0 && minL < maxR) return true;
        break;
    }
  }
  return false;
}

}  // namespace detail

/// Avoids both 3-41-2 and 2-41-3.
inline bool is_twisted_baxter(const Permutation& x) {
  return !detail::contains_vin4(x, detail::Vin4::p3_41_2) &&
         !detail::contains_vin4(x, detail::Vin4::p2_41_3);
}

/// Avoids both 3-14-2 and 2-41-3.
inline bool is_baxter(const Permutation& x) {
  return !detail::contains_vin4(x, detail::Vin4::p3_14_2) &&
         !detail::contains_vin4(x, detail::Vin4::p2_41_3);
}

// ---------------------------------------------------------------------------
// Weak order

/// Left inversion set: pairs (a,b) with a > b and a preceding b in the
/// word.  Stored as a bitset over pairs; realizable sets are transitively
/// closed and co-closed.
class InversionSet {
 public:
  explicit InversionSet(int n) : n_(n), bits_((pair_count(n) + 63) / 64, 0) {}

  static InversionSet of(const Permutation& x) {
    InversionSet s(x.size());
    const int n = x.size();
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (x[i] > x[j]) s.insert(x[i], x[j]);
    return s;
  }

  int n() const { return n_; }

  bool contains(int a, int b) const {
    size_t k = index(a, b);
    return (bits_[k >> 6] >> (k & 63)) & 1;
  }
  void insert(int a, int b) {
    size_t k = index(a, b);
    bits_[k >> 6] |= std::uint64_t{1} << (k & 63);
  }

  bool subset_of(const InversionSet& o) const {
    detail::check(n_ == o.n_, "inversion sets of different sizes");
    for (size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] & ~o.bits_[i]) return false;
    return true;
  }

  InversionSet united(const InversionSet& o) const {
    detail::check(n_ == o.n_, "inversion sets of different sizes");
    InversionSet r(n_);
    for (size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] | o.bits_[i];
    return r;
  }

  /// Closes under (a,b),(b,c) -> (a,c) for a > b > c.
  void transitively_close() {
    for (int b = 2; b < n_; ++b)
      for (int a = b + 1; a <= n_; ++a) {
        if (!contains(a, b)) continue;
        for (int c = 1; c < b; ++c)
          if (contains(b, c)) insert(a, c);
      }
  }

  /// True iff the set is the inversion set of a permutation: closed, and
  /// its complement among all pairs is closed as well.
  bool is_valid() const {
    for (int a = 3; a <= n_; ++a)
      for (int b = 2; b < a; ++b)
        for (int c = 1; c < b; ++c) {
          bool ab = contains(a, b), bc = contains(b, c), ac = contains(a, c);
          if (ab && bc && !ac) return false;
          if (!ab && !bc && ac) return false;
        }
    return true;
  }

  /// Reconstructs the unique permutation with this inversion set.
  Permutation to_permutation() const {
    // precedes(u, v): u before v in the word.
    auto precedes = [&](int u, int v) {
      return u > v ? contains(u, v) : !contains(v, u);
    };
    std::vector<int> w(static_cast<size_t>(n_));
    for (int u = 1; u <= n_; ++u) {
      int count = 0;  // values u precedes
      for (int v = 1; v <= n_; ++v)
        if (v != u && precedes(u, v)) ++count;
      w[static_cast<size_t>(n_ - 1 - count)] = u;
    }
    Permutation p{std::vector<int>(w)};  // validates totality
    return p;
  }

  bool operator==(const InversionSet&) const = default;

  static size_t pair_count(int n) { return static_cast<size_t>(n) * (n - 1) / 2; }

 private:
  // Index of pair (a,b), a > b >= 1.
  size_t index(int a, int b) const {
    detail::check(a > b && b >= 1 && a <= n_, "bad inversion pair");
    return static_cast<size_t>(a - 1) * (a - 2) / 2 + static_cast<size_t>(b - 1);
  }

  int n_;
  std::vector<std::uint64_t> bits_;
};

/// Inversion set packed into a single word; requires n <= 11.
inline std::uint64_t inversion_mask(const Permutation& x) {
  const int n = x.size();
  detail::check(n <= 11, "inversion_mask requires n <= 11");
  std::uint64_t m = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (x[i] > x[j]) {
        int a = x[i], b = x[j];
        m |= std::uint64_t{1} << ((a - 1) * (a - 2) / 2 + (b - 1));
      }
  return m;
}

/// Weak (right) order: containment of inversion sets.
inline bool weak_leq(const Permutation& x, const Permutation& y) {
  if (x.size() != y.size()) throw InvalidInput("weak_leq: size mismatch");
  if (x.size() <= 11) {
    std::uint64_t a = inversion_mask(x), b = inversion_mask(y);
    return (a & ~b) == 0;
  }
  return InversionSet::of(x).subset_of(InversionSet::of(y));
}

/// Up-covers: swap each adjacent ascent into a descent.
inline std::vector<Permutation> weak_covers_up(const Permutation& x) {
  std::vector<Permutation> out;
  for (int i = 0; i + 1 < x.size(); ++i) {
    if (x[i] < x[i + 1]) {
      std::vector<int> w = x.word();
      std::swap(w[static_cast<size_t>(i)], w[static_cast<size_t>(i) + 1]);
      out.emplace_back(detail::unchecked, std::move(w));
    }
  }
  return out;
}

inline std::vector<Permutation> weak_covers_down(const Permutation& x) {
  std::vector<Permutation> out;
  for (int i = 0; i + 1 < x.size(); ++i) {
    if (x[i] > x[i + 1]) {
      std::vector<int> w = x.word();
      std::swap(w[static_cast<size_t>(i)], w[static_cast<size_t>(i) + 1]);
      out.emplace_back(detail::unchecked, std::move(w));
    }
  }
  return out;
}

/// Join: the inversion set is the transitive closure of the union.
inline Permutation weak_join(const Permutation& x, const Permutation& y) {
  if (x.size() != y.size()) throw InvalidInput("weak_join: size mismatch");
  InversionSet s = InversionSet::of(x).united(InversionSet::of(y));
  s.transitively_close();
  return s.to_permutation();
}

/// Meet, computed dually through the value-complement antiautomorphism.
inline Permutation weak_meet(const Permutation& x, const Permutation& y) {
  if (x.size() != y.size()) throw InvalidInput("weak_meet: size mismatch");
  return rv(weak_join(rv(x), rv(y)));
}

// ---------------------------------------------------------------------------
// Shifted shuffles

/// All interleavings of x with y's values shifted up by |x|.  C(p+q, p)
/// distinct permutations.
inline std::vector<Permutation> shifted_shuffles(const Permutation& x, const Permutation& y) {
  const int p = x.size(), q = y.size(), n = p + q;
  std::vector<bool> take_x(static_cast<size_t>(n), false);
  std::fill(take_x.begin(), take_x.begin() + p, true);
  std::vector<Permutation> out;
  // std::prev_permutation over bool runs through all C(n,p) position sets.
  do {
    std::vector<int> w(static_cast<size_t>(n));
    int ix = 0, iy = 0;
    for (int i = 0; i < n; ++i)
      w[static_cast<size_t>(i)] = take_x[static_cast<size_t>(i)] ? x[ix++] : y[iy++] + p;
    out.emplace_back(detail::unchecked, std::move(w));
  } while (std::prev_permutation(take_x.begin(), take_x.end()));
  return out;
}

// ---------------------------------------------------------------------------
// Descents of inverse (NSym data)

/// The pair (U, n) where U = { a < n : a+1 occurs before a }.
struct DescentData {
  std::vector<int> set;  // sorted
  int n = 0;

  bool operator==(const DescentData&) const = default;
};

inline DescentData sigma(const Permutation& x) {
  const int n = x.size();
  DescentData d;
  d.n = n;
  if (n <= 1) return d;
  std::vector<int> pos(static_cast<size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i) pos[static_cast<size_t>(x[i])] = i;
  for (int a = 1; a < n; ++a)
    if (pos[static_cast<size_t>(a + 1)] < pos[static_cast<size_t>(a)]) d.set.push_back(a);
  return d;
}

// ---------------------------------------------------------------------------
// Enumeration

/// Calls fn for each permutation of S_n in lexicographic order.
inline void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn) {
  std::vector<int> w(static_cast<size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do {
    Permutation p(detail::unchecked, w);
    fn(p);
  } while (std::next_permutation(w.begin(), w.end()));
}

inline std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

namespace detail {

inline const std::vector<Permutation>& filtered_permutations(
    int n, bool (*pred)(const Permutation&), const char* what, int cap) {
  if (n < 0 || n > cap)
    throw ResourceLimit(std::string(what) + " enumeration capped at n <= " + std::to_string(cap));
  static std::map<std::pair<const void*, int>, std::vector<Permutation>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(reinterpret_cast<const void*>(pred), n);
  auto it = cache.find(key);
  if (it == cache.end()) {
    std::vector<Permutation> out;
    for_each_permutation(n, [&](const Permutation& p) {
      if (pred(p)) out.push_back(p);
    });
    it = cache.emplace(key, std::move(out)).first;
  }
  return it->second;
}

}  // namespace detail

/// Twisted Baxter permutations of S_n in lexicographic order (cached).
inline const std::vector<Permutation>& twisted_baxter_permutations(int n) {
  return detail::filtered_permutations(n, &is_twisted_baxter, "twisted Baxter", 10);
}

/// Baxter permutations of S_n in lexicographic order (cached).
inline const std::vector<Permutation>& baxter_permutations(int n) {
  return detail::filtered_permutations(n, &is_baxter, "Baxter", 10);
}

}  // namespace baxter

template <>
struct std::hash<baxter::Permutation> {
  size_t operator()(const baxter::Permutation& p) const noexcept {
    size_t h = 1469598103934665603ull;
    for (int v : p.word()) {
      h ^= static_cast<size_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};
