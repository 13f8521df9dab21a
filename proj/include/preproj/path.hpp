#pragma once

// Paths in a quiver: a word of letters plus the base vertex, which is only
// informative for the lazy path e_v (empty word).

#include "preproj/quiver.hpp"

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstring>
#include <functional>
#include <string>

namespace preproj {

using Word = boost::container::small_vector<Letter, 30>;

struct Path {
  Word w;
  std::uint16_t v = 0;  // source vertex; for nonempty words always s(w[0])

  Path() = default;
  explicit Path(int vertex) : v(static_cast<std::uint16_t>(vertex)) {}
  Path(Word word, int vertex) : w(std::move(word)), v(static_cast<std::uint16_t>(vertex)) {}

  int length() const { return static_cast<int>(w.size()); }
  bool empty() const { return w.empty(); }
};

/// Degree-lexicographic comparison: length, then letter ids, then vertex.
inline int compare(const Path& x, const Path& y) {
  if (x.w.size() != y.w.size()) return x.w.size() < y.w.size() ? -1 : 1;
  if (!x.w.empty()) {
    int c = std::memcmp(x.w.data(), y.w.data(), x.w.size());
    if (c != 0) return c < 0 ? -1 : 1;
  }
  if (x.v != y.v) return x.v < y.v ? -1 : 1;
  return 0;
}

inline bool operator==(const Path& x, const Path& y) { return compare(x, y) == 0; }
inline bool operator<(const Path& x, const Path& y) { return compare(x, y) < 0; }
inline bool operator>(const Path& x, const Path& y) { return compare(x, y) > 0; }

struct PathHash {
  std::size_t operator()(const Path& p) const noexcept {
    std::size_t h = 1469598103934665603ull ^ p.v;
    for (Letter l : p.w) h = (h ^ l) * 1099511628211ull;
    return h ^ (p.w.size() << 56);
  }
};

inline int path_source(const Alphabet& A, const Path& p) { return p.empty() ? p.v : A.source(p.w.front()); }
inline int path_target(const Alphabet& A, const Path& p) { return p.empty() ? p.v : A.target(p.w.back()); }
inline bool is_cycle(const Alphabet& A, const Path& p) { return path_source(A, p) == path_target(A, p); }

inline Path letter_path(const Alphabet& A, int letter) {
  Path p;
  p.w.push_back(static_cast<Letter>(letter));
  p.v = static_cast<std::uint16_t>(A.source(letter));
  return p;
}

/// True when x and y compose (t(x) = s(y)).
inline bool composable(const Alphabet& A, const Path& x, const Path& y) {
  return path_target(A, x) == path_source(A, y);
}

/// Concatenation; caller guarantees composability.
inline Path concat(const Path& x, const Path& y) {
  if (x.empty()) return y;
  Path r = x;
  r.w.insert(r.w.end(), y.w.begin(), y.w.end());
  return r;
}

/// x * m * y with composability assumed.
inline Path sandwich(const Alphabet& A, const Word& left, const Path& m, const Word& right, int base_if_empty) {
  Path r;
  r.w.reserve(left.size() + m.w.size() + right.size());
  r.w.insert(r.w.end(), left.begin(), left.end());
  r.w.insert(r.w.end(), m.w.begin(), m.w.end());
  r.w.insert(r.w.end(), right.begin(), right.end());
  r.v = r.w.empty() ? static_cast<std::uint16_t>(base_if_empty) : static_cast<std::uint16_t>(A.source(r.w.front()));
  return r;
}

/// Checks letter composability along a raw word.
inline bool is_path(const Alphabet& A, const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (A.target(w[i - 1]) != A.source(w[i])) return false;
  return true;
}

/// "a*b*c*" style rendering; lazy path is "e_<label>".
std::string format_path(const Alphabet& A, const Path& p);

}  // namespace preproj
