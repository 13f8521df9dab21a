#pragma once

// Trie over leading words, answering "which leading word occurs inside this
// path, and where" for reduction, and "is a leading word a suffix" for
// extending normal words one letter at a time.

#include "preproj/path.hpp"

#include <optional>
#include <vector>

namespace preproj {

class SubwordIndex {
 public:
  SubwordIndex() = default;
  SubwordIndex(int num_letters, int num_vertices);

  void insert(const Path& lead, int id);
  void erase(const Path& lead);
  void clear();

  struct Match {
    int id;
    int pos;  // start of the occurrence
    int len;
  };

  /// Leftmost occurrence (shortest first at equal start).
  std::optional<Match> find(const Alphabet& A, const Path& p) const;

  /// Whether some leading word is a suffix of p, or p ends at a killed vertex.
  /// Only meaningful when p minus its last letter is already normal.
  bool suffix_reducible(const Alphabet& A, const Path& p) const;

  bool vertex_killed(int v) const { return vertex_term_[v] >= 0; }

 private:
  int child(int node, Letter l) const { return child_[static_cast<std::size_t>(node) * K_ + l]; }
  int K_ = 0;
  std::vector<int> child_;
  std::vector<int> term_;
  std::vector<int> vertex_term_;
};

}  // namespace preproj
