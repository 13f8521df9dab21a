#include "preproj/subword_index.hpp"

namespace preproj {

SubwordIndex::SubwordIndex(int num_letters, int num_vertices)
    : K_(num_letters), child_(static_cast<std::size_t>(num_letters), -1), term_(1, -1),
      vertex_term_(num_vertices, -1) {}

void SubwordIndex::clear() {
  child_.assign(static_cast<std::size_t>(K_), -1);
  term_.assign(1, -1);
  std::fill(vertex_term_.begin(), vertex_term_.end(), -1);
}

void SubwordIndex::insert(const Path& lead, int id) {
  if (lead.empty()) {
    vertex_term_.at(lead.v) = id;
    return;
  }
  int node = 0;
  for (Letter l : lead.w) {
    int next = child(node, l);
    if (next < 0) {
      next = static_cast<int>(term_.size());
      term_.push_back(-1);
      child_.resize(child_.size() + K_, -1);
      child_[static_cast<std::size_t>(node) * K_ + l] = next;
    }
    node = next;
  }
  term_[node] = id;
}

void SubwordIndex::erase(const Path& lead) {
  if (lead.empty()) {
    vertex_term_.at(lead.v) = -1;
    return;
  }
  int node = 0;
  for (Letter l : lead.w) {
    node = child(node, l);
    if (node < 0) return;
  }
  term_[node] = -1;
}

std::optional<SubwordIndex::Match> SubwordIndex::find(const Alphabet& A, const Path& p) const {
  const auto& w = p.w;
  int n = static_cast<int>(w.size());
  // Killed vertices first: any occurrence of e_v in the path.
  if (vertex_term_.size()) {
    int v0 = path_source(A, p);
    if (vertex_term_[v0] >= 0) return Match{vertex_term_[v0], 0, 0};
    for (int k = 0; k < n; ++k) {
      int v = A.target(w[k]);
      if (vertex_term_[v] >= 0) return Match{vertex_term_[v], k + 1, 0};
    }
  }
  for (int start = 0; start < n; ++start) {
    int node = 0;
    for (int i = start; i < n; ++i) {
      node = child(node, w[i]);
      if (node < 0) break;
      if (term_[node] >= 0) return Match{term_[node], start, i - start + 1};
    }
  }
  return std::nullopt;
}

bool SubwordIndex::suffix_reducible(const Alphabet& A, const Path& p) const {
  const auto& w = p.w;
  int n = static_cast<int>(w.size());
  if (n == 0) return vertex_term_[p.v] >= 0;
  if (vertex_term_[A.target(w.back())] >= 0) return true;
  for (int start = 0; start < n; ++start) {
    int node = 0;
    int i = start;
    for (; i < n; ++i) {
      node = child(node, w[i]);
      if (node < 0) break;
    }
    if (i == n && term_[node] >= 0) return true;
  }
  return false;
}

}  // namespace preproj
