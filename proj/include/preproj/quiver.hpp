#pragma once

// Quivers, doubled quivers and the letter alphabets that words are spelled in.
//
// Vertices carry integer labels (the numbering used in reports and files);
// internally they are indexed 0..n-1 in declaration order.

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace preproj {

class QuiverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Arrow {
  std::string name;
  int source = 0;  // vertex index
  int target = 0;
};

class Quiver {
 public:
  int add_vertex(int label);
  int add_arrow(std::string name, int source_label, int target_label);

  int num_vertices() const { return static_cast<int>(labels_.size()); }
  int num_arrows() const { return static_cast<int>(arrows_.size()); }
  int label(int v) const { return labels_.at(v); }
  const std::vector<int>& labels() const { return labels_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(int i) const { return arrows_.at(i); }

  std::optional<int> vertex_index(int label) const;
  int vertex_index_or_throw(int label) const;
  std::optional<int> arrow_index(std::string_view name) const;

  bool has_loops() const;
  bool has_multiple_edges() const;
  bool is_connected() const;

  /// Family/rank when this quiver was produced by builtin_dynkin.
  std::string dynkin_type;

 private:
  std::vector<int> labels_;
  std::vector<Arrow> arrows_;
};

/// A = 'A', 'D' or 'E'.
Quiver builtin_dynkin(char family, int n);
/// "D4", "E8", "A1" ... ; throws QuiverError.
Quiver builtin_dynkin(std::string_view name);

/// Line oriented text: `vertex <label>`, `arrow <name> <src> <tgt>`,
/// `order x < y < ...`, `#` comments. Returns the quiver and the raw order
/// chain (possibly empty).
struct QuiverFile {
  Quiver quiver;
  std::vector<std::string> order_chain;
};
QuiverFile parse_quiver_text(std::string_view text);

/// Set of bad primes of an ADE quiver, from its Dynkin type.
std::set<unsigned> bad_primes(const Quiver& q);

// ---------------------------------------------------------------------------
// Letters and alphabets.

using Letter = std::uint8_t;

struct LetterInfo {
  std::string name;   // "a" or "a*"
  int source = 0;
  int target = 0;
  int arrow = -1;     // base arrow index when the alphabet comes from a quiver
  bool dual = false;
  int partner = -1;   // the letter of the opposite direction, -1 if none
};

/// Ordered set of letters over a vertex set. The letter id is its rank in
/// the monomial order, so lexicographic comparison of id sequences is the
/// letter-lex comparison.
class Alphabet {
 public:
  Alphabet(std::vector<int> vertex_labels, std::vector<LetterInfo> letters);

  int num_vertices() const { return static_cast<int>(vertex_labels_.size()); }
  int num_letters() const { return static_cast<int>(letters_.size()); }
  const LetterInfo& letter(int id) const { return letters_[id]; }
  int source(int id) const { return letters_[id].source; }
  int target(int id) const { return letters_[id].target; }
  int vertex_label(int v) const { return vertex_labels_[v]; }
  const std::vector<int>& vertex_labels() const { return vertex_labels_; }
  std::optional<int> vertex_index(int label) const;

  /// Looks up "a", "a*"; returns nullopt if unknown.
  std::optional<int> find(std::string_view name) const;

  const std::vector<int>& out_letters(int v) const { return out_[v]; }
  const std::vector<int>& in_letters(int v) const { return in_[v]; }

 private:
  std::vector<int> vertex_labels_;
  std::vector<LetterInfo> letters_;
  std::vector<std::vector<int>> out_, in_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

/// One vertex with loops named by `names`, in increasing order. Used for
/// free algebras such as k<x,y>.
AlphabetPtr loop_alphabet(const std::vector<std::string>& names);

struct DoubledArrow {
  int arrow = 0;
  bool dual = false;
  bool operator==(const DoubledArrow&) const = default;
};

class DoubledQuiver {
 public:
  /// Default order: all arrows by name, then all duals by name.
  explicit DoubledQuiver(Quiver q);
  /// Partial chain of doubled-arrow names; the named letters are placed,
  /// in the given relative order, into the slots they occupy in the default
  /// order.
  DoubledQuiver(Quiver q, const std::vector<std::string>& order_chain);
  DoubledQuiver(Quiver q, std::vector<DoubledArrow> total_order);

  const Quiver& base() const { return base_; }
  const std::vector<DoubledArrow>& order() const { return order_; }
  const AlphabetPtr& alphabet() const { return alphabet_; }
  int num_letters() const { return static_cast<int>(order_.size()); }

  /// Letter id of an arrow or its dual.
  int letter_of(int arrow, bool dual) const;
  static DoubledArrow involution(DoubledArrow d) { return {d.arrow, !d.dual}; }

 private:
  void build();
  Quiver base_;
  std::vector<DoubledArrow> order_;
  AlphabetPtr alphabet_;
  std::vector<int> letter_index_;  // 2*arrow + dual -> letter
};

struct Arm {
  std::vector<int> vertices;   // outward from the centre, centre excluded
  std::vector<int> arrows;     // arrows[k] joins (k==0 ? centre : vertices[k-1]) and vertices[k]
  std::vector<bool> inward;    // arrows[k] points toward the centre
  int length() const { return static_cast<int>(arrows.size()); }
};

struct StarDecomposition {
  int central = 0;
  std::vector<Arm> arms;
  std::vector<int> arm_lengths() const;
  /// Arm containing the arrow, or -1.
  int arm_of_arrow(int arrow) const;
};

/// Throws QuiverError("not star-shaped ...") when q is not a tree with at most
/// one branch vertex.
StarDecomposition star_decompose(const Quiver& q);

/// Arm arrow count L; the cycle at the centre through that arrow satisfies
/// x^(L+1) = 0 in the partial algebra at the centre.
int nilpotency_bound(const StarDecomposition& star, const Quiver& q, int arrow);

}  // namespace preproj
