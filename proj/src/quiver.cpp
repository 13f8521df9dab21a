#include "preproj/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>

namespace preproj {

// ---------------------------------------------------------------- Quiver

int Quiver::add_vertex(int label) {
  if (vertex_index(label)) throw QuiverError("duplicate vertex " + std::to_string(label));
  labels_.push_back(label);
  return num_vertices() - 1;
}

int Quiver::add_arrow(std::string name, int source_label, int target_label) {
  if (name.empty()) throw QuiverError("empty arrow name");
  if (!std::isalpha(static_cast<unsigned char>(name[0])))
    throw QuiverError("arrow name must start with a letter: " + name);
  for (char ch : name)
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_')
      throw QuiverError("bad character in arrow name: " + name);
  if (name.size() >= 2 && name[0] == 'e' && name[1] == '_')
    throw QuiverError("arrow names may not start with e_: " + name);
  if (arrow_index(name)) throw QuiverError("duplicate arrow " + name);
  Arrow a{std::move(name), vertex_index_or_throw(source_label), vertex_index_or_throw(target_label)};
  arrows_.push_back(std::move(a));
  return num_arrows() - 1;
}

std::optional<int> Quiver::vertex_index(int label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

int Quiver::vertex_index_or_throw(int label) const {
  auto v = vertex_index(label);
  if (!v) throw QuiverError("unknown vertex " + std::to_string(label));
  return *v;
}

std::optional<int> Quiver::arrow_index(std::string_view name) const {
  for (int i = 0; i < num_arrows(); ++i)
    if (arrows_[i].name == name) return i;
  return std::nullopt;
}

bool Quiver::has_loops() const {
  return std::any_of(arrows_.begin(), arrows_.end(), [](const Arrow& a) { return a.source == a.target; });
}

bool Quiver::has_multiple_edges() const {
  std::set<std::pair<int, int>> seen;
  for (const auto& a : arrows_)
    if (!seen.insert({a.source, a.target}).second) return true;
  return false;
}

bool Quiver::is_connected() const {
  int n = num_vertices();
  if (n == 0) return true;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& a : arrows_) parent[find(a.source)] = find(a.target);
  int root = find(0);
  for (int v = 1; v < n; ++v)
    if (find(v) != root) return false;
  return true;
}

// ---------------------------------------------------------------- builtins

Quiver builtin_dynkin(char family, int n) {
  Quiver q;
  switch (family) {
    case 'A': {
      if (n < 1) throw QuiverError("A_n needs n >= 1");
      for (int i = 1; i <= n; ++i) q.add_vertex(i);
      for (int i = 1; i < n; ++i) q.add_arrow("a" + std::to_string(i), i, i + 1);
      break;
    }
    case 'D': {
      if (n < 4) throw QuiverError("D_n needs n >= 4");
      if (n > 27) throw QuiverError("D_n supported up to n = 27");
      for (int i = 1; i <= n; ++i) q.add_vertex(i);
      q.add_arrow("a", 1, 3);
      q.add_arrow("b", 2, 3);
      // long arm c_1, c_2, ... spelled c, d, e, ...
      for (int i = 4; i <= n; ++i) q.add_arrow(std::string(1, char('c' + (i - 4))), i, i - 1);
      break;
    }
    case 'E': {
      if (n < 6 || n > 8) throw QuiverError("E_n needs 6 <= n <= 8");
      for (int i = 1; i <= n; ++i) q.add_vertex(i);
      q.add_arrow("a", 4, 3);
      q.add_arrow("b", 2, 3);
      q.add_arrow("c", 5, 3);
      q.add_arrow("d", 1, 2);
      q.add_arrow("e", 6, 5);
      if (n >= 7) q.add_arrow("f", 7, 6);
      if (n >= 8) q.add_arrow("g", 8, 7);
      break;
    }
    default: throw QuiverError(std::string("unknown Dynkin family ") + family);
  }
  q.dynkin_type = std::string(1, family) + std::to_string(n);
  return q;
}

Quiver builtin_dynkin(std::string_view name) {
  if (name.size() < 2) throw QuiverError("bad Dynkin name '" + std::string(name) + "'");
  char family = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
  std::string_view digits = name.substr(1);
  if (!digits.empty() && digits[0] == '_') digits.remove_prefix(1);
  int n = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc() || ptr != digits.data() + digits.size())
    throw QuiverError("bad Dynkin name '" + std::string(name) + "'");
  return builtin_dynkin(family, n);
}

std::set<unsigned> bad_primes(const Quiver& q) {
  if (q.dynkin_type.empty()) throw QuiverError("bad primes are defined for ADE Dynkin quivers only");
  char family = q.dynkin_type[0];
  int n = std::stoi(q.dynkin_type.substr(1));
  if (family == 'A') return {};
  if (family == 'D') return {2};
  if (family == 'E') return n == 8 ? std::set<unsigned>{2, 3, 5} : std::set<unsigned>{2, 3};
  throw QuiverError("unknown Dynkin type " + q.dynkin_type);
}

namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream is{std::string(line)};
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

int parse_int(const std::string& s, int lineno) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw QuiverError("line " + std::to_string(lineno) + ": expected an integer, got '" + s + "'");
  return v;
}

/// Whether a quiver is isomorphic to a Dynkin diagram of the given shape is
/// not checked here; only builtins get a type tag. Files may declare one with
/// `type D4`.
}  // namespace

QuiverFile parse_quiver_text(std::string_view text) {
  QuiverFile out;
  std::istringstream is{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto tok = split_ws(line);
    if (tok.empty()) continue;
    if (tok[0] == "vertex") {
      if (tok.size() < 2) throw QuiverError("line " + std::to_string(lineno) + ": vertex needs a label");
      for (std::size_t i = 1; i < tok.size(); ++i) out.quiver.add_vertex(parse_int(tok[i], lineno));
    } else if (tok[0] == "arrow") {
      if (tok.size() != 4) throw QuiverError("line " + std::to_string(lineno) + ": expected 'arrow <name> <src> <tgt>'");
      out.quiver.add_arrow(tok[1], parse_int(tok[2], lineno), parse_int(tok[3], lineno));
    } else if (tok[0] == "order") {
      for (std::size_t i = 1; i < tok.size(); ++i) {
        if ((i % 2 == 0) != (tok[i] == "<"))
          throw QuiverError("line " + std::to_string(lineno) + ": expected 'order x < y < ...'");
        if (i % 2 == 1) out.order_chain.push_back(tok[i]);
      }
    } else if (tok[0] == "type") {
      if (tok.size() != 2) throw QuiverError("line " + std::to_string(lineno) + ": expected 'type <Dynkin name>'");
      out.quiver.dynkin_type = tok[1];
    } else {
      throw QuiverError("line " + std::to_string(lineno) + ": unknown directive '" + tok[0] + "'");
    }
  }
  for (const auto& a : out.quiver.arrows())
    if (a.source == a.target) throw QuiverError("loops are not supported (arrow " + a.name + ")");
  return out;
}

// ---------------------------------------------------------------- Alphabet

Alphabet::Alphabet(std::vector<int> vertex_labels, std::vector<LetterInfo> letters)
    : vertex_labels_(std::move(vertex_labels)), letters_(std::move(letters)) {
  if (letters_.size() > 250) throw QuiverError("too many letters");
  out_.resize(vertex_labels_.size());
  in_.resize(vertex_labels_.size());
  for (int i = 0; i < num_letters(); ++i) {
    out_.at(letters_[i].source).push_back(i);
    in_.at(letters_[i].target).push_back(i);
  }
}

std::optional<int> Alphabet::vertex_index(int label) const {
  auto it = std::find(vertex_labels_.begin(), vertex_labels_.end(), label);
  if (it == vertex_labels_.end()) return std::nullopt;
  return static_cast<int>(it - vertex_labels_.begin());
}

std::optional<int> Alphabet::find(std::string_view name) const {
  for (int i = 0; i < num_letters(); ++i)
    if (letters_[i].name == name) return i;
  return std::nullopt;
}

AlphabetPtr loop_alphabet(const std::vector<std::string>& names) {
  std::vector<LetterInfo> letters;
  for (const auto& n : names) letters.push_back({n, 0, 0, -1, false, -1});
  return std::make_shared<Alphabet>(std::vector<int>{1}, std::move(letters));
}

// ---------------------------------------------------------------- DoubledQuiver

namespace {

// Names compare with embedded numbers by value so that a2 < a10.
bool natural_less(const std::string& x, const std::string& y) {
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    if (std::isdigit(static_cast<unsigned char>(x[i])) && std::isdigit(static_cast<unsigned char>(y[j]))) {
      std::size_t i2 = i, j2 = j;
      while (i2 < x.size() && std::isdigit(static_cast<unsigned char>(x[i2]))) ++i2;
      while (j2 < y.size() && std::isdigit(static_cast<unsigned char>(y[j2]))) ++j2;
      unsigned long a = std::stoul(x.substr(i, i2 - i)), b = std::stoul(y.substr(j, j2 - j));
      if (a != b) return a < b;
      i = i2;
      j = j2;
    } else {
      if (x[i] != y[j]) return x[i] < y[j];
      ++i;
      ++j;
    }
  }
  return x.size() - i < y.size() - j;
}

std::vector<DoubledArrow> default_order(const Quiver& q) {
  std::vector<int> idx(q.num_arrows());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](int x, int y) { return natural_less(q.arrow(x).name, q.arrow(y).name); });
  std::vector<DoubledArrow> order;
  for (int i : idx) order.push_back({i, false});
  for (int i : idx) order.push_back({i, true});
  return order;
}

}  // namespace

DoubledQuiver::DoubledQuiver(Quiver q) : base_(std::move(q)) {
  order_ = default_order(base_);
  build();
}

DoubledQuiver::DoubledQuiver(Quiver q, const std::vector<std::string>& chain) : base_(std::move(q)) {
  order_ = default_order(base_);
  if (!chain.empty()) {
    std::vector<DoubledArrow> named;
    for (const auto& name : chain) {
      bool dual = !name.empty() && name.back() == '*';
      auto idx = base_.arrow_index(dual ? std::string_view(name).substr(0, name.size() - 1) : std::string_view(name));
      if (!idx) throw QuiverError("order mentions unknown arrow " + name);
      DoubledArrow d{*idx, dual};
      if (std::find(named.begin(), named.end(), d) != named.end())
        throw QuiverError("order mentions " + name + " twice");
      named.push_back(d);
    }
    std::vector<std::size_t> slots;
    for (std::size_t i = 0; i < order_.size(); ++i)
      if (std::find(named.begin(), named.end(), order_[i]) != named.end()) slots.push_back(i);
    for (std::size_t k = 0; k < slots.size(); ++k) order_[slots[k]] = named[k];
  }
  build();
}

DoubledQuiver::DoubledQuiver(Quiver q, std::vector<DoubledArrow> total_order)
    : base_(std::move(q)), order_(std::move(total_order)) {
  if (static_cast<int>(order_.size()) != 2 * base_.num_arrows())
    throw QuiverError("arrow order must list every doubled arrow once");
  std::set<std::pair<int, bool>> seen;
  for (auto d : order_) {
    if (d.arrow < 0 || d.arrow >= base_.num_arrows() || !seen.insert({d.arrow, d.dual}).second)
      throw QuiverError("arrow order must list every doubled arrow once");
  }
  build();
}

void DoubledQuiver::build() {
  letter_index_.assign(2 * base_.num_arrows(), -1);
  std::vector<LetterInfo> letters;
  for (std::size_t i = 0; i < order_.size(); ++i) {
    const Arrow& a = base_.arrow(order_[i].arrow);
    LetterInfo li;
    li.arrow = order_[i].arrow;
    li.dual = order_[i].dual;
    li.name = li.dual ? a.name + "*" : a.name;
    li.source = li.dual ? a.target : a.source;
    li.target = li.dual ? a.source : a.target;
    letters.push_back(li);
    letter_index_[2 * li.arrow + (li.dual ? 1 : 0)] = static_cast<int>(i);
  }
  for (auto& li : letters) li.partner = letter_index_[2 * li.arrow + (li.dual ? 0 : 1)];
  alphabet_ = std::make_shared<Alphabet>(base_.labels(), std::move(letters));
}

int DoubledQuiver::letter_of(int arrow, bool dual) const {
  return letter_index_.at(2 * arrow + (dual ? 1 : 0));
}

// ---------------------------------------------------------------- stars

std::vector<int> StarDecomposition::arm_lengths() const {
  std::vector<int> out;
  for (const auto& a : arms) out.push_back(a.length());
  return out;
}

int StarDecomposition::arm_of_arrow(int arrow) const {
  for (std::size_t i = 0; i < arms.size(); ++i)
    if (std::find(arms[i].arrows.begin(), arms[i].arrows.end(), arrow) != arms[i].arrows.end())
      return static_cast<int>(i);
  return -1;
}

StarDecomposition star_decompose(const Quiver& q) {
  int n = q.num_vertices();
  if (n == 0) throw QuiverError("not star-shaped: empty quiver");
  if (!q.is_connected()) throw QuiverError("not star-shaped: quiver is disconnected");
  if (q.has_loops()) throw QuiverError("not star-shaped: quiver has a loop");
  if (q.num_arrows() != n - 1) throw QuiverError("not star-shaped: underlying graph has a cycle");
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbour, arrow)
  for (int i = 0; i < q.num_arrows(); ++i) {
    adj[q.arrow(i).source].push_back({q.arrow(i).target, i});
    adj[q.arrow(i).target].push_back({q.arrow(i).source, i});
  }
  int centre = -1;
  for (int v = 0; v < n; ++v) {
    if (adj[v].size() >= 3) {
      if (centre >= 0) throw QuiverError("not star-shaped: more than one branch vertex");
      centre = v;
    }
  }
  if (centre < 0) {
    // A chain. Prefer an endpoint that is a sink, then the larger label.
    std::vector<int> ends;
    for (int v = 0; v < n; ++v)
      if (adj[v].size() <= 1) ends.push_back(v);
    auto score = [&](int v) {
      bool sink = adj[v].empty() || q.arrow(adj[v][0].second).target == v;
      return std::pair<int, int>{sink ? 1 : 0, q.label(v)};
    };
    centre = *std::max_element(ends.begin(), ends.end(), [&](int x, int y) { return score(x) < score(y); });
  }
  StarDecomposition star;
  star.central = centre;
  // Neighbours in arrow order so arms come out deterministically.
  auto nbrs = adj[centre];
  std::sort(nbrs.begin(), nbrs.end(), [](auto x, auto y) { return x.second < y.second; });
  for (auto [first, first_arrow] : nbrs) {
    Arm arm;
    int prev = centre, cur = first, via = first_arrow;
    while (true) {
      arm.vertices.push_back(cur);
      arm.arrows.push_back(via);
      arm.inward.push_back(q.arrow(via).target == prev);
      int next = -1, next_arrow = -1;
      for (auto [w, ar] : adj[cur])
        if (w != prev) {
          next = w;
          next_arrow = ar;
        }
      if (next < 0) break;
      prev = cur;
      cur = next;
      via = next_arrow;
    }
    star.arms.push_back(std::move(arm));
  }
  return star;
}

int nilpotency_bound(const StarDecomposition& star, const Quiver& q, int arrow) {
  const Arrow& a = q.arrow(arrow);
  if (a.source != star.central && a.target != star.central)
    throw QuiverError("arrow " + a.name + " is not incident to the central vertex");
  int arm = star.arm_of_arrow(arrow);
  return star.arms.at(arm).length();
}

}  // namespace preproj
