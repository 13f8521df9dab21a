#include "preproj/cyclic.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace preproj {

std::size_t least_rotation(const Word& w) {
  // Booth's failure-function scan over the doubled word.
  std::size_t n = w.size();
  if (n == 0) return 0;
  std::vector<long> f(2 * n, -1);
  std::size_t k = 0;
  auto at = [&](std::size_t i) { return w[i % n]; };
  for (std::size_t j = 1; j < 2 * n; ++j) {
    Letter sj = at(j);
    long i = f[j - k - 1];
    while (i != -1 && sj != at(k + i + 1)) {
      if (sj < at(k + i + 1)) k = j - i - 1;
      i = f[i];
    }
    if (sj != at(k + i + 1)) {  // i == -1
      if (sj < at(k)) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return k % n;
}

namespace {

Path rotate(const Alphabet& A, const Path& p, std::size_t k) {
  Path r;
  std::size_t n = p.w.size();
  for (std::size_t i = 0; i < n; ++i) r.w.push_back(p.w[(i + k) % n]);
  r.v = static_cast<std::uint16_t>(A.source(r.w[0]));
  return r;
}

}  // namespace

std::vector<Path> rotations(const Alphabet& A, const Path& p) {
  if (!is_cycle(A, p)) throw std::invalid_argument("rotations: not a cycle");
  if (p.empty()) return {p};
  std::vector<Path> out;
  for (std::size_t k = 0; k < p.w.size(); ++k) out.push_back(rotate(A, p, k));
  return out;
}

Path canonical_cycle(const Alphabet& A, const Path& p) {
  if (!is_cycle(A, p)) throw std::invalid_argument("canonical_cycle: not a cycle");
  if (p.empty()) return p;
  return rotate(A, p, least_rotation(p.w));
}

std::vector<Path> closed_cyclic_classes(const Alphabet& A, const std::vector<Path>& words) {
  std::unordered_set<Path, PathHash> have(words.begin(), words.end());
  std::unordered_set<Path, PathHash> seen;
  std::vector<Path> out;
  for (const auto& w : words) {
    if (!is_cycle(A, w)) continue;
    Path c = canonical_cycle(A, w);
    if (!seen.insert(c).second) continue;
    auto rs = rotations(A, c);
    if (std::all_of(rs.begin(), rs.end(), [&](const Path& r) { return have.count(r) > 0; })) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace preproj
