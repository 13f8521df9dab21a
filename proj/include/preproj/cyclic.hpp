#pragma once

// Cyclic words: rotation classes of cycles, keyed by their minimal rotation.

#include "preproj/path.hpp"

#include <vector>

namespace preproj {

/// Index k such that w[k..] + w[..k] is the lexicographically least rotation
/// (smallest such k when w is periodic).
std::size_t least_rotation(const Word& w);

/// All rotations of a cycle, starting with p itself. Lazy paths have one.
std::vector<Path> rotations(const Alphabet& A, const Path& p);

/// Canonical representative of the rotation class of a cycle.
Path canonical_cycle(const Alphabet& A, const Path& p);

/// Rotation classes of cycles in `words` all of whose rotations are again in
/// `words`; one canonical representative each, sorted.
std::vector<Path> closed_cyclic_classes(const Alphabet& A, const std::vector<Path>& words);

}  // namespace preproj
