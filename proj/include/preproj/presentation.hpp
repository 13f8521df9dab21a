#pragma once

// Defining relations of additive / multiplicative preprojective algebras and
// their partial versions, emitted one relation per vertex.

#include "preproj/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace preproj {

enum class RelationKind { Additive, Multiplicative, Partial, Custom };

struct Relation {
  int vertex = -1;  // vertex index the relation lives at (e_v r e_v), -1 if mixed
  PolyQ poly;
};

struct Presentation {
  DoubledQuiver doubled;
  std::vector<Relation> relations;
  ScalarDomain domain;
  RelationKind kind = RelationKind::Custom;
  std::string base_kind;          // "add" or "mult" for partial presentations
  std::optional<int> dropped;     // vertex index dropped by a partial presentation

  const AlphabetPtr& alphabet() const { return doubled.alphabet(); }
  std::vector<PolyQ> polys() const;
  bool homogeneous() const;
  std::string kind_name() const;
};

/// r_add = sum over arrows of a a* - a* a, split by vertex.
Presentation additive_relations(const DoubledQuiver& dq, const ScalarDomain& domain);

/// Star-shaped quivers only. Non-central vertices carry the additive relation;
/// the central relation is made polynomial using the arm nilpotency bounds.
Presentation multiplicative_relations(const StarDecomposition& star, const DoubledQuiver& dq,
                                      const ScalarDomain& domain);

/// Drops the relation at vertex index w.
Presentation partial_relations(const Presentation& base, int w);

/// The central multiplicative relation before simplification: the full
/// product of (1 + a a*) and truncated geometric inverses of (1 + a* a),
/// minus e_v.
PolyQ raw_central_multiplicative(const StarDecomposition& star, const DoubledQuiver& dq);

/// Writes `@vertex <label>` followed by the relation, per relation.
std::string serialize(const Presentation& p);

/// Parses the serialized form back into relations over the alphabet of dq.
std::vector<Relation> parse_relations(std::string_view text, const DoubledQuiver& dq);

}  // namespace preproj
