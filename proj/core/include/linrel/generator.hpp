#pragma once

#include "linrel/relation.hpp"
#include "linrel/rng.hpp"

#include <optional>

namespace linrel {

// Constraints for gen_relation. Unset dimensions are drawn at random within
// the feasible ranges; inconsistent combinations raise PreconditionError.
struct GenOptions {
  Index n = 4;
  Index m = 4;
  Field field = Field::complex;
  double tol = -1.0;
  std::optional<Index> graph_dim;
  std::optional<Index> mulpart_dim;
  std::optional<Index> domain_dim;
  bool hermitian = false;
};

// Draws a relation with the requested structure. The domain basis, the
// multivalued part, and the action on the domain are drawn independently,
// so the stated dimensions hold exactly rather than generically. Hermitian
// output (n == m required) is built from a Hermitian compression on an
// orthonormal domain basis with the multivalued part orthogonal to the
// domain, and its operator part maps into span(domain) + mulpart, which
// keeps the extremal bounds and the operator norm in exact correspondence.
LinearRelation gen_relation(Rng& rng, const GenOptions& opts);

// How the companion's domain relates to the base relation's domain.
enum class DomainLink {
  free,             // unconstrained
  subset,           // D(S) inside D(T)
  superset,         // D(S) contains D(T)
  proper_superset,  // D(S) strictly contains D(T)
  same,             // equal spans
};

// How the companion's multivalued part relates to the base's.
enum class MulpartLink {
  free,
  contains,  // S(0) contains T(0)
  inside,    // S(0) inside T(0)
  avoid,     // S(0) meets T(0) only at zero, drawn inside its complement
  same,
};

struct RelatedOptions {
  // Right-hand space of the companion; defaults to the base's m. Links that
  // tie the multivalued parts require it to match the base.
  std::optional<Index> m;
  Field field = Field::complex;
  double tol = -1.0;
  DomainLink domain = DomainLink::free;
  MulpartLink mulpart = MulpartLink::free;
  std::optional<Index> domain_dim;
  std::optional<Index> mulpart_dim;
};

// Draws a companion relation S structurally linked to a base T, for pair
// statements about sums, perturbations and relative bounds.
LinearRelation gen_related(Rng& rng, const LinearRelation& base,
                           const RelatedOptions& opts);

}  // namespace linrel
