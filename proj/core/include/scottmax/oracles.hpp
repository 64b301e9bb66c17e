#pragma once

#include <vector>

#include "scottmax/domain.hpp"
#include "scottmax/opens.hpp"
#include "scottmax/poset.hpp"

// Brute-force deciders built only from the order relations themselves. They
// cross-check the closed forms in domain.hpp, poset.hpp and opens.hpp and never
// call the functions they are meant to confirm.
namespace scottmax::oracle {

/// Elements that could sit above u: the truncation plus one-step extensions,
/// stars and next ranks of u itself.
std::vector<LElem> upper_candidates(const LElem& u, Nat bound, Nat depth);

/// Searches the truncation and the extensions of u and v for a common upper bound.
bool upper_bound_by_search(const LElem& u, const LElem& v, Nat bound, Nat depth);

/// No candidate other than u lies above u.
bool maximal_by_search(const LElem& u, Nat bound, Nat depth);

/// u is the supremum of a strictly increasing chain strictly below it.
/// Finite down-sets are detected by comparing two predecessor pools.
bool non_compact_by_chain(const LElem& u);

/// Finite generators of a family with every index, length and entry ≤ bound.
std::vector<LElem> enumerate_generators(const GenFamily& f, Nat bound);

/// Some enumerated generator (parameters ≤ bound) lies below u.
bool contains_by_enumeration(const OpenDesc& o, const LElem& u, Nat bound);

/// Scott openness from its two clauses: upward closed, and every directed set
/// whose supremum lands in U meets U.
bool scott_open_by_definition(const FinitePoset& p, const ElementSet& u);

/// Intersection of every Scott open superset of s equals s.
bool gdelta_by_intersection(const FinitePoset& p, const ElementSet& s);

}  // namespace scottmax::oracle
