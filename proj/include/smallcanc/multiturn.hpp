#pragma once

#include <cstddef>
#include <vector>

#include "smallcanc/chart.hpp"

namespace smallcanc {

struct PatternNotInRelationError : Error {
  using Error::Error;
};

struct NotDerivedClosedError : Error {
  using Error::Error;
};

// Substitution rule induced by one closed relation containing the monomial:
// the monomial maps to the signed sum of the remaining terms.
struct ElementaryMultiTurn {
  AlgebraElement relation;
  AlgebraElement substitute;
};

std::vector<ElementaryMultiTurn> elementary_multi_turns(const ReducedWord& a,
                                                        const RelationSystem& sys);

// Applying one elementary multi-turn at an occurrence inside a host word.
// Exact identity, checked on construction: host - result = layout.
struct MultiTurn {
  ReducedWord host;
  Occurrence occurrence;
  AlgebraElement relation;
  AlgebraElement result;  // signed sum of the reduced substituted words
  AlgebraElement layout;  // alpha^{-1} * L * relation * R
};

MultiTurn multi_turn(const ReducedWord& u, const Occurrence& occ, const AlgebraElement& rel);

// Enumeration caps for derived-monomial closures and the spaces built from
// them; every derived result carries the caps it was computed under.
struct SpaceCaps {
  std::size_t max_count = 512;
  std::size_t max_length = 64;
  std::size_t max_depth = 16;
  std::size_t virtual_depth = 2;
};

struct DerivedSet {
  std::vector<ReducedWord> monomials;  // sorted, always contains the seed
  bool truncated = false;              // some expansion was suppressed by a cap
};

// Closure of {u} under replacing virtual members of the chart by incident
// monomials, breadth-first within caps.
DerivedSet derived_monomials(const ReducedWord& u, const RelationSystem& sys, SpaceCaps caps = {});

// A cap-bounded linear subspace.  For monomial-generated spaces the echelon
// spans exactly the span of basis_monomials; for layout spans the listed
// monomials are the support (the span is contained in their span).
struct SpaceHandle {
  std::vector<ReducedWord> basis_monomials;
  EchelonBasis echelon;
  SpaceCaps caps;
  bool truncated = false;

  std::size_t dim() const { return echelon.rank(); }
};

// Span of the derived monomials of u.
SpaceHandle space_of(const ReducedWord& u, const RelationSystem& sys, SpaceCaps caps = {});

// Span of the derived monomials of u with f-characteristic below f(u).
SpaceHandle l_space(const ReducedWord& u, const RelationSystem& sys, SpaceCaps caps = {});

// Span of all layouts of multi-turns at virtual members of charts of words
// of y; y must be closed under derived monomials within caps.
SpaceHandle dp_space(const std::vector<ReducedWord>& y, const RelationSystem& sys,
                     SpaceCaps caps = {});

// dim(V / (V ∩ span W)) = rank(V ∪ W) - rank(W).
std::size_t quotient_dim(const SpaceHandle& v, const SpaceHandle& w);

// Coset representatives of bases of the quotients V_i / (Dp(V_i) + L(V_i))
// over the distinct derived-monomial spaces V_i generated by words up to
// length_bound; spaces are deduplicated by their derived-monomial sets.
struct BasisSampleEntry {
  AlgebraElement representative;
  std::size_t space_id;
};

struct BasisSample {
  std::vector<BasisSampleEntry> entries;
  bool truncated = false;
};

BasisSample basis_sample(const RelationSystem& sys, SpaceCaps caps, std::size_t length_bound);

}  // namespace smallcanc
