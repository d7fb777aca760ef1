#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smallcanc/relations.hpp"

namespace smallcanc {

// A nonzero combination of closed relations supported entirely on monomials
// of measure <= tau.
struct ScWitness {
  AlgebraElement element;
  EchelonBasis::Combination combination;  // indices into sys.relations()
};

// A configuration meeting every clause of the isolation condition whose two
// stripped words coincide.  For the right-sided check, all words are given in
// original coordinates; re-validate by mirroring them onto sys.mirrored().
struct IsolationWitness {
  ReducedWord a;
  std::vector<ReducedWord> m_chain;  // consecutive incident, measure >= tau-2
  ReducedWord p_first, p_last;       // the two overlap words p_1(a), p_k(a)
  ReducedWord l, l_prime;
  std::vector<ReducedWord> b_chain;
  ReducedWord kappa;                 // common value of p_1(a)^-1 m_1 = p_k(a)^-1 m_k
};

struct AxiomReport {
  std::string axiom;   // Compatibility | SmallCancellation | IsolationLeft | IsolationRight
  std::string status;  // holds | fails | holds-up-to-bound
  std::optional<std::size_t> bound;
  std::vector<std::string> notes;
  std::optional<ScWitness> sc_witness;
  std::optional<IsolationWitness> isolation_witness;

  bool ok() const { return status != "fails"; }
  std::string to_text(const Alphabet& ab, const Field& f) const;
};

// Re-verifies that the closed set is actually closed under the letter
// multiplication rule and projectively normalized.
AxiomReport check_compatibility(const RelationSystem& sys);

// Exact: the span of the closed relations contains no nonzero element
// supported on monomials of measure <= tau.  Decided by row reduction under
// an order placing all high-measure monomials above all low ones: the axiom
// holds iff every echelon pivot is high.
AxiomReport check_small_cancellation(const RelationSystem& sys);

struct IncidenceGraph {
  std::vector<ReducedWord> vertices;                // sorted
  std::vector<std::vector<std::size_t>> adjacency;  // sorted; self-loops kept
  std::optional<std::size_t> index_of(const ReducedWord& w) const;
};

// Vertices: monomials of measure >= min_lambda; edges: co-occurrence in a
// closed relation.
IncidenceGraph incidence_graph(const RelationSystem& sys, int min_lambda);

// Bounded search for an isolation violation with both chains of length
// <= max_chain.  Never reports "holds": absence of a violation within the
// bound is reported as holds-up-to-bound.
AxiomReport check_isolation(const RelationSystem& sys, const std::string& side,
                            std::size_t max_chain = 6);

}  // namespace smallcanc
