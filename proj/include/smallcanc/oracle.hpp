#pragma once

#include "smallcanc/greedy.hpp"

namespace smallcanc {

struct SpanTooLargeError : Error {
  explicit SpanTooLargeError(const std::string& what) : Error(what) {}
};

struct OracleCaps {
  std::size_t max_rows = 200000;    // hard cap on layout rows fed to the span
  std::size_t max_states = 2000000;  // guard on enumerated frame states
};

struct OracleVerdict {
  enum class Verdict { kMember, kUnknown };
  Verdict verdict = Verdict::kUnknown;
  std::size_t bound = 0;
  std::size_t dimension = 0;   // rank of the layout span built
  std::size_t rows_built = 0;  // rows fed to the span before the verdict
  std::vector<std::pair<AlgebraElement, Scalar>> combination;  // member: p = sum c*row
  bool member() const { return verdict == Verdict::kMember; }
};

// Brute-force membership in the span of framed rows L*q*R, q ranging over
// the closure echelon, with every monomial of the frame kept within max_len.
// Frames are enumerated by increasing |L|+|R|; a partial frame is pruned as
// soon as any of its monomials leaves the bound, so the span covers exactly
// the frames reachable through in-bound stages.  Member verdicts are sound
// and carry the exact combination; anything else is unknown at this bound.
OracleVerdict oracle_member(const AlgebraElement& p, const RelationSystem& sys,
                            std::size_t max_len, OracleCaps caps = {});

// Largest monomial length arising along the staged construction of every
// certificate layout; running the oracle at this bound keeps each layout the
// certificate used inside the enumerated span.
std::size_t certificate_bound(const MembershipCertificate& cert);

struct NontrivialityReport {
  bool nontrivial = false;
  std::size_t bound = 0;
  std::size_t dimension = 0;
};

// The quotient is nontrivial at the bound iff the unit avoids the layout span.
NontrivialityReport nontriviality_check(const RelationSystem& sys, std::size_t max_len,
                                        OracleCaps caps = {});

}  // namespace smallcanc
