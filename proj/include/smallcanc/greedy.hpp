#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "smallcanc/multiturn.hpp"

namespace smallcanc {

// Total monomial order: f-characteristic first, then total length, then
// left-to-right letter ranks.  Equal only for identical words.
// f-characteristics are cached per word for the lifetime of the object.
class FOrder {
 public:
  explicit FOrder(const RelationSystem& sys, std::size_t virtual_depth = 2)
      : sys_(&sys), depth_(virtual_depth) {}

  const FChar& f_of(const ReducedWord& w) const;
  int cmp(const ReducedWord& a, const ReducedWord& b) const;
  bool less(const ReducedWord& a, const ReducedWord& b) const { return cmp(a, b) < 0; }

 private:
  const RelationSystem* sys_;
  std::size_t depth_;
  mutable std::map<ReducedWord, FChar> cache_;
};

int cmp_f(const ReducedWord& a, const ReducedWord& b, const RelationSystem& sys,
          std::size_t virtual_depth = 2);

// Reduced echelon basis of the span of the closed relations under the
// f-order; the additive closure is this span queried through the basis.
EchelonBasis add_closure(const RelationSystem& sys, std::size_t virtual_depth = 2);

struct ReductionStep {
  AlgebraElement layout;  // L * row * R, head-aligned with the reduced monomial
  Scalar coeff;           // subtracted multiple: next = current - coeff * layout
  ReducedWord left, right;
  std::size_t row;  // index into the closure rows (descending leading monomial)
};

struct ReductionBranch {
  AlgebraElement reduced;
  ReductionStep step;
};

// All single head-reduction branches at the f-maximal monomial of p: rows of
// the closure placed under that monomial without cancellation, kept only
// when the layout's f-leading monomial matches it exactly.  Empty means p is
// irreducible.
std::vector<ReductionBranch> reduce_once(const AlgebraElement& p, const RelationSystem& sys,
                                         const EchelonBasis& closure);
std::vector<ReductionBranch> reduce_once(const AlgebraElement& p, const RelationSystem& sys);

enum class Policy { kFirstBranch, kAllBranches };

struct StepCaps {
  std::size_t max_steps = 10000;
};

struct MembershipCertificate {
  enum class Conclusion { kMember, kNonmember, kInconclusive };
  Conclusion conclusion = Conclusion::kInconclusive;
  std::vector<ReductionStep> steps;  // branch reaching zero, or the path to the normal form
  AlgebraElement normal_form;        // zero for members
  bool disagreement = false;  // all-branches only: mixed leaf outcomes, axioms suspect
  std::size_t steps_used = 0;

  bool member() const { return conclusion == Conclusion::kMember; }
};

// Iterated head reduction.  Member certificates satisfy
// p = sum(coeff_i * layout_i) exactly; nonmember certificates carry the
// irreducible normal form; exceeding the step budget is reported as
// inconclusive, never as nonmember.
MembershipCertificate is_member(const AlgebraElement& p, const RelationSystem& sys,
                                Policy policy = Policy::kFirstBranch, StepCaps caps = {});

struct GroebnerCaps {
  std::size_t samples = 100;
  std::size_t max_side_len = 3;  // lengths of the random words framing a row
  std::uint64_t seed = 0;
  StepCaps steps = {};
};

struct GroebnerReport {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::vector<AlgebraElement> failures;  // sampled products that did not reduce to zero
};

// Samples random framed rows L*q*R and requires each to reduce to zero.
// Elements of `inject` are framed and sampled once each in addition to the
// regular rows (negative control: corrupted inputs must be caught).
GroebnerReport groebner_check(const RelationSystem& sys, GroebnerCaps caps = {},
                              const std::vector<AlgebraElement>* inject = nullptr);

}  // namespace smallcanc
