#include "smallcanc/greedy.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <random>

namespace smallcanc {

const FChar& FOrder::f_of(const ReducedWord& w) const {
  auto it = cache_.find(w);
  if (it != cache_.end()) return it->second;
  return cache_.emplace(w, f_char(w, *sys_, depth_)).first->second;
}

int FOrder::cmp(const ReducedWord& a, const ReducedWord& b) const {
  const FChar& fa = f_of(a);
  const FChar& fb = f_of(b);
  if (fa < fb) return -1;
  if (fb < fa) return 1;
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::size_t ra = letter_rank(a.letters()[i]);
    const std::size_t rb = letter_rank(b.letters()[i]);
    if (ra != rb) return ra < rb ? -1 : 1;
  }
  return 0;
}

int cmp_f(const ReducedWord& a, const ReducedWord& b, const RelationSystem& sys,
          std::size_t virtual_depth) {
  return FOrder(sys, virtual_depth).cmp(a, b);
}

EchelonBasis add_closure(const RelationSystem& sys, std::size_t virtual_depth) {
  auto order = std::make_shared<FOrder>(sys, virtual_depth);
  MonomialCmp cmp = [order](const ReducedWord& a, const ReducedWord& b) {
    return order->less(a, b);
  };
  return row_reduce(sys.field(), sys.relations(), cmp, false);
}

std::vector<ReductionBranch> reduce_once(const AlgebraElement& p, const RelationSystem& sys,
                                         const EchelonBasis& closure) {
  std::vector<ReductionBranch> out;
  if (p.is_zero()) return out;
  const Field& f = sys.field();
  const MonomialCmp& cmp = closure.cmp();
  const ReducedWord mstar = p.leading_monomial(cmp);
  const Scalar pc = p.coeff(mstar);
  const std::vector<AlgebraElement> rows = closure.rows();
  for (std::size_t ri = 0; ri < rows.size(); ++ri) {
    const AlgebraElement& q = rows[ri];
    const ReducedWord u = q.leading_monomial(cmp);
    if (u.size() > mstar.size()) continue;
    for (std::size_t i = 0; i + u.size() <= mstar.size(); ++i) {
      if (!(mstar.subword(i, u.size()) == u)) continue;
      const ReducedWord left = mstar.subword(0, i);
      const ReducedWord right = mstar.subword(i + u.size(), mstar.size() - i - u.size());
      AlgebraElement layout = q.scale_and_translate(f.one(), left, right);
      // Collisions among translated monomials can dethrone the head; such a
      // placement is not a head reduction and is skipped.
      if (!(layout.leading_monomial(cmp) == mstar)) continue;
      const Scalar c = f.div(pc, layout.coeff(mstar));
      AlgebraElement reduced = p - layout.scaled(c);
      out.push_back({std::move(reduced), {std::move(layout), c, left, right, ri}});
    }
  }
  return out;
}

std::vector<ReductionBranch> reduce_once(const AlgebraElement& p, const RelationSystem& sys) {
  return reduce_once(p, sys, add_closure(sys));
}

namespace {

// Follows first branches until zero, irreducible, or budget exhaustion.
MembershipCertificate descend_first(const AlgebraElement& p, const RelationSystem& sys,
                                    const EchelonBasis& closure, StepCaps caps,
                                    std::size_t steps_used) {
  MembershipCertificate cert;
  cert.normal_form = AlgebraElement::zero(sys.field());
  AlgebraElement cur = p;
  while (!cur.is_zero()) {
    if (steps_used >= caps.max_steps) {
      cert.conclusion = MembershipCertificate::Conclusion::kInconclusive;
      cert.steps_used = steps_used;
      return cert;
    }
    std::vector<ReductionBranch> branches = reduce_once(cur, sys, closure);
    ++steps_used;
    if (branches.empty()) {
      cert.conclusion = MembershipCertificate::Conclusion::kNonmember;
      cert.normal_form = cur;
      cert.steps_used = steps_used;
      return cert;
    }
    cert.steps.push_back(branches.front().step);
    cur = std::move(branches.front().reduced);
  }
  cert.conclusion = MembershipCertificate::Conclusion::kMember;
  cert.steps_used = steps_used;
  return cert;
}

struct BranchOutcome {
  bool all_zero = true;
  bool any_zero = false;
};

}  // namespace

MembershipCertificate is_member(const AlgebraElement& p, const RelationSystem& sys,
                                Policy policy, StepCaps caps) {
  const EchelonBasis closure = add_closure(sys);
  if (policy == Policy::kFirstBranch) return descend_first(p, sys, closure, caps, 0);

  // All-branches: classify the whole reduction tree, memoised on elements.
  std::map<AlgebraElement, BranchOutcome> memo;
  std::optional<AlgebraElement> first_irreducible;
  std::size_t steps_used = 0;
  bool budget_hit = false;
  std::function<std::optional<BranchOutcome>(const AlgebraElement&)> dfs =
      [&](const AlgebraElement& cur) -> std::optional<BranchOutcome> {
    if (cur.is_zero()) return BranchOutcome{true, true};
    auto it = memo.find(cur);
    if (it != memo.end()) return it->second;
    if (steps_used >= caps.max_steps) {
      budget_hit = true;
      return std::nullopt;
    }
    std::vector<ReductionBranch> branches = reduce_once(cur, sys, closure);
    ++steps_used;
    BranchOutcome res;
    if (branches.empty()) {
      res = {false, false};
      if (!first_irreducible) first_irreducible = cur;
    } else {
      for (const ReductionBranch& b : branches) {
        auto sub = dfs(b.reduced);
        if (!sub) return std::nullopt;
        res.all_zero = res.all_zero && sub->all_zero;
        res.any_zero = res.any_zero || sub->any_zero;
      }
    }
    memo.emplace(cur, res);
    return res;
  };

  MembershipCertificate cert;
  cert.normal_form = AlgebraElement::zero(sys.field());
  std::optional<BranchOutcome> root = dfs(p);
  cert.steps_used = steps_used;
  if (!root) {
    cert.conclusion = MembershipCertificate::Conclusion::kInconclusive;
    return cert;
  }
  if (root->any_zero) {
    cert.conclusion = MembershipCertificate::Conclusion::kMember;
    cert.disagreement = !root->all_zero;
    // Extract one zero-reaching path by following memoised outcomes.
    AlgebraElement cur = p;
    while (!cur.is_zero()) {
      std::vector<ReductionBranch> branches = reduce_once(cur, sys, closure);
      bool advanced = false;
      for (ReductionBranch& b : branches) {
        const bool hits_zero =
            b.reduced.is_zero() || (memo.count(b.reduced) && memo.at(b.reduced).any_zero);
        if (!hits_zero) continue;
        cert.steps.push_back(b.step);
        cur = std::move(b.reduced);
        advanced = true;
        break;
      }
      if (!advanced) throw Error("internal: zero path extraction failed");
    }
    return cert;
  }
  cert.conclusion = MembershipCertificate::Conclusion::kNonmember;
  if (first_irreducible) cert.normal_form = *first_irreducible;
  return cert;
}

namespace {

ReducedWord random_reduced_word(std::mt19937_64& rng, std::size_t max_len, std::size_t n_gens) {
  const std::size_t len = std::uniform_int_distribution<std::size_t>(0, max_len)(rng);
  std::vector<Letter> ls;
  for (std::size_t i = 0; i < len; ++i) {
    std::size_t choices = 2 * n_gens - (ls.empty() ? 0 : 1);
    std::size_t pick = std::uniform_int_distribution<std::size_t>(0, choices - 1)(rng);
    if (!ls.empty()) {
      const std::size_t forbidden = letter_rank(inverse_letter(ls.back()));
      if (pick >= forbidden) ++pick;  // skip the rank that would cancel
    }
    const std::size_t idx = pick / 2;
    ls.push_back(pick % 2 ? -static_cast<Letter>(idx + 1) : static_cast<Letter>(idx + 1));
  }
  return ReducedWord(ls);
}

}  // namespace

GroebnerReport groebner_check(const RelationSystem& sys, GroebnerCaps caps,
                              const std::vector<AlgebraElement>* inject) {
  GroebnerReport report;
  const EchelonBasis closure = add_closure(sys);
  const std::vector<AlgebraElement> rows = closure.rows();
  if (rows.empty() && !inject) return report;
  std::mt19937_64 rng(caps.seed);
  const std::size_t n_gens = sys.alphabet().size();

  auto run_sample = [&](const AlgebraElement& q) {
    const ReducedWord left = random_reduced_word(rng, caps.max_side_len, n_gens);
    const ReducedWord right = random_reduced_word(rng, caps.max_side_len, n_gens);
    AlgebraElement framed = q.scale_and_translate(sys.field().one(), left, right);
    MembershipCertificate cert = descend_first(framed, sys, closure, caps.steps, 0);
    if (cert.member()) {
      ++report.pass;
    } else {
      ++report.fail;
      report.failures.push_back(std::move(framed));
    }
  };

  if (!rows.empty()) {
    std::uniform_int_distribution<std::size_t> pick_row(0, rows.size() - 1);
    for (std::size_t s = 0; s < caps.samples; ++s) run_sample(rows[pick_row(rng)]);
  }
  if (inject) {
    for (const AlgebraElement& q : *inject) run_sample(q);
  }
  return report;
}

}  // namespace smallcanc
