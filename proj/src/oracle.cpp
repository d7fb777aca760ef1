#include "smallcanc/oracle.hpp"

#include <deque>
#include <set>

namespace smallcanc {

namespace {

Letter letter_of_rank(std::size_t rank) {
  const std::size_t idx = rank / 2;
  return rank % 2 ? -static_cast<Letter>(idx + 1) : static_cast<Letter>(idx + 1);
}

// One partial frame (L, R) around a fixed row, carrying the reduced products
// L*m_i*R for each of the row's monomials.  L only grows while R is empty,
// so every frame is generated exactly once.
struct FrameState {
  std::vector<ReducedWord> prods;
  Letter l_front = 0;  // 0 while L is empty
  Letter r_back = 0;   // 0 while R is empty
  bool r_started = false;
};

std::vector<Letter> state_key(const FrameState& s) {
  std::vector<Letter> key{s.l_front, s.r_back, static_cast<Letter>(s.r_started ? 1 : 0)};
  for (const ReducedWord& w : s.prods) {
    key.push_back(0);
    key.insert(key.end(), w.letters().begin(), w.letters().end());
  }
  return key;
}

bool in_bound(const FrameState& s, std::size_t max_len) {
  for (const ReducedWord& w : s.prods) {
    if (w.size() > max_len) return false;
  }
  return true;
}

EchelonBasis closure_echelon(const RelationSystem& sys) {
  if (sys.tau() >= 5) return add_closure(sys);
  // Below the chart gate the f-order is unavailable; shortlex gives the same
  // span for oracle purposes.
  MonomialCmp cmp = [](const ReducedWord& a, const ReducedWord& b) { return a < b; };
  return row_reduce(sys.field(), sys.relations(), cmp, false);
}

}  // namespace

OracleVerdict oracle_member(const AlgebraElement& p, const RelationSystem& sys,
                            std::size_t max_len, OracleCaps caps) {
  OracleVerdict out;
  out.bound = max_len;
  for (const auto& [w, c] : p.terms()) {
    if (w.size() > max_len) throw Error("oracle bound is below an input monomial length");
  }
  if (p.is_zero()) {
    out.verdict = OracleVerdict::Verdict::kMember;
    return out;
  }

  const Field& f = sys.field();
  MonomialCmp shortlex = [](const ReducedWord& a, const ReducedWord& b) { return a < b; };
  EchelonBasis span(f, shortlex, true);
  std::vector<AlgebraElement> fed;  // insert-order mirror of the span inputs

  const std::vector<AlgebraElement> rows = closure_echelon(sys).rows();
  const std::size_t n_letters = 2 * sys.alphabet().size();
  std::size_t states_seen = 0;
  bool found = false;

  auto feed = [&](const FrameState& s, const std::vector<Scalar>& coeffs) {
    if (span.inputs_seen() >= caps.max_rows) {
      throw SpanTooLargeError("layout span exceeded the row cap");
    }
    AlgebraElement row(f);
    for (std::size_t i = 0; i < s.prods.size(); ++i) row.add_term(s.prods[i], coeffs[i]);
    fed.push_back(row);
    if (span.insert(row) && span.contains(p)) found = true;
  };

  // Per-row frontiers, advanced one |L|+|R| level at a time across all rows.
  std::vector<std::vector<FrameState>> frontier(rows.size());
  std::vector<std::set<std::vector<Letter>>> seen(rows.size());
  std::vector<std::vector<Scalar>> coeffs(rows.size());

  for (std::size_t ri = 0; ri < rows.size() && !found; ++ri) {
    FrameState root;
    for (const auto& [w, c] : rows[ri].terms()) {
      root.prods.push_back(w);
      coeffs[ri].push_back(c);
    }
    if (!in_bound(root, max_len)) continue;
    seen[ri].insert(state_key(root));
    feed(root, coeffs[ri]);
    frontier[ri].push_back(std::move(root));
  }

  while (!found) {
    bool any = false;
    for (std::size_t ri = 0; ri < rows.size() && !found; ++ri) {
      std::vector<FrameState> next;
      for (const FrameState& s : frontier[ri]) {
        for (std::size_t phase = 0; phase < 2 && !found; ++phase) {
          if (phase == 0 && s.r_started) continue;  // L is frozen once R starts
          for (std::size_t rk = 0; rk < n_letters && !found; ++rk) {
            const Letter x = letter_of_rank(rk);
            if (phase == 0 && s.l_front != 0 && x == inverse_letter(s.l_front)) continue;
            if (phase == 1 && s.r_back != 0 && x == inverse_letter(s.r_back)) continue;
            if (++states_seen > caps.max_states) {
              throw SpanTooLargeError("frame enumeration exceeded the state cap");
            }
            FrameState child;
            child.l_front = phase == 0 ? x : s.l_front;
            child.r_back = phase == 1 ? x : s.r_back;
            child.r_started = s.r_started || phase == 1;
            const ReducedWord xw({x});
            child.prods.reserve(s.prods.size());
            for (const ReducedWord& w : s.prods) {
              child.prods.push_back(phase == 0 ? concat(xw, w).word : concat(w, xw).word);
            }
            if (!in_bound(child, max_len)) continue;
            if (!seen[ri].insert(state_key(child)).second) continue;
            feed(child, coeffs[ri]);
            next.push_back(std::move(child));
          }
        }
      }
      frontier[ri] = std::move(next);
      any = any || !frontier[ri].empty();
    }
    if (!any) break;
  }

  out.dimension = span.rank();
  out.rows_built = span.inputs_seen();
  EchelonBasis::Reduction red = span.reduce(p);
  if (red.remainder.is_zero()) {
    out.verdict = OracleVerdict::Verdict::kMember;
    for (const auto& [idx, c] : red.combination) {
      if (!f.is_zero(c)) out.combination.emplace_back(fed[idx], c);
    }
  }
  return out;
}

std::size_t certificate_bound(const MembershipCertificate& cert) {
  std::size_t bound = 0;
  for (const ReductionStep& step : cert.steps) {
    // Recover the bare row and replay the staged frame construction: L is
    // applied letter by letter from the inside out, then R left to right.
    AlgebraElement q = step.layout.scale_and_translate(
        step.layout.field().one(), step.left.inverse(), step.right.inverse());
    for (const auto& [m, c] : q.terms()) {
      ReducedWord w = m;
      bound = std::max(bound, w.size());
      for (std::size_t j = step.left.size(); j-- > 0;) {
        w = concat(ReducedWord({step.left.letters()[j]}), w).word;
        bound = std::max(bound, w.size());
      }
      for (std::size_t k = 0; k < step.right.size(); ++k) {
        w = concat(w, ReducedWord({step.right.letters()[k]})).word;
        bound = std::max(bound, w.size());
      }
    }
  }
  for (const auto& [m, c] : cert.normal_form.terms()) bound = std::max(bound, m.size());
  return bound;
}

NontrivialityReport nontriviality_check(const RelationSystem& sys, std::size_t max_len,
                                        OracleCaps caps) {
  OracleVerdict v = oracle_member(AlgebraElement::one(sys.field()), sys, max_len, caps);
  NontrivialityReport report;
  report.nontrivial = !v.member();
  report.bound = max_len;
  report.dimension = v.dimension;
  return report;
}

}  // namespace smallcanc
