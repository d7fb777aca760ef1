#include "smallcanc/multiturn.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace smallcanc {

namespace {

void check_occurrence(const ReducedWord& u, const Occurrence& occ) {
  if (occ.end() > u.size() || !(u.subword(occ.start, occ.length()) == occ.pattern))
    throw Error("occurrence does not match host word");
}

// Layout spans reuse chart construction per word; the caller guarantees the
// words are in the relation system's monomial universe or at least host words
// whose charts exist.
EchelonBasis dp_span(const std::vector<ReducedWord>& y, const RelationSystem& sys,
                     const SpaceCaps& caps, std::set<ReducedWord>* support) {
  const Field& f = sys.field();
  EchelonBasis e(f, shortlex_cmp(), false);
  for (const auto& z : y) {
    const Chart ch = chart(z, sys, caps.virtual_depth);
    for (std::size_t i = 0; i < ch.occurrences.size(); ++i) {
      if (!ch.virt[i]) continue;
      const Occurrence& o = ch.occurrences[i];
      const ReducedWord left = z.subword(0, o.start);
      const ReducedWord right = z.subword(o.end(), z.size() - o.end());
      for (const std::size_t ri : sys.relations_containing(o.pattern)) {
        const AlgebraElement& rel = sys.relations()[ri];
        const AlgebraElement layout =
            rel.scale_and_translate(f.inv(rel.coeff(o.pattern)), left, right);
        e.insert(layout);
        if (support)
          for (const auto& [m, c] : layout.terms()) support->insert(m);
      }
    }
  }
  return e;
}

// All reduced words up to max_len, shortlex order.
std::vector<ReducedWord> all_reduced_words(std::size_t alphabet_size, std::size_t max_len) {
  std::vector<ReducedWord> out{ReducedWord::empty()};
  std::vector<ReducedWord> prev = out;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<ReducedWord> cur;
    for (const auto& w : prev) {
      for (std::size_t rank = 0; rank < 2 * alphabet_size; ++rank) {
        const Letter l = (rank % 2) ? -static_cast<Letter>(rank / 2 + 1)
                                    : static_cast<Letter>(rank / 2 + 1);
        if (!w.is_empty() && w.back() == inverse_letter(l)) continue;
        cur.push_back(concat(w, ReducedWord({l})).word);
      }
    }
    out.insert(out.end(), cur.begin(), cur.end());
    prev = std::move(cur);
  }
  return out;
}

}  // namespace

std::vector<ElementaryMultiTurn> elementary_multi_turns(const ReducedWord& a,
                                                        const RelationSystem& sys) {
  if (!sys.in_m(a)) throw NotInMError("word is not a relation monomial");
  const Field& f = sys.field();
  std::vector<ElementaryMultiTurn> out;
  for (const std::size_t ri : sys.relations_containing(a)) {
    const AlgebraElement& rel = sys.relations()[ri];
    const Scalar inva = f.inv(rel.coeff(a));
    AlgebraElement sub = AlgebraElement::zero(f);
    for (const auto& [m, c] : rel.terms()) {
      if (m == a) continue;
      sub.add_term(m, f.neg(f.mul(inva, c)));
    }
    out.push_back({rel, std::move(sub)});
  }
  return out;
}

MultiTurn multi_turn(const ReducedWord& u, const Occurrence& occ, const AlgebraElement& rel) {
  check_occurrence(u, occ);
  if (!rel.has_monomial(occ.pattern))
    throw PatternNotInRelationError("occurrence pattern is not a monomial of the relation");
  const Field& f = rel.field();
  const Scalar inva = f.inv(rel.coeff(occ.pattern));
  AlgebraElement result = AlgebraElement::zero(f);
  for (const auto& [m, c] : rel.terms()) {
    if (m == occ.pattern) continue;
    result.add_term(replace_occurrence(u, occ, m).word, f.neg(f.mul(inva, c)));
  }
  const ReducedWord left = u.subword(0, occ.start);
  const ReducedWord right = u.subword(occ.end(), u.size() - occ.end());
  AlgebraElement layout = rel.scale_and_translate(inva, left, right);
  const AlgebraElement diff = AlgebraElement::monomial(f, u) - result - layout;
  if (!diff.is_zero()) throw Error("internal: multi-turn identity violated");
  return MultiTurn{u, occ, rel, std::move(result), std::move(layout)};
}

DerivedSet derived_monomials(const ReducedWord& u, const RelationSystem& sys, SpaceCaps caps) {
  DerivedSet out;
  std::set<ReducedWord> seen{u};
  std::deque<std::pair<ReducedWord, std::size_t>> queue{{u, 0}};
  while (!queue.empty()) {
    const auto [w, d] = queue.front();
    queue.pop_front();
    for (const auto& o : virtual_members(w, sys, caps.virtual_depth)) {
      for (const std::size_t ri : sys.relations_containing(o.pattern)) {
        for (const auto& [m, c] : sys.relations()[ri].terms()) {
          if (m == o.pattern) continue;
          const ReducedWord nw = replace_occurrence(w, o, m).word;
          if (seen.count(nw)) continue;
          if (d >= caps.max_depth || nw.size() > caps.max_length ||
              seen.size() >= caps.max_count) {
            out.truncated = true;
            continue;
          }
          seen.insert(nw);
          queue.push_back({nw, d + 1});
        }
      }
    }
  }
  out.monomials.assign(seen.begin(), seen.end());
  return out;
}

SpaceHandle space_of(const ReducedWord& u, const RelationSystem& sys, SpaceCaps caps) {
  DerivedSet d = derived_monomials(u, sys, caps);
  EchelonBasis e(sys.field(), shortlex_cmp(), false);
  for (const auto& m : d.monomials) e.insert(AlgebraElement::monomial(sys.field(), m));
  return SpaceHandle{std::move(d.monomials), std::move(e), caps, d.truncated};
}

SpaceHandle l_space(const ReducedWord& u, const RelationSystem& sys, SpaceCaps caps) {
  DerivedSet d = derived_monomials(u, sys, caps);
  const FChar fu = f_char(u, sys, caps.virtual_depth);
  std::vector<ReducedWord> kept;
  for (const auto& m : d.monomials)
    if (f_char(m, sys, caps.virtual_depth) < fu) kept.push_back(m);
  EchelonBasis e(sys.field(), shortlex_cmp(), false);
  for (const auto& m : kept) e.insert(AlgebraElement::monomial(sys.field(), m));
  return SpaceHandle{std::move(kept), std::move(e), caps, d.truncated};
}

SpaceHandle dp_space(const std::vector<ReducedWord>& y, const RelationSystem& sys,
                     SpaceCaps caps) {
  std::set<ReducedWord> yset(y.begin(), y.end());
  bool truncated = false;
  for (const auto& z : yset) {
    const DerivedSet d = derived_monomials(z, sys, caps);
    truncated = truncated || d.truncated;
    for (const auto& m : d.monomials)
      if (!yset.count(m))
        throw NotDerivedClosedError("set is not closed under derived monomials: missing " +
                                    sys.alphabet().format_word(m));
  }
  const std::vector<ReducedWord> sorted(yset.begin(), yset.end());
  std::set<ReducedWord> support;
  EchelonBasis e = dp_span(sorted, sys, caps, &support);
  return SpaceHandle{std::vector<ReducedWord>(support.begin(), support.end()), std::move(e), caps,
                     truncated};
}

std::size_t quotient_dim(const SpaceHandle& v, const SpaceHandle& w) {
  EchelonBasis join(v.echelon.field(), shortlex_cmp(), false);
  for (const auto& row : w.echelon.rows()) join.insert(row);
  const std::size_t rank_w = join.rank();
  for (const auto& row : v.echelon.rows()) join.insert(row);
  return join.rank() - rank_w;
}

BasisSample basis_sample(const RelationSystem& sys, SpaceCaps caps, std::size_t length_bound) {
  const Field& f = sys.field();
  BasisSample out;
  std::map<std::vector<ReducedWord>, std::size_t> space_ids;
  for (const auto& z : all_reduced_words(sys.alphabet().size(), length_bound)) {
    DerivedSet d = derived_monomials(z, sys, caps);
    out.truncated = out.truncated || d.truncated;
    if (space_ids.count(d.monomials)) continue;
    const std::size_t id = space_ids.size();
    space_ids.emplace(d.monomials, id);
    EchelonBasis quot = dp_span(d.monomials, sys, caps, nullptr);
    FChar fmax{0, 0};
    for (const auto& m : d.monomials) {
      const FChar fm = f_char(m, sys, caps.virtual_depth);
      if (fmax < fm) fmax = fm;
    }
    for (const auto& m : d.monomials)
      if (f_char(m, sys, caps.virtual_depth) < fmax)
        quot.insert(AlgebraElement::monomial(f, m));
    for (const auto& m : d.monomials)
      if (quot.insert(AlgebraElement::monomial(f, m))) out.entries.push_back({AlgebraElement::monomial(f, m), id});
  }
  return out;
}

}  // namespace smallcanc
