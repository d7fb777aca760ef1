#include "smallcanc/chart.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <set>
#include <sstream>
#include <tuple>

namespace smallcanc {

namespace {

constexpr int kLongMeasure = 3;  // threshold for occurrences that block coverage

void require_tau(const RelationSystem& sys) {
  if (sys.tau() < 5) throw Error("chart operations require tau >= 5");
}

std::string format_lambda(int v) { return v == kLambdaInf ? "inf" : std::to_string(v); }

// Clipped images of the host interval [s, e) after the occurrence `occ` was
// replaced; the part overlapping occ is destroyed, the rest is trimmed by
// junction cancellation.
void clip_interval(const Replacement& r, const Occurrence& occ, std::size_t s, std::size_t e,
                   std::vector<std::pair<std::size_t, std::size_t>>& out) {
  if (s < occ.start) {  // part left of the replaced zone
    const std::size_t pe = std::min({e, occ.start, r.left_keep});
    if (s < pe) out.push_back({s, pe});
  }
  if (e > occ.end()) {  // part right of the replaced zone
    const std::size_t o1 = std::max(s, occ.end()) - occ.end();
    const std::size_t o2 = e - occ.end();
    const std::size_t c1 = std::max(o1, r.right_cancel);
    if (c1 < o2) {
      const std::size_t ns = r.left_keep + r.mid_len + (c1 - r.right_cancel);
      out.push_back({ns, ns + (o2 - c1)});
    }
  }
}

// Exact image of [s, e) when it must survive the replacement untouched.
std::optional<std::pair<std::size_t, std::size_t>> map_surviving(const Replacement& r,
                                                                 const Occurrence& occ,
                                                                 std::size_t s, std::size_t e) {
  if (e <= occ.start) {
    if (e > r.left_keep) return std::nullopt;
    return std::make_pair(s, e);
  }
  if (s >= occ.end()) {
    const std::size_t o = s - occ.end();
    if (o < r.right_cancel) return std::nullopt;
    const std::size_t ns = r.left_keep + r.mid_len + (o - r.right_cancel);
    return std::make_pair(ns, ns + (e - s));
  }
  return std::nullopt;
}

// A replacement is admissible when the substitute keeps at least one letter
// not covered by the surviving images of the other long occurrences.
bool admissible(const Replacement& r, const std::vector<Occurrence>& occs,
                const std::vector<int>& lam, std::size_t h) {
  if (r.mid_len == 0) return false;
  std::vector<std::pair<std::size_t, std::size_t>> parts;
  for (std::size_t i = 0; i < occs.size(); ++i) {
    if (i == h || lam[i] < kLongMeasure) continue;
    clip_interval(r, occs[h], occs[i].start, occs[i].end(), parts);
  }
  std::sort(parts.begin(), parts.end());
  std::size_t point = r.left_keep;
  const std::size_t mid_end = r.left_keep + r.mid_len;
  for (const auto& [ps, pe] : parts) {
    if (ps > point) break;
    point = std::max(point, pe);
    if (point >= mid_end) return false;
  }
  return point < mid_end;
}

std::vector<int> measures(const RelationSystem& sys, const std::vector<Occurrence>& occs) {
  std::vector<int> lam;
  lam.reserve(occs.size());
  for (const auto& o : occs) lam.push_back(sys.lambda(o.pattern));
  return lam;
}

// Bounded search: does some sequence of at most `depth` admissible
// replacements of other occurrences turn the tracked occurrence into (part
// of) a member of the resulting chart?
bool occurrence_is_virtual(const RelationSystem& sys, const ReducedWord& u, const Occurrence& b,
                           std::size_t depth) {
  const int tau = sys.tau();
  if (sys.lambda(b.pattern) < tau - 2) return false;
  using State = std::tuple<ReducedWord, std::size_t, std::size_t>;
  std::set<State> seen;
  std::deque<std::pair<State, std::size_t>> queue;
  const State start{u, b.start, b.end()};
  seen.insert(start);
  queue.push_back({start, 0});
  while (!queue.empty()) {
    const auto [state, d] = queue.front();
    queue.pop_front();
    const auto& [w, ts, te] = state;
    const auto occs = sys.maximal_occurrences(w);
    const auto lam = measures(sys, occs);
    for (std::size_t i = 0; i < occs.size(); ++i)
      if (occs[i].start <= ts && te <= occs[i].end() && lam[i] >= tau) return true;
    if (d == depth) continue;
    for (std::size_t h = 0; h < occs.size(); ++h) {
      if (lam[h] < tau - 2) continue;
      if (occs[h].end() > ts && occs[h].start < te) continue;  // would destroy the tracked image
      for (const std::size_t ri : sys.relations_containing(occs[h].pattern)) {
        for (const auto& [mono, coeff] : sys.relations()[ri].terms()) {
          if (mono == occs[h].pattern) continue;
          const Replacement rep = replace_occurrence(w, occs[h], mono);
          if (!admissible(rep, occs, lam, h)) continue;
          const auto img = map_surviving(rep, occs[h], ts, te);
          if (!img) continue;
          State next{rep.word, img->first, img->second};
          if (seen.insert(next).second) queue.push_back({next, d + 1});
        }
      }
    }
  }
  return false;
}

}  // namespace

std::string Chart::to_text(const Alphabet& ab) const {
  std::ostringstream out;
  for (std::size_t i = 0; i < occurrences.size(); ++i) {
    out << occurrences[i].start << " " << occurrences[i].length() << " "
        << ab.format_word(occurrences[i].pattern) << " " << format_lambda(lambda[i]) << " "
        << (member[i] ? 1 : 0) << " " << (virt[i] ? 1 : 0) << "\n";
  }
  return out.str();
}

Chart chart(const ReducedWord& u, const RelationSystem& sys, std::size_t virtual_depth) {
  require_tau(sys);
  Chart c;
  c.host = u;
  c.virtual_depth = virtual_depth;
  c.occurrences = sys.maximal_occurrences(u);
  c.lambda = measures(sys, c.occurrences);
  const int tau = sys.tau();
  // Overlap integrity: an overlap of two maximal occurrences is a small piece
  // unless the occurrences sit at the same cyclic position of one relation, in
  // which case every relation containing the first occurrence carries across
  // the overlap into the relation set (that is what "not a piece" means, via
  // the restriction lemma).  Anything else is an internal inconsistency
  // between the piece set and the relation closure.
  for (std::size_t i = 0; i < c.occurrences.size(); ++i) {
    for (std::size_t j = i + 1; j < c.occurrences.size(); ++j) {
      if (c.occurrences[j].start >= c.occurrences[i].end()) break;
      const ReducedWord overlap =
          u.subword(c.occurrences[j].start, c.occurrences[i].end() - c.occurrences[j].start);
      if (sys.is_small_piece(overlap)) continue;
      const Occurrence& oi = c.occurrences[i];
      const Occurrence& oj = c.occurrences[j];
      const ReducedWord d1 = oi.pattern.subword(0, oi.length() - overlap.size());
      const ReducedWord d2 = oj.pattern.subword(overlap.size(), oj.length() - overlap.size());
      const ReducedWord d1_inv = d1.inverse();
      for (const std::size_t ri : sys.relations_containing(oi.pattern)) {
        const AlgebraElement carried =
            sys.relations()[ri].scale_and_translate(sys.field().one(), d1_inv, d2);
        if (!sys.is_relation(carried))
          throw ChartInvariantError("overlap of maximal occurrences at " +
                                    std::to_string(oi.start) + " and " + std::to_string(oj.start) +
                                    " is neither a small piece nor carry-aligned");
      }
    }
  }
  for (std::size_t i = 0; i < c.occurrences.size(); ++i) {
    const bool is_member = c.lambda[i] >= tau;
    c.member.push_back(is_member);
    c.virt.push_back(is_member ||
                     occurrence_is_virtual(sys, u, c.occurrences[i], virtual_depth));
  }
  return c;
}

std::vector<std::size_t> minimal_interval_cover(const std::vector<Occurrence>& occs) {
  std::vector<std::size_t> order(occs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&occs](std::size_t a, std::size_t b) {
    if (occs[a].start != occs[b].start) return occs[a].start < occs[b].start;
    return occs[a].end() > occs[b].end();
  });
  std::vector<std::size_t> chosen;
  std::size_t covered = 0;  // positions < covered within the current cluster are done
  bool any = false;
  std::size_t i = 0;
  while (i < order.size()) {
    const Occurrence& cur = occs[order[i]];
    if (cur.length() == 0 || (any && cur.end() <= covered)) {
      ++i;
      continue;
    }
    const std::size_t p = any ? std::max(covered, cur.start) : cur.start;
    std::size_t best_end = 0, best = SIZE_MAX;
    for (std::size_t j = i; j < order.size() && occs[order[j]].start <= p; ++j) {
      if (occs[order[j]].end() > p && occs[order[j]].end() > best_end) {
        best_end = occs[order[j]].end();
        best = order[j];
      }
    }
    chosen.push_back(best);
    covered = best_end;
    any = true;
  }
  return chosen;
}

std::size_t min_cov(const ReducedWord& u, const RelationSystem& sys) {
  require_tau(sys);
  return minimal_interval_cover(sys.maximal_occurrences(u)).size();
}

std::vector<Occurrence> virtual_members(const ReducedWord& u, const RelationSystem& sys,
                                        std::size_t depth) {
  const Chart c = chart(u, sys, depth);
  std::vector<Occurrence> out;
  for (std::size_t i = 0; i < c.occurrences.size(); ++i)
    if (c.virt[i]) out.push_back(c.occurrences[i]);
  return out;
}

FChar f_char(const ReducedWord& u, const RelationSystem& sys, std::size_t virtual_depth) {
  const Chart c = chart(u, sys, virtual_depth);
  FChar f;
  f.min_cov = minimal_interval_cover(c.occurrences).size();
  f.n_virt = static_cast<std::size_t>(std::count(c.virt.begin(), c.virt.end(), true));
  return f;
}

FChar t_value(std::size_t n) {
  FChar t{0, 0};
  for (std::size_t i = 0; i < n; ++i) {
    if (t.min_cov > t.n_virt)
      t = {t.min_cov, t.n_virt + 1};
    else
      t = {t.min_cov + 1, 0};
  }
  return t;
}

std::size_t filtration_level(const ReducedWord& u, const RelationSystem& sys,
                             std::size_t virtual_depth) {
  const FChar f = f_char(u, sys, virtual_depth);
  std::size_t n = 0;
  while (!(f <= t_value(n))) ++n;
  return n;
}

Replacement replace_occurrence(const ReducedWord& host, const Occurrence& occ,
                               const ReducedWord& sub) {
  if (occ.end() > host.size() || !(host.subword(occ.start, occ.length()) == occ.pattern))
    throw Error("occurrence does not match host word");
  const ReducedWord left = host.subword(0, occ.start);
  const ReducedWord right = host.subword(occ.end(), host.size() - occ.end());
  const auto c1 = concat(left, sub);
  const auto c2 = concat(c1.word, right);
  const std::size_t k1 = c1.cancelled, k2 = c2.cancelled;
  const std::size_t sub_after_left = sub.size() - k1;
  const std::size_t spill = k2 > sub_after_left ? k2 - sub_after_left : 0;
  Replacement r;
  r.word = c2.word;
  r.left_keep = occ.start - k1 - spill;
  r.mid_len = sub_after_left > k2 ? sub_after_left - k2 : 0;
  r.right_keep = right.size() - k2;
  r.left_cancel = k1 + spill;
  r.right_cancel = k2;
  return r;
}

}  // namespace smallcanc
