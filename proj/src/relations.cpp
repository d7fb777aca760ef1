#include "smallcanc/relations.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <optional>
#include <sstream>
#include <tuple>

namespace smallcanc {

namespace {

std::string trimmed(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
  std::optional<Field> field;
  std::optional<int> tau;
  std::optional<Alphabet> alphabet;
  std::vector<AlgebraElement> gens;

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    line = trimmed(line);
    if (line.empty()) continue;
    std::size_t sp = line.find_first_of(" \t");
    std::string key = line.substr(0, sp);
    std::string rest = sp == std::string::npos ? "" : trimmed(line.substr(sp + 1));
    auto fail = [&](const std::string& msg) {
      throw ParseError("line " + std::to_string(lineno) + ": " + msg);
    };
    if (key == "field") {
      if (field) fail("duplicate field directive");
      field = Field::parse(rest);
    } else if (key == "tau") {
      if (tau) fail("duplicate tau directive");
      try {
        std::size_t used = 0;
        tau = std::stoi(rest, &used);
        if (used != rest.size()) fail("trailing junk after tau value");
      } catch (const std::logic_error&) {
        fail("tau expects an integer, got '" + rest + "'");
      }
      if (*tau < 1) fail("tau must be at least 1");
    } else if (key == "alphabet") {
      if (alphabet) fail("duplicate alphabet directive");
      alphabet = Alphabet(split_ws(rest));
    } else if (key == "rel") {
      if (!field || !alphabet) fail("rel before field/alphabet directives");
      AlgebraElement g = AlgebraElement::parse(*field, *alphabet, rest);
      if (g.is_zero()) fail("relation is zero");
      gens.push_back(std::move(g));
    } else {
      fail("unknown directive '" + key + "'");
    }
  }
  if (!field) throw ParseError("missing field directive");
  if (!tau) throw ParseError("missing tau directive");
  if (!alphabet) throw ParseError("missing alphabet directive");
  return Presentation{*field, *tau, *alphabet, std::move(gens)};
}

std::string print_presentation(const Presentation& pres) {
  std::ostringstream out;
  out << "field " << pres.field.to_string() << "\n";
  out << "tau " << pres.tau << "\n";
  out << "alphabet";
  for (const auto& n : pres.alphabet.names()) out << " " << n;
  out << "\n";
  for (const auto& g : pres.generators) out << "rel " << g.to_string(pres.alphabet) << "\n";
  return out.str();
}

Presentation mirror(const Presentation& pres) {
  Presentation out = pres;
  out.generators.clear();
  for (const auto& g : pres.generators) {
    AlgebraElement m(pres.field);
    for (const auto& [w, c] : g.terms()) m.add_term(w.mirrored(), c);
    out.generators.push_back(std::move(m));
  }
  return out;
}

RelationSystem RelationSystem::close(const Presentation& pres, const ClosureCaps& caps) {
  if (pres.tau < 1) throw Error("tau must be at least 1");
  RelationSystem sys;
  sys.pres_ = pres;
  sys.caps_ = caps;
  if (pres.tau < 10)
    sys.warnings_.push_back("tau=" + std::to_string(pres.tau) +
                            " is below 10; overlap guarantees are weaker there");

  const Field f = pres.field;
  const MonomialCmp cmp = shortlex_cmp();
  std::set<AlgebraElement> seen;
  std::deque<AlgebraElement> queue;

  auto add = [&](const AlgebraElement& raw) {
    AlgebraElement p = raw.normalized(cmp);
    if (seen.count(p)) return;
    for (const auto& [w, c] : p.terms())
      if (w.size() > caps.max_word_length)
        throw ClosureDivergedError("closure produced a monomial longer than " +
                                   std::to_string(caps.max_word_length));
    if (seen.size() >= caps.max_relations)
      throw ClosureDivergedError("closure exceeded " + std::to_string(caps.max_relations) +
                                 " relations");
    seen.insert(p);
    queue.push_back(std::move(p));
  };

  for (const auto& g : pres.generators) {
    if (g.is_zero()) throw Error("zero generator relation");
    add(g);
  }

  const std::size_t ngen = pres.alphabet.size();
  const ReducedWord none = ReducedWord::empty();
  while (!queue.empty()) {
    AlgebraElement p = std::move(queue.front());
    queue.pop_front();
    for (std::size_t gi = 0; gi < ngen; ++gi) {
      for (int sign : {+1, -1}) {
        const Letter x = sign * static_cast<Letter>(gi + 1);
        const ReducedWord xw({x});
        bool left = false, right = false;
        for (const auto& [w, c] : p.terms()) {
          if (w.is_empty()) continue;
          left = left || w.front() == inverse_letter(x);
          right = right || w.back() == inverse_letter(x);
        }
        // A monomial losing its first letter to cancellation is the trigger:
        // the product stays inside the closure.
        if (left) add(p.scale_and_translate(f.one(), xw, none));
        if (right) add(p.scale_and_translate(f.one(), none, xw));
      }
    }
  }

  sys.relations_.assign(seen.begin(), seen.end());
  for (std::size_t i = 0; i < sys.relations_.size(); ++i)
    sys.relation_index_.emplace(sys.relations_[i], i);
  sys.build_derived();
  return sys;
}

void RelationSystem::build_derived() {
  build_indexes();
  build_pieces();
  build_lambda();
}

void RelationSystem::build_indexes() {
  std::set<ReducedWord> mset;
  for (const auto& rel : relations_)
    for (const auto& [w, c] : rel.terms()) mset.insert(w);
  m_.assign(mset.begin(), mset.end());  // shortlex: lengths ascending
  m_set_.insert(m_.begin(), m_.end());

  // Closure under letter multiplication makes the monomial set subword-closed;
  // everything downstream (pieces, charts, occurrence overlaps) leans on it.
  for (const auto& w : m_) {
    if (w.is_empty()) continue;
    if (!m_set_.count(w.subword(0, w.size() - 1)) || !m_set_.count(w.subword(1, w.size() - 1)))
      throw Error("internal: monomial set is not closed under subwords");
  }

  std::unordered_set<ReducedWord, WordHash> extendable;
  for (const auto& w : m_) {
    if (w.is_empty()) continue;
    extendable.insert(w.subword(0, w.size() - 1));
    extendable.insert(w.subword(1, w.size() - 1));
  }
  for (const auto& w : m_)
    if (!extendable.count(w)) maximal_m_.insert(w);

  for (std::size_t i = 0; i < relations_.size(); ++i)
    for (const auto& [w, c] : relations_[i].terms()) containing_[w].push_back(i);

  std::vector<ReducedWord> patterns;
  for (const auto& w : m_)
    if (!w.is_empty()) patterns.push_back(w);
  automaton_ = std::make_shared<WordAutomaton>(patterns, pres_.alphabet.size());
}

void RelationSystem::build_pieces() {
  // Small pieces by increasing length.  A flank of a piece is a piece (divide
  // the dropped letter into the head relation and the context), so a length-L
  // word can only be a piece when both its (L-1)-flanks already are; once a
  // length yields no pieces, stop.
  s_.push_back(ReducedWord::empty());
  s_set_.insert(ReducedWord::empty());
  std::map<std::size_t, std::vector<ReducedWord>> by_len;
  for (const auto& w : m_)
    if (!w.is_empty()) by_len[w.size()].push_back(w);
  for (const auto& [len, words] : by_len) {
    if (len > static_cast<std::size_t>(max_piece_len_) + 1) break;
    for (const auto& w : words) {
      if (len >= 2 && (!s_set_.count(w.subword(0, len - 1)) || !s_set_.count(w.subword(1, len - 1))))
        continue;
      if (!piece_test(w)) continue;
      s_.push_back(w);
      s_set_.insert(w);
      max_piece_len_ = static_cast<int>(len);
    }
  }
}

void RelationSystem::build_lambda() {
  for (const auto& w : m_) {
    const std::size_t n = w.size();
    std::vector<int> dp(n + 1, kLambdaInf);
    dp[0] = 0;
    for (std::size_t i = 1; i <= n; ++i) {
      const std::size_t lo = i > static_cast<std::size_t>(max_piece_len_)
                                 ? i - static_cast<std::size_t>(max_piece_len_)
                                 : 0;
      for (std::size_t j = lo; j < i; ++j) {
        if (dp[j] == kLambdaInf) continue;
        if (s_set_.count(w.subword(j, i - j)) && dp[j] + 1 < dp[i]) dp[i] = dp[j] + 1;
      }
    }
    lambda_.emplace(w, dp[n]);
  }
}

bool RelationSystem::piece_test(const ReducedWord& c) const {
  // An occurrence pair a1.c.a2 (in a monomial of relation p) and b1.c.b2 (in
  // an M-word) witnesses c when the carry (b1 a1^-1) p (a2^-1 b2) is not a
  // relation.  The carry factors through the head relation p^ = a1^-1 p a2^-1,
  // which the letter-cut rule keeps inside the closure (each cut is gated by
  // the distinguished monomial, alive because multiplication is injective on
  // reduced words); so sources collapse to the relations having c itself as a
  // monomial, and the carry becomes b1 p^ b2.  The identity context b1 = b2 =
  // empty reproduces p^ and never witnesses.  A context inside a non-maximal
  // host witnesses only if its extension to a containment-maximal host does
  // (peel the extension letters off the bigger carry the same way), so only
  // maximal hosts are scanned.
  const auto& sources = relations_containing(c);
  if (sources.empty()) return false;
  const std::size_t cn = c.size();
  const Field& f = pres_.field;
  const MonomialCmp cmp = shortlex_cmp();
  for (const auto& host : maximal_m_) {
    if (host.size() <= cn) continue;  // equality gives the identity context
    for (std::size_t pos = 0; pos + cn <= host.size(); ++pos) {
      bool hit = true;
      for (std::size_t k = 0; k < cn && hit; ++k) hit = host.at(pos + k) == c.at(k);
      if (!hit) continue;
      const ReducedWord pre = host.subword(0, pos);
      const ReducedWord suf = host.subword(pos + cn, host.size() - pos - cn);
      for (std::size_t r : sources) {
        const AlgebraElement q = relations_[r].scale_and_translate(f.one(), pre, suf);
        if (!relation_index_.count(q.normalized(cmp))) return true;
      }
    }
  }
  return false;
}

bool RelationSystem::is_relation(const AlgebraElement& p) const {
  if (p.is_zero()) return false;
  return relation_index_.count(p.normalized(shortlex_cmp())) != 0;
}

std::size_t RelationSystem::relation_index(const AlgebraElement& p) const {
  auto it = relation_index_.find(p.normalized(shortlex_cmp()));
  if (it == relation_index_.end()) throw Error("element is not a relation of the closed system");
  return it->second;
}

int RelationSystem::lambda(const ReducedWord& w) const {
  auto it = lambda_.find(w);
  if (it == lambda_.end()) throw NotInMError("word is not a relation monomial");
  return it->second;
}

const std::vector<std::size_t>& RelationSystem::relations_containing(const ReducedWord& w) const {
  static const std::vector<std::size_t> kNone;
  auto it = containing_.find(w);
  return it == containing_.end() ? kNone : it->second;
}

std::vector<ReducedWord> RelationSystem::incident_monomials(const ReducedWord& w) const {
  std::set<ReducedWord> out;
  for (std::size_t r : relations_containing(w))
    for (const auto& [m, c] : relations_[r].terms()) out.insert(m);
  return {out.begin(), out.end()};
}

std::vector<Occurrence> RelationSystem::m_occurrences(const ReducedWord& host) const {
  return automaton_->search(host);
}

std::vector<Occurrence> RelationSystem::maximal_occurrences(const ReducedWord& host) const {
  std::vector<Occurrence> occs = m_occurrences(host);
  std::sort(occs.begin(), occs.end(), [](const Occurrence& a, const Occurrence& b) {
    if (a.start != b.start) return a.start < b.start;
    return a.end() > b.end();
  });
  std::vector<Occurrence> out;
  std::size_t max_end = 0;
  bool any = false;
  for (const auto& o : occs) {
    if (any && o.end() <= max_end) continue;  // inside an earlier-starting one
    out.push_back(o);
    max_end = o.end();
    any = true;
  }
  return out;
}

RelationSystem RelationSystem::mirrored() const {
  // Word mirroring is an anti-automorphism, so it carries this closure, its
  // occurrence pairs, and their carries exactly onto those of the mirrored
  // presentation; the piece set transfers instead of being recomputed.
  RelationSystem sys;
  sys.pres_ = mirror(pres_);
  sys.caps_ = caps_;
  sys.warnings_ = warnings_;
  const MonomialCmp cmp = shortlex_cmp();
  std::set<AlgebraElement> seen;
  for (const auto& rel : relations_) {
    AlgebraElement m(pres_.field);
    for (const auto& [w, c] : rel.terms()) m.add_term(w.mirrored(), c);
    seen.insert(m.normalized(cmp));
  }
  sys.relations_.assign(seen.begin(), seen.end());
  for (std::size_t i = 0; i < sys.relations_.size(); ++i)
    sys.relation_index_.emplace(sys.relations_[i], i);
  sys.build_indexes();
  std::set<ReducedWord> ms;
  for (const auto& w : s_) ms.insert(w.mirrored());
  sys.s_.assign(ms.begin(), ms.end());
  sys.s_set_.insert(sys.s_.begin(), sys.s_.end());
  sys.max_piece_len_ = max_piece_len_;
  sys.build_lambda();
  return sys;
}

}  // namespace smallcanc
