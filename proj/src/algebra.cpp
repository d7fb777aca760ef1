#include "smallcanc/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace smallcanc {

AlgebraElement AlgebraElement::monomial(Field f, const ReducedWord& w, const Scalar& c) {
  AlgebraElement e(f);
  e.add_term(w, c);
  return e;
}

Scalar AlgebraElement::coeff(const ReducedWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? field_.zero() : it->second;
}

void AlgebraElement::add_term(const ReducedWord& w, const Scalar& c) {
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    if (!field_.is_zero(c)) terms_.emplace(w, c);
    return;
  }
  it->second = field_.add(it->second, c);
  if (field_.is_zero(it->second)) terms_.erase(it);
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  if (!(field_ == o.field_)) throw FieldMismatchError("adding elements over different fields");
  AlgebraElement r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, c);
  return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  return *this + o.negated();
}

AlgebraElement AlgebraElement::negated() const {
  AlgebraElement r(field_);
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, field_.neg(c));
  return r;
}

AlgebraElement AlgebraElement::scaled(const Scalar& c) const {
  AlgebraElement r(field_);
  if (field_.is_zero(c)) return r;
  for (const auto& [w, k] : terms_) r.terms_.emplace(w, field_.mul(k, c));
  return r;
}

AlgebraElement AlgebraElement::scale_and_translate(const Scalar& beta, const ReducedWord& left,
                                                   const ReducedWord& right) const {
  AlgebraElement r(field_);
  if (field_.is_zero(beta)) return r;
  for (const auto& [w, c] : terms_) {
    ReducedWord t = concat(concat(left, w).word, right).word;
    r.add_term(t, field_.mul(c, beta));
  }
  return r;
}

const ReducedWord& AlgebraElement::leading_monomial(const MonomialCmp& cmp) const {
  if (terms_.empty()) throw Error("leading monomial of zero");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    if (cmp(best->first, it->first)) best = it;
  return best->first;
}

AlgebraElement AlgebraElement::normalized(const MonomialCmp& cmp) const {
  if (terms_.empty()) return *this;
  return scaled(field_.inv(coeff(leading_monomial(cmp))));
}

bool AlgebraElement::operator==(const AlgebraElement& o) const { return terms_ == o.terms_; }

bool AlgebraElement::operator<(const AlgebraElement& o) const {
  return std::lexicographical_compare(
      terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(),
      [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
      });
}

std::string AlgebraElement::to_string(const Alphabet& ab) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : terms_) {  // ascending shortlex
    if (!s.empty()) s += " + ";
    s += field_.format_scalar(c) + "*" + ab.format_word(w);
  }
  return s;
}

AlgebraElement AlgebraElement::parse(Field f, const Alphabet& ab, const std::string& text) {
  AlgebraElement e(f);
  std::string body;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) body += c;
  if (body.empty()) throw ParseError("empty polynomial");
  if (body == "0") return e;
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t plus = body.find('+', pos == 0 ? 0 : pos);
    // keep a leading '-' attached to its coefficient
    std::string term =
        body.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos);
    pos = plus == std::string::npos ? body.size() : plus + 1;
    if (term.empty()) throw ParseError("empty term in polynomial: '" + text + "'");
    std::size_t star = term.find('*');
    std::string head = term.substr(0, star);
    bool head_is_coeff = !head.empty() && (std::isdigit(static_cast<unsigned char>(head[0])) ||
                                           ((head[0] == '-') && head.size() > 1));
    Scalar c = f.one();
    std::string wordpart;
    if (head_is_coeff) {
      c = f.parse_scalar(head);
      wordpart = star == std::string::npos ? "1" : term.substr(star + 1);
    } else {
      wordpart = term;
    }
    e.add_term(ab.parse_word(wordpart), c);
  }
  return e;
}

EchelonBasis::EchelonBasis(Field f, MonomialCmp cmp, bool track_provenance)
    : field_(f),
      cmp_(std::move(cmp)),
      track_(track_provenance),
      rows_([this](const ReducedWord& a, const ReducedWord& b) { return cmp_(b, a); }) {}

EchelonBasis::Combination EchelonBasis::add_scaled(const Field& f, const Combination& a,
                                                   const Combination& b, const Scalar& c) {
  // a + c*b, merging sparse index lists
  Combination r;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      Scalar v = f.mul(b[j].second, c);
      if (!f.is_zero(v)) r.emplace_back(b[j].first, v);
      ++j;
    } else {
      Scalar v = f.add(a[i].second, f.mul(b[j].second, c));
      if (!f.is_zero(v)) r.emplace_back(a[i].first, v);
      ++i;
      ++j;
    }
  }
  return r;
}

EchelonBasis::Reduction EchelonBasis::reduce(const AlgebraElement& p) const {
  // Every row's tail is strictly cmp-below its pivot, so moving the current
  // greatest monomial out of the way (by row subtraction or into the
  // remainder) never reintroduces anything processed earlier.
  Reduction out;
  out.remainder = AlgebraElement(field_);
  AlgebraElement work = p;
  while (!work.is_zero()) {
    const ReducedWord w = work.leading_monomial(cmp_);
    Scalar c = work.coeff(w);
    auto it = rows_.find(w);
    if (it == rows_.end()) {
      out.remainder.add_term(w, c);
      work.add_term(w, field_.neg(c));
      continue;
    }
    work = work - it->second.elem.scaled(c);
    if (track_) out.combination = add_scaled(field_, out.combination, it->second.combo, c);
  }
  return out;
}

bool EchelonBasis::insert(const AlgebraElement& p) {
  std::size_t index = inputs_seen_++;
  Reduction red = reduce(p);
  if (red.remainder.is_zero()) return false;
  const ReducedWord lead = red.remainder.leading_monomial(cmp_);
  Scalar lc = red.remainder.coeff(lead);
  Scalar ilc = field_.inv(lc);
  AlgebraElement row = red.remainder.scaled(ilc);
  Combination combo;
  if (track_) {
    // remainder = p - combination  =>  row = ilc*p - ilc*combination
    combo = add_scaled(field_, Combination{{index, ilc}}, red.combination, field_.neg(ilc));
  }
  // back-substitute into existing rows
  for (auto& [l, r] : rows_) {
    Scalar c = r.elem.coeff(lead);
    if (field_.is_zero(c)) continue;
    r.elem = r.elem - row.scaled(c);
    if (track_) r.combo = add_scaled(field_, r.combo, combo, field_.neg(c));
  }
  rows_.emplace(lead, Row{std::move(row), std::move(combo)});
  return true;
}

std::vector<AlgebraElement> EchelonBasis::rows() const {
  std::vector<AlgebraElement> out;
  out.reserve(rows_.size());
  for (const auto& [l, r] : rows_) out.push_back(r.elem);
  return out;
}

std::vector<EchelonBasis::Combination> EchelonBasis::row_combinations() const {
  std::vector<Combination> out;
  out.reserve(rows_.size());
  for (const auto& [l, r] : rows_) out.push_back(r.combo);
  return out;
}

EchelonBasis row_reduce(Field f, const std::vector<AlgebraElement>& inputs, const MonomialCmp& cmp,
                        bool track_provenance) {
  EchelonBasis basis(f, cmp, track_provenance);
  for (const auto& p : inputs) basis.insert(p);
  return basis;
}

}  // namespace smallcanc
