#pragma once

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "smallcanc/field.hpp"
#include "smallcanc/words.hpp"

namespace smallcanc {

// "less" predicate over monomials; must be a strict total order.
using MonomialCmp = std::function<bool(const ReducedWord&, const ReducedWord&)>;

inline MonomialCmp shortlex_cmp() {
  return [](const ReducedWord& a, const ReducedWord& b) { return a < b; };
}

// Element of the group algebra kF: finitely many reduced words with nonzero
// coefficients.  Terms are keyed in shortlex order; zero coefficients are
// never stored.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(Field f) : field_(f) {}

  static AlgebraElement zero(Field f) { return AlgebraElement(f); }
  static AlgebraElement monomial(Field f, const ReducedWord& w, const Scalar& c);
  static AlgebraElement monomial(Field f, const ReducedWord& w) {
    return monomial(f, w, f.one());
  }
  static AlgebraElement one(Field f) { return monomial(f, ReducedWord::empty(), f.one()); }

  const Field& field() const { return field_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<ReducedWord, Scalar>& terms() const { return terms_; }
  Scalar coeff(const ReducedWord& w) const;
  bool has_monomial(const ReducedWord& w) const { return terms_.count(w) != 0; }

  void add_term(const ReducedWord& w, const Scalar& c);  // accumulates, drops zeros

  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement negated() const;
  AlgebraElement scaled(const Scalar& c) const;

  // beta * L * this * R with free reduction in every monomial.  Left/right
  // translation is injective on monomials, so the result has the same number
  // of terms whenever beta != 0.
  AlgebraElement scale_and_translate(const Scalar& beta, const ReducedWord& left,
                                     const ReducedWord& right) const;

  // Greatest monomial under cmp.
  const ReducedWord& leading_monomial(const MonomialCmp& cmp) const;
  // Scaled so the cmp-leading coefficient is 1 (projective representative).
  AlgebraElement normalized(const MonomialCmp& cmp) const;

  std::string to_string(const Alphabet& ab) const;
  static AlgebraElement parse(Field f, const Alphabet& ab, const std::string& text);

  bool operator==(const AlgebraElement& o) const;
  bool operator<(const AlgebraElement& o) const;  // container order, not mathematical

 private:
  Field field_;
  std::map<ReducedWord, Scalar> terms_;
};

// Row-reduced basis: distinct cmp-leading monomials, leading coefficient 1,
// each leading monomial eliminated from every other row.  Optionally tracks
// each row as an exact combination of the inserted inputs.
class EchelonBasis {
 public:
  EchelonBasis(Field f, MonomialCmp cmp, bool track_provenance = false);

  // sparse combination over input indices (insertion order)
  using Combination = std::vector<std::pair<std::size_t, Scalar>>;

  struct Reduction {
    AlgebraElement remainder;
    Combination combination;  // P = remainder + sum(combination over inputs); tracked only
  };

  Reduction reduce(const AlgebraElement& p) const;
  // Returns true if the rank grew.  Counts p as the next input index either way.
  bool insert(const AlgebraElement& p);

  std::size_t rank() const { return rows_.size(); }
  std::size_t inputs_seen() const { return inputs_seen_; }
  // Rows sorted by descending leading monomial.
  std::vector<AlgebraElement> rows() const;
  std::vector<Combination> row_combinations() const;
  const Field& field() const { return field_; }
  const MonomialCmp& cmp() const { return cmp_; }
  bool contains(const AlgebraElement& p) const { return reduce(p).remainder.is_zero(); }

 private:
  struct Row {
    AlgebraElement elem;
    Combination combo;
  };
  Field field_;
  MonomialCmp cmp_;
  bool track_;
  std::size_t inputs_seen_ = 0;
  std::map<ReducedWord, Row, MonomialCmp> rows_;  // keyed by leading monomial, descending

  static Combination add_scaled(const Field& f, const Combination& a, const Combination& b,
                                const Scalar& c);
};

EchelonBasis row_reduce(Field f, const std::vector<AlgebraElement>& inputs, const MonomialCmp& cmp,
                        bool track_provenance = false);

}  // namespace smallcanc
