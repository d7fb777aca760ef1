#pragma once

#include <limits>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "smallcanc/algebra.hpp"

namespace smallcanc {

struct ClosureDivergedError : Error {
  using Error::Error;
};
struct NotInMError : Error {
  using Error::Error;
};

struct ClosureCaps {
  std::size_t max_relations = 1'000'000;
  std::size_t max_word_length = 256;
};

// Generating data as read from a presentation file.
struct Presentation {
  Field field;
  int tau = 10;
  Alphabet alphabet;
  std::vector<AlgebraElement> generators;
};

Presentation parse_presentation(const std::string& text);
std::string print_presentation(const Presentation& pres);
Presentation mirror(const Presentation& pres);

inline constexpr int kLambdaInf = std::numeric_limits<int>::max();

// A generating set closed under the two-sided letter-multiplication rule:
// whenever a monomial of p starts (ends) with x^-1, the reduced product x*p
// (p*x) is again a relation.  Scalar multiples are represented projectively
// by the shortlex-monic representative.  Derived data:
//   M: the monomials of all relations (closed under subwords),
//   S: the small pieces (subwords with two essentially different relation
//      occurrences), always containing 1,
//   lambda: least number of nonempty small pieces factoring a word of M.
class RelationSystem {
 public:
  static RelationSystem close(const Presentation& pres, const ClosureCaps& caps = {});

  const Presentation& presentation() const { return pres_; }
  const Field& field() const { return pres_.field; }
  const Alphabet& alphabet() const { return pres_.alphabet; }
  int tau() const { return pres_.tau; }
  const ClosureCaps& caps() const { return caps_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  const std::vector<AlgebraElement>& relations() const { return relations_; }
  bool is_relation(const AlgebraElement& p) const;  // projective membership
  std::size_t relation_index(const AlgebraElement& p) const;

  const std::vector<ReducedWord>& monomials() const { return m_; }
  bool in_m(const ReducedWord& w) const { return m_set_.count(w) != 0; }
  const std::vector<ReducedWord>& small_pieces() const { return s_; }
  bool is_small_piece(const ReducedWord& w) const { return s_set_.count(w) != 0; }
  int max_piece_length() const { return max_piece_len_; }

  int lambda(const ReducedWord& w) const;  // kLambdaInf when no factorization exists

  // Indices of relations having w as a monomial (not as a proper subword).
  const std::vector<std::size_t>& relations_containing(const ReducedWord& w) const;
  // Monomials sharing a relation with w (w itself included), sorted.
  std::vector<ReducedWord> incident_monomials(const ReducedWord& w) const;

  // All occurrences of nonempty M-words in host, sorted by (start, length).
  std::vector<Occurrence> m_occurrences(const ReducedWord& host) const;
  // The containment-maximal ones.  Distinct maximal occurrences never share
  // an interval endpointwise, and pairwise overlaps are small pieces except
  // when the two occurrences extend the same cyclic position of one relation
  // (then every carry across the overlap stays a relation; chart() checks it).
  std::vector<Occurrence> maximal_occurrences(const ReducedWord& host) const;

  RelationSystem mirrored() const;

 private:
  RelationSystem() = default;
  void build_derived();  // build_indexes, then build_pieces, then build_lambda
  void build_indexes();
  void build_pieces();
  void build_lambda();
  bool piece_test(const ReducedWord& c) const;

  Presentation pres_;
  ClosureCaps caps_;
  std::vector<std::string> warnings_;
  std::vector<AlgebraElement> relations_;
  std::map<AlgebraElement, std::size_t> relation_index_;
  std::vector<ReducedWord> m_;
  std::unordered_set<ReducedWord, WordHash> m_set_;
  std::unordered_set<ReducedWord, WordHash> maximal_m_;  // not a proper subword of an M-word
  std::vector<ReducedWord> s_;
  std::unordered_set<ReducedWord, WordHash> s_set_;
  int max_piece_len_ = 0;
  std::unordered_map<ReducedWord, int, WordHash> lambda_;
  std::unordered_map<ReducedWord, std::vector<std::size_t>, WordHash> containing_;
  std::shared_ptr<WordAutomaton> automaton_;  // over M minus the empty word
};

}  // namespace smallcanc
