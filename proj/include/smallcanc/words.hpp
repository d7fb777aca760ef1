#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace smallcanc {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct AlphabetError : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

// Letter encoding: generator i (0-based) is +(i+1), its formal inverse is
// -(i+1).  0 is never a letter.
using Letter = std::int32_t;

inline Letter inverse_letter(Letter l) { return -l; }
inline std::size_t letter_index(Letter l) { return static_cast<std::size_t>(l > 0 ? l : -l) - 1; }
inline bool is_inverse(Letter l) { return l < 0; }

// Fixed alphabet order: x < x^-1 < y < y^-1 < ...
inline std::size_t letter_rank(Letter l) { return 2 * letter_index(l) + (is_inverse(l) ? 1 : 0); }

// Freely reduced word over the letter encoding.  Construction reduces; all
// other operations preserve reducedness.
class ReducedWord {
 public:
  ReducedWord() = default;
  explicit ReducedWord(std::span<const Letter> letters);
  explicit ReducedWord(std::initializer_list<Letter> letters)
      : ReducedWord(std::span<const Letter>(letters.begin(), letters.size())) {}

  static ReducedWord empty() { return ReducedWord(); }

  std::size_t size() const { return ls_.size(); }
  bool is_empty() const { return ls_.empty(); }
  Letter at(std::size_t i) const { return ls_[i]; }
  Letter front() const { return ls_.front(); }
  Letter back() const { return ls_.back(); }
  const std::vector<Letter>& letters() const { return ls_; }

  ReducedWord subword(std::size_t start, std::size_t len) const;
  ReducedWord inverse() const;
  // Formal reversal without inverting letters; an anti-automorphism that
  // swaps the left/right ends of every definition built on top of words.
  ReducedWord mirrored() const;

  bool operator==(const ReducedWord& o) const { return ls_ == o.ls_; }
  // Shortlex with letter_rank ties; the canonical order used for printing,
  // normalization and container keys.
  bool operator<(const ReducedWord& o) const;

 private:
  std::vector<Letter> ls_;
  friend struct ConcatResult;
  friend ReducedWord concat_raw(const ReducedWord&, const ReducedWord&, std::size_t*);
};

struct ConcatResult {
  ReducedWord word;
  std::size_t cancelled = 0;  // letter pairs removed at the junction
};

ConcatResult concat(const ReducedWord& u, const ReducedWord& v);

inline bool shortlex_less(const ReducedWord& a, const ReducedWord& b) { return a < b; }

struct WordHash {
  std::size_t operator()(const ReducedWord& w) const {
    std::size_t h = 1469598103934665603ull;
    for (Letter l : w.letters()) {
      h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(l));
      h *= 1099511628211ull;
    }
    return h ^ w.size();
  }
};

// Generator names; parsing/printing of word syntax "x*y^-1", empty word "1".
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  bool has(const std::string& name) const;
  Letter letter(const std::string& name, bool inverse) const;

  std::string format_letter(Letter l) const;
  std::string format_word(const ReducedWord& w) const;
  ReducedWord parse_word(const std::string& text) const;

  bool operator==(const Alphabet& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
};

struct Occurrence {
  std::size_t start = 0;
  ReducedWord pattern;

  std::size_t length() const { return pattern.size(); }
  std::size_t end() const { return start + pattern.size(); }
  bool operator==(const Occurrence& o) const { return start == o.start && pattern == o.pattern; }
};

// Dictionary automaton (Aho-Corasick) over the signed-letter alphabet.
// search() is linear in the host length plus the number of matches.
class WordAutomaton {
 public:
  WordAutomaton() = default;
  WordAutomaton(const std::vector<ReducedWord>& patterns, std::size_t alphabet_size);

  // All occurrences of the patterns in host, sorted by (start, length).
  // Empty patterns are ignored.
  std::vector<Occurrence> search(const ReducedWord& host) const;

 private:
  std::size_t symbols_ = 0;
  std::vector<std::vector<int>> next_;
  std::vector<int> fail_;
  std::vector<std::vector<std::size_t>> out_;  // pattern indices ending at node
  std::vector<ReducedWord> patterns_;
};

std::vector<Occurrence> find_occurrences(const std::vector<ReducedWord>& patterns,
                                         const ReducedWord& host, std::size_t alphabet_size);

}  // namespace smallcanc
