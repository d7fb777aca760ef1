#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "smallcanc/relations.hpp"

namespace smallcanc {

// Raised when a built chart violates a structural invariant (overlap of two
// maximal occurrences neither a small piece nor carry-aligned); indicates a
// defective relation system rather than a bad input word.
struct ChartInvariantError : Error {
  using Error::Error;
};

// All maximal occurrences of relation monomials in a host word, with
// measure, member (lambda >= tau) and virtual-member flags.  Occurrences are
// sorted by start and pairwise containment-free; the overlap of any two is a
// small piece or carry-aligned (asserted on construction).
struct Chart {
  ReducedWord host;
  std::vector<Occurrence> occurrences;
  std::vector<int> lambda;   // measure of each pattern, kLambdaInf for infinity
  std::vector<bool> member;  // lambda >= tau
  std::vector<bool> virt;    // virtual member within virtual_depth replacements
  std::size_t virtual_depth = 2;

  // One line per occurrence: "start length pattern lambda member virtual".
  std::string to_text(const Alphabet& ab) const;
};

// Chart operations require tau >= 5 so that every tracked occurrence with
// lambda >= tau - 2 exceeds small-piece measure and has a unique maximal
// occurrence containing it.
Chart chart(const ReducedWord& u, const RelationSystem& sys, std::size_t virtual_depth = 2);

// Indices of a minimum-cardinality subset of intervals covering the same
// positions as the whole list (leftmost-longest greedy sweep, optimal for
// intervals).  Works for arbitrary interval lists.
std::vector<std::size_t> minimal_interval_cover(const std::vector<Occurrence>& occs);

std::size_t min_cov(const ReducedWord& u, const RelationSystem& sys);

// Occurrences of the chart of u that become members after at most `depth`
// admissible replacements of other occurrences (bounded search; members
// themselves qualify at depth 0).
std::vector<Occurrence> virtual_members(const ReducedWord& u, const RelationSystem& sys,
                                        std::size_t depth = 2);

struct FChar {
  std::size_t min_cov = 0;
  std::size_t n_virt = 0;

  friend bool operator==(const FChar& a, const FChar& b) {
    return a.min_cov == b.min_cov && a.n_virt == b.n_virt;
  }
  friend bool operator<(const FChar& a, const FChar& b) {
    if (a.min_cov != b.min_cov) return a.min_cov < b.min_cov;
    return a.n_virt < b.n_virt;
  }
  friend bool operator<=(const FChar& a, const FChar& b) { return a < b || a == b; }
  std::string to_string() const {
    return "(" + std::to_string(min_cov) + ", " + std::to_string(n_virt) + ")";
  }
};

FChar f_char(const ReducedWord& u, const RelationSystem& sys, std::size_t virtual_depth = 2);

// t(0) = (0,0); from (r,s) the next value is (r,s+1) if r > s, else (r+1,0).
FChar t_value(std::size_t n);

// Least n with f_char(u) <= t_value(n) lexicographically.
std::size_t filtration_level(const ReducedWord& u, const RelationSystem& sys,
                             std::size_t virtual_depth = 2);

// Word surgery shared with the multi-turn module: substitute `sub` for the
// occurrence `occ` inside `host` and reduce.  Bookkeeping fields describe
// which letters survive: the first left_keep letters of the prefix, mid_len
// letters of sub, and the last right_keep letters of the suffix.
struct Replacement {
  ReducedWord word;
  std::size_t left_keep = 0;
  std::size_t mid_len = 0;
  std::size_t right_keep = 0;
  std::size_t left_cancel = 0;   // prefix letters destroyed by reduction
  std::size_t right_cancel = 0;  // suffix letters destroyed by reduction
};

Replacement replace_occurrence(const ReducedWord& host, const Occurrence& occ,
                               const ReducedWord& sub);

}  // namespace smallcanc
