#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "smallcanc/axioms.hpp"

namespace smallcanc {

// Group-algebra translation: every relator r contributes the relation r - 1.
Presentation group_algebra_presentation(const Alphabet& ab,
                                        const std::vector<ReducedWord>& relators, Field f,
                                        int tau);

// The single-relation presentation {1 + v + v*w}.
Presentation trinomial_presentation(const Alphabet& ab, const ReducedWord& v,
                                    const ReducedWord& w, Field f, int tau);

// The two-letter binomial x^-1 + y whose closure is a finite orbit of six
// binomials.  The relation has no repeated subwords, so the empty word is
// its only small piece and small cancellation holds at any tau.
Presentation orbit_presentation();

struct CorpusTags {
  bool compat = false;
  bool sc = false;
  bool isolation_left = false;
  bool isolation_right = false;
};

struct CorpusInstance {
  std::string name;
  Presentation pres;
  CorpusTags tags;  // checker outputs, captured at generation time
};

// Deterministic 20-instance corpus: ten instances designed to pass the small
// cancellation axiom and ten designed to fail it.  Every instance closes
// within default caps.  Every tag is a checker output captured at generation
// time; an instance contradicting its designed side aborts generation.
std::vector<CorpusInstance> gen_corpus(std::uint64_t seed);

// Draws random positive relators of the given length until the closed system
// matches want_sc_pass on the small cancellation checker; a passing instance
// must also hold up on both isolation sides.  Empty when attempts run out.
std::optional<Presentation> search_group_algebra(std::size_t alphabet_size,
                                                 std::size_t relator_len, int tau,
                                                 std::uint64_t seed, std::size_t attempts,
                                                 bool want_sc_pass);

// Screens candidate v (random positive words of v_len) against a fixed
// random positive w until the trinomial passes the axiom checks. Returns
// nothing without drawing when w_len < tau: v is a subword of both v and
// v*w, so the measure of v*w is capped at 1 + w_len.
std::optional<Presentation> search_trinomial(std::size_t alphabet_size, std::size_t v_len,
                                             std::size_t w_len, int tau, std::uint64_t seed,
                                             std::size_t attempts);

// Fallback artifact when no candidate passes the axiom checks: the one-letter
// trinomial 1 + x^v_len + x^(v_len+w_len), which always closes finitely and
// ships with its honest (failing) small-cancellation report.
// Requires v_len + w_len within the default closure word-length cap.
Presentation trinomial_fallback(std::size_t v_len, std::size_t w_len, int tau);

// Letter names "a", "b", ... used by the generated presentations.
Alphabet default_alphabet(std::size_t size);

ReducedWord random_positive_word(std::mt19937_64& rng, std::size_t len, std::size_t n_gens);

}  // namespace smallcanc
