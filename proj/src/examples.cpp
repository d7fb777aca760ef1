#include "smallcanc/examples.hpp"

#include <cstdio>

namespace smallcanc {

Alphabet default_alphabet(std::size_t size) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < size; ++i) {
    std::string name(1, static_cast<char>('a' + i % 26));
    if (i >= 26) name += std::to_string(i / 26);
    names.push_back(std::move(name));
  }
  return Alphabet(names);
}

Presentation group_algebra_presentation(const Alphabet& ab,
                                        const std::vector<ReducedWord>& relators, Field f,
                                        int tau) {
  Presentation pres{f, tau, ab, {}};
  for (const ReducedWord& r : relators) {
    AlgebraElement g(f);
    g.add_term(r, f.one());
    g.add_term(ReducedWord::empty(), f.neg(f.one()));
    if (g.is_zero()) throw Error("relator reduces to the empty word");
    pres.generators.push_back(std::move(g));
  }
  return pres;
}

Presentation trinomial_presentation(const Alphabet& ab, const ReducedWord& v,
                                    const ReducedWord& w, Field f, int tau) {
  if (v.size() == 0 || w.size() == 0) throw Error("trinomial needs nonempty v and w");
  Presentation pres{f, tau, ab, {}};
  AlgebraElement g(f);
  g.add_term(ReducedWord::empty(), f.one());
  g.add_term(v, f.one());
  g.add_term(concat(v, w).word, f.one());
  pres.generators.push_back(std::move(g));
  return pres;
}

Presentation orbit_presentation() {
  const Field f = Field::prime(2);
  const Alphabet ab(std::vector<std::string>{"x", "y"});
  AlgebraElement g(f);
  g.add_term(ReducedWord({-1}), f.one());  // x^-1
  g.add_term(ReducedWord({2}), f.one());   // y
  return Presentation{f, 10, ab, {g}};
}

ReducedWord random_positive_word(std::mt19937_64& rng, std::size_t len, std::size_t n_gens) {
  std::uniform_int_distribution<Letter> pick(1, static_cast<Letter>(n_gens));
  while (true) {
    std::vector<Letter> ls;
    for (std::size_t i = 0; i < len; ++i) ls.push_back(pick(rng));
    bool varied = false;
    for (std::size_t i = 1; i < ls.size(); ++i) varied = varied || ls[i] != ls[0];
    if (len <= 1 || varied) return ReducedWord(ls);
  }
}

namespace {

struct Screen {
  bool closed = false;
  bool compat = false;
  bool sc = false;
  bool iso_left = false;
  bool iso_right = false;
};

Screen screen(const Presentation& pres, const ClosureCaps& caps = ClosureCaps{}) {
  Screen out;
  try {
    RelationSystem sys = RelationSystem::close(pres, caps);
    out.closed = true;
    out.compat = check_compatibility(sys).ok();
    out.sc = check_small_cancellation(sys).ok();
    out.iso_left = check_isolation(sys, "left").ok();
    out.iso_right = check_isolation(sys, "right").ok();
  } catch (const ClosureDivergedError&) {
  }
  return out;
}

}  // namespace

std::optional<Presentation> search_group_algebra(std::size_t alphabet_size,
                                                 std::size_t relator_len, int tau,
                                                 std::uint64_t seed, std::size_t attempts,
                                                 bool want_sc_pass) {
  const Alphabet ab = default_alphabet(alphabet_size);
  const Field f = Field::prime(2);
  std::mt19937_64 rng(seed);
  for (std::size_t att = 0; att < attempts; ++att) {
    const ReducedWord r = random_positive_word(rng, relator_len, alphabet_size);
    Presentation pres = group_algebra_presentation(ab, {r}, f, tau);
    const Screen s = screen(pres);
    if (!s.closed || !s.compat) continue;
    if (want_sc_pass && s.sc && s.iso_left && s.iso_right) return pres;
    if (!want_sc_pass && !s.sc) return pres;
  }
  return std::nullopt;
}

std::optional<Presentation> search_trinomial(std::size_t alphabet_size, std::size_t v_len,
                                             std::size_t w_len, int tau, std::uint64_t seed,
                                             std::size_t attempts) {
  // v is a subword of both v and v*w, and single letters of v recur, so once
  // v is a small piece the measure of v*w is at most 1 + w_len. No candidate
  // can reach measure tau + 1 on any monomial unless w is long enough.
  if (w_len < static_cast<std::size_t>(tau)) return std::nullopt;
  const Alphabet ab = default_alphabet(alphabet_size);
  const Field f = Field::prime(2);
  std::mt19937_64 rng(seed);
  const ReducedWord w = random_positive_word(rng, w_len, alphabet_size);
  // A candidate closing within the screening cap closes identically under the
  // default caps (the fixed point is already reached), so the cheap cap only
  // rejects candidates the default caps would also reject or grind on.
  ClosureCaps screen_caps;
  screen_caps.max_relations = 20000;
  for (std::size_t att = 0; att < attempts; ++att) {
    const ReducedWord v = random_positive_word(rng, v_len, alphabet_size);
    Presentation pres = trinomial_presentation(ab, v, w, f, tau);
    try {
      RelationSystem sys = RelationSystem::close(pres, screen_caps);
      if (!check_compatibility(sys).ok()) continue;
      if (!check_small_cancellation(sys).ok()) continue;  // the expensive gate
      if (!check_isolation(sys, "left").ok() && !check_isolation(sys, "right").ok()) continue;
      return pres;
    } catch (const ClosureDivergedError&) {
    }
  }
  return std::nullopt;
}

Presentation trinomial_fallback(std::size_t v_len, std::size_t w_len, int tau) {
  // Powers of a single letter: the closure is the finite family of shift
  // translates of 1 + x^v + x^(v+w), so the file always parses and closes,
  // and the axiom report states honestly that small cancellation fails.
  const Alphabet ab(std::vector<std::string>{"x"});
  const ReducedWord v(std::vector<Letter>(v_len, 1));
  const ReducedWord w(std::vector<Letter>(w_len, 1));
  return trinomial_presentation(ab, v, w, Field::prime(2), tau);
}

std::vector<CorpusInstance> gen_corpus(std::uint64_t seed) {
  std::vector<CorpusInstance> out;
  std::mt19937_64 master(seed);

  // Every tag is a checker output; an instance whose small-cancellation
  // verdict contradicts its designed side aborts generation instead of
  // shipping a wrong tag.
  auto add_checked = [&](std::string name, Presentation pres, bool want_sc) {
    const Screen s = screen(pres);
    if (!s.closed) throw Error("corpus generation: " + name + " did not close");
    if (!s.compat) throw Error("corpus generation: " + name + " fails the closure condition");
    if (s.sc != want_sc)
      throw Error("corpus generation: " + name + " has the wrong small-cancellation verdict");
    out.push_back(
        {std::move(name), std::move(pres), CorpusTags{s.compat, s.sc, s.iso_left, s.iso_right}});
  };

  // Designed to pass small cancellation.
  add_checked("p01-orbit", orbit_presentation(), true);

  {
    // Single positive relator with 24 pairwise distinct letters: no nonempty
    // subword recurs anywhere in the closure, so the empty word is the only
    // small piece and every nonempty monomial has infinite measure.
    const Alphabet ab = default_alphabet(24);
    std::vector<Letter> ls;
    for (Letter i = 1; i <= 24; ++i) ls.push_back(i);
    add_checked("p02-distinct-letters",
                group_algebra_presentation(ab, {ReducedWord(ls)}, Field::prime(2), 10), true);
  }

  // Screened random group-algebra relators: long enough that every closed
  // relation keeps a monomial of length >= 21, which the screen certifies to
  // carry measure >= tau+1 (no cyclic 3-gram of the relator may repeat).
  for (std::size_t i = 0; i < 8; ++i) {
    const std::size_t len = 41 + i;
    const std::uint64_t sub = master();
    std::optional<Presentation> pres = search_group_algebra(8, len, 10, sub, 64, true);
    if (!pres) throw Error("corpus generation: no passing relator of length " +
                           std::to_string(len) + " found");
    char num[8];
    std::snprintf(num, sizeof num, "p%02zu", i + 3);
    add_checked(std::string(num) + "-galg-a8-n" + std::to_string(len), std::move(*pres), true);
  }

  // Designed to fail small cancellation.
  {
    // Two relations sharing the long monomial H; subtracting them leaves
    // f - g, a combination supported entirely on single-letter pieces.
    const Alphabet ab = default_alphabet(7);  // a b c d e f g
    const Field fq = Field::rationals();
    const ReducedWord u({6});                    // f
    const ReducedWord v({7});                    // g
    const ReducedWord h({1, 2, 6, 3, 4, 7, 5});  // a b f c d g e
    Presentation pres{fq, 10, ab, {}};
    AlgebraElement g1(fq), g2(fq);
    g1.add_term(h, fq.one());
    g1.add_term(u, fq.one());
    g2.add_term(h, fq.one());
    g2.add_term(v, fq.one());
    pres.generators = {g1, g2};
    add_checked("f01-shared-head", std::move(pres), false);
  }

  {
    // One-letter trinomial 1 + x + x^3: the closure is the four shift
    // translates, every monomial is a short power of x, and powers repeat as
    // subwords everywhere, so the generator itself is supported on small
    // pieces.
    const Alphabet ab(std::vector<std::string>{"x"});
    const Field f2 = Field::prime(2);
    Presentation pres{f2, 10, ab, {}};
    AlgebraElement g(f2);
    g.add_term(ReducedWord::empty(), f2.one());
    g.add_term(ReducedWord({1}), f2.one());
    g.add_term(ReducedWord({1, 1, 1}), f2.one());
    pres.generators = {g};
    add_checked("f02-laurent-trinomial", std::move(pres), false);
  }

  // Short relators over a small alphabet repeat letters, so the generator
  // row itself stays supported on small pieces.
  for (std::size_t i = 0; i < 8; ++i) {
    const std::size_t len = 12 + i;
    const std::uint64_t sub = master();
    std::optional<Presentation> pres = search_group_algebra(4, len, 10, sub, 64, false);
    if (!pres) throw Error("corpus generation: no failing relator of length " +
                           std::to_string(len) + " found");
    char num[8];
    std::snprintf(num, sizeof num, "f%02zu", i + 3);
    add_checked(std::string(num) + "-galg-a4-n" + std::to_string(len), std::move(*pres), false);
  }

  return out;
}

}  // namespace smallcanc
