#include "smallcanc/words.hpp"

#include <algorithm>
#include <cctype>
#include <queue>
#include <sstream>

namespace smallcanc {

ReducedWord::ReducedWord(std::span<const Letter> letters) {
  ls_.reserve(letters.size());
  for (Letter l : letters) {
    if (l == 0) throw AlphabetError("0 is not a letter");
    if (!ls_.empty() && ls_.back() == inverse_letter(l))
      ls_.pop_back();
    else
      ls_.push_back(l);
  }
}

ReducedWord ReducedWord::subword(std::size_t start, std::size_t len) const {
  if (start + len > ls_.size()) throw Error("subword out of range");
  ReducedWord w;
  w.ls_.assign(ls_.begin() + start, ls_.begin() + start + len);
  return w;  // a factor of a reduced word is reduced
}

ReducedWord ReducedWord::inverse() const {
  ReducedWord w;
  w.ls_.reserve(ls_.size());
  for (auto it = ls_.rbegin(); it != ls_.rend(); ++it) w.ls_.push_back(inverse_letter(*it));
  return w;
}

ReducedWord ReducedWord::mirrored() const {
  ReducedWord w;
  w.ls_.assign(ls_.rbegin(), ls_.rend());
  return w;  // xy^-1 pairs reverse to y^-1x, still reduced
}

bool ReducedWord::operator<(const ReducedWord& o) const {
  if (ls_.size() != o.ls_.size()) return ls_.size() < o.ls_.size();
  for (std::size_t i = 0; i < ls_.size(); ++i)
    if (ls_[i] != o.ls_[i]) return letter_rank(ls_[i]) < letter_rank(o.ls_[i]);
  return false;
}

ConcatResult concat(const ReducedWord& u, const ReducedWord& v) {
  std::size_t k = 0;
  std::size_t lim = std::min(u.size(), v.size());
  while (k < lim && u.at(u.size() - 1 - k) == inverse_letter(v.at(k))) ++k;
  ConcatResult r;
  r.cancelled = k;
  std::vector<Letter> ls;
  ls.reserve(u.size() + v.size() - 2 * k);
  ls.insert(ls.end(), u.letters().begin(), u.letters().end() - static_cast<std::ptrdiff_t>(k));
  ls.insert(ls.end(), v.letters().begin() + static_cast<std::ptrdiff_t>(k), v.letters().end());
  r.word = ReducedWord(ls);  // junction fully cancelled, so this is already reduced
  return r;
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  for (const auto& n : names_) {
    if (n.empty() || n == "1") throw AlphabetError("invalid generator name: '" + n + "'");
    for (char c : n)
      if (std::isspace(static_cast<unsigned char>(c)) || c == '*' || c == '^' || c == '+' ||
          c == '/')
        throw AlphabetError("invalid character in generator name: '" + n + "'");
    if (std::count(names_.begin(), names_.end(), n) > 1)
      throw AlphabetError("duplicate generator name: '" + n + "'");
  }
}

bool Alphabet::has(const std::string& name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

Letter Alphabet::letter(const std::string& name, bool inverse) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw AlphabetError("unknown generator: '" + name + "'");
  Letter l = static_cast<Letter>(it - names_.begin()) + 1;
  return inverse ? -l : l;
}

std::string Alphabet::format_letter(Letter l) const {
  std::size_t i = letter_index(l);
  if (i >= names_.size()) throw AlphabetError("letter outside alphabet");
  return is_inverse(l) ? names_[i] + "^-1" : names_[i];
}

std::string Alphabet::format_word(const ReducedWord& w) const {
  if (w.is_empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += '*';
    s += format_letter(w.at(i));
  }
  return s;
}

ReducedWord Alphabet::parse_word(const std::string& text) const {
  if (text.empty()) throw ParseError("empty word text");
  std::vector<Letter> ls;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t star = text.find('*', pos);
    std::string tok = text.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
    pos = star == std::string::npos ? text.size() : star + 1;
    if (tok.empty()) throw ParseError("empty factor in word: '" + text + "'");
    if (tok == "1") continue;  // empty-word literal
    bool inv = false;
    if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
      inv = true;
      tok = tok.substr(0, tok.size() - 3);
    }
    if (!has(tok)) throw ParseError("unknown letter '" + tok + "' in word: '" + text + "'");
    ls.push_back(letter(tok, inv));
  }
  return ReducedWord(ls);
}

WordAutomaton::WordAutomaton(const std::vector<ReducedWord>& patterns, std::size_t alphabet_size)
    : symbols_(2 * alphabet_size), patterns_(patterns) {
  next_.push_back(std::vector<int>(symbols_, 0));
  out_.emplace_back();
  for (std::size_t pi = 0; pi < patterns_.size(); ++pi) {
    const ReducedWord& p = patterns_[pi];
    if (p.is_empty()) continue;
    int node = 0;
    for (Letter l : p.letters()) {
      std::size_t c = letter_rank(l);
      if (c >= symbols_) throw AlphabetError("pattern letter outside alphabet");
      if (next_[node][c] == 0) {
        next_.push_back(std::vector<int>(symbols_, 0));
        out_.emplace_back();
        next_[node][c] = static_cast<int>(next_.size()) - 1;
      }
      node = next_[node][c];
    }
    out_[node].push_back(pi);
  }
  fail_.assign(next_.size(), 0);
  std::queue<int> bfs;
  for (std::size_t c = 0; c < symbols_; ++c)
    if (next_[0][c]) bfs.push(next_[0][c]);
  while (!bfs.empty()) {
    int u = bfs.front();
    bfs.pop();
    for (std::size_t c = 0; c < symbols_; ++c) {
      int v = next_[u][c];
      if (!v) {
        next_[u][c] = next_[fail_[u]][c];
        continue;
      }
      fail_[v] = next_[fail_[u]][c];
      for (std::size_t pi : out_[fail_[v]]) out_[v].push_back(pi);
      bfs.push(v);
    }
  }
}

std::vector<Occurrence> WordAutomaton::search(const ReducedWord& host) const {
  std::vector<Occurrence> found;
  if (next_.empty()) return found;
  int node = 0;
  for (std::size_t i = 0; i < host.size(); ++i) {
    std::size_t c = letter_rank(host.at(i));
    if (c >= symbols_) throw AlphabetError("host letter outside alphabet");
    node = next_[node][c];
    for (std::size_t pi : out_[node])
      found.push_back(Occurrence{i + 1 - patterns_[pi].size(), patterns_[pi]});
  }
  std::sort(found.begin(), found.end(), [](const Occurrence& a, const Occurrence& b) {
    if (a.start != b.start) return a.start < b.start;
    if (a.length() != b.length()) return a.length() < b.length();
    return a.pattern < b.pattern;
  });
  return found;
}

std::vector<Occurrence> find_occurrences(const std::vector<ReducedWord>& patterns,
                                         const ReducedWord& host, std::size_t alphabet_size) {
  return WordAutomaton(patterns, alphabet_size).search(host);
}

}  // namespace smallcanc
