#include "ringgrp/words.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

namespace ringgrp {

namespace {

class Interner {
 public:
  static Interner& instance() {
    static Interner interner;
    return interner;
  }

  std::uint32_t intern(std::string_view name) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = ids_.find(std::string(name)); it != ids_.end()) return it->second;
    }
    std::unique_lock lock(mutex_);
    auto [it, inserted] = ids_.try_emplace(std::string(name), static_cast<std::uint32_t>(names_.size()));
    if (inserted) names_.emplace_back(name);
    return it->second;
  }

  const std::string& name(std::uint32_t id) {
    std::shared_lock lock(mutex_);
    return names_[id];
  }

 private:
  Interner() { names_.emplace_back(); ids_.emplace("", 0); }

  std::shared_mutex mutex_;
  std::deque<std::string> names_;  // deque keeps references stable
  std::unordered_map<std::string, std::uint32_t> ids_;
};

void push_merge(std::vector<Letter>& out, Generator g, const Integer& e) {
  if (e == 0) return;
  if (!out.empty() && out.back().gen == g) {
    out.back().exp += e;
    if (out.back().exp == 0) out.pop_back();
    return;
  }
  out.push_back({g, e});
}

std::string describe_expected(const std::set<std::string>& expected) {
  std::string s;
  for (const auto& e : expected) {
    if (!s.empty()) s += ", ";
    s += e;
  }
  return s;
}

// Recursive-descent parser for the word literal grammar:
//   word  := token*
//   token := ident ('^' int)? | '[' word ',' word ']' | '1'
class WordParser {
 public:
  explicit WordParser(std::string_view text) : text_(text) {}

  Word parse_all() {
    Word w = parse_word();
    skip_space();
    if (pos_ != text_.size()) fail({"identifier", "'['", "'1'", "end of word"});
    return w;
  }

 private:
  Word parse_word() {
    std::vector<Letter> letters;
    for (;;) {
      skip_space();
      if (pos_ >= text_.size()) break;
      char c = text_[pos_];
      if (c == ',' || c == ']') break;
      Word tok = parse_token();
      for (const auto& l : tok.letters()) push_merge(letters, l.gen, l.exp);
    }
    return Word(std::move(letters));
  }

  Word parse_token() {
    char c = text_[pos_];
    if (c == '[') {
      ++pos_;
      Word u = parse_word();
      expect(',');
      Word v = parse_word();
      expect(']');
      return u * v * invert(u) * invert(v);
    }
    if (c == '1' && (pos_ + 1 == text_.size() || !std::isalnum(static_cast<unsigned char>(text_[pos_ + 1])))) {
      ++pos_;
      return {};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      Generator g(text_.substr(start, pos_ - start));
      Integer exp = 1;
      if (pos_ < text_.size() && text_[pos_] == '^') {
        ++pos_;
        exp = parse_int();
      }
      return Word::of(g, exp);
    }
    fail({"identifier", "'['", "'1'"});
  }

  Integer parse_int() {
    std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) fail({"integer"});
    Integer v(std::string(text_.substr(start, pos_ - start)));
    if (v == 0) {
      pos_ = start;
      fail({"nonzero integer"});
    }
    return v;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail({std::string("'") + c + "'"});
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(std::set<std::string> expected) {
    std::string found = pos_ < text_.size() ? std::string("'") + text_[pos_] + "'" : "end of word";
    throw ParseError(1, pos_ + 1, std::move(expected), "unexpected " + found);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

using Syllable = std::pair<std::size_t, Integer>;

std::vector<Syllable> to_syllables(const GroupSpec& spec, const Word& w) {
  std::vector<Syllable> out;
  out.reserve(w.syllables());
  for (const auto& l : w.letters()) out.emplace_back(spec.require_index(l.gen), l.exp);
  return out;
}

Word from_syllables(const GroupSpec& spec, const std::vector<Syllable>& syl) {
  std::vector<Letter> letters;
  letters.reserve(syl.size());
  for (const auto& [g, e] : syl) letters.push_back({spec.generators()[g], e});
  return Word(std::move(letters));
}

// Merge every pair of same-generator syllables separated only by syllables
// commuting with that generator. The stack stays reduced after each push,
// including when a merge deletes a syllable.
std::vector<Syllable> reduce(const GroupSpec& spec, const std::vector<Syllable>& in) {
  std::vector<Syllable> out;
  out.reserve(in.size());
  for (const auto& [g, e] : in) {
    bool merged = false;
    for (std::size_t k = out.size(); k-- > 0;) {
      if (out[k].first == g) {
        out[k].second += e;
        if (out[k].second == 0) out.erase(out.begin() + static_cast<std::ptrdiff_t>(k));
        merged = true;
        break;
      }
      if (!spec.commute(out[k].first, g)) break;
    }
    if (!merged) out.emplace_back(g, e);
  }
  return out;
}

// Lexicographically least arrangement of a reduced syllable sequence under
// the commutation relation: repeatedly emit the available syllable with the
// smallest generator index.
std::vector<Syllable> lex_sort(const GroupSpec& spec, std::vector<Syllable> syl) {
  const std::size_t k = spec.rank();
  std::vector<std::deque<std::size_t>> queues(k);
  for (std::size_t p = 0; p < syl.size(); ++p) queues[syl[p].first].push_back(p);
  std::vector<Syllable> out;
  out.reserve(syl.size());
  while (out.size() < syl.size()) {
    for (std::size_t g = 0; g < k; ++g) {
      if (queues[g].empty()) continue;
      std::size_t p = queues[g].front();
      bool available = true;
      for (std::size_t h = 0; h < k && available; ++h) {
        if (h == g || spec.commute(g, h) || queues[h].empty()) continue;
        if (queues[h].front() < p) available = false;
      }
      if (available) {
        out.push_back(std::move(syl[p]));
        queues[g].pop_front();
        break;
      }
    }
  }
  return out;
}

int sign(const Integer& x) { return x < 0 ? -1 : (x > 0 ? 1 : 0); }

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, std::set<std::string> expected,
                       const std::string& message)
    : Error("parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": " +
            message + (expected.empty() ? "" : " (expected " + describe_expected(expected) + ")")),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

Generator::Generator(std::string_view name) : id_(Interner::instance().intern(name)) {}

const std::string& Generator::name() const { return Interner::instance().name(id_); }

std::strong_ordering operator<=>(Generator a, Generator b) {
  if (a.id_ == b.id_) return std::strong_ordering::equal;
  return a.name().compare(b.name()) <=> 0;
}

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

Word::Word(std::vector<Letter> letters) {
  letters_.reserve(letters.size());
  for (auto& l : letters) push_merge(letters_, l.gen, l.exp);
}

Word Word::of(Generator g, Integer exp) {
  Word w;
  if (exp != 0) w.letters_.push_back({g, std::move(exp)});
  return w;
}

Word Word::parse(std::string_view text) { return WordParser(text).parse_all(); }

Integer Word::length() const {
  Integer n = 0;
  for (const auto& l : letters_) n += abs(l.exp);
  return n;
}

bool Word::contains(Generator g) const {
  return std::any_of(letters_.begin(), letters_.end(), [g](const Letter& l) { return l.gen == g; });
}

Word Word::operator*(const Word& rhs) const {
  Word out = *this;
  for (const auto& l : rhs.letters_) push_merge(out.letters_, l.gen, l.exp);
  return out;
}

std::string Word::to_string() const {
  if (letters_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) os << ' ';
    os << letters_[i].gen.name();
    if (letters_[i].exp != 1) os << '^' << letters_[i].exp.str();
  }
  return os.str();
}

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.syllables());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back({it->gen, -it->exp});
  return Word(std::move(out));
}

Word free_reduce(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.syllables());
  for (const auto& l : w.letters()) push_merge(out, l.gen, l.exp);
  return Word(std::move(out));
}

Word cyclic_canonical(const Word& w) {
  const Word reduced = free_reduce(w);
  std::deque<Letter> cyc(reduced.letters().begin(), reduced.letters().end());
  while (cyc.size() >= 2 && cyc.front().gen == cyc.back().gen) {
    cyc.front().exp += cyc.back().exp;
    cyc.pop_back();
    if (cyc.front().exp == 0) cyc.pop_front();
  }
  if (cyc.empty()) return {};

  auto less = [](const std::vector<Letter>& a, const std::vector<Letter>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](const Letter& x, const Letter& y) {
                                          if (x.gen != y.gen) return x.gen < y.gen;
                                          return x.exp < y.exp;
                                        });
  };
  std::vector<Letter> base(cyc.begin(), cyc.end());
  std::vector<Letter> inv;
  for (auto it = base.rbegin(); it != base.rend(); ++it) inv.push_back({it->gen, -it->exp});

  std::vector<Letter> best = base;
  for (const auto* src : {&base, &inv}) {
    for (std::size_t r = 0; r < src->size(); ++r) {
      std::vector<Letter> rot(src->begin() + static_cast<std::ptrdiff_t>(r), src->end());
      rot.insert(rot.end(), src->begin(), src->begin() + static_cast<std::ptrdiff_t>(r));
      if (less(rot, best)) best = std::move(rot);
    }
  }
  return Word(std::move(best));
}

GroupSpec::GroupSpec(std::vector<Generator> generators,
                     const std::vector<std::pair<Generator, Generator>>& commuting_pairs)
    : generators_(std::move(generators)), adjacency_(generators_.size() * generators_.size(), false) {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (generators_[i] == generators_[j])
        throw Error("duplicate generator '" + generators_[i].name() + "'");
  for (const auto& [a, b] : commuting_pairs) {
    std::size_t i = require_index(a);
    std::size_t j = require_index(b);
    if (i == j) throw Error("generator '" + a.name() + "' cannot be paired with itself");
    if (!adjacency_[i * rank() + j]) ++edges_;
    adjacency_[i * rank() + j] = true;
    adjacency_[j * rank() + i] = true;
  }
}

GroupSpec GroupSpec::free_group(const std::vector<std::string>& names) {
  std::vector<Generator> gens;
  for (const auto& n : names) gens.emplace_back(n);
  return GroupSpec(std::move(gens));
}

GroupSpec GroupSpec::free_group(std::size_t rank) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= rank; ++i) names.push_back("x" + std::to_string(i));
  return free_group(names);
}

std::optional<std::size_t> GroupSpec::index_of(Generator g) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i] == g) return i;
  return std::nullopt;
}

std::size_t GroupSpec::require_index(Generator g) const {
  if (auto i = index_of(g)) return *i;
  throw UnknownGenerator(g.name());
}

std::vector<std::pair<std::size_t, std::size_t>> GroupSpec::commuting_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = i + 1; j < rank(); ++j)
      if (commute(i, j)) out.emplace_back(i, j);
  return out;
}

Word normal_form(const GroupSpec& spec, const Word& w) {
  auto syl = reduce(spec, to_syllables(spec, w));
  if (!spec.is_free()) syl = lex_sort(spec, std::move(syl));
  return from_syllables(spec, syl);
}

Word multiply(const GroupSpec& spec, const Word& u, const Word& v) { return normal_form(spec, u * v); }

bool words_equal(const GroupSpec& spec, const Word& u, const Word& v) {
  return normal_form(spec, u * invert(v)).empty();
}

CyclicReduction cyclically_reduce(const GroupSpec& spec, const Word& w) {
  auto syl = reduce(spec, to_syllables(spec, w));
  std::vector<Syllable> conj_rev;  // conjugator letters, outermost peel last

  if (spec.is_free()) {
    std::size_t lo = 0;
    std::size_t hi = syl.size();  // half-open
    while (hi - lo >= 2 && syl[lo].first == syl[hi - 1].first &&
           sign(syl[lo].second) != sign(syl[hi - 1].second)) {
      Integer t = abs(syl[lo].second) < abs(syl[hi - 1].second) ? syl[lo].second : -syl[hi - 1].second;
      conj_rev.emplace_back(syl[lo].first, -t);
      syl[lo].second -= t;
      syl[hi - 1].second += t;
      if (syl[lo].second == 0) ++lo;
      if (syl[hi - 1].second == 0) --hi;
    }
    syl = std::vector<Syllable>(syl.begin() + static_cast<std::ptrdiff_t>(lo),
                                syl.begin() + static_cast<std::ptrdiff_t>(hi));
  } else {
    for (;;) {
      bool peeled = false;
      for (std::size_t g = 0; g < spec.rank() && !peeled; ++g) {
        // first occurrence of g movable to the front
        std::optional<std::size_t> left;
        for (std::size_t p = 0; p < syl.size(); ++p) {
          if (syl[p].first == g) {
            left = p;
            break;
          }
          if (!spec.commute(syl[p].first, g)) break;
        }
        std::optional<std::size_t> right;
        for (std::size_t p = syl.size(); p-- > 0;) {
          if (syl[p].first == g) {
            right = p;
            break;
          }
          if (!spec.commute(syl[p].first, g)) break;
        }
        if (!left || !right || *left == *right) continue;
        if (sign(syl[*left].second) == sign(syl[*right].second)) continue;
        Integer t = abs(syl[*left].second) < abs(syl[*right].second) ? syl[*left].second
                                                                       : -syl[*right].second;
        conj_rev.emplace_back(g, -t);
        syl[*left].second -= t;
        syl[*right].second += t;
        std::size_t l = *left;
        std::size_t r = *right;
        if (syl[r].second == 0) syl.erase(syl.begin() + static_cast<std::ptrdiff_t>(r));
        if (syl[l].second == 0) syl.erase(syl.begin() + static_cast<std::ptrdiff_t>(l));
        peeled = true;
      }
      if (!peeled) break;
    }
    syl = lex_sort(spec, std::move(syl));
  }

  // Each peel prepends g^-t to the conjugator.
  std::vector<Syllable> conj(conj_rev.rbegin(), conj_rev.rend());
  return {from_syllables(spec, syl), normal_form(spec, from_syllables(spec, conj))};
}

std::vector<Integer> abelianize_word(const GroupSpec& spec, const Word& w) {
  std::vector<Integer> v(spec.rank(), 0);
  for (const auto& l : w.letters()) v[spec.require_index(l.gen)] += l.exp;
  return v;
}

}  // namespace ringgrp
