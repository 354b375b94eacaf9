#include "ringgrp/presentation.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

namespace ringgrp {

namespace {

std::string strip_comment(const std::string& line) {
  auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

// Splits off the first whitespace-delimited keyword. Returns the keyword and
// the offset of the remainder within the line.
std::pair<std::string, std::size_t> keyword(const std::string& line) {
  std::size_t start = line.find_first_not_of(" \t\r");
  if (start == std::string::npos) return {"", line.size()};
  std::size_t end = line.find_first_of(" \t\r", start);
  if (end == std::string::npos) end = line.size();
  return {line.substr(start, end - start), end};
}

Word parse_word_at(const std::string& text, std::size_t line, std::size_t column_offset) {
  try {
    return Word::parse(text);
  } catch (const ParseError& e) {
    throw ParseError(line, column_offset + e.column(), e.expected(), "malformed word");
  }
}

Word substitute(const Word& w, Generator gen, const Word& replacement) {
  Word out;
  for (const auto& l : w.letters()) {
    if (l.gen != gen) {
      out = out * Word::of(l.gen, l.exp);
      continue;
    }
    const Word& base = l.exp > 0 ? replacement : invert(replacement);
    for (Integer k = abs(l.exp); k > 0; --k) out = free_reduce(out * base);
  }
  return free_reduce(out);
}

Word free_cyclic_core(const Word& w) {
  std::vector<Letter> ls = free_reduce(w).letters();
  std::size_t lo = 0;
  std::size_t hi = ls.size();
  while (hi - lo >= 2 && ls[lo].gen == ls[hi - 1].gen && (ls[lo].exp > 0) != (ls[hi - 1].exp > 0)) {
    Integer t = abs(ls[lo].exp) < abs(ls[hi - 1].exp) ? ls[lo].exp : -ls[hi - 1].exp;
    ls[lo].exp -= t;
    ls[hi - 1].exp += t;
    if (ls[lo].exp == 0) ++lo;
    if (ls[hi - 1].exp == 0) --hi;
  }
  return Word(std::vector<Letter>(ls.begin() + static_cast<std::ptrdiff_t>(lo),
                                  ls.begin() + static_cast<std::ptrdiff_t>(hi)));
}

struct Elimination {
  std::size_t relator;
  Word replacement;
};

// gen occurs in r as a single syllable with exponent ±1.
std::optional<Word> solve_for(const Word& r, Generator gen) {
  const auto& ls = r.letters();
  std::optional<std::size_t> at;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (ls[i].gen != gen) continue;
    if (at || abs(ls[i].exp) != 1) return std::nullopt;
    at = i;
  }
  if (!at) return std::nullopt;
  // r = u g^e v  ~  g^e (v u) = 1
  std::vector<Letter> rest(ls.begin() + static_cast<std::ptrdiff_t>(*at) + 1, ls.end());
  rest.insert(rest.end(), ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(*at));
  Word vu = free_reduce(Word(std::move(rest)));
  return ls[*at].exp == 1 ? invert(vu) : vu;
}

bool shorter(const Word& a, const Word& b) {
  auto la = a.length();
  auto lb = b.length();
  if (la != lb) return la < lb;
  return a.to_string() < b.to_string();
}

std::optional<Elimination> find_elimination(const Presentation& p, Generator gen) {
  std::optional<Elimination> best;
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    auto rep = solve_for(free_cyclic_core(p.relators()[i]), gen);
    if (!rep) continue;
    if (!best || shorter(p.relators()[i], p.relators()[best->relator])) best = Elimination{i, *rep};
  }
  return best;
}

Presentation eliminate_with(const Presentation& p, Generator gen, const Elimination& e) {
  std::vector<Generator> gens;
  for (auto g : p.generators())
    if (g != gen) gens.push_back(g);
  std::vector<Word> rels;
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    if (i == e.relator) continue;
    rels.push_back(substitute(p.relators()[i], gen, e.replacement));
  }
  return Presentation(p.name(), std::move(gens), std::move(rels));
}

Presentation tidy(const Presentation& p) {
  std::vector<Word> rels;
  std::vector<Word> seen;
  for (const auto& r : p.relators()) {
    Word core = free_cyclic_core(r);
    if (core.empty()) continue;
    Word canon = cyclic_canonical(core);
    if (std::find(seen.begin(), seen.end(), canon) != seen.end()) continue;
    seen.push_back(canon);
    rels.push_back(core);
  }
  return Presentation(p.name(), p.generators(), std::move(rels));
}

}  // namespace

Presentation::Presentation(std::string name, std::vector<Generator> generators,
                           std::vector<Word> relators)
    : name_(std::move(name)), generators_(std::move(generators)) {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (generators_[i] == generators_[j])
        throw Error("duplicate generator '" + generators_[i].name() + "'");
  relators_.reserve(relators.size());
  for (auto& r : relators) {
    for (const auto& l : r.letters())
      if (!has_generator(l.gen)) throw UnknownGenerator(l.gen.name());
    relators_.push_back(free_reduce(r));
  }
}

bool Presentation::has_generator(Generator g) const {
  return std::find(generators_.begin(), generators_.end(), g) != generators_.end();
}

std::size_t Presentation::index_of(Generator g) const {
  auto it = std::find(generators_.begin(), generators_.end(), g);
  if (it == generators_.end()) throw UnknownGenerator(g.name());
  return static_cast<std::size_t>(it - generators_.begin());
}

Presentation Presentation::renamed(std::string name) const {
  Presentation p = *this;
  p.name_ = std::move(name);
  return p;
}

Presentation parse_presentation(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  std::optional<std::string> name;
  std::optional<std::vector<Generator>> gens;
  std::vector<Word> rels;

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip_comment(raw);
    auto [kw, rest_at] = keyword(line);
    if (kw.empty()) continue;
    std::string rest = line.substr(rest_at);
    std::size_t kw_col = line.find(kw) + 1;

    if (!name) {
      if (kw != "group") throw ParseError(lineno, kw_col, {"'group'"}, "unexpected '" + kw + "'");
      std::istringstream ws(rest);
      std::string ident, extra;
      ws >> ident;
      if (!is_identifier(ident))
        throw ParseError(lineno, rest_at + 2, {"identifier"}, "missing group name");
      if (ws >> extra) throw ParseError(lineno, line.find(extra, rest_at) + 1, {"end of line"}, "trailing text");
      name = ident;
    } else if (!gens) {
      if (kw != "gens") throw ParseError(lineno, kw_col, {"'gens'"}, "unexpected '" + kw + "'");
      gens.emplace();
      std::istringstream ws(rest);
      std::string ident;
      while (ws >> ident) {
        if (!is_identifier(ident))
          throw ParseError(lineno, line.find(ident, rest_at) + 1, {"identifier"}, "bad generator name");
        gens->emplace_back(ident);
      }
    } else {
      if (kw != "rel") throw ParseError(lineno, kw_col, {"'rel'"}, "unexpected '" + kw + "'");
      auto eq = rest.find('=');
      Word r;
      if (eq == std::string::npos) {
        r = parse_word_at(rest, lineno, rest_at);
      } else {
        if (rest.find('=', eq + 1) != std::string::npos)
          throw ParseError(lineno, rest_at + rest.find('=', eq + 1) + 1, {"word"}, "second '='");
        Word lhs = parse_word_at(rest.substr(0, eq), lineno, rest_at);
        Word rhs = parse_word_at(rest.substr(eq + 1), lineno, rest_at + eq + 1);
        r = lhs * invert(rhs);
      }
      rels.push_back(std::move(r));
    }
  }
  if (!name) throw ParseError(lineno + 1, 1, {"'group'"}, "empty presentation");
  if (!gens) throw ParseError(lineno + 1, 1, {"'gens'"}, "missing generator list");
  return Presentation(*name, std::move(*gens), std::move(rels));
}

Presentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str());
}

std::string serialize(const Presentation& p) {
  std::ostringstream os;
  os << "group " << p.name() << "\ngens";
  for (auto g : p.generators()) os << ' ' << g.name();
  os << '\n';
  for (const auto& r : p.relators()) os << "rel " << r.to_string() << '\n';
  return os.str();
}

Presentation tietze_eliminate(const Presentation& p, Generator gen) {
  if (!p.has_generator(gen)) throw UnknownGenerator(gen.name());
  auto e = find_elimination(p, gen);
  if (!e) throw NotEliminable("no relator expresses '" + gen.name() + "' in the other generators");
  return eliminate_with(p, gen, *e);
}

Presentation simplify(const Presentation& p) {
  Presentation cur = tidy(p);
  for (;;) {
    std::optional<std::pair<Generator, Elimination>> pick;
    for (std::size_t i = 0; i < cur.relators().size(); ++i) {
      const Word& r = cur.relators()[i];
      if (pick && !shorter(r, cur.relators()[pick->second.relator])) continue;
      for (auto g : cur.generators()) {
        if (auto rep = solve_for(r, g)) {
          pick = {g, Elimination{i, *rep}};
          break;
        }
      }
    }
    if (!pick) return cur;
    cur = tidy(eliminate_with(cur, pick->first, pick->second));
  }
}

Presentation as_presentation(const GroupSpec& spec, std::string name) {
  std::vector<Word> rels;
  for (auto [i, j] : spec.commuting_pairs()) {
    Word x = Word::of(spec.generators()[i]);
    Word y = Word::of(spec.generators()[j]);
    rels.push_back(x * y * invert(x) * invert(y));
  }
  return Presentation(std::move(name), spec.generators(), std::move(rels));
}

GroupSpec graph_product_spec(const Presentation& p) {
  std::vector<std::pair<Generator, Generator>> pairs;
  for (const auto& r : p.relators()) {
    if (r.empty()) continue;
    Word c = cyclic_canonical(r);
    const auto& ls = c.letters();
    bool ok = ls.size() == 4 && ls[0].gen == ls[2].gen && ls[1].gen == ls[3].gen &&
              ls[0].gen != ls[1].gen && abs(ls[0].exp) == 1 && abs(ls[1].exp) == 1 &&
              ls[2].exp == -ls[0].exp && ls[3].exp == -ls[1].exp;
    if (!ok)
      throw NotAGraphProduct("relator '" + r.to_string() + "' of " + p.name() +
                             " is not a commutator of two generators");
    pairs.emplace_back(ls[0].gen, ls[1].gen);
  }
  return GroupSpec(p.generators(), pairs);
}

}  // namespace ringgrp
