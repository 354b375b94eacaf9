#include "ringgrp/extension.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

namespace ringgrp {

namespace {

Word rename_letters(const Word& w, const std::map<Generator, Generator>& names) {
  std::vector<Letter> out;
  for (const auto& l : w.letters()) {
    auto it = names.find(l.gen);
    out.push_back({it == names.end() ? l.gen : it->second, l.exp});
  }
  return Word(std::move(out));
}

Word drop_letters(const Word& w, const std::set<Generator>& dropped) {
  std::vector<Letter> out;
  for (const auto& l : w.letters())
    if (!dropped.count(l.gen)) out.push_back(l);
  return free_reduce(Word(std::move(out)));
}

void require_kernel_word(const ExtensionData& d, const Word& w, const std::string& what) {
  for (const auto& l : w.letters())
    if (!d.kernel.has_generator(l.gen))
      throw MalformedAction(what + " uses '" + l.gen.name() + "', which is not a kernel generator");
}

std::optional<std::size_t> try_order(const Presentation& p, std::size_t max_cosets) {
  try {
    return enumerate(p, {}, max_cosets).num_cosets;
  } catch (const OutOfSpace&) {
    return std::nullopt;
  }
}

}  // namespace

Generator ExtensionData::lift(Generator y) const {
  auto it = lift_names.find(y);
  return it == lift_names.end() ? y : it->second;
}

Presentation assemble(const ExtensionData& d, std::string name) {
  const auto& X = d.kernel.generators();
  const auto& Y = d.quotient.generators();

  std::map<Generator, Generator> lifts;
  std::vector<Generator> gens = X;
  for (auto y : Y) {
    Generator ly = d.lift(y);
    if (std::find(gens.begin(), gens.end(), ly) != gens.end())
      throw NameClash("lift of '" + y.name() + "' is named '" + ly.name() +
                      "', which is already a generator; rename it");
    gens.push_back(ly);
    lifts.emplace(y, ly);
  }
  for (const auto& [key, w] : d.action) {
    if (!d.quotient.has_generator(key.first))
      throw MalformedAction("action names '" + key.first.name() + "', which is not a quotient generator");
    if (!d.kernel.has_generator(key.second))
      throw MalformedAction("action names '" + key.second.name() + "', which is not a kernel generator");
    require_kernel_word(d, w, "action of " + key.first.name() + " on " + key.second.name());
  }
  for (const auto& [idx, w] : d.factors) {
    if (idx >= d.quotient.relators().size())
      throw MalformedAction("factor for relator " + std::to_string(idx + 1) + ", which does not exist");
    require_kernel_word(d, w, "factor " + std::to_string(idx + 1));
    if (d.split && !free_reduce(w).empty())
      throw MalformedAction("split extension with nontrivial factor " + std::to_string(idx + 1));
  }

  std::vector<Word> rels = d.kernel.relators();
  for (std::size_t i = 0; i < d.quotient.relators().size(); ++i) {
    Word lifted = rename_letters(d.quotient.relators()[i], lifts);
    auto it = d.factors.find(i);
    rels.push_back(it == d.factors.end() ? lifted : lifted * invert(it->second));
  }
  for (auto y : Y) {
    Word ly = Word::of(lifts.at(y));
    for (auto x : X) {
      auto it = d.action.find({y, x});
      if (it == d.action.end())
        throw MalformedAction("no action given for " + y.name() + " on " + x.name());
      rels.push_back(ly * Word::of(x) * invert(ly) * invert(it->second));
    }
  }
  return Presentation(std::move(name), std::move(gens), std::move(rels));
}

ExtensionReport validate(const ExtensionData& d, const Presentation& result, std::size_t max_cosets) {
  ExtensionReport rep;
  rep.abelianization = abelianization(result);
  rep.kernel_order = try_order(d.kernel, max_cosets);
  rep.quotient_order = try_order(d.quotient, max_cosets);

  if (rep.kernel_order && rep.quotient_order) {
    std::size_t expected = *rep.kernel_order * *rep.quotient_order;
    rep.result_order = try_order(result, std::max(max_cosets, 4 * expected));
    if (!rep.result_order)
      rep.failures.push_back("enumeration of the extension did not close");
    else if (*rep.result_order != expected)
      rep.failures.push_back("order " + std::to_string(*rep.result_order) + " is not " +
                             std::to_string(*rep.kernel_order) + " * " + std::to_string(*rep.quotient_order));
  }

  if (rep.quotient_order) {
    std::vector<Generator> killed;
    for (auto x : d.kernel.generators())
      if (result.has_generator(x)) killed.push_back(x);
    rep.killed_order = try_order(quotient_by(result, killed), max_cosets);
    if (rep.killed_order != rep.quotient_order)
      rep.failures.push_back("killing the kernel generators does not recover the quotient order");
  }

  if (d.split) {
    std::set<Generator> dropped(d.kernel.generators().begin(), d.kernel.generators().end());
    std::map<Generator, Generator> unlift;
    for (auto y : d.quotient.generators()) unlift.emplace(d.lift(y), y);
    std::vector<Word> targets;
    for (const auto& s : d.quotient.relators()) targets.push_back(cyclic_canonical(s));
    rep.retraction = true;
    for (const auto& r : result.relators()) {
      Word image = drop_letters(rename_letters(r, unlift), dropped);
      if (!image.empty() && std::find(targets.begin(), targets.end(), cyclic_canonical(image)) == targets.end()) {
        rep.retraction = false;
        rep.failures.push_back("relator '" + r.to_string() + "' does not retract to a quotient relator");
        break;
      }
    }
  }
  return rep;
}

ExtensionData parse_extension(std::string_view text, const std::string& base_dir) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  ExtensionData d;
  bool have_kernel = false;
  bool have_quotient = false;
  std::vector<std::tuple<std::size_t, std::string, std::string, std::string>> actions;
  std::vector<std::tuple<std::size_t, std::size_t, std::string>> factors;

  auto fail = [&](std::size_t col, std::set<std::string> expected, const std::string& msg) {
    throw ParseError(lineno, col, std::move(expected), msg);
  };
  auto resolve = [&](const std::string& file) {
    std::filesystem::path p(file);
    if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
    return load_presentation(p.string());
  };

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    std::istringstream ws(line);
    std::string kw;
    if (!(ws >> kw)) continue;
    const std::size_t col = line.find(kw) + 1;
    if (kw == "kernel" || kw == "quotient") {
      std::string file;
      if (!(ws >> file)) fail(col, {"file name"}, "missing file name");
      (kw == "kernel" ? d.kernel : d.quotient) = resolve(file);
      (kw == "kernel" ? have_kernel : have_quotient) = true;
    } else if (kw == "split") {
      std::string v;
      ws >> v;
      if (v != "true" && v != "false") fail(col, {"'true'", "'false'"}, "bad split flag");
      d.split = v == "true";
    } else if (kw == "lift") {
      std::string y, arrow, name;
      ws >> y >> arrow >> name;
      if (!is_identifier(y) || arrow != "->" || !is_identifier(name))
        fail(col, {"lift <gen> -> <name>"}, "malformed lift");
      d.lift_names[Generator(y)] = Generator(name);
    } else if (kw == "action") {
      std::string y, x, arrow, rest;
      ws >> y >> x >> arrow;
      if (!is_identifier(y) || !is_identifier(x) || arrow != "->")
        fail(col, {"action <y> <x> -> <word>"}, "malformed action");
      std::getline(ws, rest);
      actions.emplace_back(lineno, y, x, rest);
    } else if (kw == "factor") {
      std::string idx, arrow, rest;
      ws >> idx >> arrow;
      if (idx.empty() || !std::all_of(idx.begin(), idx.end(), [](unsigned char ch) { return std::isdigit(ch) != 0; }) || arrow != "->" || std::stoul(idx) == 0)
        fail(col, {"factor <index> -> <word>"}, "malformed factor");
      std::getline(ws, rest);
      factors.emplace_back(lineno, std::stoul(idx) - 1, rest);
    } else {
      fail(col, {"'kernel'", "'quotient'", "'split'", "'lift'", "'action'", "'factor'"},
           "unexpected '" + kw + "'");
    }
  }
  if (!have_kernel) throw ParseError(lineno + 1, 1, {"'kernel'"}, "missing kernel");
  if (!have_quotient) throw ParseError(lineno + 1, 1, {"'quotient'"}, "missing quotient");

  auto parse_at = [](std::size_t line, const std::string& text) {
    try {
      return Word::parse(text);
    } catch (const ParseError& e) {
      throw ParseError(line, e.column(), e.expected(), "malformed word");
    }
  };
  std::map<Generator, Generator> unlift;
  for (auto y : d.quotient.generators()) unlift.emplace(d.lift(y), y);
  for (const auto& [line, y, x, text] : actions) {
    Generator gy(y);
    if (auto it = unlift.find(gy); it != unlift.end()) gy = it->second;
    d.action[{gy, Generator(x)}] = parse_at(line, text);
  }
  for (const auto& [line, idx, text] : factors) d.factors[idx] = parse_at(line, text);
  return d;
}

ExtensionData load_extension(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_extension(ss.str(), std::filesystem::path(path).parent_path().string());
}

}  // namespace ringgrp
