#include "ringgrp/homomorphism.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace ringgrp {

namespace {

Generator x_(std::size_t i) { return Generator("x" + std::to_string(i)); }

Word gen(std::string_view name, Integer e = 1) { return Word::of(Generator(name), std::move(e)); }

Word commutator(const Word& u, const Word& v) { return u * v * invert(u) * invert(v); }

}  // namespace

GenMap::GenMap(std::string name, Presentation domain, GroupSpec codomain, std::vector<Word> images)
    : name_(std::move(name)), domain_(std::move(domain)), codomain_(std::move(codomain)) {
  if (images.size() != domain_.generators().size())
    throw AlphabetMismatch("map '" + name_ + "' needs one image per domain generator");
  images_.reserve(images.size());
  for (const auto& w : images) images_.push_back(normal_form(codomain_, w));
}

GenMap GenMap::from_assignments(std::string name, Presentation domain, GroupSpec codomain,
                                const std::map<Generator, Word>& images) {
  for (const auto& [g, w] : images)
    if (!domain.has_generator(g)) throw UnknownGenerator(g.name());
  std::vector<Word> ordered;
  for (auto g : domain.generators()) {
    if (auto it = images.find(g); it != images.end()) {
      ordered.push_back(it->second);
    } else {
      if (!codomain.index_of(g))
        throw AlphabetMismatch("generator '" + g.name() + "' has no image and is not in the codomain");
      ordered.push_back(Word::of(g));
    }
  }
  return GenMap(std::move(name), std::move(domain), std::move(codomain), std::move(ordered));
}

GenMap GenMap::endomorphism(std::string name, const GroupSpec& spec, const std::map<Generator, Word>& images) {
  return from_assignments(std::move(name), as_presentation(spec), spec, images);
}

GenMap GenMap::identity(const GroupSpec& spec) { return endomorphism("id", spec, {}); }

const Word& GenMap::image(Generator g) const { return images_[domain_.index_of(g)]; }

bool GenMap::is_endomorphism() const { return domain_.generators() == codomain_.generators(); }

GenMap GenMap::renamed(std::string name) const {
  GenMap m = *this;
  m.name_ = std::move(name);
  return m;
}

bool GenMap::same_images(const GenMap& other) const {
  return domain_.generators() == other.domain_.generators() && images_ == other.images_;
}

Word apply(const GenMap& m, const Word& w) {
  std::vector<Letter> out;
  for (const auto& l : w.letters()) {
    const Word& img = m.image(l.gen);
    const Word piece = l.exp > 0 ? img : invert(img);
    for (Integer k = abs(l.exp); k > 0; --k)
      out.insert(out.end(), piece.letters().begin(), piece.letters().end());
  }
  return normal_form(m.codomain(), Word(std::move(out)));
}

RelationCheck respects_relations(const GenMap& m) {
  for (const auto& r : m.domain().relators()) {
    Word img = apply(m, r);
    if (!img.empty()) return {false, r, img};
  }
  return {};
}

GenMap compose(const GenMap& outer, const GenMap& inner) {
  const auto& mid = inner.codomain().generators();
  const auto& dom = outer.domain().generators();
  if (mid.size() != dom.size() || !std::is_permutation(mid.begin(), mid.end(), dom.begin()))
    throw AlphabetMismatch("cannot compose '" + outer.name() + "' after '" + inner.name() + "'");
  std::vector<Word> images;
  images.reserve(inner.images().size());
  for (const auto& w : inner.images()) images.push_back(apply(outer, w));
  return GenMap(outer.name() + "*" + inner.name(), inner.domain(), outer.codomain(), std::move(images));
}

GenMap builtin_family(Family family, std::size_t i, std::size_t n) {
  const std::size_t top = family == Family::tau ? n : n - 1;
  if (n == 0 || i < 1 || i > top)
    throw IndexOutOfRange("index " + std::to_string(i) + " out of range for rank " + std::to_string(n));
  GroupSpec f = GroupSpec::free_group(n);
  Word xi = Word::of(x_(i));
  switch (family) {
    case Family::sigma: {
      Word xj = Word::of(x_(i + 1));
      return GenMap::endomorphism("sigma" + std::to_string(i), f,
                                  {{x_(i), xj}, {x_(i + 1), invert(xj) * xi * xj}});
    }
    case Family::rho:
      return GenMap::endomorphism("rho" + std::to_string(i), f,
                                  {{x_(i), Word::of(x_(i + 1))}, {x_(i + 1), xi}});
    case Family::tau:
      return GenMap::endomorphism("tau" + std::to_string(i), f, {{x_(i), invert(xi)}});
  }
  throw Error("unknown family");
}

GenMap builtin_family_inverse(Family family, std::size_t i, std::size_t n) {
  if (family != Family::sigma) return builtin_family(family, i, n);  // involutions
  builtin_family(family, i, n);  // range check
  GroupSpec f = GroupSpec::free_group(n);
  Word xi = Word::of(x_(i));
  Word xj = Word::of(x_(i + 1));
  return GenMap::endomorphism("sigma" + std::to_string(i) + "^-1", f,
                              {{x_(i), xi * xj * invert(xi)}, {x_(i + 1), xi}});
}

GroupSpec hopf_circle_spec() {
  return GroupSpec({Generator("a"), Generator("b"), Generator("c")}, {{Generator("a"), Generator("b")}});
}

GenMap builtin_dahm_HC(DahmHC which) {
  GroupSpec A = hopf_circle_spec();
  Word a = gen("a"), b = gen("b"), c = gen("c");
  switch (which) {
    case DahmHC::g_a:
      return GenMap::endomorphism("D(g_a)", A, {{Generator("c"), a * c * invert(a)}});
    case DahmHC::g_b:
      return GenMap::endomorphism("D(g_b)", A, {{Generator("c"), b * c * invert(b)}});
    case DahmHC::eps_C:
      return GenMap::endomorphism("D(eps_C)", A,
                                  {{Generator("a"), c * a * invert(c)}, {Generator("b"), c * b * invert(c)}});
    case DahmHC::tau_C:
      return GenMap::endomorphism("D(tau_C)", A, {{Generator("c"), invert(c)}});
  }
  throw Error("unknown Dahm generator");
}

GenMap builtin_dahm_HC_inverse(DahmHC which) {
  GroupSpec A = hopf_circle_spec();
  Word a = gen("a"), b = gen("b"), c = gen("c");
  switch (which) {
    case DahmHC::g_a:
      return GenMap::endomorphism("D(g_a)^-1", A, {{Generator("c"), invert(a) * c * a}});
    case DahmHC::g_b:
      return GenMap::endomorphism("D(g_b)^-1", A, {{Generator("c"), invert(b) * c * b}});
    case DahmHC::eps_C:
      return GenMap::endomorphism("D(eps_C)^-1", A,
                                  {{Generator("a"), invert(c) * a * c}, {Generator("b"), invert(c) * b * c}});
    case DahmHC::tau_C:
      return builtin_dahm_HC(which);
  }
  throw Error("unknown Dahm generator");
}

std::optional<DahmHC> parse_dahm_HC(std::string_view name) {
  if (name == "g_a") return DahmHC::g_a;
  if (name == "g_b") return DahmHC::g_b;
  if (name == "eps_C") return DahmHC::eps_C;
  if (name == "tau_C") return DahmHC::tau_C;
  return std::nullopt;
}

PermConjForm recognize_perm_conj(const GenMap& m) {
  const GroupSpec& f = m.codomain();
  if (!m.is_endomorphism() || !f.is_free())
    throw AlphabetMismatch("permutation-conjugacy recognition needs an endomorphism of a free group");
  const std::size_t n = f.rank();
  PermConjForm form;
  std::vector<bool> hit(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    auto cr = cyclically_reduce(f, m.images()[i]);
    const auto& core = cr.core.letters();
    if (core.size() != 1 || abs(core[0].exp) != 1)
      throw NotPermConj(i, "cyclic core '" + cr.core.to_string() + "' is not a single letter");
    std::size_t j = f.require_index(core[0].gen);
    if (hit[j]) throw NotPermConj(i, "permutation is not a bijection");
    hit[j] = true;
    form.pi.push_back(j);
    form.signs.push_back(core[0].exp > 0 ? 1 : -1);
    form.conjugators.push_back(cr.conjugator);
  }
  return form;
}

GenMap reassemble(const PermConjForm& form, const GroupSpec& free_group) {
  std::map<Generator, Word> images;
  for (std::size_t i = 0; i < form.pi.size(); ++i) {
    const Word& w = form.conjugators[i];
    images[free_group.generators()[i]] =
        invert(w) * Word::of(free_group.generators()[form.pi[i]], form.signs[i]) * w;
  }
  return GenMap::endomorphism("reassembled", free_group, images);
}

bool is_inner_by(const GenMap& m, const Word& w) {
  if (!m.is_endomorphism()) throw AlphabetMismatch("'" + m.name() + "' is not an endomorphism");
  const GroupSpec& s = m.codomain();
  for (std::size_t i = 0; i < s.rank(); ++i) {
    Word x = Word::of(s.generators()[i]);
    if (m.images()[i] != normal_form(s, w * x * invert(w))) return false;
  }
  return true;
}

IntMatrix abelianized_action(const GenMap& m) {
  const GroupSpec& s = m.codomain();
  IntMatrix out(s.rank(), m.images().size());
  for (std::size_t j = 0; j < m.images().size(); ++j) {
    auto v = abelianize_word(s, m.images()[j]);
    for (std::size_t i = 0; i < v.size(); ++i) out(i, j) = v[i];
  }
  return out;
}

std::vector<Word> normal_words_of_length(const GroupSpec& spec, std::size_t length) {
  std::vector<Word> out;
  std::vector<Letter> alphabet;
  for (auto g : spec.generators()) {
    alphabet.push_back({g, 1});
    alphabet.push_back({g, -1});
  }
  // Normal forms are closed under prefixes, so non-normal prefixes are pruned.
  std::vector<Letter> prefix;
  auto dfs = [&](auto&& self) -> void {
    if (prefix.size() == length) {
      out.emplace_back(prefix);
      return;
    }
    for (const auto& l : alphabet) {
      prefix.push_back(l);
      Word w(prefix);
      if (w.length() == prefix.size() && normal_form(spec, w) == w) self(self);
      prefix.pop_back();
    }
  };
  dfs(dfs);
  return out;
}

std::optional<Word> search_inner_witness(const GenMap& m, std::size_t max_len) {
  for (std::size_t len = 0; len <= max_len; ++len)
    for (const auto& w : normal_words_of_length(m.codomain(), len))
      if (is_inner_by(m, w)) return w;
  return std::nullopt;
}

std::string_view to_string(Composition c) {
  return c == Composition::left_first ? "left-first" : "right-first";
}

GenMap evaluate(const Realization& r, const Word& w, Composition order) {
  if (r.maps.empty()) throw Error("empty realization");
  GenMap cur = GenMap::identity(r.maps.begin()->second.codomain());
  for (const auto& l : w.letters()) {
    const auto& table = l.exp > 0 ? r.maps : r.inverses;
    auto it = table.find(l.gen);
    if (it == table.end()) throw UnknownGenerator(l.gen.name());
    for (Integer k = abs(l.exp); k > 0; --k)
      cur = order == Composition::right_first ? compose(cur, it->second) : compose(it->second, cur);
  }
  return cur.renamed(w.to_string());
}

std::vector<RelatorOutcome> check_relators(const Realization& r, Composition order) {
  std::vector<RelatorOutcome> out;
  GenMap id = GenMap::identity(r.maps.begin()->second.codomain());
  for (const auto& rel : r.group.relators()) out.push_back({rel, evaluate(r, rel, order).same_images(id)});
  return out;
}

std::vector<FamilyRelators> loop_braid_relators(std::size_t n) {
  auto s = [](std::size_t i) { return gen("sigma" + std::to_string(i)); };
  auto p = [](std::size_t i) { return gen("rho" + std::to_string(i)); };
  auto t = [](std::size_t i) { return gen("tau" + std::to_string(i)); };
  auto rel = [](const Word& lhs, const Word& rhs) { return free_reduce(lhs * invert(rhs)); };
  auto far = [](std::size_t i, std::size_t j) { return (i > j ? i - j : j - i) > 1; };

  std::vector<FamilyRelators> fam(15);
  fam[0].family = "sigma_i sigma_j = sigma_j sigma_i";
  fam[1].family = "sigma_i sigma_i+1 sigma_i = sigma_i+1 sigma_i sigma_i+1";
  fam[2].family = "rho_i rho_j = rho_j rho_i";
  fam[3].family = "rho_i rho_i+1 rho_i = rho_i+1 rho_i rho_i+1";
  fam[4].family = "rho_i^2 = 1";
  fam[5].family = "rho_i sigma_j = sigma_j rho_i";
  fam[6].family = "rho_i+1 rho_i sigma_i+1 = sigma_i rho_i+1 rho_i";
  fam[7].family = "sigma_i+1 sigma_i rho_i+1 = rho_i sigma_i+1 sigma_i";
  fam[8].family = "tau_i tau_j = tau_j tau_i";
  fam[9].family = "tau_i^2 = 1";
  fam[10].family = "sigma_i tau_j = tau_j sigma_i";
  fam[11].family = "rho_i tau_j = tau_j rho_i";
  fam[12].family = "tau_i rho_i = rho_i tau_i+1";
  fam[13].family = "tau_i sigma_i = sigma_i tau_i+1";
  fam[14].family = "tau_i+1 sigma_i = rho_i sigma_i^-1 rho_i tau_i";

  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!far(i, j)) continue;
      fam[0].relators.push_back(rel(s(i) * s(j), s(j) * s(i)));
      fam[2].relators.push_back(rel(p(i) * p(j), p(j) * p(i)));
    }
    if (i + 1 < n) {
      fam[1].relators.push_back(rel(s(i) * s(i + 1) * s(i), s(i + 1) * s(i) * s(i + 1)));
      fam[3].relators.push_back(rel(p(i) * p(i + 1) * p(i), p(i + 1) * p(i) * p(i + 1)));
      fam[6].relators.push_back(rel(p(i + 1) * p(i) * s(i + 1), s(i) * p(i + 1) * p(i)));
      fam[7].relators.push_back(rel(s(i + 1) * s(i) * p(i + 1), p(i) * s(i + 1) * s(i)));
    }
    fam[4].relators.push_back(rel(p(i) * p(i), {}));
    for (std::size_t j = 1; j < n; ++j)
      if (far(i, j)) fam[5].relators.push_back(rel(p(i) * s(j), s(j) * p(i)));
    for (std::size_t j = 1; j <= n; ++j) {
      if (!far(i, j)) continue;
      fam[10].relators.push_back(rel(s(i) * t(j), t(j) * s(i)));
      fam[11].relators.push_back(rel(p(i) * t(j), t(j) * p(i)));
    }
    fam[12].relators.push_back(rel(t(i) * p(i), p(i) * t(i + 1)));
    fam[13].relators.push_back(rel(t(i) * s(i), s(i) * t(i + 1)));
    fam[14].relators.push_back(rel(t(i + 1) * s(i), p(i) * invert(s(i)) * p(i) * t(i)));
  }
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) fam[8].relators.push_back(rel(t(i) * t(j), t(j) * t(i)));
    fam[9].relators.push_back(rel(t(i) * t(i), {}));
  }
  return fam;
}

Presentation loop_braid_presentation(std::size_t n) {
  std::vector<Generator> gens;
  for (std::size_t i = 1; i < n; ++i) gens.emplace_back("sigma" + std::to_string(i));
  for (std::size_t i = 1; i < n; ++i) gens.emplace_back("rho" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) gens.emplace_back("tau" + std::to_string(i));
  std::vector<Word> rels;
  for (auto& f : loop_braid_relators(n)) rels.insert(rels.end(), f.relators.begin(), f.relators.end());
  return Presentation("LBE" + std::to_string(n), std::move(gens), std::move(rels));
}

Realization loop_braid_realization(std::size_t n) {
  Realization r{loop_braid_presentation(n), {}, {}};
  for (std::size_t i = 1; i <= n; ++i) {
    for (Family f : {Family::sigma, Family::rho, Family::tau}) {
      if (f != Family::tau && i == n) continue;
      std::string name = (f == Family::sigma ? "sigma" : f == Family::rho ? "rho" : "tau") + std::to_string(i);
      r.maps.emplace(Generator(name), builtin_family(f, i, n));
      r.inverses.emplace(Generator(name), builtin_family_inverse(f, i, n));
    }
  }
  return r;
}

Presentation oriented_kernel_presentation() {
  return Presentation("Rplus_H_C", {Generator("g_a"), Generator("g_b"), Generator("eps_C")},
                      {commutator(gen("g_a"), gen("g_b"))});
}

GenMap kernel_to_complement_map() {
  return GenMap::from_assignments(
      "W", oriented_kernel_presentation(), hopf_circle_spec(),
      {{Generator("g_a"), gen("a")}, {Generator("g_b"), gen("b")}, {Generator("eps_C"), gen("c")}});
}

Presentation hopf_circle_kernel_presentation(bool literal_eps_relation) {
  Word ga = gen("g_a"), gb = gen("g_b"), e = gen("eps_C"), t = gen("tau_C");
  Word eps_rel = literal_eps_relation ? t * e * t * invert(e) : t * e * t * e;
  return Presentation(literal_eps_relation ? "R_H_C_literal" : "R_H_C",
                      {Generator("g_a"), Generator("g_b"), Generator("eps_C"), Generator("tau_C")},
                      {commutator(ga, gb), t * t, commutator(ga, t), commutator(gb, t), eps_rel});
}

Realization hopf_circle_realization(bool literal_eps_relation) {
  Realization r{hopf_circle_kernel_presentation(literal_eps_relation), {}, {}};
  for (auto [name, which] : {std::pair{"g_a", DahmHC::g_a}, std::pair{"g_b", DahmHC::g_b},
                             std::pair{"eps_C", DahmHC::eps_C}, std::pair{"tau_C", DahmHC::tau_C}}) {
    r.maps.emplace(Generator(name), builtin_dahm_HC(which));
    r.inverses.emplace(Generator(name), builtin_dahm_HC_inverse(which));
  }
  return r;
}

GenMap parse_hom(std::string_view text, const GroupResolver& resolve) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  std::optional<std::string> name;
  Presentation domain;
  GroupSpec codomain;
  std::map<Generator, Word> images;

  auto fail = [&](std::size_t col, std::set<std::string> expected, const std::string& msg) {
    throw ParseError(lineno, col, std::move(expected), msg);
  };

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    std::istringstream ws(line);
    std::string kw;
    if (!(ws >> kw)) continue;
    std::size_t col = line.find(kw) + 1;
    if (!name) {
      if (kw != "hom") fail(col, {"'hom'"}, "unexpected '" + kw + "'");
      std::string ident, colon, dom, arrow, cod, extra;
      ws >> ident >> colon >> dom >> arrow >> cod;
      if (!is_identifier(ident)) fail(col, {"identifier"}, "bad homomorphism name");
      if (colon != ":") fail(col, {"':'"}, "malformed header");
      if (!is_identifier(dom)) fail(col, {"identifier"}, "bad domain group name");
      if (arrow != "->") fail(col, {"'->'"}, "malformed header");
      if (!is_identifier(cod)) fail(col, {"identifier"}, "bad codomain group name");
      if (ws >> extra) fail(col, {"end of line"}, "trailing text");
      name = ident;
      domain = resolve(dom);
      codomain = graph_product_spec(resolve(cod));
      continue;
    }
    if (kw != "map") fail(col, {"'map'"}, "unexpected '" + kw + "'");
    std::string g, arrow;
    ws >> g >> arrow;
    if (!is_identifier(g)) fail(col, {"identifier"}, "bad generator name");
    if (arrow != "->") fail(col, {"'->'"}, "expected arrow");
    Generator gg(g);
    if (!domain.has_generator(gg)) throw UnknownGenerator(g);
    if (images.count(gg)) fail(col, {"generator"}, "generator '" + g + "' mapped twice");
    std::string rest;
    std::getline(ws, rest);
    std::size_t rest_col = line.find("->") + 3;
    try {
      images[gg] = Word::parse(rest);
    } catch (const ParseError& e) {
      throw ParseError(lineno, rest_col + e.column() - 1, e.expected(), "malformed image word");
    }
  }
  if (!name) throw ParseError(lineno + 1, 1, {"'hom'"}, "empty homomorphism file");
  for (auto g : domain.generators())
    if (!images.count(g) && !codomain.index_of(g))
      throw ParseError(lineno + 1, 1, {"map " + g.name()},
                       "generator '" + g.name() + "' is unmapped and absent from the codomain");
  return GenMap::from_assignments(*name, domain, codomain, images);
}

GenMap load_hom(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  auto dir = std::filesystem::path(path).parent_path();
  return parse_hom(ss.str(), [&](const std::string& group) {
    return load_presentation((dir / (group + ".grp")).string());
  });
}

std::string serialize_hom(const GenMap& m, const std::string& domain_name, const std::string& codomain_name) {
  std::ostringstream os;
  os << "hom " << m.name() << " : " << domain_name << " -> " << codomain_name << '\n';
  for (std::size_t i = 0; i < m.images().size(); ++i)
    os << "map " << m.domain().generators()[i].name() << " -> " << m.images()[i].to_string() << '\n';
  return os.str();
}

}  // namespace ringgrp
