#include <doctest.h>

#include <filesystem>
#include <random>

#include "oracles.hpp"
#include "ringgrp/homomorphism.hpp"

using namespace ringgrp;

namespace {

Word W(const char* s) { return Word::parse(s); }

std::string corpus(const std::string& file) {
  return (std::filesystem::path(RINGGRP_CORPUS_DIR) / file).string();
}

const GroupSpec& A() {
  static const GroupSpec spec = hopf_circle_spec();
  return spec;
}

Word random_word(std::mt19937_64& rng, const std::vector<Generator>& gens, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::bernoulli_distribution neg(0.5);
  std::vector<Letter> ls;
  for (int k = len(rng); k > 0; --k) ls.push_back({gens[pick(rng)], neg(rng) ? -1 : 1});
  return Word(std::move(ls));
}

std::vector<std::string> images(const GenMap& m) {
  std::vector<std::string> out;
  for (const auto& w : m.images()) out.push_back(w.to_string());
  return out;
}

}  // namespace

TEST_SUITE("homomorphism") {
  TEST_CASE("apply") {
    CHECK(apply(builtin_dahm_HC(DahmHC::tau_C), W("c")) == W("c^-1"));
    CHECK(apply(builtin_dahm_HC(DahmHC::g_a), W("c")) == W("a c a^-1"));
    CHECK(apply(builtin_dahm_HC(DahmHC::eps_C), Word()).empty());
    CHECK(apply(builtin_dahm_HC(DahmHC::eps_C), W("a b")) == W("c a b c^-1"));
    CHECK(apply(builtin_dahm_HC(DahmHC::tau_C), W("a")) == W("a"));
    CHECK_THROWS_AS(apply(builtin_dahm_HC(DahmHC::tau_C), W("z")), UnknownGenerator);
  }

  TEST_CASE("homomorphism law") {
    std::mt19937_64 rng(21);
    const GenMap d = compose(builtin_dahm_HC(DahmHC::eps_C), builtin_dahm_HC(DahmHC::g_b));
    for (int trial = 0; trial < 200; ++trial) {
      Word u = random_word(rng, A().generators(), 12);
      Word v = random_word(rng, A().generators(), 12);
      CHECK(apply(d, multiply(A(), u, v)) == multiply(A(), apply(d, u), apply(d, v)));
    }
  }

  TEST_CASE("respects_relations") {
    CHECK(respects_relations(kernel_to_complement_map()).ok);
    GroupSpec c({Generator("c")});
    GenMap inv("inv", parse_presentation("group C\ngens c\n"), c, {W("c^-1")});
    CHECK(respects_relations(compose(inv, inv)).ok);
    CHECK(compose(inv, inv).same_images(GenMap::identity(c)));

    // Corrupt W: g_a -> b c b^-1 breaks [g_a, g_b].
    GenMap bad = GenMap::from_assignments("bad", oriented_kernel_presentation(), A(),
                                          {{Generator("g_a"), W("b c b^-1")},
                                           {Generator("g_b"), W("b")},
                                           {Generator("eps_C"), W("c")}});
    RelationCheck r = respects_relations(bad);
    CHECK_FALSE(r.ok);
    REQUIRE(r.counterexample);
    CHECK(*r.counterexample == W("[g_a,g_b]"));
    CHECK_FALSE(r.image->empty());
  }

  TEST_CASE("compose") {
    for (std::size_t n = 2; n <= 4; ++n)
      for (std::size_t i = 1; i <= n; ++i) {
        GenMap t = builtin_family(Family::tau, i, n);
        CHECK(compose(t, t).same_images(GenMap::identity(GroupSpec::free_group(n))));
      }
    GenMap s1 = builtin_family(Family::sigma, 1, 3), s2 = builtin_family(Family::sigma, 2, 3);
    CHECK(compose(s1, compose(s2, s1)).same_images(compose(s2, compose(s1, s2))));
    CHECK(compose(GenMap::identity(A()), builtin_dahm_HC(DahmHC::g_a)).same_images(builtin_dahm_HC(DahmHC::g_a)));
    CHECK_THROWS_AS(compose(s1, builtin_family(Family::sigma, 1, 2)), AlphabetMismatch);
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 50; ++trial) {
      Word w = random_word(rng, GroupSpec::free_group(3).generators(), 10);
      CHECK(apply(compose(s1, s2), w) == apply(s1, apply(s2, w)));
    }
  }

  TEST_CASE("builtin families match their formulas") {
    CHECK(images(builtin_family(Family::sigma, 1, 2)) == std::vector<std::string>{"x2", "x2^-1 x1 x2"});
    CHECK(images(builtin_family(Family::rho, 1, 2)) == std::vector<std::string>{"x2", "x1"});
    CHECK(images(builtin_family(Family::tau, 2, 3)) == std::vector<std::string>{"x1", "x2^-1", "x3"});
    CHECK_THROWS_AS(builtin_family(Family::sigma, 3, 3), IndexOutOfRange);
    CHECK_THROWS_AS(builtin_family(Family::tau, 0, 3), IndexOutOfRange);
    for (auto fam : {Family::sigma, Family::rho, Family::tau})
      for (std::size_t i = 1; i < 4; ++i) {
        GenMap f = builtin_family(fam, i, 4);
        CHECK(compose(f, builtin_family_inverse(fam, i, 4)).same_images(GenMap::identity(GroupSpec::free_group(4))));
      }
  }

  TEST_CASE("builtin families agree with hand-written images") {
    for (int n = 2; n <= 5; ++n) {
      const GroupSpec f = GroupSpec::free_group(static_cast<std::size_t>(n));
      auto as_oracle = [&](const GenMap& m) {
        oracle::FreeEndo e;
        for (const auto& w : m.images()) e.images.push_back(oracle::to_symbols(w, f.generators()));
        return e;
      };
      for (int i = 1; i < n; ++i) {
        auto idx = static_cast<std::size_t>(i), rank = static_cast<std::size_t>(n);
        CHECK(as_oracle(builtin_family(Family::sigma, idx, rank)) == oracle::sigma(i, n));
        CHECK(as_oracle(builtin_family_inverse(Family::sigma, idx, rank)) == oracle::sigma(i, n, true));
        CHECK(as_oracle(builtin_family(Family::rho, idx, rank)) == oracle::rho(i, n));
      }
      for (int i = 1; i <= n; ++i)
        CHECK(as_oracle(builtin_family(Family::tau, static_cast<std::size_t>(i), static_cast<std::size_t>(n))) ==
              oracle::tau(i, n));
    }
  }

  TEST_CASE("Dahm images on A") {
    CHECK(images(builtin_dahm_HC(DahmHC::g_a)) == std::vector<std::string>{"a", "b", "a c a^-1"});
    CHECK(images(builtin_dahm_HC(DahmHC::g_b)) == std::vector<std::string>{"a", "b", "b c b^-1"});
    CHECK(images(builtin_dahm_HC(DahmHC::eps_C)) == std::vector<std::string>{"c a c^-1", "c b c^-1", "c"});
    CHECK(images(builtin_dahm_HC(DahmHC::tau_C)) == std::vector<std::string>{"a", "b", "c^-1"});
    GenMap ab = compose(builtin_dahm_HC(DahmHC::g_a), builtin_dahm_HC(DahmHC::g_b));
    CHECK(words_equal(A(), ab.image(Generator("c")), W("b a c a^-1 b^-1")));
    for (auto d : {DahmHC::g_a, DahmHC::g_b, DahmHC::eps_C, DahmHC::tau_C}) {
      CHECK(respects_relations(builtin_dahm_HC(d)).ok);
      CHECK(compose(builtin_dahm_HC(d), builtin_dahm_HC_inverse(d)).same_images(GenMap::identity(A())));
    }
  }

  TEST_CASE("permutation-conjugacy recognizer") {
    PermConjForm s = recognize_perm_conj(builtin_family(Family::sigma, 1, 2));
    CHECK(s.pi == std::vector<std::size_t>{1, 0});
    CHECK(s.signs == std::vector<int>{1, 1});
    CHECK(s.conjugators[0].empty());
    CHECK(s.conjugators[1] == W("x2"));

    PermConjForm t = recognize_perm_conj(builtin_family(Family::tau, 1, 1));
    CHECK(t.pi == std::vector<std::size_t>{0});
    CHECK(t.signs == std::vector<int>{-1});

    const GroupSpec f2 = GroupSpec::free_group(2);
    CHECK_THROWS_AS(recognize_perm_conj(GenMap::endomorphism("sq", f2, {{Generator("x1"), W("x1^2")}})),
                    NotPermConj);
    CHECK_THROWS_AS(recognize_perm_conj(GenMap::endomorphism("dup", f2, {{Generator("x2"), W("x1")}})), NotPermConj);
    try {
      recognize_perm_conj(GenMap::endomorphism("prod", f2, {{Generator("x2"), W("x1 x2")}}));
      FAIL("expected NotPermConj");
    } catch (const NotPermConj& e) {
      CHECK(e.index() == 1);
    }
  }

  TEST_CASE("random products of 20 builtins are permutation-conjugacy maps") {
    constexpr std::size_t n = 4;
    std::mt19937_64 rng(8);
    std::vector<GenMap> pool;
    for (std::size_t i = 1; i < n; ++i) {
      pool.push_back(builtin_family(Family::sigma, i, n));
      pool.push_back(builtin_family(Family::rho, i, n));
    }
    for (std::size_t i = 1; i <= n; ++i) pool.push_back(builtin_family(Family::tau, i, n));
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    const GroupSpec f = GroupSpec::free_group(n);
    for (int trial = 0; trial < 100; ++trial) {
      GenMap m = GenMap::identity(f);
      for (int k = 0; k < 20; ++k) m = compose(m, pool[pick(rng)]);
      PermConjForm form = recognize_perm_conj(m);
      CHECK(reassemble(form, f).same_images(m));
      CHECK(recognize_perm_conj(reassemble(form, f)).pi == form.pi);
    }
  }

  TEST_CASE("inner automorphisms") {
    CHECK(is_inner_by(builtin_dahm_HC(DahmHC::g_a), W("a")));
    CHECK(is_inner_by(GenMap::identity(A()), Word()));
    CHECK_FALSE(is_inner_by(builtin_dahm_HC(DahmHC::tau_C), W("a")));
    CHECK(abelianized_action(builtin_dahm_HC(DahmHC::tau_C)) == IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, -1}});
    CHECK(abelianized_action(builtin_dahm_HC(DahmHC::g_a)).is_identity());
    CHECK(abelianized_action(builtin_family(Family::tau, 1, 2)) == IntMatrix{{-1, 0}, {0, 1}});
  }

  TEST_CASE("bounded witness search") {
    CHECK(search_inner_witness(builtin_dahm_HC(DahmHC::g_b), 1) == W("b"));
    CHECK(search_inner_witness(GenMap::identity(A()), 0) == Word());
    CHECK_FALSE(search_inner_witness(builtin_dahm_HC(DahmHC::tau_C), 4).has_value());
    auto len2 = normal_words_of_length(A(), 2);
    // 30 reduced words, minus the 4 duplicates a^±1 b^±1 = b^±1 a^±1
    CHECK(len2.size() == 26);
    for (const auto& w : len2) CHECK(normal_form(A(), w) == w);
  }

  TEST_CASE("loop-braid relators") {
    for (std::size_t n = 2; n <= 6; ++n) {
      auto fams = loop_braid_relators(n);
      CHECK(fams.size() == 15);
      bool ok = true;
      for (const auto& o : check_relators(loop_braid_realization(n), Composition::right_first)) ok = ok && o.holds;
      CHECK(ok);
    }
    bool left_ok = true;
    for (const auto& o : check_relators(loop_braid_realization(3), Composition::left_first)) left_ok = left_ok && o.holds;
    CHECK_FALSE(left_ok);
  }

  TEST_CASE("kernel automorphisms are inner by their W image") {
    const Realization r = hopf_circle_realization(false);
    const GenMap W_ = kernel_to_complement_map();
    const std::vector<Generator> gens{Generator("g_a"), Generator("g_b"), Generator("eps_C")};
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
      Word g = random_word(rng, gens, 10);
      GenMap d = evaluate(r, g, Composition::right_first);
      Word w = apply(W_, g);
      CHECK(is_inner_by(d, w));
      CHECK(d.same_images(GenMap::identity(A())) == w.empty());
    }
  }

  TEST_CASE("eps_C relation holds only in the inverse form") {
    auto primary = check_relators(hopf_circle_realization(false), Composition::right_first);
    auto literal = check_relators(hopf_circle_realization(true), Composition::right_first);
    REQUIRE(primary.size() == 5);
    for (std::size_t k = 0; k < 4; ++k) CHECK(primary[k].holds);
    CHECK(primary[4].holds);
    CHECK_FALSE(literal[4].holds);
  }

  TEST_CASE(".hom files") {
    GenMap w = load_hom(corpus("W.hom"));
    CHECK(w.name() == "W");
    CHECK(respects_relations(w).ok);
    CHECK(w.same_images(kernel_to_complement_map()));
    for (auto [file, which] : {std::pair{"D_g_a.hom", DahmHC::g_a}, std::pair{"D_g_b.hom", DahmHC::g_b},
                               std::pair{"D_eps_C.hom", DahmHC::eps_C}, std::pair{"D_tau_C.hom", DahmHC::tau_C}})
      CHECK(load_hom(corpus(file)).same_images(builtin_dahm_HC(which)));

    auto resolve = [](const std::string& name) {
      return load_presentation(corpus(name + ".grp"));
    };
    CHECK_THROWS_AS(parse_hom("hom bad : PresentationHplus -> A\nmap g_a -> a\n", resolve), ParseError);
    CHECK_THROWS_AS(parse_hom("hom bad A -> A\n", resolve), ParseError);
    CHECK_THROWS_AS(parse_hom("hom bad : A -> A\nmap a -> z\n", resolve), UnknownGenerator);
    GenMap round = parse_hom(serialize_hom(w, "PresentationHplus", "A"), resolve);
    CHECK(round.same_images(w));
  }
}
