#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "ringgrp/homomorphism.hpp"
#include "ringgrp/words.hpp"

using namespace ringgrp;

namespace {

const GroupSpec& A() {
  static const GroupSpec spec = hopf_circle_spec();
  return spec;
}

Word W(const char* s) { return Word::parse(s); }

Word random_word(std::mt19937_64& rng, const GroupSpec& spec, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, spec.rank() - 1);
  std::bernoulli_distribution neg(0.5);
  std::vector<Letter> ls;
  for (int k = len(rng); k > 0; --k) ls.push_back({spec.generators()[pick(rng)], neg(rng) ? -1 : 1});
  return Word(std::move(ls));
}

// Graph products on at most four generators, for the brute-force checks.
std::vector<GroupSpec> small_specs() {
  std::vector<Generator> g{Generator("p"), Generator("q"), Generator("r"), Generator("t")};
  return {
      GroupSpec({g[0], g[1]}),
      GroupSpec({g[0], g[1]}, {{g[0], g[1]}}),
      GroupSpec({g[0], g[1], g[2]}, {{g[0], g[1]}}),
      GroupSpec(g, {{g[0], g[1]}, {g[1], g[2]}, {g[2], g[3]}}),
      GroupSpec(g, {{g[0], g[1]}, {g[0], g[2]}, {g[0], g[3]}}),
  };
}

}  // namespace

TEST_SUITE("words") {
  TEST_CASE("parsing and printing") {
    CHECK(W("a b^2").to_string() == "a b^2");
    CHECK(W("").empty());
    CHECK(W("1").empty());
    CHECK(W("[a,b]").to_string() == "a b a^-1 b^-1");
    CHECK(W("x x^-1").empty());
    CHECK(W("[a b,c]").to_string() == "a b c b^-1 a^-1 c^-1");
    CHECK_THROWS_AS(W("a^"), ParseError);
    CHECK_THROWS_AS(W("a^0"), ParseError);
    CHECK_THROWS_AS(W("[a,b"), ParseError);
    CHECK_THROWS_AS(W("2a"), ParseError);
  }

  TEST_CASE("parse error positions") {
    try {
      W("a b^x");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 1);
      CHECK(e.column() == 5);
    }
  }

  TEST_CASE("exponents are unbounded") {
    Word big = W("a^9223372036854775807 a^9223372036854775807");
    CHECK(big.to_string() == "a^18446744073709551614");
    CHECK(normal_form(A(), big * invert(big)).empty());
  }

  TEST_CASE("multiply") {
    const GroupSpec f2 = GroupSpec::free_group(2);
    CHECK(multiply(f2, W("x1"), W("x1^-1")).empty());
    CHECK(multiply(A(), W("b"), W("a b^-1")) == W("a"));
    CHECK(multiply(A(), W("c a"), W("b c^-1")) == W("c a b c^-1"));
    CHECK_THROWS_AS(multiply(A(), W("z"), W("a")), UnknownGenerator);
  }

  TEST_CASE("normal form examples") {
    CHECK(normal_form(GroupSpec::free_group(1), W("x1^3 x1^-3")).empty());
    CHECK(normal_form(A(), W("a b a^-1 b^-1")).empty());
    CHECK(normal_form(A(), W("a b c a^-1")) == W("a b c a^-1"));
    CHECK(normal_form(A(), W("b a")) == W("a b"));
    CHECK(normal_form(A(), W("b c b^-1 a b")) == W("b c a"));
  }

  TEST_CASE("shortest representative in the shuffle class") {
    // For every word up to length 6 the normal form is reachable by shuffles and
    // cancellations, has minimal length there, and every minimal word in the class
    // has the same normal form.
    std::mt19937_64 rng(11);
    for (const GroupSpec& spec : small_specs()) {
      std::vector<std::pair<int, int>> pairs;
      for (auto [i, j] : spec.commuting_pairs()) pairs.emplace_back(int(i) + 1, int(j) + 1);
      for (int trial = 0; trial < 150; ++trial) {
        Word w = random_word(rng, spec, 6);
        auto cls = oracle::shuffle_closure(oracle::to_symbols(w, spec.generators()), pairs);
        std::size_t shortest = 1000;
        for (const auto& v : cls) shortest = std::min(shortest, v.size());
        Word nf = normal_form(spec, w);
        auto nf_sym = oracle::to_symbols(nf, spec.generators());
        CHECK(cls.count(nf_sym) == 1);
        CHECK(nf_sym.size() == shortest);
        for (const auto& v : cls)
          if (v.size() == shortest) CHECK(normal_form(spec, oracle::to_word(v, spec.generators())) == nf);
      }
    }
  }

  TEST_CASE("normal form properties") {
    std::mt19937_64 rng(3);
    std::vector<GroupSpec> specs = small_specs();
    specs.push_back(A());
    specs.push_back(GroupSpec::free_group(8));
    for (const GroupSpec& spec : specs) {
      for (int trial = 0; trial < 200; ++trial) {
        Word u = random_word(rng, spec, 64);
        Word v = random_word(rng, spec, 64);
        Word nf = normal_form(spec, u);
        CHECK(normal_form(spec, nf) == nf);
        CHECK(multiply(spec, u, invert(u)).empty());
        if (spec.is_free())
          CHECK(oracle::to_symbols(nf, spec.generators()) ==
                oracle::free_reduce(oracle::to_symbols(u, spec.generators())));
        auto sum = abelianize_word(spec, u);
        auto sv = abelianize_word(spec, v);
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += sv[i];
        CHECK(abelianize_word(spec, multiply(spec, u, v)) == sum);
      }
    }
  }

  TEST_CASE("invert") {
    CHECK(invert(W("a b^2")) == W("b^-2 a^-1"));
    CHECK(invert(Word()).empty());
    CHECK(invert(W("c^-1")) == W("c"));
  }

  TEST_CASE("cyclically_reduce") {
    const GroupSpec f2 = GroupSpec::free_group(2);
    auto r = cyclically_reduce(f2, W("x2^-1 x1 x2"));
    CHECK(r.core == W("x1"));
    CHECK(r.conjugator == W("x2"));
    r = cyclically_reduce(f2, W("x1"));
    CHECK(r.core == W("x1"));
    CHECK(r.conjugator.empty());
    // w = conj^-1 core conj, so a c a^-1 has conjugator a^-1.
    r = cyclically_reduce(A(), W("a c a^-1"));
    CHECK(r.core == W("c"));
    CHECK(r.conjugator == W("a^-1"));
    CHECK(words_equal(A(), invert(r.conjugator) * r.core * r.conjugator, W("a c a^-1")));
  }

  TEST_CASE("cyclically_reduce reassembles") {
    std::mt19937_64 rng(5);
    for (const GroupSpec& spec : {A(), GroupSpec::free_group(3)}) {
      for (int trial = 0; trial < 300; ++trial) {
        Word w = normal_form(spec, random_word(rng, spec, 20));
        auto r = cyclically_reduce(spec, w);
        CHECK(words_equal(spec, invert(r.conjugator) * r.core * r.conjugator, w));
        CHECK(r.core.syllables() <= w.syllables());
      }
    }
  }

  TEST_CASE("abelianize_word") {
    CHECK(abelianize_word(A(), W("a b a^-1 b^-1")) == std::vector<Integer>{0, 0, 0});
    CHECK(abelianize_word(A(), W("c^-1")) == std::vector<Integer>{0, 0, -1});
    GroupSpec z({Generator("tau_H")});
    CHECK(abelianize_word(z, W("tau_H^4")) == std::vector<Integer>{4});
    CHECK_THROWS_AS(abelianize_word(A(), W("z")), UnknownGenerator);
  }

  TEST_CASE("cyclic canonical form") {
    CHECK(cyclic_canonical(W("b a b^-1")) == cyclic_canonical(W("a")));
    CHECK(cyclic_canonical(W("a")) == W("a^-1"));
    CHECK(cyclic_canonical(W("a b")) == cyclic_canonical(W("b^-1 a^-1")));
    CHECK(cyclic_canonical(W("a a^-1")).empty());
  }
}
