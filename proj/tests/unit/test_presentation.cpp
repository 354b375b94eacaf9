#include <doctest.h>

#include <filesystem>
#include <random>

#include "ringgrp/abelianization.hpp"
#include "ringgrp/presentation.hpp"
#include "ringgrp/todd_coxeter.hpp"

using namespace ringgrp;

namespace {

Presentation corpus(const std::string& file) {
  return load_presentation((std::filesystem::path(RINGGRP_CORPUS_DIR) / file).string());
}

std::vector<std::string> rels(const Presentation& p) {
  std::vector<std::string> out;
  for (const auto& r : p.relators()) out.push_back(r.to_string());
  return out;
}

}  // namespace

TEST_SUITE("presentation") {
  TEST_CASE("parse the quaternion presentation") {
    Presentation p = parse_presentation("group Q8\ngens t s\nrel t^2 = s^2\nrel t s t s = t^2\n");
    CHECK(p.name() == "Q8");
    CHECK(p.generators().size() == 2);
    CHECK(rels(p) == std::vector<std::string>{"t^2 s^-2", "t s t s t^-2"});
  }

  TEST_CASE("parse a cyclic group with comments and blank lines") {
    Presentation p = parse_presentation("# order two\n\ngroup Z2   # name\ngens t\n\nrel t^2\n");
    CHECK(p.name() == "Z2");
    CHECK(rels(p) == std::vector<std::string>{"t^2"});
  }

  TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_presentation("group bad\ngens a\nrel b^2\n"), UnknownGenerator);
    CHECK_THROWS_AS(parse_presentation(""), ParseError);
    CHECK_THROWS_AS(parse_presentation("gens a\n"), ParseError);
    CHECK_THROWS_AS(parse_presentation("group g\nrel a\n"), ParseError);
    CHECK_THROWS_AS(parse_presentation("group g\ngens a\nrel a = a = a\n"), ParseError);
    try {
      parse_presentation("group g\ngens a b\nrel a b^\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
      CHECK(e.column() == 9);
      CHECK(!e.expected().empty());
    }
  }

  TEST_CASE("relators are stored freely reduced") {
    Presentation p = parse_presentation("group g\ngens a b\nrel a b b^-1 a\n");
    CHECK(rels(p) == std::vector<std::string>{"a^2"});
  }

  TEST_CASE("serialize round trip") {
    for (const char* file : {"A.grp", "HopfB.grp", "HopfBQuat.grp", "OrderHopfE.grp", "R11.grp",
                             "R11_theorem_literal.grp", "PresentationH.grp"}) {
      Presentation p = corpus(file);
      CHECK(parse_presentation(serialize(p)) == p);
    }
  }

  TEST_CASE("tietze elimination") {
    Presentation e = corpus("OrderHopfE.grp");
    Presentation out = tietze_eliminate(e, Generator("ell"));
    CHECK(out.generators() == std::vector<Generator>{Generator("tau_H")});
    for (const auto& r : out.relators()) CHECK_FALSE(r.contains(Generator("ell")));
    CHECK(rels(simplify(out)) == std::vector<std::string>{"tau_H^4"});

    Presentation free1 = tietze_eliminate(parse_presentation("group g\ngens a b\nrel b a^-2\n"), Generator("b"));
    CHECK(free1.generators() == std::vector<Generator>{Generator("a")});
    CHECK(free1.relators().empty());

    CHECK_THROWS_AS(tietze_eliminate(parse_presentation("group g\ngens a\nrel a^2\n"), Generator("a")),
                    NotEliminable);
    CHECK_THROWS_AS(tietze_eliminate(corpus("A.grp"), Generator("z")), UnknownGenerator);
  }

  TEST_CASE("simplify") {
    CHECK(rels(simplify(corpus("OrderHopfE.grp"))) == std::vector<std::string>{"tau_H^4"});
    Presentation dup = parse_presentation("group g\ngens t\nrel t^2\nrel t^2\nrel 1\n");
    CHECK(rels(simplify(dup)) == std::vector<std::string>{"t^2"});
    CHECK(simplify(corpus("R11.grp")).generators().size() == 6);
    // deterministic
    CHECK(simplify(corpus("R11.grp")) == simplify(corpus("R11.grp")));
  }

  TEST_CASE("simplify preserves abelianization and order") {
    for (const char* file : {"OrderHopfE.grp", "HopfB.grp", "HopfBQuat.grp", "R11.grp", "R11_theorem_literal.grp",
                             "PresentationH.grp"}) {
      Presentation p = corpus(file);
      Presentation s = simplify(p);
      CHECK(abelianization(p) == abelianization(s));
      try {
        std::size_t order = enumerate(p, {}, 2000).num_cosets;
        CHECK(enumerate(s, {}, 2000).num_cosets == order);
      } catch (const OutOfSpace&) {
      }
    }
    Presentation chain =
        parse_presentation("group g\ngens a b c d\nrel b = a^2\nrel c = b a\nrel d = c b^-1\nrel d^5\n");
    Presentation s = simplify(chain);
    CHECK(s.generators().size() == 1);
    CHECK(abelianization(s) == abelianization(chain));
    CHECK(enumerate(s).num_cosets == enumerate(chain).num_cosets);
  }

  TEST_CASE("graph product recognition") {
    GroupSpec a = graph_product_spec(corpus("A.grp"));
    CHECK(a.rank() == 3);
    CHECK(a.commute(0, 1));
    CHECK_FALSE(a.commute(0, 2));
    CHECK(graph_product_spec(corpus("F2.grp")).is_free());
    CHECK_THROWS_AS(graph_product_spec(corpus("HopfB.grp")), NotAGraphProduct);
    CHECK(graph_product_spec(as_presentation(a)) == a);
  }
}
