#pragma once

// Words over named generators and exact normal forms for graph products of
// infinite cyclic groups (free groups, free abelian groups and RAAGs).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ringgrp/error.hpp"

namespace ringgrp {

using Integer = boost::multiprecision::cpp_int;

/// A generator name. Names are interned process-wide, so copies are cheap and
/// equality is a single integer comparison. Ordering is by name.
class Generator {
 public:
  Generator() = default;
  explicit Generator(std::string_view name);

  const std::string& name() const;
  std::uint32_t id() const { return id_; }

  friend bool operator==(Generator a, Generator b) { return a.id_ == b.id_; }
  friend std::strong_ordering operator<=>(Generator a, Generator b);

 private:
  std::uint32_t id_ = 0;
};

bool is_identifier(std::string_view s);

/// One syllable gen^exp with exp != 0.
struct Letter {
  Generator gen;
  Integer exp;

  friend bool operator==(const Letter&, const Letter&) = default;
};

class Word {
 public:
  Word() = default;
  /// Adjacent letters on the same generator are merged and zero exponents
  /// dropped; no other reduction happens.
  explicit Word(std::vector<Letter> letters);

  static Word of(Generator g, Integer exp = 1);
  /// Parses the word literal syntax: `name`, `name^k`, `[u,v]`, `1`.
  static Word parse(std::string_view text);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t syllables() const { return letters_.size(); }
  /// Number of letters, counting a^k as |k| letters.
  Integer length() const;
  bool empty() const { return letters_.empty(); }
  bool contains(Generator g) const;

  /// Concatenation without reduction beyond merging the seam.
  Word operator*(const Word& rhs) const;

  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

Word invert(const Word& w);

/// Classical free reduction (no commutations).
Word free_reduce(const Word& w);

/// Shortest cyclic conjugate in the free group, canonicalised over cyclic
/// rotations and inversion. Two relators define the same normal closure
/// contribution when their canonical forms coincide.
Word cyclic_canonical(const Word& w);

/// Generators with a commutation graph: the graph product of infinite cyclic
/// groups on that graph. The declaration order fixes the shortlex order.
class GroupSpec {
 public:
  GroupSpec() = default;
  GroupSpec(std::vector<Generator> generators,
            const std::vector<std::pair<Generator, Generator>>& commuting_pairs = {});

  static GroupSpec free_group(const std::vector<std::string>& names);
  /// F_n on x1, ..., xn.
  static GroupSpec free_group(std::size_t rank);

  const std::vector<Generator>& generators() const { return generators_; }
  std::size_t rank() const { return generators_.size(); }
  std::optional<std::size_t> index_of(Generator g) const;
  /// Throws UnknownGenerator.
  std::size_t require_index(Generator g) const;
  bool commute(std::size_t i, std::size_t j) const { return adjacency_[i * rank() + j]; }
  bool is_free() const { return edges_ == 0; }
  /// Pairs (i, j) with i < j, in row-major order.
  std::vector<std::pair<std::size_t, std::size_t>> commuting_pairs() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  std::vector<Generator> generators_;
  std::vector<bool> adjacency_;
  std::size_t edges_ = 0;
};

Word normal_form(const GroupSpec& spec, const Word& w);
Word multiply(const GroupSpec& spec, const Word& u, const Word& v);
bool words_equal(const GroupSpec& spec, const Word& u, const Word& v);

struct CyclicReduction {
  Word core;
  Word conjugator;  ///< w = conjugator^-1 * core * conjugator
};

CyclicReduction cyclically_reduce(const GroupSpec& spec, const Word& w);

/// Exponent sums indexed by spec generator order.
std::vector<Integer> abelianize_word(const GroupSpec& spec, const Word& w);

}  // namespace ringgrp
