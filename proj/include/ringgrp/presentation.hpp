#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ringgrp/words.hpp"

namespace ringgrp {

/// A finitely presented group. Relators are stored freely reduced.
class Presentation {
 public:
  Presentation() = default;
  /// Throws UnknownGenerator if a relator uses an undeclared generator.
  Presentation(std::string name, std::vector<Generator> generators, std::vector<Word> relators);

  const std::string& name() const { return name_; }
  const std::vector<Generator>& generators() const { return generators_; }
  const std::vector<Word>& relators() const { return relators_; }
  bool has_generator(Generator g) const;
  std::size_t index_of(Generator g) const;

  Presentation renamed(std::string name) const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::string name_;
  std::vector<Generator> generators_;
  std::vector<Word> relators_;
};

/// Reads the `.grp` format:
///
///     group <ident>
///     gens <ident>+
///     rel <word>            # or: rel <word> = <word>
///
/// `#` starts a comment; blank lines are ignored.
Presentation parse_presentation(std::string_view text);
Presentation load_presentation(const std::string& path);
std::string serialize(const Presentation& p);

/// Removes `gen` using the shortest relator that, up to cyclic permutation and
/// inversion, reads gen^{±1} w with w free of gen. Throws NotEliminable.
Presentation tietze_eliminate(const Presentation& p, Generator gen);

/// Deterministic fixpoint of: cyclic reduction of relators, dropping trivial
/// and duplicate relators, and eliminating a generator through the shortest
/// eliminable relator (ties broken lexicographically).
Presentation simplify(const Presentation& p);

/// Relators [x, y] for every commuting pair.
Presentation as_presentation(const GroupSpec& spec, std::string name = "spec");

/// Recognises presentations whose relators are all commutators of two distinct
/// generators (up to cyclic permutation and inversion). Throws NotAGraphProduct.
GroupSpec graph_product_spec(const Presentation& p);

}  // namespace ringgrp
