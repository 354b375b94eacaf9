#pragma once

#include <cstddef>
#include <vector>

#include "ringgrp/presentation.hpp"

namespace ringgrp {

inline constexpr std::size_t kDefaultMaxCosets = 10000;

/// Right action of the generators on the cosets of a subgroup. Coset 0 is the
/// subgroup itself; the remaining cosets are numbered in breadth-first order.
struct CosetTable {
  std::vector<Generator> generators;
  std::size_t num_cosets = 0;
  bool complete = false;
  /// forward[g][c] is c·g, backward[g][c] is c·g^-1.
  std::vector<std::vector<std::size_t>> forward;
  std::vector<std::vector<std::size_t>> backward;

  std::size_t act(std::size_t coset, const Word& w) const;
  /// Image of every coset under w.
  std::vector<std::size_t> permutation(const Word& w) const;
};

/// HLT enumeration with lookahead. Throws OutOfSpace when more than
/// `max_cosets` rows would be live at once.
CosetTable enumerate(const Presentation& p, const std::vector<Word>& subgroup = {},
                     std::size_t max_cosets = kDefaultMaxCosets);
/// Enumerates the graph product on `spec` (its commutator relators).
CosetTable enumerate(const GroupSpec& spec, const std::vector<Word>& subgroup = {},
                     std::size_t max_cosets = kDefaultMaxCosets);

/// Order of the permutation induced by w. With the trivial subgroup this is
/// the order of w in the group. Throws IncompleteTable.
std::size_t element_order(const CosetTable& t, const Word& w);

/// True when every relator traced from every coset returns to its start.
bool relators_close(const CosetTable& t, const Presentation& p);

/// `p` with each killed generator added as a relator, then simplified.
Presentation quotient_by(const Presentation& p, const std::vector<Generator>& killed);

}  // namespace ringgrp
