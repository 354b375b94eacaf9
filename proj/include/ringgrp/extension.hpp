#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringgrp/abelianization.hpp"
#include "ringgrp/todd_coxeter.hpp"

namespace ringgrp {

/// Data for presenting an extension 1 -> N -> E -> Q -> 1 from presentations
/// of N (the kernel) and Q (the quotient).
struct ExtensionData {
  Presentation kernel;
  Presentation quotient;
  /// (y, x) -> word over the kernel generators equal to ỹ x ỹ^-1.
  std::map<std::pair<Generator, Generator>, Word> action;
  /// Quotient relator index (0-based) -> kernel word equal to its lift.
  /// Missing entries are the identity.
  std::map<std::size_t, Word> factors;
  bool split = false;
  /// Name of the lift ỹ. Defaults to the quotient generator's own name.
  std::map<Generator, Generator> lift_names;

  Generator lift(Generator y) const;
};

/// Generators: kernel generators, then lifts. Relators: kernel relators, then
/// s̃ · factor(s)^-1 for each quotient relator s, then ỹ x ỹ^-1 · action(y, x)^-1
/// for each y in quotient order and x in kernel order.
/// Throws NameClash or MalformedAction.
Presentation assemble(const ExtensionData& d, std::string name = "E");

struct ExtensionReport {
  AbelianInvariants abelianization;
  std::optional<std::size_t> kernel_order;    ///< absent when enumeration ran out of space
  std::optional<std::size_t> quotient_order;
  std::optional<std::size_t> result_order;
  std::optional<std::size_t> killed_order;    ///< order after killing the kernel generators
  std::optional<bool> retraction;             ///< split data only
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Necessary-condition checks on an assembled presentation: order
/// multiplicativity when kernel and quotient are finite, recovery of the
/// quotient by killing the kernel generators, and the retraction x -> 1,
/// ỹ -> y for split data.
ExtensionReport validate(const ExtensionData& d, const Presentation& result,
                         std::size_t max_cosets = kDefaultMaxCosets);

// ---------------------------------------------------------------------------
// `.ext` files:
//
//     kernel <file.grp>
//     quotient <file.grp>
//     split true|false
//     lift <y> -> <name>              # optional
//     action <y> <x> -> <word>
//     factor <relator-index> -> <word>  # 1-based
//
// Relative paths are resolved against the directory of the `.ext` file.

ExtensionData parse_extension(std::string_view text, const std::string& base_dir = ".");
ExtensionData load_extension(const std::string& path);

}  // namespace ringgrp
