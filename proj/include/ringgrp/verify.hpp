#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ringgrp/homomorphism.hpp"
#include "ringgrp/todd_coxeter.hpp"

namespace ringgrp {

enum class CheckStatus { pass, fail, skip };

std::string_view to_string(CheckStatus s);

struct CheckReport {
  std::string id;      ///< `<group>.<name>`, unique within a run
  CheckStatus status = CheckStatus::skip;
  std::string details;
  std::string anchor;  ///< the result the check reproduces
};

struct SuiteOptions {
  std::string corpus_dir;
  /// Check groups (the part of an id before the first '.') to run; empty runs all.
  std::vector<std::string> only;
  std::size_t max_cosets = kDefaultMaxCosets;
};

/// Check groups in the order they run.
const std::vector<std::string>& check_groups();

/// Runs the suite; reports are sorted by id.
std::vector<CheckReport> verify_paper(const SuiteOptions& options);

bool all_passed(const std::vector<CheckReport>& reports);

/// `CHECK <id> <PASS|FAIL|SKIP> <anchor>` per report.
std::string format_check_lines(const std::vector<CheckReport>& reports);
/// Aligned human-readable table.
std::string format_table(const std::vector<CheckReport>& reports);

/// The first convention (left-first, then right-first) under which every
/// loop-braid relator holds for all ranks in [n_min, n_max].
std::optional<Composition> pin_loop_braid_convention(std::size_t n_min = 2, std::size_t n_max = 6);

}  // namespace ringgrp
