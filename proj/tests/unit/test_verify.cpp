#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "ringgrp/verify.hpp"

using namespace ringgrp;
namespace fs = std::filesystem;

namespace {

SuiteOptions options(std::vector<std::string> only = {}) {
  SuiteOptions o;
  o.corpus_dir = RINGGRP_CORPUS_DIR;
  o.only = std::move(only);
  return o;
}

std::string group_of(const CheckReport& r) { return r.id.substr(0, r.id.find('.')); }

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("check groups") {
    CHECK(check_groups() == std::vector<std::string>{"loop-braid", "recognizer", "orders", "extension", "lifts", "dahm",
                                                     "hopf-circle", "rotation-number", "motions"});
  }

  TEST_CASE("pinned convention") {
    CHECK(pin_loop_braid_convention() == Composition::right_first);
    CHECK(to_string(Composition::right_first) == "right-first");
  }

  TEST_CASE("full run passes with unique ids and anchors") {
    auto reports = verify_paper(options());
    REQUIRE_FALSE(reports.empty());
    CHECK(all_passed(reports));
    std::set<std::string> ids, groups;
    for (const auto& r : reports) {
      CHECK(ids.insert(r.id).second);
      CHECK_FALSE(r.anchor.empty());
      INFO(r.id, ": ", r.details);
      CHECK(r.status == CheckStatus::pass);
      groups.insert(group_of(r));
    }
    CHECK(groups.size() == check_groups().size());
    CHECK(std::is_sorted(reports.begin(), reports.end(),
                         [](const CheckReport& a, const CheckReport& b) { return a.id < b.id; }));
  }

  TEST_CASE("filtering by group") {
    auto reports = verify_paper(options({"orders", "motions"}));
    REQUIRE_FALSE(reports.empty());
    for (const auto& r : reports) CHECK((group_of(r) == "orders" || group_of(r) == "motions"));
    CHECK_THROWS_AS(verify_paper(options({"prop34"})), Error);
  }

  TEST_CASE("formatting") {
    std::vector<CheckReport> reports{{"orders.hopf", CheckStatus::pass, "8", "orders"},
                                     {"lifts.ell", CheckStatus::fail, "+1", "lifts"}};
    CHECK(format_check_lines(reports) == "CHECK orders.hopf PASS orders\nCHECK lifts.ell FAIL lifts\n");
    CHECK(format_table(reports).find("lifts.ell") != std::string::npos);
    CHECK_FALSE(all_passed(reports));
  }

  TEST_CASE("a corrupted corpus fails the order check") {
    fs::path dir = fs::temp_directory_path() / "ringgrp-corrupt-corpus";
    fs::remove_all(dir);
    fs::copy(RINGGRP_CORPUS_DIR, dir, fs::copy_options::recursive);
    {
      std::ofstream out(dir / "HopfB.grp", std::ios::trunc);
      out << "group HopfB\ngens tau_H s\nrel tau_H^4\nrel s^2 = tau_H\nrel s tau_H s^-1 = tau_H^-1\n";
    }
    SuiteOptions o = options({"orders"});
    o.corpus_dir = dir.string();
    auto reports = verify_paper(o);
    bool hopf_failed = false;
    for (const auto& r : reports)
      if (r.id == "orders.hopf") hopf_failed = r.status == CheckStatus::fail;
    CHECK(hopf_failed);
    CHECK_FALSE(all_passed(reports));
    fs::remove_all(dir);
  }
}
