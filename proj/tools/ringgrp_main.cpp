#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ringgrp/abelianization.hpp"
#include "ringgrp/extension.hpp"
#include "ringgrp/homomorphism.hpp"
#include "ringgrp/rotations.hpp"
#include "ringgrp/todd_coxeter.hpp"
#include "ringgrp/verify.hpp"

#ifndef RINGGRP_CORPUS_DIR
#define RINGGRP_CORPUS_DIR "corpus"
#endif

namespace {

using namespace ringgrp;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

struct Globals {
  bool json = false;
  std::size_t max_cosets = kDefaultMaxCosets;
};

std::vector<Word> parse_word_list(const std::string& text) {
  std::vector<Word> out;
  if (text.empty()) return out;
  // Commas inside commutator brackets do not separate words.
  int depth = 0;
  std::string cur;
  for (char ch : text) {
    if (ch == '[') ++depth;
    if (ch == ']') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(Word::parse(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(Word::parse(cur));
  return out;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

json report_json(const MotionReport& r) {
  json j{{"ok", r.ok()}, {"closes", r.closes}, {"min_distance", r.min_distance}, {"failures", r.failures}};
  j["first_collision"] = r.first_collision ? json(*r.first_collision) : json(nullptr);
  j["first_discontinuity"] = r.first_discontinuity ? json(*r.first_discontinuity) : json(nullptr);
  return j;
}

int cmd_normalize(const std::string& file, const std::string& word) {
  GroupSpec spec = graph_product_spec(load_presentation(file));
  std::cout << normal_form(spec, Word::parse(word)).to_string() << '\n';
  return kOk;
}

int cmd_check_hom(const Globals& g, const std::string& file) {
  GenMap m = load_hom(file);
  RelationCheck r = respects_relations(m);
  if (g.json) {
    json j{{"map", m.name()}, {"ok", r.ok}};
    if (!r.ok) j["counterexample"] = {{"relator", r.counterexample->to_string()}, {"image", r.image->to_string()}};
    std::cout << j.dump(2) << '\n';
  } else if (r.ok) {
    std::cout << m.name() << ": every relator maps to 1\n";
  } else {
    std::cout << m.name() << ": relator " << r.counterexample->to_string() << " maps to " << r.image->to_string()
              << '\n';
  }
  return r.ok ? kOk : kCheckFailed;
}

int cmd_enumerate(const Globals& g, const std::string& file, const std::string& subgroup) {
  Presentation p = load_presentation(file);
  try {
    CosetTable t = enumerate(p, parse_word_list(subgroup), g.max_cosets);
    if (g.json)
      std::cout << json{{"index", t.num_cosets}}.dump() << '\n';
    else
      std::cout << "index = " << t.num_cosets << '\n';
    return kOk;
  } catch (const OutOfSpace& e) {
    if (g.json)
      std::cout << json{{"out_of_space", e.max_cosets()}}.dump() << '\n';
    else
      std::cout << "out of space at " << e.max_cosets() << '\n';
    return kInputError;
  }
}

int cmd_abelianize(const Globals& g, const std::string& file) {
  AbelianInvariants inv = abelianization(load_presentation(file));
  if (g.json) {
    std::vector<std::string> torsion;
    for (const auto& d : inv.torsion) torsion.push_back(d.str());
    std::cout << json{{"free_rank", inv.free_rank}, {"torsion", torsion}}.dump() << '\n';
  } else {
    std::cout << inv.to_string() << '\n';
  }
  return kOk;
}

int cmd_extend(const Globals& g, const std::string& file, const std::string& out, bool check) {
  ExtensionData d = load_extension(file);
  Presentation p = assemble(d, std::filesystem::path(file).stem().string());
  if (out.empty())
    std::cout << serialize(p);
  else
    write_file(out, serialize(p));
  if (!check) return kOk;
  ExtensionReport rep = validate(d, p, g.max_cosets);
  auto order = [](const std::optional<std::size_t>& o) { return o ? std::to_string(*o) : std::string("infinite?"); };
  std::cerr << "abelianization: " << rep.abelianization.to_string() << '\n'
            << "kernel order: " << order(rep.kernel_order) << '\n'
            << "quotient order: " << order(rep.quotient_order) << '\n';
  if (rep.result_order) std::cerr << "extension order: " << *rep.result_order << '\n';
  if (rep.killed_order) std::cerr << "order with kernel killed: " << *rep.killed_order << '\n';
  for (const auto& f : rep.failures) std::cerr << "failure: " << f << '\n';
  return rep.ok() ? kOk : kCheckFailed;
}

int cmd_tietze(const std::string& file, const std::vector<std::string>& eliminate) {
  Presentation p = load_presentation(file);
  if (eliminate.empty()) {
    p = simplify(p);
  } else {
    for (const auto& name : eliminate) p = tietze_eliminate(p, Generator(name));
  }
  std::cout << serialize(p);
  return kOk;
}

int cmd_motion_check(const Globals& g, const std::string& file, bool oriented) {
  RingMotion m = load_motion(file);
  MotionLimits limits;
  limits.oriented = oriented;
  MotionReport r = validate_motion(m, limits);
  if (g.json) {
    json j = report_json(r);
    j["motion"] = m.name;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << m.name << ": " << (r.ok() ? "valid" : "invalid") << ", " << m.samples.size()
              << " samples, min distance " << r.min_distance << '\n';
    for (const auto& f : r.failures) std::cout << "  " << f << '\n';
  }
  return r.ok() ? kOk : kCheckFailed;
}

int cmd_motion_export(const std::string& name, const std::string& out) {
  std::string text = serialize_motion(builtin_motion(name));
  if (out.empty())
    std::cout << text;
  else
    write_file(out, text);
  return kOk;
}

int cmd_verify_paper(const Globals& g, const std::string& corpus, const std::string& only) {
  SuiteOptions opts;
  opts.corpus_dir = corpus;
  opts.max_cosets = g.max_cosets;
  std::stringstream ss(only);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) opts.only.push_back(item);
  auto reports = verify_paper(opts);
  if (g.json) {
    json arr = json::array();
    for (const auto& r : reports)
      arr.push_back({{"id", r.id}, {"status", to_string(r.status)}, {"details", r.details}, {"anchor", r.anchor}});
    std::cout << arr.dump(2) << '\n';
  } else {
    std::cout << format_table(reports) << '\n' << format_check_lines(reports);
  }
  return all_passed(reports) ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ring groups of H-trivial links: words, presentations, coset enumeration and ring motions"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_option("--max-cosets", g.max_cosets, "Coset enumeration bound")->check(CLI::PositiveNumber);

  std::string file, word, subgroup, out, corpus = RINGGRP_CORPUS_DIR, only, motion_name;
  std::vector<std::string> eliminate;
  bool check = false;
  bool oriented = false;
  std::function<int()> action;

  auto* normalize = app.add_subcommand("normalize", "Normal form of a word in a graph product");
  normalize->add_option("group", file, "Presentation file (.grp)")->required();
  normalize->add_option("word", word, "Word")->required();
  normalize->callback([&] { action = [&] { return cmd_normalize(file, word); }; });

  auto* check_hom = app.add_subcommand("check-hom", "Check that a generator assignment respects the relators");
  check_hom->add_option("map", file, "Homomorphism file (.hom)")->required();
  check_hom->callback([&] { action = [&] { return cmd_check_hom(g, file); }; });

  auto* enumerate_cmd = app.add_subcommand("enumerate", "Todd-Coxeter coset enumeration");
  enumerate_cmd->add_option("group", file, "Presentation file (.grp)")->required();
  enumerate_cmd->add_option("--subgroup", subgroup, "Comma-separated subgroup generators");
  enumerate_cmd->callback([&] { action = [&] { return cmd_enumerate(g, file, subgroup); }; });

  auto* abelianize = app.add_subcommand("abelianize", "Abelianization invariants");
  abelianize->add_option("group", file, "Presentation file (.grp)")->required();
  abelianize->callback([&] { action = [&] { return cmd_abelianize(g, file); }; });

  auto* extend = app.add_subcommand("extend", "Assemble an extension presentation");
  extend->add_option("data", file, "Extension file (.ext)")->required();
  extend->add_option("-o,--output", out, "Write the presentation here instead of stdout");
  extend->add_flag("--validate", check, "Run order and retraction checks");
  extend->callback([&] { action = [&] { return cmd_extend(g, file, out, check); }; });

  auto* tietze = app.add_subcommand("tietze", "Simplify a presentation or eliminate generators");
  tietze->add_option("group", file, "Presentation file (.grp)")->required();
  tietze->add_option("-e,--eliminate", eliminate, "Generators to eliminate, in order");
  tietze->callback([&] { action = [&] { return cmd_tietze(file, eliminate); }; });

  auto* motion = app.add_subcommand("motion", "Ring motions");
  motion->require_subcommand(1);
  auto* motion_check = motion->add_subcommand("check", "Validate a sampled motion");
  motion_check->add_option("motion", file, "Motion file (.mot)")->required();
  motion_check->add_flag("--oriented", oriented, "Compare ring normals with orientation");
  motion_check->callback([&] { action = [&] { return cmd_motion_check(g, file, oriented); }; });
  auto* motion_export = motion->add_subcommand("export", "Write a builtin motion");
  motion_export->add_option("name", motion_name, "Builtin motion name")
      ->required()
      ->check(CLI::IsMember(builtin_motion_names()));
  motion_export->add_option("-o,--output", out, "Output file");
  motion_export->callback([&] { action = [&] { return cmd_motion_export(motion_name, out); }; });

  auto* verify = app.add_subcommand("verify-paper", "Run the full verification suite");
  verify->add_option("--corpus", corpus, "Corpus directory")->check(CLI::ExistingDirectory);
  verify->add_option("--only", only, "Comma-separated check groups");
  verify->callback([&] { action = [&] { return cmd_verify_paper(g, corpus, only); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    return action();
  } catch (const ringgrp::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const ringgrp::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
}
