#include "ringgrp/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include "ringgrp/abelianization.hpp"
#include "ringgrp/extension.hpp"
#include "ringgrp/rotations.hpp"

namespace ringgrp {

namespace {

struct Outcome {
  bool ok;
  std::string details;
};

class Suite {
 public:
  explicit Suite(const SuiteOptions& opts) : opts_(opts) {}

  bool wants(const std::string& group) const {
    return opts_.only.empty() || std::find(opts_.only.begin(), opts_.only.end(), group) != opts_.only.end();
  }

  void run(const std::string& id, const std::string& anchor, const std::function<Outcome()>& check) {
    CheckReport r{id, CheckStatus::fail, "", anchor};
    try {
      Outcome o = check();
      r.status = o.ok ? CheckStatus::pass : CheckStatus::fail;
      r.details = o.details;
    } catch (const std::exception& e) {
      r.details = e.what();
    }
    reports_.push_back(std::move(r));
  }

  std::string path(const std::string& file) const {
    return (std::filesystem::path(opts_.corpus_dir) / file).string();
  }
  Presentation grp(const std::string& file) const { return load_presentation(path(file)); }
  std::string fixture(const std::string& file) const {
    std::ifstream in(path(file));
    if (!in) throw Error("missing fixture '" + path(file) + "'");
    std::string line;
    std::getline(in, line);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
    return line;
  }
  std::size_t max_cosets() const { return opts_.max_cosets; }

  std::vector<CheckReport> take() {
    std::sort(reports_.begin(), reports_.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    return std::move(reports_);
  }

 private:
  const SuiteOptions& opts_;
  std::vector<CheckReport> reports_;
};

Outcome expect_eq(std::size_t got, std::size_t want, const std::string& what) {
  return {got == want, what + " = " + std::to_string(got) + " (expected " + std::to_string(want) + ")"};
}

std::vector<std::string> canonical_relators(const Presentation& p) {
  std::vector<std::string> out;
  for (const auto& r : p.relators()) {
    Word c = cyclic_canonical(r);
    if (!c.empty()) out.push_back(c.to_string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string one_line(const Presentation& p) {
  std::string out = "<";
  for (std::size_t i = 0; i < p.generators().size(); ++i) out += (i ? ", " : "") + p.generators()[i].name();
  out += " |";
  for (std::size_t i = 0; i < p.relators().size(); ++i) out += (i ? ", " : " ") + p.relators()[i].to_string();
  return out + ">";
}

Word random_word(std::mt19937_64& rng, const std::vector<Generator>& gens, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::bernoulli_distribution sign(0.5);
  std::vector<Letter> ls;
  for (std::size_t k = len(rng); k > 0; --k) ls.push_back({gens[pick(rng)], sign(rng) ? 1 : -1});
  return Word(std::move(ls));
}

// ---------------------------------------------------------------------------

void loop_braid_checks(Suite& s) {
  const std::string anchor = "loop braid relations hold in Aut(F_n)";
  std::optional<Composition> pinned = pin_loop_braid_convention(2, 6);
  s.run("loop-braid.convention", anchor, [&]() -> Outcome {
    if (!pinned) return {false, "no composition convention satisfies every relator"};
    std::string recorded = s.fixture("fixtures/loop_braid_convention.txt");
    return {recorded == to_string(*pinned),
            "found " + std::string(to_string(*pinned)) + ", fixture records " + recorded};
  });
  for (std::size_t n = 2; n <= 6; ++n) {
    s.run("loop-braid.n" + std::to_string(n), anchor, [&, n]() -> Outcome {
      Composition order = pinned.value_or(Composition::left_first);
      auto outcomes = check_relators(loop_braid_realization(n), order);
      std::size_t held = std::count_if(outcomes.begin(), outcomes.end(), [](const auto& o) { return o.holds; });
      std::string details = std::to_string(held) + "/" + std::to_string(outcomes.size()) + " relators hold (" +
                            std::string(to_string(order)) + ")";
      for (const auto& o : outcomes)
        if (!o.holds) return {false, details + "; first failure " + o.relator.to_string()};
      return {true, details};
    });
  }
}

void recognizer_checks(Suite& s) {
  s.run("recognizer.random", "loop braid automorphisms are permutation-conjugacy maps", []() -> Outcome {
    constexpr std::size_t n = 4;
    std::mt19937_64 rng(31);
    std::vector<GenMap> pool;
    for (std::size_t i = 1; i < n; ++i) {
      pool.push_back(builtin_family(Family::sigma, i, n));
      pool.push_back(builtin_family_inverse(Family::sigma, i, n));
      pool.push_back(builtin_family(Family::rho, i, n));
    }
    for (std::size_t i = 1; i <= n; ++i) pool.push_back(builtin_family(Family::tau, i, n));
    std::uniform_int_distribution<std::size_t> len(1, 30);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    const GroupSpec f = GroupSpec::free_group(n);
    for (int trial = 0; trial < 500; ++trial) {
      GenMap m = GenMap::identity(f);
      for (std::size_t k = len(rng); k > 0; --k) m = compose(m, pool[pick(rng)]);
      PermConjForm form = recognize_perm_conj(m);
      if (!reassemble(form, f).same_images(m))
        return {false, "reassembly differs at trial " + std::to_string(trial)};
    }
    return {true, "500 random products of length <= 30 on F_4 decomposed and reassembled"};
  });
}

void order_checks(Suite& s) {
  const std::string anchor = "orders of ring groups of a circle and of the Hopf link";
  auto order_of = [&](const std::string& file) { return enumerate(s.grp(file), {}, s.max_cosets()).num_cosets; };
  s.run("orders.circle", anchor, [&] { return expect_eq(order_of("Z2_tauC.grp"), 2, "|<tau_C | tau_C^2>|"); });
  s.run("orders.ordered-hopf", anchor, [&] { return expect_eq(order_of("Z4_tauH.grp"), 4, "|<tau_H | tau_H^4>|"); });
  s.run("orders.hopf", anchor, [&] { return expect_eq(order_of("HopfB.grp"), 8, "|HopfB|"); });
  s.run("orders.hopf-quaternion", anchor, [&] { return expect_eq(order_of("HopfBQuat.grp"), 8, "|HopfBQuat|"); });
  s.run("orders.element-tau_H", anchor, [&] {
    auto t = enumerate(s.grp("HopfB.grp"), {}, s.max_cosets());
    return expect_eq(element_order(t, Word::parse("tau_H")), 4, "order of tau_H");
  });
  s.run("orders.element-ell", anchor, [&] {
    auto t = enumerate(s.grp("HopfB.grp"), {}, s.max_cosets());
    return expect_eq(element_order(t, Word::parse("tau_H^2")), 2, "order of tau_H^2");
  });
  s.run("orders.quaternion-model", anchor, [&]() -> Outcome {
    const Presentation p = s.grp("HopfBQuat.grp");
    const UnitQuaternion i(0, 1, 0, 0);
    const UnitQuaternion j(0, 0, 1, 0);
    auto value = [&](const Word& w) {
      UnitQuaternion q;
      for (const auto& l : w.letters()) {
        UnitQuaternion g = l.gen.name() == "tau_H" ? i : j;
        if (l.exp < 0) g = g.inverse();
        for (Integer k = abs(l.exp); k > 0; --k) q = q * g;
      }
      return q;
    };
    for (const auto& r : p.relators())
      if (value(r).distance(UnitQuaternion()) > 1e-12) return {false, "relator " + r.to_string() + " fails"};
    std::vector<UnitQuaternion> group{UnitQuaternion()};
    for (std::size_t k = 0; k < group.size(); ++k)
      for (const auto& g : {i, j}) {
        UnitQuaternion h = group[k] * g;
        if (std::none_of(group.begin(), group.end(), [&](const auto& e) { return e.distance(h) < 1e-9; }))
          group.push_back(h);
      }
    return expect_eq(group.size(), 8, "elements generated by i and j");
  });
}

void extension_checks(Suite& s) {
  const std::string anchor = "extension presentations of ring groups";
  s.run("extension.ordered-hopf", anchor, [&]() -> Outcome {
    Presentation got = assemble(load_extension(s.path("OrderHopf.ext")), "OrderHopfE");
    Presentation want = s.grp("OrderHopfE.grp");
    bool same = got.generators() == want.generators() && got.relators() == want.relators();
    return {same, one_line(got)};
  });
  s.run("extension.ordered-hopf-simplified", anchor, [&]() -> Outcome {
    Presentation got = simplify(s.grp("OrderHopfE.grp"));
    Presentation want = s.grp("Z4_tauH.grp");
    bool same = got.generators() == want.generators() && canonical_relators(got) == canonical_relators(want);
    return {same, one_line(got)};
  });
  s.run("extension.hopf", anchor, [&]() -> Outcome {
    Presentation got = assemble(load_extension(s.path("HopfB.ext")), "HopfB");
    Presentation want = s.grp("HopfB.grp");
    bool same = got.generators() == want.generators() && got.relators() == want.relators();
    return {same, one_line(got)};
  });
  s.run("extension.hopf-circle", anchor, [&]() -> Outcome {
    ExtensionData d = load_extension(s.path("R11.ext"));
    Presentation got = assemble(d, "R11");
    Presentation want = s.grp("R11.grp");
    bool same = got.generators() == want.generators() && canonical_relators(got) == canonical_relators(want);
    auto rep = validate(d, got, 2000);
    if (!rep.ok()) return {false, rep.failures.front()};
    return {same, std::to_string(got.generators().size()) + " generators, " +
                      std::to_string(got.relators().size()) + " relators, quotient order " +
                      std::to_string(rep.killed_order.value_or(0))};
  });
}

void lift_checks(Suite& s) {
  const std::string anchor = "classes in the fundamental group of SO(3)";
  auto minus_one = [](const UnitQuaternion& q) { return q.distance(-UnitQuaternion()) <= 1e-6; };
  s.run("lifts.ell", anchor, [&]() -> Outcome {
    auto q = lift_endpoint(path_ell());
    return {minus_one(q) && pi1_class(path_ell()) == -1, "lift endpoint " + q.to_string()};
  });
  s.run("lifts.tau_H-squared", anchor, [&]() -> Outcome {
    auto p = path_tau_H().then_space(Vec3::UnitY(), std::numbers::pi);
    auto q = lift_endpoint(p);
    return {minus_one(q) && pi1_class(p) == -1, "lift endpoint " + q.to_string()};
  });
  s.run("lifts.conjugate", anchor, [&]() -> Outcome {
    auto g = lift_endpoint(path_tau_H());
    int pointwise = pi1_class(conjugate_path(path_ell(), g));
    int inverse = pi1_class(reverse(path_ell()));
    int concatenated = pi1_class(concat(concat(reverse(path_tau_H()), path_ell()), path_tau_H()));
    bool ok = pointwise == inverse && pointwise == -1 && concatenated == -1;
    return {ok, "conjugate " + std::to_string(pointwise) + ", inverse " + std::to_string(inverse) +
                    ", concatenated conjugate " + std::to_string(concatenated)};
  });
  s.run("lifts.s-squared", anchor, [&]() -> Outcome {
    auto single = lift_endpoint(path_s());
    RotationPath squared = path_s()
                               .then_space(Vec3::UnitY(), std::numbers::pi / 4)
                               .then_space(Vec3::UnitX(), std::numbers::pi)
                               .then_space(Vec3::UnitY(), -std::numbers::pi / 4);
    int cls = pi1_class(squared);
    return {cls == -1 && minus_one(lift_endpoint(squared)),
            "single endpoint " + single.to_string() + ", class of square " + std::to_string(cls)};
  });
}

void dahm_checks(Suite& s) {
  const std::string anchor = "Dahm images for the Hopf link and a circle";
  s.run("dahm.W", anchor, [&]() -> Outcome {
    auto r = respects_relations(kernel_to_complement_map());
    return {r.ok, r.ok ? "W respects [g_a,g_b]" : "fails on " + r.counterexample->to_string()};
  });
  s.run("dahm.relations", anchor, [&]() -> Outcome {
    auto conv = pin_loop_braid_convention(2, 3).value_or(Composition::right_first);
    auto primary = check_relators(hopf_circle_realization(false), conv);
    auto literal = check_relators(hopf_circle_realization(true), conv);
    bool common = true;
    for (std::size_t k = 0; k + 1 < primary.size(); ++k) common = common && primary[k].holds;
    bool inverse_form = primary.back().holds;
    bool literal_form = literal.back().holds;
    std::string details = std::string("common relators ") + (common ? "hold" : "fail") +
                          "; tau_C eps_C tau_C = eps_C^-1 " + (inverse_form ? "holds" : "fails") +
                          "; tau_C eps_C tau_C = eps_C " + (literal_form ? "holds" : "fails");
    return {common && (inverse_form != literal_form), details};
  });
  s.run("dahm.tau_C-not-inner", anchor, [&]() -> Outcome {
    IntMatrix m = abelianized_action(builtin_dahm_HC(DahmHC::tau_C));
    bool ok = m == IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, -1}} && !m.is_identity();
    return {ok, "abelianized action " + m.to_string()};
  });
  s.run("dahm.inner", anchor, [&]() -> Outcome {
    const auto conv = pin_loop_braid_convention(2, 3).value_or(Composition::right_first);
    const Realization r = hopf_circle_realization(false);
    const GenMap W = kernel_to_complement_map();
    const GroupSpec A = hopf_circle_spec();
    const std::vector<Generator> gens{Generator("g_a"), Generator("g_b"), Generator("eps_C")};
    const GenMap id = GenMap::identity(A);
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 1000; ++trial) {
      Word g = random_word(rng, gens, 12);
      GenMap d = evaluate(r, g, conv);
      Word w = apply(W, g);
      if (!is_inner_by(d, w)) return {false, "D'(" + g.to_string() + ") is not inner by " + w.to_string()};
      if (d.same_images(id) != w.empty()) return {false, "identity test disagrees for " + g.to_string()};
    }
    return {true, "1000 random kernel words are inner by their W-image"};
  });
}

void hopf_circle_checks(Suite& s) {
  const std::string anchor = "ring group of the Hopf link and a circle";
  const std::vector<Generator> kernel{Generator("g_a"), Generator("g_b"), Generator("eps_C")};
  s.run("hopf-circle.kill-kernel", anchor, [&] {
    auto killed = kernel;
    killed.emplace_back("tau_C");
    auto t = enumerate(quotient_by(s.grp("R11.grp"), killed), {}, s.max_cosets());
    return expect_eq(t.num_cosets, 8, "order after killing g_a, g_b, eps_C, tau_C");
  });
  s.run("hopf-circle.kill-oriented-kernel", anchor, [&] {
    auto t = enumerate(quotient_by(s.grp("R11.grp"), kernel), {}, s.max_cosets());
    return expect_eq(t.num_cosets, 16, "order after killing g_a, g_b, eps_C");
  });
  s.run("hopf-circle.abelianization", anchor, [&]() -> Outcome {
    std::string got = abelianization(s.grp("R11.grp")).to_string();
    std::string want = s.fixture("fixtures/hopf_circle_abelianization.txt");
    return {got == want, got};
  });
  s.run("hopf-circle.literal-variant", anchor, [&]() -> Outcome {
    std::string primary = abelianization(s.grp("R11.grp")).to_string();
    std::string literal = abelianization(s.grp("R11_theorem_literal.grp")).to_string();
    return {primary != literal, "inverse form " + primary + ", literal form " + literal};
  });
  s.run("hopf-circle.nothing-eliminable", anchor, [&] {
    return expect_eq(simplify(s.grp("R11.grp")).generators().size(), 6, "generators after simplification");
  });
}

void rotation_number_checks(Suite& s) {
  const std::string anchor = "rotation number of normal motions";
  auto linear = [](double k, std::size_t n) {
    NormalRingMotion m;
    for (std::size_t i = 0; i <= n; ++i) m.phi.push_back(k * static_cast<double>(i) / static_cast<double>(n));
    return m;
  };
  s.run("rotation-number.linear", anchor, [&]() -> Outcome {
    for (int k = -3; k <= 3; ++k)
      if (rotation_number(linear(k, 64)) != k) return {false, "phi(t) = " + std::to_string(k) + "t"};
    return {true, "rot(kt) = k for k in -3..3"};
  });
  s.run("rotation-number.additivity", anchor, [&]() -> Outcome {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> k(-5, 5);
    std::normal_distribution<double> wiggle(0, 0.3);
    for (int trial = 0; trial < 100; ++trial) {
      auto make = [&](int w) {
        NormalRingMotion m = linear(w, 32);
        for (std::size_t i = 1; i + 1 < m.phi.size(); ++i) m.phi[i] += wiggle(rng);
        return m;
      };
      int a = k(rng), b = k(rng);
      if (rotation_number(concat(make(a), make(b))) != a + b) return {false, "trial " + std::to_string(trial)};
    }
    return {true, "rot(m1 * m2) = rot(m1) + rot(m2) on 100 random pairs"};
  });
}

void motion_checks(Suite& s) {
  const std::string anchor = "ring motions of the Hopf link and a circle";
  for (const auto& name : builtin_motion_names()) {
    s.run("motions." + name, anchor, [&, name]() -> Outcome {
      RingMotion m = builtin_motion(name);
      MotionReport rep = validate_motion(m);
      std::ostringstream os;
      os.precision(4);
      os << m.samples.size() << " samples, min distance " << rep.min_distance;
      if (!rep.ok()) return {false, os.str() + "; " + rep.failures.front()};
      RingMotion shipped = load_motion(s.path(name + ".mot"));
      if (shipped.samples.size() != m.samples.size() || !validate_motion(shipped).ok())
        return {false, "shipped motion file disagrees"};
      return {rep.min_distance >= 0.05, os.str()};
    });
  }
  s.run("motions.s-swaps", anchor, [&]() -> Outcome {
    auto c = builtin_motion("s").closure;
    return {c == std::vector<std::size_t>{1, 0, 2}, "closure permutation of s"};
  });
  s.run("motions.tau_H-fixes", anchor, [&]() -> Outcome {
    auto c = builtin_motion("tau_H").closure;
    return {c == std::vector<std::size_t>{0, 1, 2}, "closure permutation of tau_H"};
  });
}

}  // namespace

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "PASS";
    case CheckStatus::fail:
      return "FAIL";
    case CheckStatus::skip:
      return "SKIP";
  }
  return "?";
}

const std::vector<std::string>& check_groups() {
  static const std::vector<std::string> groups{"loop-braid", "recognizer",      "orders",          "extension",
                                               "lifts",      "dahm",            "hopf-circle",     "rotation-number",
                                               "motions"};
  return groups;
}

std::optional<Composition> pin_loop_braid_convention(std::size_t n_min, std::size_t n_max) {
  for (Composition c : {Composition::left_first, Composition::right_first}) {
    bool ok = true;
    for (std::size_t n = n_min; ok && n <= n_max; ++n)
      for (const auto& o : check_relators(loop_braid_realization(n), c)) ok = ok && o.holds;
    if (ok) return c;
  }
  return std::nullopt;
}

std::vector<CheckReport> verify_paper(const SuiteOptions& options) {
  for (const auto& g : options.only)
    if (std::find(check_groups().begin(), check_groups().end(), g) == check_groups().end())
      throw Error("unknown check group '" + g + "'");
  Suite s(options);
  const std::array<std::pair<const char*, void (*)(Suite&)>, 9> groups{{
      {"loop-braid", loop_braid_checks},
      {"recognizer", recognizer_checks},
      {"orders", order_checks},
      {"extension", extension_checks},
      {"lifts", lift_checks},
      {"dahm", dahm_checks},
      {"hopf-circle", hopf_circle_checks},
      {"rotation-number", rotation_number_checks},
      {"motions", motion_checks},
  }};
  for (const auto& [name, run] : groups)
    if (s.wants(name)) run(s);
  return s.take();
}

bool all_passed(const std::vector<CheckReport>& reports) {
  return std::none_of(reports.begin(), reports.end(), [](const auto& r) { return r.status == CheckStatus::fail; });
}

std::string format_check_lines(const std::vector<CheckReport>& reports) {
  std::ostringstream os;
  for (const auto& r : reports) os << "CHECK " << r.id << ' ' << to_string(r.status) << ' ' << r.anchor << '\n';
  return os.str();
}

std::string format_table(const std::vector<CheckReport>& reports) {
  std::size_t width = 2;
  for (const auto& r : reports) width = std::max(width, r.id.size());
  std::ostringstream os;
  os << std::string("id") << std::string(width - 2 + 2, ' ') << "status  details\n";
  for (const auto& r : reports)
    os << r.id << std::string(width - r.id.size() + 2, ' ') << to_string(r.status) << "    " << r.details << '\n';
  return os.str();
}

}  // namespace ringgrp
