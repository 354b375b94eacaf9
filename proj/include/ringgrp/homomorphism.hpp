#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ringgrp/abelianization.hpp"
#include "ringgrp/presentation.hpp"

namespace ringgrp {

/// A homomorphism candidate given by the images of the domain generators.
/// Images are kept in codomain normal form.
class GenMap {
 public:
  GenMap() = default;
  /// `images` is indexed like `domain.generators()`.
  GenMap(std::string name, Presentation domain, GroupSpec codomain, std::vector<Word> images);
  /// Every generator missing from `images` maps to itself, which requires it
  /// to exist in the codomain.
  static GenMap from_assignments(std::string name, Presentation domain, GroupSpec codomain,
                                 const std::map<Generator, Word>& images);
  /// Endomorphism of a graph product; the domain relators are the commutators.
  static GenMap endomorphism(std::string name, const GroupSpec& spec,
                             const std::map<Generator, Word>& images);
  static GenMap identity(const GroupSpec& spec);

  const std::string& name() const { return name_; }
  const Presentation& domain() const { return domain_; }
  const GroupSpec& codomain() const { return codomain_; }
  const std::vector<Word>& images() const { return images_; }
  const Word& image(Generator g) const;
  /// Domain and codomain carry the same generator list.
  bool is_endomorphism() const;

  GenMap renamed(std::string name) const;

  /// Maps are equal when their generator images coincide.
  bool same_images(const GenMap& other) const;

 private:
  std::string name_;
  Presentation domain_;
  GroupSpec codomain_;
  std::vector<Word> images_;
};

/// Image of a domain word, in codomain normal form.
Word apply(const GenMap& m, const Word& w);

struct RelationCheck {
  bool ok = true;
  std::optional<Word> counterexample;  ///< first failing relator
  std::optional<Word> image;           ///< its (nontrivial) image
};

RelationCheck respects_relations(const GenMap& m);

/// outer ∘ inner: apply(compose(f, g), w) == apply(f, apply(g, w)).
GenMap compose(const GenMap& outer, const GenMap& inner);

enum class Family { sigma, rho, tau };

/// The automorphisms of F_n (on x1..xn) attached to the loop-braid
/// generators: sigma_i pulls ring i through ring i+1, rho_i passes it
/// around, tau_i flips ring i.
GenMap builtin_family(Family family, std::size_t i, std::size_t n);
/// Inverse of the corresponding builtin_family automorphism.
GenMap builtin_family_inverse(Family family, std::size_t i, std::size_t n);

/// A = <a, b, c | [a, b]>, the fundamental group of the complement of a
/// Hopf link together with a split unknot.
GroupSpec hopf_circle_spec();

enum class DahmHC { g_a, g_b, eps_C, tau_C };

GenMap builtin_dahm_HC(DahmHC which);
GenMap builtin_dahm_HC_inverse(DahmHC which);
std::optional<DahmHC> parse_dahm_HC(std::string_view name);

struct PermConjForm {
  std::vector<std::size_t> pi;  ///< 0-based: x_i ↦ w_i^-1 x_{pi[i]}^{signs[i]} w_i
  std::vector<int> signs;
  std::vector<Word> conjugators;
};

/// Throws NotPermConj with the offending index.
PermConjForm recognize_perm_conj(const GenMap& m);
/// The endomorphism of F_n described by a permutation-conjugacy form.
GenMap reassemble(const PermConjForm& form, const GroupSpec& free_group);

bool is_inner_by(const GenMap& m, const Word& w);

/// Column j holds the exponent sums of the image of generator j.
IntMatrix abelianized_action(const GenMap& m);

/// First witness in length-then-shortlex order among normal-form words of
/// length at most `max_len`. Absence is not a proof that `m` is outer.
std::optional<Word> search_inner_witness(const GenMap& m, std::size_t max_len);

/// All normal-form words of exactly `length` letters, in shortlex order.
std::vector<Word> normal_words_of_length(const GroupSpec& spec, std::size_t length);

// ---------------------------------------------------------------------------
// Realising the generators of a presentation by automorphisms and checking its
// relators at the automorphism level.

enum class Composition {
  left_first,   ///< in g1 g2 ... gk the automorphism of g1 is applied first
  right_first,  ///< ordinary composition: the automorphism of gk is applied first
};

std::string_view to_string(Composition c);

struct Realization {
  Presentation group;                 ///< generators to realise
  std::map<Generator, GenMap> maps;   ///< endomorphisms of one spec
  std::map<Generator, GenMap> inverses;
};

/// Composite endomorphism of a word over the realised generators.
GenMap evaluate(const Realization& r, const Word& w, Composition order);

struct RelatorOutcome {
  Word relator;
  bool holds = false;
};

std::vector<RelatorOutcome> check_relators(const Realization& r, Composition order);

/// Loop-braid presentation on sigma1.., rho1.., tau1.. for n rings, grouped by
/// relation family in the order they are usually listed (15 families).
struct FamilyRelators {
  std::string family;
  std::vector<Word> relators;
};
std::vector<FamilyRelators> loop_braid_relators(std::size_t n);
Presentation loop_braid_presentation(std::size_t n);
/// Realises sigma_i, rho_i, tau_i by builtin_family.
Realization loop_braid_realization(std::size_t n);

/// <g_a, g_b, eps_C | [g_a, g_b]> and the isomorphism onto A sending
/// g_a, g_b, eps_C to a, b, c.
Presentation oriented_kernel_presentation();
GenMap kernel_to_complement_map();

/// <g_a, g_b, eps_C, tau_C | ...> realised by the builtin Dahm images on A.
/// `literal_eps_relation` selects tau_C eps_C tau_C = eps_C instead of
/// tau_C eps_C tau_C = eps_C^-1.
Presentation hopf_circle_kernel_presentation(bool literal_eps_relation = false);
Realization hopf_circle_realization(bool literal_eps_relation = false);

// ---------------------------------------------------------------------------
// `.hom` files:
//
//     hom <ident> : <domain-group> -> <codomain-group>
//     map <gen> -> <word>
//
// Group names are resolved by `resolve`, typically by loading <name>.grp.

using GroupResolver = std::function<Presentation(const std::string&)>;

GenMap parse_hom(std::string_view text, const GroupResolver& resolve);
GenMap load_hom(const std::string& path);
std::string serialize_hom(const GenMap& m, const std::string& domain_name,
                          const std::string& codomain_name);

}  // namespace ringgrp
