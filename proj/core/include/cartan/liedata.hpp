#pragma once

#include "cartan/cdga.hpp"
#include "cartan/polynomial.hpp"
#include "cartan/textfmt.hpp"
#include "cartan/weyl.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cartan {

/// Simple families by Cartan type, a torus, or a product of catalog groups.
/// Spin/SO and SU/PSU distinctions are ignored: everything stored here
/// (dimension, rank, degrees, d-values) is isogeny invariant.
enum class GroupFamily { A, B, C, D, E, F, G, Torus, Product };

std::string to_string(GroupFamily f);

/// Compact connected Lie group.
struct GroupDatum {
  std::string name;
  GroupFamily family = GroupFamily::A;
  unsigned family_rank = 0;             // n in A_n, ..., or torus rank
  std::vector<std::string> factors;     // Product only
  unsigned dimension = 0;
  unsigned rank = 0;
  std::uint64_t weyl_order = 0;
  std::vector<unsigned> primitive_degrees;  // odd, H*(G) exterior generators
  std::vector<unsigned> invariant_degrees;  // even, H*(BG) polynomial generators
};

/// Non-compact real form.
struct RealFormDatum {
  std::string name;
  std::string compact_dual;
  unsigned dimension = 0;
  unsigned d_value = 0;             // dim G - dim(maximal compact) = dim p
  std::string maximal_compact;      // catalog group key
  bool linear = true;
};

/// Polynomial generator of H*(BK) written on the subgroup's Cartan coordinates.
struct PresentationGenerator {
  GeneratorSpec spec;
  Polynomial image;
};

/// Cartan subalgebra of a subgroup inside the ambient one, plus presentations
/// of the subgroup's Weyl invariants on those coordinates.
struct EmbeddingDatum {
  std::string name;
  std::string ambient;
  std::string subgroup;
  LinearSubstitution restriction;
  /// Generators used for the computation.
  std::vector<PresentationGenerator> presentation;
  /// Generators exactly as written in the source presentation, kept for the
  /// side-by-side report even when they do not contain the restricted invariants.
  std::vector<PresentationGenerator> literal_presentation;
};

struct ValidationIssue {
  std::string record;
  std::string message;
};

class Catalog {
 public:
  const GroupDatum& lookup_group(const std::string& name) const;
  const RealFormDatum& lookup_real_form(const std::string& name) const;
  const EmbeddingDatum& lookup_embedding(const std::string& name) const;

  bool has_group(const std::string& name) const { return groups_.count(name) != 0; }
  bool has_real_form(const std::string& name) const { return real_forms_.count(name) != 0; }

  /// Records in file order.
  std::vector<const GroupDatum*> groups() const;
  std::vector<const RealFormDatum*> real_forms() const;
  std::vector<const EmbeddingDatum*> embeddings() const;

  void add(GroupDatum g);
  void add(RealFormDatum r);
  void add(EmbeddingDatum e);

 private:
  std::map<std::string, GroupDatum> groups_;
  std::map<std::string, RealFormDatum> real_forms_;
  std::map<std::string, EmbeddingDatum> embeddings_;
  std::vector<std::string> group_order_;
  std::vector<std::string> real_form_order_;
  std::vector<std::string> embedding_order_;
};

/// Result of loading a catalog: the records plus every structural check that
/// failed. Malformed syntax throws InputError instead.
struct CatalogLoad {
  Catalog catalog;
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
};

CatalogLoad load_catalog(const TextDocument& doc);
CatalogLoad load_catalog_file(const std::filesystem::path& path);

/// Loads and throws InputError listing the issues when validation fails.
Catalog load_validated_catalog(const std::filesystem::path& path);

/// $CARTAN_CATALOG when set, otherwise the installed or source-tree catalog.
std::filesystem::path default_catalog_path();

/// Checks a simple group or torus against root-system formulas, a product
/// against its factors. Empty when consistent.
std::vector<std::string> validate_group(const GroupDatum& g, const Catalog& catalog);
std::vector<std::string> validate_real_form(const RealFormDatum& r, const Catalog& catalog);
std::vector<std::string> validate_embedding(const EmbeddingDatum& e, const Catalog& catalog);

/// Root family for the invariant constructors; nullopt outside A-D and G2.
std::optional<RootFamily> root_family(const GroupDatum& g);

/// A homogeneous space G/H with its compact duals G_u/H_u and K_H.
struct CaseSpec {
  std::string name;
  RealFormDatum g;
  RealFormDatum h;
  GroupDatum g_u;
  GroupDatum h_u;
  GroupDatum k_h;
  std::optional<EmbeddingDatum> embedding;
  bool h_compact = false;
};

/// Case file:
///   [case]
///   name = SO(3,5)/G2(2)
///   g = so(3,5)
///   h = g2(2)
///   k_h = so(3)xso(3)      # optional, defaults to the maximal compact of h
///   embedding = ...        # optional catalog key
///   h_compact = false      # optional, must agree with d(H) = 0
CaseSpec parse_case(const TextDocument& doc, const Catalog& catalog);
CaseSpec read_case(const std::string& path, const Catalog& catalog);

/// Builds a case from catalog keys.
CaseSpec make_case(const Catalog& catalog, std::string name, const std::string& g, const std::string& h,
                   std::optional<std::string> k_h = std::nullopt, std::optional<std::string> embedding = std::nullopt);

/// The four non-compact 3-symmetric spaces with rank G > rank H left after
/// the equal-rank reduction: SO(4,4)/SU(1,2), SO(4,4)/G2(2), SO(3,5)/G2(2),
/// Spin(1,7)/G2.
std::vector<CaseSpec> paper_case_list(const Catalog& catalog);

}  // namespace cartan
