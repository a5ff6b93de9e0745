#pragma once

#include "cartan/cdga.hpp"
#include "cartan/liedata.hpp"
#include "cartan/series.hpp"

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cartan {

// ---------------------------------------------------------------------------
// Cartan model of G_u/K_H built from an embedding

/// Weyl invariants of the ambient group and their images on the subgroup's
/// Cartan coordinates.
struct RestrictedInvariants {
  InvariantGenerators ambient;
  std::vector<Polynomial> restricted;
};

RestrictedInvariants restrict_invariants(const GroupDatum& ambient, const EmbeddingDatum& embedding);

/// Ring whose variables are the presentation generators, with their degrees.
ContextPtr presentation_context(const std::vector<PresentationGenerator>& gens);

/// Writes p (a polynomial on the target coordinates) as a polynomial in the
/// presentation generators by solving the linear system in degree deg p.
/// nullopt when p is not in the subring they generate. Assumes the
/// generators are algebraically independent, so the answer is unique.
std::optional<Polynomial> express_in_generators(const Polynomial& p, const std::vector<PresentationGenerator>& gens,
                                                const ContextPtr& gen_ctx);

/// Odd generator names y<deg>, with primes on repeated degrees: y3, y7, y11, y7'.
std::vector<GeneratorSpec> odd_generator_specs(const std::vector<unsigned>& invariant_degrees);

struct CartanModel {
  std::vector<PresentationGenerator> presentation;
  bool literal = false;  // true when the literal presentation was usable
  std::vector<std::string> rejected;  // why the literal presentation was skipped
  ContextPtr generator_context;
  RestrictedInvariants invariants;
  std::vector<GeneratorSpec> odd_generators;
  std::vector<Polynomial> transgressions;  // in generator_context
  FreeCDGA algebra;
};

/// Builds H*(BK_H) (x) Lambda(y_1..y_r) with d(y_j) = restricted invariant j.
/// The literal presentation is tried first; if some restricted invariant is
/// not a polynomial in it, the embedding's main presentation is used.
/// Throws std::invalid_argument if neither contains the restricted invariants.
CartanModel build_cartan_model(const GroupDatum& ambient, const EmbeddingDatum& embedding);

/// Cartan condition: some rank(K_H) of the restricted invariants form a
/// regular sequence in H*(BK_H) and generate the others. When it holds,
/// H*(G_u/K_H) = H*(BK_H)/(relations) (x) Lambda(remaining odd generators).
struct CartanCondition {
  bool holds = false;
  std::vector<std::size_t> relations;  // indices into the restricted invariants
  std::optional<PoincareSeries> closed_form;
};

CartanCondition cartan_condition(const CartanModel& model, unsigned cutoff);

/// Literal reading with the literal presentation: the Hilbert function
/// of the image of Q[literal generators] in Q[t_H]/(first rank(K_H) nonzero
/// restricted invariants), times the exterior algebra on the remaining odd
/// generators.
PoincareSeries literal_reading(const EmbeddingDatum& embedding, const RestrictedInvariants& invariants,
                               const std::vector<GeneratorSpec>& odd_generators, unsigned cutoff);

// ---------------------------------------------------------------------------
// Checks

class InvalidCase : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct DimensionResult {
  unsigned d_b = 0;  // d(G) - d(H)
  unsigned n = 0;    // dim G - d_b
  bool degenerate = false;  // d(G) = d(H)
};

/// Throws InvalidCase when d(G) < d(H).
DimensionResult check_dimension(const CaseSpec& c);

/// rank G = rank H.
bool check_equal_rank(const CaseSpec& c);

struct PrimitiveResult {
  PoincareSeries series;  // prod (1 + t^p)
  long long coefficient = 0;
  bool fired = false;
};

PrimitiveResult check_primitive_degree(const GroupDatum& g_u, unsigned n);

struct TnczResult {
  unsigned d = 0;  // dim H_u - dim K_H
  unsigned cutoff = 0;
  long long coefficient = 0;
  bool fired = false;
  PoincareSeries authoritative;
  PoincareSeries literal;
  bool literal_presentation_used = false;
  std::vector<std::string> presentation;  // "u1 = (x2 + x3)^2", ...
  std::vector<std::string> restricted;    // images of the ambient invariants
  std::vector<std::string> differential;  // "d(y3) = ..."
  CartanCondition condition;
  bool closed_form_agrees = false;
};

/// Throws InvalidCase without embedding data. The cutoff defaults to
/// dim G_u - dim K_H and is raised to d when smaller.
TnczResult check_tncz_degree(const CaseSpec& c, std::optional<unsigned> cutoff = std::nullopt);

// ---------------------------------------------------------------------------
// Reports

enum class Verdict { no_amenable_form, no_solvable_form, vacuous_h_compact, inconclusive };

std::string to_string(Verdict v);
Verdict parse_verdict(std::string_view text);

enum class CheckKind { rank, dimension, primitive, tncz };

std::string to_string(CheckKind k);
CheckKind parse_check_kind(std::string_view text);

struct CheckResult {
  std::string name;
  bool ran = false;
  bool fired = false;
  std::vector<std::pair<std::string, std::string>> values;

  const std::string* value(std::string_view key) const;
  bool operator==(const CheckResult&) const = default;
};

struct ObstructionReport {
  std::string case_name;
  Verdict verdict = Verdict::inconclusive;
  std::vector<CheckResult> checks;
  std::vector<std::string> narrative;

  const CheckResult* check(std::string_view name) const;
  bool operator==(const ObstructionReport&) const = default;
};

struct RunOptions {
  std::set<CheckKind> checks{CheckKind::rank, CheckKind::dimension, CheckKind::primitive, CheckKind::tncz};
  std::optional<unsigned> cutoff;
};

/// Runs every selected check (cheapest first, all of them even after one
/// fires) and aggregates the verdict.
ObstructionReport run_case(const CaseSpec& c, const RunOptions& options = {});

}  // namespace cartan
