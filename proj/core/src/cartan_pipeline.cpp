#include "cartan/groebner.hpp"
#include "cartan/obstruct.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace cartan {

RestrictedInvariants restrict_invariants(const GroupDatum& ambient, const EmbeddingDatum& embedding) {
  const auto family = root_family(ambient);
  if (!family) throw std::invalid_argument("no invariant constructor for group '" + ambient.name + "'");
  RestrictedInvariants out{weyl_invariant_generators(*family, ambient.family_rank), {}};
  // Rebind the restriction to the constructor's coordinates (same order, maybe other names).
  const LinearSubstitution j(out.ambient.context, embedding.restriction.target(), embedding.restriction.images());
  for (const auto& f : out.ambient.polynomials) out.restricted.push_back(substitute_linear(f, j));
  return out;
}

ContextPtr presentation_context(const std::vector<PresentationGenerator>& gens) {
  std::vector<std::string> names;
  std::vector<unsigned> degrees;
  for (const auto& g : gens) {
    names.push_back(g.spec.name);
    degrees.push_back(g.spec.degree);
  }
  return VariableContext::make(std::move(names), std::move(degrees));
}

std::optional<Polynomial> express_in_generators(const Polynomial& p, const std::vector<PresentationGenerator>& gens,
                                                const ContextPtr& gen_ctx) {
  Polynomial result(gen_ctx);
  if (p.is_zero()) return result;
  const auto degree = p.degree();
  if (!degree) return std::nullopt;

  const auto candidates = monomials_of_degree(*gen_ctx, *degree);
  if (candidates.empty()) return std::nullopt;
  std::map<Monomial, std::size_t> row_of;
  auto row_index = [&](const Monomial& m) {
    return row_of.emplace(m, row_of.size()).first->second;
  };
  std::vector<std::vector<std::pair<std::size_t, Rational>>> columns;
  for (const auto& m : candidates) {
    Polynomial image = Polynomial::constant(p.context_ptr(), 1);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] != 0) image *= gens[i].image.pow(m[i]);
    }
    auto& col = columns.emplace_back();
    for (const auto& [mono, c] : image.terms()) col.emplace_back(row_index(mono), c);
  }
  for (const auto& [mono, c] : p.terms()) row_index(mono);

  SparseMatrix a(row_of.size(), candidates.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (const auto& [r, c] : columns[j]) a.add(r, j, c);
  }
  std::vector<Rational> rhs(row_of.size());
  for (const auto& [mono, c] : p.terms()) rhs[row_of.at(mono)] = c;
  const auto x = solve(a, rhs);
  if (!x) return std::nullopt;
  for (std::size_t j = 0; j < candidates.size(); ++j) result.add_term(candidates[j], (*x)[j]);
  return result;
}

std::vector<GeneratorSpec> odd_generator_specs(const std::vector<unsigned>& invariant_degrees) {
  std::vector<GeneratorSpec> out;
  std::map<unsigned, unsigned> seen;
  for (unsigned d : invariant_degrees) {
    const unsigned k = seen[d - 1]++;
    out.push_back({"y" + std::to_string(d - 1) + std::string(k, '\''), d - 1});
  }
  return out;
}

namespace {

std::vector<GeneratorSpec> specs_of(const std::vector<PresentationGenerator>& gens) {
  std::vector<GeneratorSpec> out;
  for (const auto& g : gens) out.push_back(g.spec);
  return out;
}

std::optional<std::vector<Polynomial>> express_all(const std::vector<Polynomial>& ps,
                                                   const std::vector<PresentationGenerator>& gens,
                                                   const ContextPtr& ctx, std::vector<std::string>* failures) {
  std::vector<Polynomial> out;
  bool ok = true;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    auto e = express_in_generators(ps[i], gens, ctx);
    if (!e) {
      ok = false;
      if (failures) failures->push_back("restricted invariant " + std::to_string(i + 1) + " (" + to_string(ps[i]) +
                                        ") is not a polynomial in the literal generators");
      continue;
    }
    out.push_back(std::move(*e));
  }
  if (!ok) return std::nullopt;
  return out;
}

}  // namespace

CartanModel build_cartan_model(const GroupDatum& ambient, const EmbeddingDatum& embedding) {
  auto invariants = restrict_invariants(ambient, embedding);
  auto odd = odd_generator_specs(invariants.ambient.degrees);

  std::vector<std::string> rejected;
  const std::vector<PresentationGenerator>* chosen = nullptr;
  std::optional<std::vector<Polynomial>> transgressions;
  ContextPtr ctx;
  bool literal = false;
  if (!embedding.literal_presentation.empty()) {
    ctx = presentation_context(embedding.literal_presentation);
    transgressions = express_all(invariants.restricted, embedding.literal_presentation, ctx, &rejected);
    if (transgressions) {
      chosen = &embedding.literal_presentation;
      literal = true;
    }
  }
  if (!chosen) {
    ctx = presentation_context(embedding.presentation);
    transgressions = express_all(invariants.restricted, embedding.presentation, ctx, nullptr);
    if (!transgressions) {
      throw std::invalid_argument("embedding '" + embedding.name +
                                  "': restricted invariants are not polynomials in its presentation");
    }
    chosen = &embedding.presentation;
  }
  auto algebra = build_cartan_algebra(specs_of(*chosen), odd, *transgressions);
  return CartanModel{*chosen,        literal,           std::move(rejected),
                     ctx,            std::move(invariants), std::move(odd),
                     std::move(*transgressions), std::move(algebra)};
}

CartanCondition cartan_condition(const CartanModel& model, unsigned cutoff) {
  CartanCondition out;
  const auto& ctx = model.generator_context;
  const std::size_t r = ctx->size();
  std::vector<std::size_t> nonzero;
  for (std::size_t i = 0; i < model.transgressions.size(); ++i) {
    if (!model.transgressions[i].is_zero()) nonzero.push_back(i);
  }
  if (nonzero.size() < r) return out;

  const unsigned generator_sum = std::accumulate(ctx->degrees().begin(), ctx->degrees().end(), 0U);
  const unsigned max_generator = *std::max_element(ctx->degrees().begin(), ctx->degrees().end());

  std::vector<bool> pick(nonzero.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(r), true);
  do {
    std::vector<std::size_t> subset;
    std::vector<Polynomial> relations;
    unsigned relation_sum = 0;
    for (std::size_t i = 0; i < nonzero.size(); ++i) {
      if (!pick[i]) continue;
      subset.push_back(nonzero[i]);
      relations.push_back(model.transgressions[nonzero[i]]);
      relation_sum += *relations.back().degree();
    }
    // r homogeneous elements in r variables are regular exactly when the
    // quotient is finite dimensional; it then vanishes past the socle degree,
    // and vanishing on a window as wide as the largest generator degree
    // forces vanishing everywhere above.
    if (relation_sum < generator_sum) continue;
    const unsigned socle = relation_sum - generator_sum;
    const auto q = quotient_poincare(relations, ctx, socle + max_generator);
    bool finite = true;
    for (unsigned k = socle + 1; k <= socle + max_generator; ++k) finite = finite && q.coefficient(k) == 0;
    if (!finite) continue;
    bool generates = true;
    for (std::size_t i = 0; i < model.transgressions.size() && generates; ++i) {
      if (std::find(subset.begin(), subset.end(), i) != subset.end()) continue;
      generates = ideal_member(model.transgressions[i], relations);
    }
    if (!generates) continue;

    out.holds = true;
    out.relations = subset;
    std::vector<unsigned> free_odd;
    for (std::size_t i = 0; i < model.odd_generators.size(); ++i) {
      if (std::find(subset.begin(), subset.end(), i) == subset.end()) free_odd.push_back(model.odd_generators[i].degree);
    }
    out.closed_form = quotient_poincare(relations, ctx, cutoff).times(PoincareSeries::exterior(free_odd), cutoff);
    return out;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

PoincareSeries literal_reading(const EmbeddingDatum& embedding, const RestrictedInvariants& invariants,
                               const std::vector<GeneratorSpec>& odd_generators, unsigned cutoff) {
  const auto& gens = embedding.literal_presentation.empty() ? embedding.presentation : embedding.literal_presentation;
  const auto& target = embedding.restriction.target();
  const auto gen_ctx = presentation_context(gens);

  std::vector<Polynomial> relations;
  std::vector<unsigned> free_odd;
  for (std::size_t i = 0; i < invariants.restricted.size(); ++i) {
    if (!invariants.restricted[i].is_zero() && relations.size() < gens.size()) {
      relations.push_back(invariants.restricted[i]);
    } else {
      free_odd.push_back(odd_generators.at(i).degree);
    }
  }
  const auto order = MonomialOrder::for_context(OrderKind::grevlex, *target);
  const auto gb = buchberger(target, relations, order, cutoff);

  std::vector<long long> dims(cutoff + 1, 0);
  for (unsigned k = 0; k <= cutoff; ++k) {
    const auto monos = monomials_of_degree(*gen_ctx, k);
    if (monos.empty()) continue;
    std::vector<Polynomial> images;
    std::map<Monomial, std::size_t> col_of;
    for (const auto& m : monos) {
      Polynomial image = Polynomial::constant(target, 1);
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] != 0) image *= gens[i].image.pow(m[i]);
      }
      images.push_back(normal_form(image, gb));
      for (const auto& [mono, c] : images.back().terms()) col_of.emplace(mono, col_of.size());
    }
    SparseMatrix a(images.size(), col_of.size());
    for (std::size_t r = 0; r < images.size(); ++r) {
      for (const auto& [mono, c] : images[r].terms()) a.add(r, col_of.at(mono), c);
    }
    dims[k] = static_cast<long long>(rank(a));
  }
  return PoincareSeries(std::move(dims)).times(PoincareSeries::exterior(free_odd), cutoff);
}

}  // namespace cartan
