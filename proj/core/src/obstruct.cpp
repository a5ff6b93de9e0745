#include "cartan/obstruct.hpp"

#include <algorithm>

namespace cartan {

DimensionResult check_dimension(const CaseSpec& c) {
  if (c.g.d_value < c.h.d_value) {
    throw InvalidCase(c.name + ": d(G) = " + std::to_string(c.g.d_value) + " is smaller than d(H) = " +
                      std::to_string(c.h.d_value) + ", so no proper cocompact action exists");
  }
  DimensionResult r;
  r.d_b = c.g.d_value - c.h.d_value;
  r.n = c.g.dimension - r.d_b;
  r.degenerate = r.d_b == 0;
  return r;
}

bool check_equal_rank(const CaseSpec& c) { return c.g_u.rank == c.h_u.rank; }

PrimitiveResult check_primitive_degree(const GroupDatum& g_u, unsigned n) {
  PrimitiveResult r;
  r.series = PoincareSeries::exterior(g_u.primitive_degrees);
  r.coefficient = r.series.coefficient(n);
  r.fired = r.coefficient == 0;
  return r;
}

namespace {

std::vector<std::string> join_lines(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(to_string(p));
  return out;
}

}  // namespace

TnczResult check_tncz_degree(const CaseSpec& c, std::optional<unsigned> cutoff) {
  if (!c.embedding) throw InvalidCase(c.name + ": the TNCZ check needs embedding data for K_H in G_u");
  if (c.k_h.dimension > c.h_u.dimension) throw InvalidCase(c.name + ": K_H is larger than H_u");
  TnczResult r;
  r.d = c.h_u.dimension - c.k_h.dimension;
  r.cutoff = std::max(cutoff.value_or(c.g_u.dimension - c.k_h.dimension), r.d);

  const auto model = build_cartan_model(c.g_u, *c.embedding);
  r.literal_presentation_used = model.literal;
  for (const auto& g : model.presentation) r.presentation.push_back(g.spec.name + " = " + to_string(g.image));
  r.restricted = join_lines(model.invariants.restricted);
  for (std::size_t i = 0; i < model.odd_generators.size(); ++i) {
    r.differential.push_back("d(" + model.odd_generators[i].name + ") = " + to_string(model.transgressions[i]));
  }

  r.authoritative = poincare_polynomial(model.algebra, r.cutoff);
  r.coefficient = r.authoritative.coefficient(r.d);
  r.fired = r.coefficient == 0;
  r.literal = literal_reading(*c.embedding, model.invariants, model.odd_generators, r.cutoff);
  r.condition = cartan_condition(model, r.cutoff);
  r.closed_form_agrees = r.condition.closed_form && r.condition.closed_form->truncated(r.cutoff) == r.authoritative.truncated(r.cutoff);
  return r;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::no_amenable_form: return "no-amenable-form";
    case Verdict::no_solvable_form: return "no-solvable-form";
    case Verdict::vacuous_h_compact: return "vacuous-h-compact";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Verdict parse_verdict(std::string_view text) {
  for (auto v : {Verdict::no_amenable_form, Verdict::no_solvable_form, Verdict::vacuous_h_compact, Verdict::inconclusive}) {
    if (to_string(v) == text) return v;
  }
  throw std::invalid_argument("unknown verdict '" + std::string(text) + "'");
}

std::string to_string(CheckKind k) {
  switch (k) {
    case CheckKind::rank: return "rank";
    case CheckKind::dimension: return "dimension";
    case CheckKind::primitive: return "primitive";
    case CheckKind::tncz: return "tncz";
  }
  return "?";
}

CheckKind parse_check_kind(std::string_view text) {
  for (auto k : {CheckKind::rank, CheckKind::dimension, CheckKind::primitive, CheckKind::tncz}) {
    if (to_string(k) == text) return k;
  }
  throw std::invalid_argument("unknown check '" + std::string(text) + "'");
}

const std::string* CheckResult::value(std::string_view key) const {
  for (const auto& [k, v] : values) {
    if (k == key) return &v;
  }
  return nullptr;
}

const CheckResult* ObstructionReport::check(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

std::string flag(bool b) { return b ? "true" : "false"; }

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

}  // namespace

ObstructionReport run_case(const CaseSpec& c, const RunOptions& options) {
  ObstructionReport rep;
  rep.case_name = c.name;
  auto selected = [&](CheckKind k) { return options.checks.count(k) != 0; };

  CheckResult rank_check{"rank", false, false, {}};
  CheckResult dim_check{"dimension", false, false, {}};
  CheckResult prim_check{"primitive", false, false, {}};
  CheckResult tncz_check{"tncz", false, false, {}};

  if (c.h_compact) {
    rep.verdict = Verdict::vacuous_h_compact;
    rep.narrative.push_back(c.h.name + " is compact (d(H) = 0), so G/H is not a non-compact space of the kind considered; "
                            "no obstruction is needed.");
    rep.checks = {rank_check, dim_check, prim_check, tncz_check};
    return rep;
  }

  bool solvable_fired = false;
  bool tncz_fired = false;

  if (selected(CheckKind::rank)) {
    rank_check.ran = true;
    rank_check.fired = check_equal_rank(c);
    rank_check.values = {{"rank_g", std::to_string(c.g_u.rank)}, {"rank_h", std::to_string(c.h_u.rank)}};
    if (rank_check.fired) {
      solvable_fired = true;
      rep.narrative.push_back("rank G = rank H = " + std::to_string(c.g_u.rank) +
                              ": then chi(G_u/H_u) != 0, this Euler characteristic would pass to a compact form "
                              "G/H quotient, but a compact solvmanifold has Euler characteristic 0.");
    } else {
      rep.narrative.push_back("rank G = " + std::to_string(c.g_u.rank) + " > rank H = " + std::to_string(c.h_u.rank) +
                              ": the Euler characteristic argument does not apply.");
    }
  }

  if (selected(CheckKind::dimension) || selected(CheckKind::primitive)) {
    const auto dim = check_dimension(c);
    if (selected(CheckKind::dimension)) {
      dim_check.ran = true;
      dim_check.values = {{"d_g", std::to_string(c.g.d_value)},
                          {"d_h", std::to_string(c.h.d_value)},
                          {"d_b", std::to_string(dim.d_b)},
                          {"n", std::to_string(dim.n)},
                          {"degenerate", flag(dim.degenerate)}};
      if (dim.degenerate) {
        rep.narrative.push_back("d(G) = d(H): H is cocompact in G, the case is of no reductive interest; n = dim G = " +
                                std::to_string(dim.n) + ".");
      } else {
        rep.narrative.push_back("A solvable syndetic hull B would need d(B) = d(G) - d(H) = " + std::to_string(dim.d_b) +
                                ", so G/B is a compact manifold of dimension n = " + std::to_string(dim.n) + ".");
      }
    }
    if (selected(CheckKind::primitive)) {
      const auto prim = check_primitive_degree(c.g_u, dim.n);
      prim_check.ran = true;
      prim_check.fired = prim.fired;
      prim_check.values = {{"n", std::to_string(dim.n)},
                           {"primitive_degrees", join([&] {
                              std::vector<std::string> v;
                              for (unsigned p : c.g_u.primitive_degrees) v.push_back(std::to_string(p));
                              return v;
                            }(), ", ")},
                           {"lie_algebra_poincare", prim.series.to_string()},
                           {"coefficient", std::to_string(prim.coefficient)}};
      if (prim.fired) {
        solvable_fired = true;
        rep.narrative.push_back("H^" + std::to_string(dim.n) + "(" + c.g_u.name +
                                ") = 0, but the top class of the compact orientable G/B would map to a nonzero class "
                                "there; no solvable compact form exists.");
      } else {
        rep.narrative.push_back("dim H^" + std::to_string(dim.n) + "(" + c.g_u.name + ") = " +
                                std::to_string(prim.coefficient) + ": the primitive-degree argument does not apply.");
      }
    }
  }

  if (selected(CheckKind::tncz) && c.embedding) {
    const auto t = check_tncz_degree(c, options.cutoff);
    tncz_check.ran = true;
    tncz_check.fired = t.fired;
    tncz_check.values = {
        {"d", std::to_string(t.d)},
        {"cutoff", std::to_string(t.cutoff)},
        {"coefficient", std::to_string(t.coefficient)},
        {"presentation", t.literal_presentation_used ? "literal" : "embedding"},
        {"generators", join(t.presentation, "; ")},
        {"restricted_invariants", join(t.restricted, "; ")},
        {"differential", join(t.differential, "; ")},
        {"poincare", t.authoritative.to_string()},
        {"poincare_at_minus_one", t.authoritative.evaluate(-1).get_str()},
        {"literal_reading", t.literal.to_string()},
        {"literal_coefficient", std::to_string(t.literal.coefficient(t.d))},
        {"cartan_condition", flag(t.condition.holds)},
        {"closed_form", t.condition.closed_form ? t.condition.closed_form->to_string() : "n/a"},
        {"closed_form_agrees", t.condition.closed_form ? flag(t.closed_form_agrees) : "n/a"},
    };
    if (t.fired) {
      tncz_fired = true;
      rep.narrative.push_back("H^" + std::to_string(t.d) + "(" + c.g_u.name + "/" + c.k_h.name +
                              ") = 0 with d = dim H_u/K_H = " + std::to_string(t.d) +
                              ": the fibre class H_u/K_H cannot survive, which rules out every compact form "
                              "(homology and cohomology dimensions agree over Q).");
    } else {
      rep.narrative.push_back("dim H^" + std::to_string(t.d) + "(" + c.g_u.name + "/" + c.k_h.name +
                              ") = " + std::to_string(t.coefficient) + ": the fibre-class argument does not apply.");
    }
    if (t.literal.coefficient(t.d) != t.coefficient) {
      rep.narrative.push_back("The literal presentation reading gives " + std::to_string(t.literal.coefficient(t.d)) +
                              " in degree " + std::to_string(t.d) + "; the computed Cartan algebra gives " +
                              std::to_string(t.coefficient) + ".");
    }
  }

  if (tncz_fired) {
    rep.verdict = Verdict::no_amenable_form;
    rep.narrative.push_back("This excludes compact forms of every kind, amenable ones in particular.");
  } else if (solvable_fired) {
    if (c.g.linear) {
      rep.verdict = Verdict::no_amenable_form;
      rep.narrative.push_back("G is linear, so by the Tits alternative an amenable discrete subgroup is virtually "
                              "solvable: amenable reduces to solvable.");
    } else {
      rep.verdict = Verdict::no_solvable_form;
    }
  } else {
    rep.verdict = Verdict::inconclusive;
    rep.narrative.push_back("No selected check applies.");
  }
  rep.checks = {rank_check, dim_check, prim_check, tncz_check};
  return rep;
}

}  // namespace cartan
