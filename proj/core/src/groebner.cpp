#include "cartan/groebner.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <utility>

namespace cartan {

std::string to_string(OrderKind kind) {
  switch (kind) {
    case OrderKind::grevlex: return "grevlex";
    case OrderKind::lex: return "lex";
    case OrderKind::deglex: return "deglex";
  }
  return "?";
}

OrderKind parse_order_kind(std::string_view text) {
  if (text == "grevlex") return OrderKind::grevlex;
  if (text == "lex") return OrderKind::lex;
  if (text == "deglex" || text == "graded-lex") return OrderKind::deglex;
  throw std::invalid_argument("unknown monomial order '" + std::string(text) + "'");
}

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<unsigned> weights, std::vector<std::size_t> priority)
    : kind_(kind), weights_(std::move(weights)), priority_(std::move(priority)) {
  if (priority_.size() != weights_.size()) {
    throw std::invalid_argument("monomial order: priority must list every variable");
  }
  std::vector<std::size_t> sorted = priority_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i) throw std::invalid_argument("monomial order: priority is not a permutation");
  }
  for (unsigned w : weights_) {
    if (w == 0) throw std::invalid_argument("monomial order: weights must be positive");
  }
}

MonomialOrder MonomialOrder::for_context(OrderKind kind, const VariableContext& ctx,
                                         std::vector<std::size_t> priority) {
  if (priority.empty()) {
    priority.resize(ctx.size());
    std::iota(priority.begin(), priority.end(), 0);
  }
  return MonomialOrder(kind, ctx.degrees(), std::move(priority));
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (kind_ != OrderKind::lex) {
    unsigned da = 0;
    unsigned db = 0;
    for (std::size_t i = 0; i < weights_.size(); ++i) {
      da += a[i] * weights_[i];
      db += b[i] * weights_[i];
    }
    if (da != db) return da <=> db;
  }
  if (kind_ == OrderKind::grevlex) {
    for (std::size_t k = priority_.size(); k-- > 0;) {
      const std::size_t v = priority_[k];
      if (a[v] != b[v]) return b[v] <=> a[v];
    }
    return std::strong_ordering::equal;
  }
  for (std::size_t v : priority_) {
    if (a[v] != b[v]) return a[v] <=> b[v];
  }
  return std::strong_ordering::equal;
}

namespace {

// Descending under the order, so begin() is the leading term.
struct Descending {
  const MonomialOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order->compare(a, b) > 0; }
};

using WorkPoly = std::map<Monomial, Rational, Descending>;

WorkPoly to_work(const Polynomial& p, const MonomialOrder& order) {
  WorkPoly w(Descending{&order});
  for (const auto& [m, c] : p.terms()) w.emplace(m, c);
  return w;
}

void add_scaled_shifted(WorkPoly& target, const Polynomial& g, const Rational& scale, const Monomial& shift) {
  Monomial m(shift.size());
  for (const auto& [gm, gc] : g.terms()) {
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = gm[i] + shift[i];
    auto [it, inserted] = target.try_emplace(m, 0);
    it->second += scale * gc;
    if (it->second == 0) target.erase(it);
  }
}

struct Divisor {
  const Polynomial* poly;
  Monomial lead;
  Rational lead_coeff;
};

std::vector<Divisor> prepare(std::span<const Polynomial> divisors, const MonomialOrder& order) {
  std::vector<Divisor> out;
  for (const auto& d : divisors) {
    if (d.is_zero()) continue;
    out.push_back({&d, leading_monomial(d, order), leading_coefficient(d, order)});
  }
  return out;
}

Polynomial reduce_prepared(const Polynomial& f, const std::vector<Divisor>& divs, const MonomialOrder& order,
                           const DivisorChoice& choose) {
  WorkPoly work = to_work(f, order);
  Polynomial remainder(f.context_ptr());
  std::vector<std::size_t> candidates;
  Monomial shift(f.context().size());
  while (!work.empty()) {
    const auto lead = work.begin();
    candidates.clear();
    for (std::size_t i = 0; i < divs.size(); ++i) {
      if (divides(divs[i].lead, lead->first)) candidates.push_back(i);
    }
    if (candidates.empty()) {
      remainder.add_term(lead->first, lead->second);
      work.erase(lead);
      continue;
    }
    const std::size_t pick = choose ? candidates.at(choose(candidates)) : candidates.front();
    const Divisor& d = divs[pick];
    for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = lead->first[i] - d.lead[i];
    const Rational scale = -lead->second / d.lead_coeff;
    add_scaled_shifted(work, *d.poly, scale, shift);
  }
  return remainder;
}

Polynomial monic(const Polynomial& p, const MonomialOrder& order) {
  return p * (Rational(1) / leading_coefficient(p, order));
}

Polynomial s_polynomial(const Polynomial& a, const Polynomial& b, const MonomialOrder& order) {
  const Monomial la = leading_monomial(a, order);
  const Monomial lb = leading_monomial(b, order);
  const Monomial l = monomial_lcm(la, lb);
  Monomial sa(l.size());
  Monomial sb(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) {
    sa[i] = l[i] - la[i];
    sb[i] = l[i] - lb[i];
  }
  WorkPoly w(Descending{&order});
  add_scaled_shifted(w, a, Rational(1) / leading_coefficient(a, order), sa);
  add_scaled_shifted(w, b, Rational(-1) / leading_coefficient(b, order), sb);
  Polynomial out(a.context_ptr());
  for (const auto& [m, c] : w) out.add_term(m, c);
  return out;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) return false;
  }
  return true;
}

}  // namespace

Monomial leading_monomial(const Polynomial& p, const MonomialOrder& order) {
  if (p.is_zero()) throw std::invalid_argument("leading monomial of zero polynomial");
  const Monomial* best = nullptr;
  for (const auto& [m, c] : p.terms()) {
    if (best == nullptr || order.compare(m, *best) > 0) best = &m;
  }
  return *best;
}

Rational leading_coefficient(const Polynomial& p, const MonomialOrder& order) {
  return p.coefficient(leading_monomial(p, order));
}

GroebnerBasis::GroebnerBasis(ContextPtr ctx, MonomialOrder order, std::vector<Polynomial> generators,
                             std::optional<unsigned> truncation)
    : ctx_(std::move(ctx)), order_(std::move(order)), generators_(std::move(generators)), truncation_(truncation) {}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& g : generators_) out.push_back(leading_monomial(g, order_));
  return out;
}

GroebnerBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& order,
                         std::optional<unsigned> degree_cutoff) {
  if (gens.empty()) throw std::invalid_argument("buchberger: empty generator list has no ring; pass a context");
  return buchberger(gens.front().context_ptr(), gens, order, degree_cutoff);
}

GroebnerBasis buchberger(const ContextPtr& ctx, std::span<const Polynomial> gens, const MonomialOrder& order,
                         std::optional<unsigned> degree_cutoff) {
  const auto& vc = *ctx;

  std::vector<Polynomial> basis;
  std::vector<Monomial> leads;
  for (const auto& g : gens) {
    if (!(g.context() == vc)) throw ContextMismatch("buchberger: generators live in different rings");
    if (g.is_zero()) continue;
    basis.push_back(monic(g, order));
    leads.push_back(leading_monomial(basis.back(), order));
  }

  struct Pair {
    unsigned degree;
    std::size_t i;
    std::size_t j;
    bool operator<(const Pair& o) const { return std::tie(degree, j, i) < std::tie(o.degree, o.j, o.i); }
  };
  std::set<Pair> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto push_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      const unsigned d = cohomological_degree(monomial_lcm(leads[i], leads[j]), vc);
      queue.insert({d, i, j});
      pending.insert({i, j});
    }
  };
  for (std::size_t j = 0; j < basis.size(); ++j) push_pairs_for(j);

  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending.count({std::min(a, b), std::max(a, b)}) != 0;
  };

  while (!queue.empty()) {
    const Pair p = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({p.i, p.j});
    if (degree_cutoff && p.degree > *degree_cutoff) continue;
    if (coprime(leads[p.i], leads[p.j])) continue;

    const Monomial l = monomial_lcm(leads[p.i], leads[p.j]);
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == p.i || k == p.j) continue;
      chain = divides(leads[k], l) && !is_pending(p.i, k) && !is_pending(p.j, k);
    }
    if (chain) continue;

    const Polynomial s = s_polynomial(basis[p.i], basis[p.j], order);
    Polynomial r = reduce(s, basis, order);
    if (r.is_zero()) continue;
    basis.push_back(monic(r, order));
    leads.push_back(leading_monomial(basis.back(), order));
    push_pairs_for(basis.size() - 1);
  }

  // Minimalize: drop generators whose leading monomial is divisible by another's.
  std::vector<bool> keep(basis.size(), true);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size() && keep[i]; ++j) {
      if (i == j || !keep[j]) continue;
      if (divides(leads[j], leads[i]) && (leads[j] != leads[i] || j < i)) keep[i] = false;
    }
  }
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (keep[i]) minimal.push_back(basis[i]);
  }

  // Inter-reduce the tails.
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    const Monomial lead = leading_monomial(minimal[i], order);
    Polynomial tail = minimal[i];
    tail.add_term(lead, -tail.coefficient(lead));
    Polynomial g = reduce(tail, others, order);
    g.add_term(lead, 1);
    reduced.push_back(std::move(g));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.compare(leading_monomial(a, order), leading_monomial(b, order)) < 0;
  });
  return GroebnerBasis(ctx, order, std::move(reduced), degree_cutoff);
}

Polynomial reduce(const Polynomial& f, std::span<const Polynomial> divisors, const MonomialOrder& order,
                  const DivisorChoice& choose) {
  return reduce_prepared(f, prepare(divisors, order), order, choose);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  if (!(f.context() == *gb.context())) throw ContextMismatch("normal_form: polynomial is not in the basis ring");
  return reduce(f, gb.generators(), gb.order());
}

bool ideal_member(const Polynomial& f, std::span<const Polynomial> gens) {
  if (f.is_zero()) return true;
  std::vector<Polynomial> nonzero;
  for (const auto& g : gens) {
    if (!(g.context() == f.context())) throw ContextMismatch("ideal_member: generators live in a different ring");
    if (!g.is_zero()) nonzero.push_back(g);
  }
  if (nonzero.empty()) return false;
  std::optional<unsigned> cutoff;
  const bool homogeneous = f.is_homogeneous() &&
                           std::all_of(nonzero.begin(), nonzero.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
  if (homogeneous) cutoff = *f.degree();
  const auto order = MonomialOrder::for_context(OrderKind::grevlex, f.context());
  const auto gb = buchberger(nonzero, order, cutoff);
  return normal_form(f, gb).is_zero();
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, unsigned degree) {
  const auto leads = gb.leading_monomials();
  std::vector<Monomial> out;
  for (auto& m : monomials_of_degree(*gb.context(), degree)) {
    const bool in_staircase = std::any_of(leads.begin(), leads.end(), [&](const Monomial& l) { return divides(l, m); });
    if (!in_staircase) out.push_back(std::move(m));
  }
  return out;
}

PoincareSeries quotient_poincare(std::span<const Polynomial> gens, const ContextPtr& ctx, unsigned cutoff) {
  std::vector<Polynomial> nonzero;
  for (const auto& g : gens) {
    if (!(g.context() == *ctx)) throw ContextMismatch("quotient_poincare: generator in a different ring");
    if (!g.is_homogeneous()) throw NonHomogeneous("quotient_poincare: generator '" + to_string(g) + "' is not homogeneous");
    if (!g.is_zero()) nonzero.push_back(g);
  }
  std::vector<long long> dims(cutoff + 1, 0);
  if (nonzero.empty()) {
    for (unsigned k = 0; k <= cutoff; ++k) dims[k] = static_cast<long long>(monomials_of_degree(*ctx, k).size());
    return PoincareSeries(std::move(dims));
  }
  const auto order = MonomialOrder::for_context(OrderKind::grevlex, *ctx);
  const auto gb = buchberger(ctx, nonzero, order, cutoff);
  for (unsigned k = 0; k <= cutoff; ++k) dims[k] = static_cast<long long>(standard_monomials(gb, k).size());
  return PoincareSeries(std::move(dims));
}

}  // namespace cartan
