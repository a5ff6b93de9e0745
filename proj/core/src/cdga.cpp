#include "cartan/cdga.hpp"

#include "cartan/detail/expression.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <set>
#include <thread>

namespace cartan {

GradedAlgebra::GradedAlgebra(std::vector<GeneratorSpec> generators) : gens_(std::move(generators)) {
  std::set<std::string_view> seen;
  slot_.resize(gens_.size());
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    const auto& g = gens_[i];
    if (g.name.empty()) throw std::invalid_argument("generator with empty name");
    if (!seen.insert(g.name).second) throw std::invalid_argument("duplicate generator '" + g.name + "'");
    if (g.degree == 0) throw std::invalid_argument("generator '" + g.name + "' must have positive degree");
    if (g.odd()) {
      slot_[i] = odd_gens_.size();
      odd_gens_.push_back(i);
    } else {
      slot_[i] = even_gens_.size();
      even_gens_.push_back(i);
    }
  }
  if (odd_gens_.size() > 64) throw std::invalid_argument("at most 64 odd generators are supported");
}

std::optional<std::size_t> GradedAlgebra::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].name == name) return i;
  }
  return std::nullopt;
}

unsigned GradedAlgebra::degree(const CdgaMonomial& m) const {
  unsigned d = 0;
  for (std::size_t k = 0; k < m.even.size(); ++k) d += m.even[k] * gens_[even_gens_[k]].degree;
  for (std::size_t k = 0; k < odd_gens_.size(); ++k) {
    if ((m.odd >> k) & 1U) d += gens_[odd_gens_[k]].degree;
  }
  return d;
}

CdgaMonomial GradedAlgebra::unit() const { return CdgaMonomial{std::vector<std::uint32_t>(even_gens_.size(), 0), 0}; }

CdgaMonomial GradedAlgebra::generator_monomial(std::size_t gen) const {
  CdgaMonomial m = unit();
  if (gens_.at(gen).odd()) {
    m.odd = std::uint64_t{1} << slot_[gen];
  } else {
    m.even[slot_[gen]] = 1;
  }
  return m;
}

CdgaElement GradedAlgebra::constant(const Rational& c) const {
  CdgaElement e;
  add_term(e, unit(), c);
  return e;
}

CdgaElement GradedAlgebra::generator(std::size_t gen) const {
  CdgaElement e;
  e.emplace(generator_monomial(gen), 1);
  return e;
}

int GradedAlgebra::multiply(const CdgaMonomial& a, const CdgaMonomial& b, CdgaMonomial& out) const {
  if ((a.odd & b.odd) != 0) return 0;
  // Moving each odd factor of b left past the larger odd factors of a.
  unsigned swaps = 0;
  for (std::uint64_t rest = b.odd; rest != 0; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    const std::uint64_t above = j == 63 ? 0 : (a.odd >> (j + 1));
    swaps += static_cast<unsigned>(std::popcount(above));
  }
  out.even.resize(a.even.size());
  for (std::size_t k = 0; k < a.even.size(); ++k) out.even[k] = a.even[k] + b.even[k];
  out.odd = a.odd | b.odd;
  return (swaps % 2 == 0) ? 1 : -1;
}

CdgaElement GradedAlgebra::multiply(const CdgaElement& a, const CdgaElement& b) const {
  CdgaElement out;
  CdgaMonomial m;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      const int sign = multiply(ma, mb, m);
      if (sign == 0) continue;
      add_term(out, m, sign > 0 ? Rational(ca * cb) : Rational(-(ca * cb)));
    }
  }
  return out;
}

bool GradedAlgebra::is_homogeneous(const CdgaElement& e, unsigned d) const {
  return std::all_of(e.begin(), e.end(), [&](const auto& t) { return degree(t.first) == d; });
}

std::string GradedAlgebra::format(const CdgaMonomial& m) const {
  std::string out;
  for (std::size_t k = 0; k < m.even.size(); ++k) {
    if (m.even[k] == 0) continue;
    if (!out.empty()) out += "*";
    out += gens_[even_gens_[k]].name;
    if (m.even[k] > 1) out += "^" + std::to_string(m.even[k]);
  }
  for (std::size_t k = 0; k < odd_gens_.size(); ++k) {
    if (((m.odd >> k) & 1U) == 0) continue;
    if (!out.empty()) out += "*";
    out += gens_[odd_gens_[k]].name;
  }
  return out;
}

std::string GradedAlgebra::format(const CdgaElement& e) const {
  if (e.empty()) return "0";
  std::vector<const CdgaElement::value_type*> terms;
  for (const auto& t : e) terms.push_back(&t);
  std::sort(terms.begin(), terms.end(), [&](const auto* a, const auto* b) {
    const unsigned da = degree(a->first);
    const unsigned db = degree(b->first);
    if (da != db) return da > db;
    if (a->first.even != b->first.even) return a->first.even > b->first.even;
    return a->first.odd < b->first.odd;
  });
  std::string out;
  for (const auto* t : terms) {
    const bool negative = t->second < 0;
    const Rational mag = negative ? Rational(-t->second) : t->second;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const std::string body = format(t->first);
    if (body.empty()) {
      out += format_rational(mag);
    } else if (mag == 1) {
      out += body;
    } else {
      out += format_rational(mag) + "*" + body;
    }
  }
  return out;
}

namespace {

struct ElementOps {
  const GradedAlgebra* alg;

  CdgaElement constant(const Rational& c) const { return alg->constant(c); }
  CdgaElement variable(std::string_view name) const {
    const auto idx = alg->index_of(name);
    if (!idx) throw std::invalid_argument("unknown generator");
    return alg->generator(*idx);
  }
  CdgaElement add(CdgaElement a, const CdgaElement& b) const { return std::move(a) + b; }
  CdgaElement sub(CdgaElement a, const CdgaElement& b) const { return std::move(a) + Rational(-1) * b; }
  CdgaElement mul(const CdgaElement& a, const CdgaElement& b) const { return alg->multiply(a, b); }
  CdgaElement negate(CdgaElement a) const { return Rational(-1) * std::move(a); }
  CdgaElement power(const CdgaElement& a, unsigned e) const {
    CdgaElement result = alg->constant(1);
    for (unsigned i = 0; i < e; ++i) result = alg->multiply(result, a);
    return result;
  }
  std::optional<Rational> as_constant(const CdgaElement& a) const {
    if (a.empty()) return Rational(0);
    if (a.size() == 1 && a.begin()->first == alg->unit()) return a.begin()->second;
    return std::nullopt;
  }
};

}  // namespace

CdgaElement GradedAlgebra::parse(std::string_view text) const {
  ElementOps ops{this};
  return detail::ExpressionParser<CdgaElement, ElementOps>(text, ops).parse();
}

void add_term(CdgaElement& e, const CdgaMonomial& m, const Rational& c) {
  if (c == 0) return;
  Rational v = c;
  v.canonicalize();
  auto [it, inserted] = e.try_emplace(m, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) e.erase(it);
  }
}

CdgaElement operator+(CdgaElement a, const CdgaElement& b) {
  for (const auto& [m, c] : b) add_term(a, m, c);
  return a;
}

CdgaElement operator*(const Rational& c, CdgaElement a) {
  if (c == 0) return {};
  for (auto& [m, v] : a) v *= c;
  return a;
}

FreeCDGA::FreeCDGA(std::shared_ptr<const GradedAlgebra> algebra, std::vector<CdgaElement> differential)
    : algebra_(std::move(algebra)), differential_(std::move(differential)) {
  if (!algebra_) throw std::invalid_argument("FreeCDGA needs an algebra");
  const auto& gens = algebra_->generators();
  if (differential_.size() != gens.size()) {
    throw std::invalid_argument("FreeCDGA: one differential per generator required");
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!algebra_->is_homogeneous(differential_[i], gens[i].degree + 1)) {
      throw DifferentialError(gens[i].name, "differential " + algebra_->format(differential_[i]) +
                                                " does not have degree " + std::to_string(gens[i].degree + 1));
    }
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const CdgaElement dd = apply(differential_[i]);
    if (!dd.empty()) {
      throw DifferentialError(gens[i].name, "d(d(" + gens[i].name + ")) = " + algebra_->format(dd) + " is not zero");
    }
  }
}

CdgaElement FreeCDGA::apply(const CdgaMonomial& m) const {
  const auto& alg = *algebra_;
  CdgaElement out;

  // d(E) * O for the even part E.
  CdgaMonomial odd_part = alg.unit();
  odd_part.odd = m.odd;
  const CdgaElement odd_elem{{odd_part, Rational(1)}};
  for (std::size_t k = 0; k < m.even.size(); ++k) {
    if (m.even[k] == 0) continue;
    const auto& dg = differential_[alg.even_generators()[k]];
    if (dg.empty()) continue;
    CdgaMonomial rest = alg.unit();
    rest.even = m.even;
    rest.even[k] -= 1;
    const CdgaElement coeff{{rest, Rational(m.even[k])}};
    out = std::move(out) + alg.multiply(alg.multiply(coeff, dg), odd_elem);
  }

  // E * d(O), with the sign (-1)^(number of odd factors passed).
  CdgaMonomial even_part = alg.unit();
  even_part.even = m.even;
  const CdgaElement even_elem{{even_part, Rational(1)}};
  unsigned passed = 0;
  for (std::size_t k = 0; k < alg.odd_count(); ++k) {
    if (((m.odd >> k) & 1U) == 0) continue;
    const auto& dg = differential_[alg.odd_generators()[k]];
    if (!dg.empty()) {
      CdgaMonomial left = alg.unit();
      CdgaMonomial right = alg.unit();
      const std::uint64_t bit = std::uint64_t{1} << k;
      left.odd = m.odd & (bit - 1);
      right.odd = m.odd & ~(bit | (bit - 1));
      const CdgaElement l{{left, Rational(passed % 2 == 0 ? 1 : -1)}};
      const CdgaElement r{{right, Rational(1)}};
      out = std::move(out) + alg.multiply(even_elem, alg.multiply(alg.multiply(l, dg), r));
    }
    ++passed;
  }
  return out;
}

CdgaElement FreeCDGA::apply(const CdgaElement& e) const {
  CdgaElement out;
  for (const auto& [m, c] : e) out = std::move(out) + c * apply(m);
  return out;
}

namespace {

void enumerate_even(const GradedAlgebra& a, std::size_t slot, unsigned remaining, std::vector<std::uint32_t>& current,
                    std::vector<std::vector<std::uint32_t>>& out) {
  if (slot == a.even_count()) {
    if (remaining == 0) out.push_back(current);
    return;
  }
  const unsigned deg = a.generators()[a.even_generators()[slot]].degree;
  for (unsigned e = 0; e * deg <= remaining; ++e) {
    current[slot] = e;
    enumerate_even(a, slot + 1, remaining - e * deg, current, out);
  }
  current[slot] = 0;
}

}  // namespace

GradedBasis graded_basis(const GradedAlgebra& a, unsigned degree) {
  GradedBasis basis;
  basis.degree = degree;
  const std::size_t n_odd = a.odd_count();

  // Odd subsets by increasing size, pruned as soon as their degree exceeds the target.
  std::vector<std::pair<std::uint64_t, unsigned>> subsets{{0, 0}};
  for (std::size_t k = 0; k < n_odd; ++k) {
    const unsigned d = a.generators()[a.odd_generators()[k]].degree;
    const std::size_t count = subsets.size();
    for (std::size_t i = 0; i < count; ++i) {
      if (subsets[i].second + d <= degree) {
        subsets.emplace_back(subsets[i].first | (std::uint64_t{1} << k), subsets[i].second + d);
      }
    }
  }

  std::vector<std::uint32_t> current(a.even_count(), 0);
  for (const auto& [mask, odd_degree] : subsets) {
    std::vector<std::vector<std::uint32_t>> evens;
    enumerate_even(a, 0, degree - odd_degree, current, evens);
    for (auto& e : evens) basis.monomials.push_back(CdgaMonomial{std::move(e), mask});
  }
  std::sort(basis.monomials.begin(), basis.monomials.end());
  return basis;
}

SparseMatrix differential_matrix(const FreeCDGA& a, unsigned degree) {
  const GradedBasis source = graded_basis(a, degree);
  const GradedBasis target = graded_basis(a, degree + 1);
  std::map<CdgaMonomial, std::size_t> row_of;
  for (std::size_t i = 0; i < target.monomials.size(); ++i) row_of.emplace(target.monomials[i], i);

  SparseMatrix m(target.monomials.size(), source.monomials.size());
  for (std::size_t col = 0; col < source.monomials.size(); ++col) {
    for (const auto& [mono, c] : a.apply(source.monomials[col])) m.add(row_of.at(mono), col, c);
  }
  return m;
}

CochainSummary cochain_summary(const FreeCDGA& a, unsigned cutoff) {
  CochainSummary s;
  s.cochain_dims.resize(cutoff + 1);
  s.differential_ranks.resize(cutoff + 1);
  s.cohomology_dims.resize(cutoff + 1);

  auto work = [&a](unsigned k) {
    const SparseMatrix d = differential_matrix(a, k);
    return std::pair<std::size_t, std::size_t>{d.cols(), rank(d)};
  };

  // Degrees are independent; spread them over the available cores.
  const unsigned threads = std::max(1U, std::thread::hardware_concurrency());
  if (threads > 1 && cutoff > 0) {
    std::vector<std::future<std::pair<std::size_t, std::size_t>>> pending;
    for (unsigned k = 0; k <= cutoff; ++k) pending.push_back(std::async(std::launch::async, work, k));
    for (unsigned k = 0; k <= cutoff; ++k) std::tie(s.cochain_dims[k], s.differential_ranks[k]) = pending[k].get();
  } else {
    for (unsigned k = 0; k <= cutoff; ++k) std::tie(s.cochain_dims[k], s.differential_ranks[k]) = work(k);
  }

  for (unsigned k = 0; k <= cutoff; ++k) {
    const std::size_t incoming = k == 0 ? 0 : s.differential_ranks[k - 1];
    s.cohomology_dims[k] = s.cochain_dims[k] - s.differential_ranks[k] - incoming;
  }
  return s;
}

std::vector<std::size_t> cohomology_dims(const FreeCDGA& a, unsigned cutoff) {
  return cochain_summary(a, cutoff).cohomology_dims;
}

PoincareSeries poincare_polynomial(const FreeCDGA& a, unsigned cutoff) {
  const auto dims = cohomology_dims(a, cutoff);
  return PoincareSeries(std::vector<long long>(dims.begin(), dims.end()));
}

FreeCDGA build_cartan_algebra(const std::vector<GeneratorSpec>& bh_gens, const std::vector<GeneratorSpec>& odd_gens,
                              const std::vector<Polynomial>& transgressions) {
  if (transgressions.size() != odd_gens.size()) {
    throw std::invalid_argument("build_cartan_algebra: one transgression per odd generator required");
  }
  for (const auto& g : bh_gens) {
    if (g.odd()) throw DegreeMismatch("build_cartan_algebra: H*(BH) generator '" + g.name + "' has odd degree");
  }
  for (const auto& g : odd_gens) {
    if (!g.odd()) throw DegreeMismatch("build_cartan_algebra: generator '" + g.name + "' must have odd degree");
  }

  std::vector<GeneratorSpec> all = bh_gens;
  all.insert(all.end(), odd_gens.begin(), odd_gens.end());
  auto algebra = std::make_shared<const GradedAlgebra>(all);

  std::vector<CdgaElement> d(all.size());
  for (std::size_t j = 0; j < odd_gens.size(); ++j) {
    const Polynomial& t = transgressions[j];
    const auto& ctx = t.context();
    if (ctx.size() != bh_gens.size()) {
      throw ContextMismatch("transgression of '" + odd_gens[j].name + "' is not a polynomial in the H*(BH) generators");
    }
    for (std::size_t i = 0; i < bh_gens.size(); ++i) {
      if (ctx.name(i) != bh_gens[i].name || ctx.degree(i) != bh_gens[i].degree) {
        throw ContextMismatch("transgression of '" + odd_gens[j].name + "' uses variable '" + ctx.name(i) +
                              "' where '" + bh_gens[i].name + "' was expected");
      }
    }
    if (!t.is_zero() && t.degree() != std::optional<unsigned>(odd_gens[j].degree + 1)) {
      throw DegreeMismatch("transgression " + to_string(t) + " of '" + odd_gens[j].name + "' must be homogeneous of degree " +
                           std::to_string(odd_gens[j].degree + 1));
    }
    for (const auto& [m, c] : t.terms()) {
      CdgaMonomial cm = algebra->unit();
      for (std::size_t i = 0; i < m.size(); ++i) cm.even[i] = m[i];
      add_term(d[bh_gens.size() + j], cm, c);
    }
  }
  return FreeCDGA(std::move(algebra), std::move(d));
}

}  // namespace cartan
