#include "cartan/polynomial.hpp"

#include "cartan/detail/expression.hpp"

#include <algorithm>
#include <set>

namespace cartan {

VariableContext::VariableContext(std::vector<std::string> names, std::vector<unsigned> degrees)
    : names_(std::move(names)), degrees_(std::move(degrees)) {
  if (names_.size() != degrees_.size()) {
    throw std::invalid_argument("variable context: names and degrees differ in length");
  }
  std::set<std::string_view> seen;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw std::invalid_argument("variable context: empty variable name");
    if (!seen.insert(names_[i]).second) {
      throw std::invalid_argument("variable context: duplicate variable '" + names_[i] + "'");
    }
    if (degrees_[i] == 0 || degrees_[i] % 2 != 0) {
      throw std::invalid_argument("variable context: degree of '" + names_[i] +
                                  "' must be even and positive");
    }
  }
}

std::shared_ptr<const VariableContext> VariableContext::make(std::vector<std::string> names) {
  std::vector<unsigned> degrees(names.size(), 2);
  return std::make_shared<const VariableContext>(std::move(names), std::move(degrees));
}

std::shared_ptr<const VariableContext> VariableContext::make(std::vector<std::string> names,
                                                             std::vector<unsigned> degrees) {
  return std::make_shared<const VariableContext>(std::move(names), std::move(degrees));
}

std::optional<std::size_t> VariableContext::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

unsigned cohomological_degree(const Monomial& m, const VariableContext& ctx) {
  unsigned d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * ctx.degree(i);
  return d;
}

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

namespace {

void enumerate(const VariableContext& ctx, std::size_t var, unsigned remaining, Monomial& current,
               std::vector<Monomial>& out) {
  if (var == ctx.size()) {
    if (remaining == 0) out.push_back(current);
    return;
  }
  const unsigned deg = ctx.degree(var);
  for (unsigned e = remaining / deg + 1; e-- > 0;) {
    current[var] = e;
    enumerate(ctx, var + 1, remaining - e * deg, current, out);
  }
  current[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(const VariableContext& ctx, unsigned degree) {
  std::vector<Monomial> out;
  Monomial current(ctx.size(), 0);
  enumerate(ctx, 0, degree, current, out);
  return out;
}

Polynomial::Polynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) throw std::invalid_argument("polynomial needs a variable context");
}

Polynomial Polynomial::constant(ContextPtr ctx, const Rational& c) {
  Polynomial p(std::move(ctx));
  p.add_term(Monomial(p.ctx_->size(), 0), c);
  return p;
}

Polynomial Polynomial::variable(ContextPtr ctx, std::size_t index) {
  Polynomial p(std::move(ctx));
  Monomial m(p.ctx_->size(), 0);
  m.at(index) = 1;
  p.add_term(m, 1);
  return p;
}

Polynomial Polynomial::from_monomial(ContextPtr ctx, Monomial m, const Rational& c) {
  Polynomial p(std::move(ctx));
  p.add_term(m, c);
  return p;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.size() != ctx_->size()) throw std::invalid_argument("monomial length does not match ring");
  if (c == 0) return;
  Rational v = c;
  v.canonicalize();  // callers may pass mpq_class(p, q) unreduced
  auto [it, inserted] = terms_.try_emplace(m, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = cohomological_degree(terms_.begin()->first, *ctx_);
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return cohomological_degree(t.first, *ctx_) == d; });
}

std::optional<unsigned> Polynomial::degree() const {
  if (terms_.empty() || !is_homogeneous()) return std::nullopt;
  return cohomological_degree(terms_.begin()->first, *ctx_);
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ctx_, 1);
  Polynomial base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != ctx_->size()) throw std::invalid_argument("evaluation point has wrong dimension");
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational value = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::uint32_t k = 0; k < m[i]; ++k) value *= point[i];
    }
    total += value;
  }
  return total;
}

void Polynomial::require_same_ring(const Polynomial& rhs, const char* op) const {
  if (ctx_ != rhs.ctx_ && !(*ctx_ == *rhs.ctx_)) {
    throw ContextMismatch(std::string(op) + ": polynomials live in different rings");
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  require_same_ring(rhs, "add");
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  require_same_ring(rhs, "subtract");
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same_ring(b, "multiply");
  Polynomial out(a.ctx_);
  Monomial m(a.ctx_->size());
  Rational c;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      c = ca * cb;
      out.add_term(m, c);
    }
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [m, v] : terms_) v *= c;
  }
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, v] : out.terms_) v = -v;
  return out;
}

bool Polynomial::operator==(const Polynomial& rhs) const {
  return (ctx_ == rhs.ctx_ || *ctx_ == *rhs.ctx_) && terms_ == rhs.terms_;
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) { return a * b; }

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  const auto& ctx = p.context();
  std::vector<const Polynomial::Terms::value_type*> terms;
  for (const auto& t : p.terms()) terms.push_back(&t);
  std::sort(terms.begin(), terms.end(), [&](const auto* a, const auto* b) {
    const unsigned da = cohomological_degree(a->first, ctx);
    const unsigned db = cohomological_degree(b->first, ctx);
    if (da != db) return da > db;
    return a->first > b->first;
  });

  std::string out;
  bool first = true;
  for (const auto* t : terms) {
    const Rational& c = t->second;
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    std::string factors;
    for (std::size_t i = 0; i < t->first.size(); ++i) {
      if (t->first[i] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += ctx.name(i);
      if (t->first[i] > 1) factors += "^" + std::to_string(t->first[i]);
    }
    if (factors.empty()) {
      out += format_rational(magnitude);
    } else if (magnitude == 1) {
      out += factors;
    } else {
      out += format_rational(magnitude) + "*" + factors;
    }
  }
  return out;
}

namespace {

struct PolynomialOps {
  ContextPtr ctx;

  Polynomial constant(const Rational& c) const { return Polynomial::constant(ctx, c); }
  Polynomial variable(std::string_view name) const {
    const auto idx = ctx->index_of(name);
    if (!idx) throw std::invalid_argument("unknown variable");
    return Polynomial::variable(ctx, *idx);
  }
  Polynomial add(Polynomial a, const Polynomial& b) const { return a += b; }
  Polynomial sub(Polynomial a, const Polynomial& b) const { return a -= b; }
  Polynomial mul(const Polynomial& a, const Polynomial& b) const { return a * b; }
  Polynomial negate(const Polynomial& a) const { return -a; }
  Polynomial power(const Polynomial& a, unsigned e) const { return a.pow(e); }
  std::optional<Rational> as_constant(const Polynomial& a) const {
    if (a.is_zero()) return Rational(0);
    if (a.term_count() == 1 && cohomological_degree(a.terms().begin()->first, *ctx) == 0) {
      return a.terms().begin()->second;
    }
    return std::nullopt;
  }
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, ContextPtr ctx) {
  PolynomialOps ops{std::move(ctx)};
  return detail::ExpressionParser<Polynomial, PolynomialOps>(text, ops).parse();
}

LinearSubstitution::LinearSubstitution(ContextPtr source, ContextPtr target,
                                       std::vector<std::vector<Rational>> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (!source_ || !target_) throw std::invalid_argument("linear substitution needs both contexts");
  if (images_.size() != source_->size()) {
    throw std::invalid_argument("linear substitution: one image per source variable required");
  }
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i].size() != target_->size()) {
      throw std::invalid_argument("linear substitution: image of '" + source_->name(i) +
                                  "' has wrong length");
    }
    for (std::size_t k = 0; k < images_[i].size(); ++k) {
      if (images_[i][k] != 0 && target_->degree(k) != source_->degree(i)) {
        throw std::invalid_argument("linear substitution: image of '" + source_->name(i) +
                                    "' is not degree preserving");
      }
    }
  }
}

LinearSubstitution LinearSubstitution::identity(ContextPtr ctx) {
  std::vector<std::vector<Rational>> images(ctx->size(), std::vector<Rational>(ctx->size()));
  for (std::size_t i = 0; i < ctx->size(); ++i) images[i][i] = 1;
  return LinearSubstitution(ctx, ctx, std::move(images));
}

Polynomial LinearSubstitution::image_of_variable(std::size_t i) const {
  Polynomial p(target_);
  for (std::size_t k = 0; k < target_->size(); ++k) {
    Monomial m(target_->size(), 0);
    m[k] = 1;
    p.add_term(m, images_.at(i)[k]);
  }
  return p;
}

Polynomial substitute_linear(const Polynomial& f, const LinearSubstitution& s) {
  if (f.context_ptr() != s.source() && !(f.context() == *s.source())) {
    throw ContextMismatch("substitute_linear: polynomial is not in the substitution's source ring");
  }
  const std::size_t n = s.source()->size();
  std::vector<Polynomial> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) images.push_back(s.image_of_variable(i));

  // powers[i][e] = images[i]^e, grown on demand
  std::vector<std::vector<Polynomial>> powers(n);
  auto power_of = [&](std::size_t i, std::uint32_t e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(s.target(), 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };

  Polynomial out(s.target());
  for (const auto& [m, c] : f.terms()) {
    Polynomial term = Polynomial::constant(s.target(), c);
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) {
      if (m[i] != 0) term *= power_of(i, m[i]);
    }
    out += term;
  }
  return out;
}

}  // namespace cartan
