#pragma once

#include "cartan/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cartan {

/// Ordered variable names with their cohomological degrees (even, positive).
class VariableContext {
 public:
  VariableContext(std::vector<std::string> names, std::vector<unsigned> degrees);

  /// Every variable in degree 2, the H*(BT) convention.
  static std::shared_ptr<const VariableContext> make(std::vector<std::string> names);
  static std::shared_ptr<const VariableContext> make(std::vector<std::string> names,
                                                     std::vector<unsigned> degrees);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  unsigned degree(std::size_t i) const { return degrees_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<unsigned>& degrees() const { return degrees_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool operator==(const VariableContext&) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<unsigned> degrees_;
};

using ContextPtr = std::shared_ptr<const VariableContext>;

class ContextMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exponent vector, one entry per context variable.
using Monomial = std::vector<std::uint32_t>;

unsigned cohomological_degree(const Monomial& m, const VariableContext& ctx);
bool divides(const Monomial& a, const Monomial& b);
Monomial monomial_lcm(const Monomial& a, const Monomial& b);

/// All monomials of the given cohomological degree, lexicographically
/// descending (x1 highest).
std::vector<Monomial> monomials_of_degree(const VariableContext& ctx, unsigned degree);

/// Multivariate polynomial over Q. Zero coefficients are never stored.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  explicit Polynomial(ContextPtr ctx);

  static Polynomial constant(ContextPtr ctx, const Rational& c);
  static Polynomial variable(ContextPtr ctx, std::size_t index);
  static Polynomial from_monomial(ContextPtr ctx, Monomial m, const Rational& c = 1);

  const VariableContext& context() const { return *ctx_; }
  const ContextPtr& context_ptr() const { return ctx_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const Monomial& m, const Rational& c);
  Rational coefficient(const Monomial& m) const;

  /// Homogeneous with respect to cohomological degree. Zero counts as homogeneous.
  bool is_homogeneous() const;
  /// Cohomological degree when nonzero and homogeneous.
  std::optional<unsigned> degree() const;

  Polynomial pow(unsigned e) const;
  Rational evaluate(std::span<const Rational> point) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  /// Same terms in structurally equal contexts.
  bool operator==(const Polynomial& rhs) const;

 private:
  void require_same_ring(const Polynomial& rhs, const char* op) const;

  ContextPtr ctx_;
  Terms terms_;
};

/// Exact product; throws ContextMismatch for different rings.
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);

/// ASCII form, e.g. "2*x2^2 + 2*x2*x3 + 2*x3^2". Terms by descending degree,
/// then lexicographically with the first variable highest.
std::string to_string(const Polynomial& p);

/// Inverse of to_string; also accepts parentheses and powers of sums.
/// Throws ParseError.
Polynomial parse_polynomial(std::string_view text, ContextPtr ctx);

/// Ring map sending each source variable to a rational linear form in the
/// target variables (the restriction j* onto a subtorus).
class LinearSubstitution {
 public:
  /// images[i][k] = coefficient of target variable k in the image of source variable i.
  LinearSubstitution(ContextPtr source, ContextPtr target, std::vector<std::vector<Rational>> images);

  static LinearSubstitution identity(ContextPtr ctx);

  const ContextPtr& source() const { return source_; }
  const ContextPtr& target() const { return target_; }
  const std::vector<std::vector<Rational>>& images() const { return images_; }
  Polynomial image_of_variable(std::size_t i) const;

 private:
  ContextPtr source_;
  ContextPtr target_;
  std::vector<std::vector<Rational>> images_;
};

/// Applies s to f; throws ContextMismatch unless f lives in s.source().
Polynomial substitute_linear(const Polynomial& f, const LinearSubstitution& s);

}  // namespace cartan
