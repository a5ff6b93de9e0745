#pragma once

#include "cartan/polynomial.hpp"
#include "cartan/series.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cartan {

enum class OrderKind { grevlex, lex, deglex };

std::string to_string(OrderKind kind);
OrderKind parse_order_kind(std::string_view text);

/// Monomial order on one ring. Graded orders use the cohomological degree
/// (the context's variable weights); `priority` lists variable indices from
/// most to least significant.
class MonomialOrder {
 public:
  MonomialOrder(OrderKind kind, std::vector<unsigned> weights, std::vector<std::size_t> priority);

  /// Identity priority (x1 > x2 > ...) unless one is given.
  static MonomialOrder for_context(OrderKind kind, const VariableContext& ctx,
                                   std::vector<std::size_t> priority = {});

  OrderKind kind() const { return kind_; }
  const std::vector<std::size_t>& priority() const { return priority_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

  bool operator==(const MonomialOrder&) const = default;

 private:
  OrderKind kind_;
  std::vector<unsigned> weights_;
  std::vector<std::size_t> priority_;
};

/// Reduced Groebner basis: monic generators, none of whose terms is divisible
/// by another generator's leading monomial. Sorted by ascending leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(ContextPtr ctx, MonomialOrder order, std::vector<Polynomial> generators,
                std::optional<unsigned> truncation);

  const ContextPtr& context() const { return ctx_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  std::vector<Monomial> leading_monomials() const;
  /// Degree bound when built with a cutoff; the basis is only complete up to it.
  std::optional<unsigned> truncation() const { return truncation_; }

 private:
  ContextPtr ctx_;
  MonomialOrder order_;
  std::vector<Polynomial> generators_;
  std::optional<unsigned> truncation_;
};

class NonHomogeneous : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Leading monomial and coefficient of a nonzero polynomial under `order`.
Monomial leading_monomial(const Polynomial& p, const MonomialOrder& order);
Rational leading_coefficient(const Polynomial& p, const MonomialOrder& order);

/// Buchberger's algorithm with the coprime and chain criteria, pairs taken in
/// order of increasing lcm degree. `degree_cutoff` drops S-pairs whose lcm
/// lies above it (valid for homogeneous input, where the result is then a
/// basis in all degrees up to the cutoff). Zero generators are discarded.
GroebnerBasis buchberger(const ContextPtr& ctx, std::span<const Polynomial> gens, const MonomialOrder& order,
                         std::optional<unsigned> degree_cutoff = std::nullopt);

/// Same, taking the ring from the first generator (which must exist).
GroebnerBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& order,
                         std::optional<unsigned> degree_cutoff = std::nullopt);

/// Given the indices of the divisors whose leading monomial divides the
/// current term, returns the position (into `candidates`) of the one to use.
using DivisorChoice = std::function<std::size_t(std::span<const std::size_t> candidates)>;

/// Full multivariate division remainder of f by `divisors`. The default
/// choice takes the first candidate.
Polynomial reduce(const Polynomial& f, std::span<const Polynomial> divisors, const MonomialOrder& order,
                  const DivisorChoice& choose = {});

/// Remainder of f modulo the basis; zero exactly when f lies in the ideal.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

/// Ideal membership via a grevlex basis (degree-truncated when everything is
/// homogeneous).
bool ideal_member(const Polynomial& f, std::span<const Polynomial> gens);

/// Monomials of the given degree outside the leading-term staircase.
std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, unsigned degree);

/// Dimensions of (Q[ctx] / (gens))_k for k = 0..cutoff, by cohomological
/// degree. Throws NonHomogeneous if a generator is not homogeneous.
PoincareSeries quotient_poincare(std::span<const Polynomial> gens, const ContextPtr& ctx, unsigned cutoff);

}  // namespace cartan
