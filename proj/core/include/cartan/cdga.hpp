#pragma once

#include "cartan/polynomial.hpp"
#include "cartan/series.hpp"
#include "cartan/sparse_matrix.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cartan {

struct GeneratorSpec {
  std::string name;
  unsigned degree = 0;

  bool odd() const { return degree % 2 == 1; }
  bool operator==(const GeneratorSpec&) const = default;
};

/// Product of even generators (exponent vector over the even generators) and
/// a set of odd generators (bitmask over the odd generators, written in
/// increasing index order).
struct CdgaMonomial {
  std::vector<std::uint32_t> even;
  std::uint64_t odd = 0;

  auto operator<=>(const CdgaMonomial&) const = default;
};

using CdgaElement = std::map<CdgaMonomial, Rational>;

/// Free graded-commutative algebra Q[even] (x) Lambda(odd).
class GradedAlgebra {
 public:
  explicit GradedAlgebra(std::vector<GeneratorSpec> generators);

  const std::vector<GeneratorSpec>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  std::size_t even_count() const { return even_gens_.size(); }
  std::size_t odd_count() const { return odd_gens_.size(); }
  /// Generator indices of the even (resp. odd) slots, in declaration order.
  const std::vector<std::size_t>& even_generators() const { return even_gens_; }
  const std::vector<std::size_t>& odd_generators() const { return odd_gens_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  unsigned degree(const CdgaMonomial& m) const;
  CdgaMonomial unit() const;
  CdgaMonomial generator_monomial(std::size_t gen) const;

  CdgaElement constant(const Rational& c) const;
  CdgaElement generator(std::size_t gen) const;

  /// Graded product of monomials: returns +1/-1 and writes the product, or 0
  /// when an odd generator repeats.
  int multiply(const CdgaMonomial& a, const CdgaMonomial& b, CdgaMonomial& out) const;
  CdgaElement multiply(const CdgaElement& a, const CdgaElement& b) const;

  /// Every term has total degree `degree`. Zero qualifies.
  bool is_homogeneous(const CdgaElement& e, unsigned degree) const;

  /// "2*u^2*y3 - y7"; "0" for the zero element.
  std::string format(const CdgaElement& e) const;
  std::string format(const CdgaMonomial& m) const;
  /// Expression in generator names; odd generators anticommute. Throws ParseError.
  CdgaElement parse(std::string_view text) const;

 private:
  std::vector<GeneratorSpec> gens_;
  std::vector<std::size_t> even_gens_;
  std::vector<std::size_t> odd_gens_;
  std::vector<std::size_t> slot_;  // position of each generator within its parity class
};

void add_term(CdgaElement& e, const CdgaMonomial& m, const Rational& c);
CdgaElement operator+(CdgaElement a, const CdgaElement& b);
CdgaElement operator*(const Rational& c, CdgaElement a);

class DifferentialError : public std::invalid_argument {
 public:
  DifferentialError(std::string generator, const std::string& message)
      : std::invalid_argument("generator '" + generator + "': " + message), generator_(std::move(generator)) {}
  const std::string& generator() const { return generator_; }

 private:
  std::string generator_;
};

/// Free CDGA: a graded algebra together with a degree +1 differential given
/// on generators and extended by the graded Leibniz rule. Construction checks
/// the degree of every d(generator) and that d(d(generator)) = 0.
class FreeCDGA {
 public:
  FreeCDGA(std::shared_ptr<const GradedAlgebra> algebra, std::vector<CdgaElement> differential);

  const GradedAlgebra& algebra() const { return *algebra_; }
  const std::shared_ptr<const GradedAlgebra>& algebra_ptr() const { return algebra_; }
  const CdgaElement& differential_of(std::size_t gen) const { return differential_.at(gen); }

  CdgaElement apply(const CdgaMonomial& m) const;
  CdgaElement apply(const CdgaElement& e) const;

 private:
  std::shared_ptr<const GradedAlgebra> algebra_;
  std::vector<CdgaElement> differential_;
};

struct GradedBasis {
  unsigned degree = 0;
  std::vector<CdgaMonomial> monomials;
};

/// All monomials of total degree `degree`: even exponent vectors in
/// lexicographic order, ties broken by odd bitmask.
GradedBasis graded_basis(const GradedAlgebra& a, unsigned degree);
inline GradedBasis graded_basis(const FreeCDGA& a, unsigned degree) { return graded_basis(a.algebra(), degree); }

/// Matrix of d: C^degree -> C^(degree+1) in the graded bases; column j is d
/// of the j-th basis monomial.
SparseMatrix differential_matrix(const FreeCDGA& a, unsigned degree);

/// Per-degree cochain data: dim C^k, rank d_k and dim H^k for k = 0..cutoff.
struct CochainSummary {
  std::vector<std::size_t> cochain_dims;
  std::vector<std::size_t> differential_ranks;
  std::vector<std::size_t> cohomology_dims;
};

CochainSummary cochain_summary(const FreeCDGA& a, unsigned cutoff);

/// dim H^k = kernel_dim(d_k) - rank(d_{k-1}) for k = 0..cutoff.
std::vector<std::size_t> cohomology_dims(const FreeCDGA& a, unsigned cutoff);

PoincareSeries poincare_polynomial(const FreeCDGA& a, unsigned cutoff);

class DegreeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Cartan algebra H*(BH) (x) Lambda(y_1..y_n) with d = 0 on the even
/// generators and d(y_j) = transgressions[j]. The transgressions are
/// polynomials whose variables are exactly `bh_gens` (same names, degrees and
/// order). A nonzero transgression must be homogeneous of degree deg(y_j)+1.
FreeCDGA build_cartan_algebra(const std::vector<GeneratorSpec>& bh_gens, const std::vector<GeneratorSpec>& odd_gens,
                              const std::vector<Polynomial>& transgressions);

}  // namespace cartan
