#pragma once

#include "cartan/polynomial.hpp"

#include <string>
#include <vector>

namespace cartan {

enum class RootFamily { A, B, C, D, G2 };

std::string to_string(RootFamily f);

/// Generating invariants of the Weyl group acting on a Cartan subalgebra,
/// expressed in coordinates x1..x_rank (each of cohomological degree 2).
struct InvariantGenerators {
  ContextPtr context;
  std::vector<Polynomial> polynomials;
  std::vector<unsigned> degrees;  // cohomological: 2 * polynomial degree
};

/// Classical closed-form generators:
///   A_n : e_2..e_{n+1} of x1..x_{n+1} with x_{n+1} = -(x1+...+xn)
///   B_n, C_n : e_1..e_n of the squares x_i^2
///   D_n : e_1..e_{n-1} of the squares, then the Pfaffian x1*...*xn
///   G2 : sum of squares and (x1*x2*x3)^2 in A2 coordinates, x3 = -(x1+x2)
/// Throws std::invalid_argument for unsupported (family, rank).
InvariantGenerators weyl_invariant_generators(RootFamily family, unsigned rank);

/// e_k of the given polynomials (all in one ring); e_0 = 1.
Polynomial elementary_symmetric(const std::vector<Polynomial>& values, unsigned k);

}  // namespace cartan
