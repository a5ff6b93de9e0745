#include "cartan/weyl.hpp"

#include <stdexcept>

namespace cartan {

std::string to_string(RootFamily f) {
  switch (f) {
    case RootFamily::A: return "A";
    case RootFamily::B: return "B";
    case RootFamily::C: return "C";
    case RootFamily::D: return "D";
    case RootFamily::G2: return "G2";
  }
  return "?";
}

Polynomial elementary_symmetric(const std::vector<Polynomial>& values, unsigned k) {
  if (values.empty()) throw std::invalid_argument("elementary_symmetric: no values");
  const auto& ctx = values.front().context_ptr();
  // e[j] after processing a prefix of the values; standard DP.
  std::vector<Polynomial> e(k + 1, Polynomial(ctx));
  e[0] = Polynomial::constant(ctx, 1);
  for (const auto& v : values) {
    for (unsigned j = k; j >= 1; --j) e[j] += e[j - 1] * v;
  }
  return e[k];
}

namespace {

ContextPtr coordinates(unsigned n) {
  std::vector<std::string> names;
  for (unsigned i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return VariableContext::make(std::move(names));
}

std::vector<Polynomial> variables(const ContextPtr& ctx) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < ctx->size(); ++i) out.push_back(Polynomial::variable(ctx, i));
  return out;
}

std::vector<Polynomial> squares(const std::vector<Polynomial>& xs) {
  std::vector<Polynomial> out;
  for (const auto& x : xs) out.push_back(x * x);
  return out;
}

// Appends the trace-zero coordinate -(x1+...+xn).
std::vector<Polynomial> trace_zero(std::vector<Polynomial> xs) {
  Polynomial last(xs.front().context_ptr());
  for (const auto& x : xs) last -= x;
  xs.push_back(std::move(last));
  return xs;
}

}  // namespace

InvariantGenerators weyl_invariant_generators(RootFamily family, unsigned rank) {
  if (rank == 0) throw std::invalid_argument("weyl_invariant_generators: rank must be positive");
  InvariantGenerators out;
  switch (family) {
    case RootFamily::A: {
      out.context = coordinates(rank);
      const auto xs = trace_zero(variables(out.context));
      for (unsigned k = 2; k <= rank + 1; ++k) {
        out.polynomials.push_back(elementary_symmetric(xs, k));
        out.degrees.push_back(2 * k);
      }
      break;
    }
    case RootFamily::B:
    case RootFamily::C: {
      out.context = coordinates(rank);
      const auto sq = squares(variables(out.context));
      for (unsigned k = 1; k <= rank; ++k) {
        out.polynomials.push_back(elementary_symmetric(sq, k));
        out.degrees.push_back(4 * k);
      }
      break;
    }
    case RootFamily::D: {
      if (rank < 2) throw std::invalid_argument("weyl_invariant_generators: D_n needs n >= 2");
      out.context = coordinates(rank);
      const auto xs = variables(out.context);
      const auto sq = squares(xs);
      for (unsigned k = 1; k + 1 <= rank; ++k) {
        out.polynomials.push_back(elementary_symmetric(sq, k));
        out.degrees.push_back(4 * k);
      }
      Polynomial pfaffian = Polynomial::constant(out.context, 1);
      for (const auto& x : xs) pfaffian *= x;
      out.polynomials.push_back(std::move(pfaffian));
      out.degrees.push_back(2 * rank);
      break;
    }
    case RootFamily::G2: {
      if (rank != 2) throw std::invalid_argument("weyl_invariant_generators: G2 has rank 2");
      out.context = coordinates(2);
      const auto xs = trace_zero(variables(out.context));
      Polynomial sum_sq(out.context);
      for (const auto& x : xs) sum_sq += x * x;
      out.polynomials.push_back(std::move(sum_sq));
      out.degrees.push_back(4);
      out.polynomials.push_back((xs[0] * xs[1] * xs[2]).pow(2));
      out.degrees.push_back(12);
      break;
    }
  }
  return out;
}

}  // namespace cartan
