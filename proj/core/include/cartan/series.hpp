#pragma once

#include "cartan/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace cartan {

/// Integer coefficient list indexed by degree; coefficient(k) is the
/// multiplier of t^k.
class PoincareSeries {
 public:
  PoincareSeries() = default;
  explicit PoincareSeries(std::vector<long long> coefficients) : coeffs_(std::move(coefficients)) {}

  /// (1 + t^d1)(1 + t^d2)... for odd exterior generators.
  static PoincareSeries exterior(const std::vector<unsigned>& degrees);

  const std::vector<long long>& coefficients() const { return coeffs_; }
  long long coefficient(std::size_t degree) const {
    return degree < coeffs_.size() ? coeffs_[degree] : 0;
  }
  std::size_t size() const { return coeffs_.size(); }

  Integer evaluate(long t) const;
  long long sum() const;

  /// Product truncated to degrees <= max_degree.
  PoincareSeries times(const PoincareSeries& other, std::size_t max_degree) const;
  PoincareSeries truncated(std::size_t max_degree) const;

  /// "1 + 2*t^2 + t^4"; "0" when every coefficient vanishes.
  std::string to_string() const;

  bool operator==(const PoincareSeries&) const = default;

 private:
  std::vector<long long> coeffs_;
};

}  // namespace cartan
