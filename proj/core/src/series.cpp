#include "cartan/series.hpp"

#include <algorithm>

namespace cartan {

PoincareSeries PoincareSeries::exterior(const std::vector<unsigned>& degrees) {
  std::size_t total = 0;
  for (unsigned d : degrees) total += d;
  std::vector<long long> c(total + 1, 0);
  c[0] = 1;
  std::size_t reach = 0;
  for (unsigned d : degrees) {
    for (std::size_t k = reach + 1; k-- > 0;) c[k + d] += c[k];
    reach += d;
  }
  return PoincareSeries(std::move(c));
}

Integer PoincareSeries::evaluate(long t) const {
  Integer value = 0;
  Integer power = 1;
  for (long long c : coeffs_) {
    value += Integer(static_cast<long>(c)) * power;
    power *= t;
  }
  return value;
}

long long PoincareSeries::sum() const {
  long long s = 0;
  for (long long c : coeffs_) s += c;
  return s;
}

PoincareSeries PoincareSeries::times(const PoincareSeries& other, std::size_t max_degree) const {
  if (coeffs_.empty() || other.coeffs_.empty()) return PoincareSeries();
  const std::size_t len = std::min(max_degree + 1, coeffs_.size() + other.coeffs_.size() - 1);
  std::vector<long long> c(len, 0);
  for (std::size_t i = 0; i < coeffs_.size() && i < len; ++i) {
    for (std::size_t j = 0; j < other.coeffs_.size() && i + j < len; ++j) {
      c[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  return PoincareSeries(std::move(c));
}

PoincareSeries PoincareSeries::truncated(std::size_t max_degree) const {
  std::vector<long long> c = coeffs_;
  if (c.size() > max_degree + 1) c.resize(max_degree + 1);
  return PoincareSeries(std::move(c));
}

std::string PoincareSeries::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const long long c = coeffs_[k];
    if (c == 0) continue;
    const long long mag = c < 0 ? -c : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (k == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag) + "*";
    out += "t";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

}  // namespace cartan
