#ifndef ADAPL_TYPES_HPP
#define ADAPL_TYPES_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace adapl {

using Vector = std::vector<double>;

/// Axis-aligned region on which a problem's constants are certified.
struct Box {
  Vector lower;
  Vector upper;

  static Box cube(std::size_t dimension, double lo, double hi) {
    return Box{Vector(dimension, lo), Vector(dimension, hi)};
  }

  std::size_t dimension() const { return lower.size(); }

  bool operator==(const Box&) const = default;
};

inline bool all_finite(std::span<const double> v) {
  for (double e : v) {
    if (!std::isfinite(e)) return false;
  }
  return true;
}

inline double squared_norm(std::span<const double> v) {
  double s = 0.0;
  for (double e : v) s += e * e;
  return s;
}

inline void require_finite(std::span<const double> v, const char* what) {
  if (!all_finite(v)) {
    throw std::domain_error(std::string(what) + " contains non-finite values");
  }
}

}  // namespace adapl

#endif  // ADAPL_TYPES_HPP
