#pragma once

// sigma_t operations and the power structure (A(t))^m they determine.
//
// Every model carries the monomial lambda-structure: sigma_t(mu) = 1/(1 - mu t)
// for a monomial mu with coefficient 1, extended by
// sigma_t(a + b) = sigma_t(a) sigma_t(b). Any A(t) = 1 + O(t) factors uniquely
// as prod_i sigma_{t^i}(b_i), and (A(t))^m := prod_i sigma_{t^i}(b_i m).

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "powstr/ring.hpp"
#include "powstr/series.hpp"

namespace powstr {

/// sigma_t(a) = (1 - t)^{-a} to order N.
TruncatedSeries sigma_series(const RingElement &a, std::size_t order);

/// sigma_{t^step}(a) to order N.
TruncatedSeries sigma_series_at(const RingElement &a, std::size_t order,
                                std::size_t step);

/// b_1..b_N with A = prod_{i<=N} sigma_{t^i}(b_i) + O(t^{N+1}), N = A.order().
/// Entry i-1 of the result holds b_i.
std::vector<RingElement> extract_exponents(const TruncatedSeries &a);

/// prod_{i<=N} sigma_{t^i}(b_i); inverse of extract_exponents.
TruncatedSeries reconstruct_from_exponents(const RingModel &model,
                                           std::span<const RingElement> b,
                                           std::size_t order);

/// (A(t))^m to order N (N <= A.order()).
TruncatedSeries power_series(const TruncatedSeries &a, const RingElement &m,
                             std::size_t order);

struct PropertyResult {
  int property = 0;
  std::string statement;
  std::size_t cases = 0;
  bool passed = true;
  std::optional<std::size_t> failing_case;
  std::optional<std::size_t> failing_coefficient;
};

struct AxiomReport {
  std::size_t order = 0;
  std::vector<PropertyResult> properties;

  bool passed() const;
};

/// Checks the seven power-structure axioms on the given samples. Case j of
/// a two-argument property pairs series j with series j+1 and element j
/// with element j+1 (cyclically).
AxiomReport verify_axioms(const RingModel &model,
                          std::span<const RingElement> elements,
                          std::span<const TruncatedSeries> series,
                          std::size_t order);

} // namespace powstr
