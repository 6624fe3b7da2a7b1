#pragma once

// Truncated power series in t over a RingModel. A series of order N knows
// c_0..c_N exactly and nothing beyond; reading past N is an error.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "powstr/ring.hpp"

namespace powstr {

class PrecisionError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

class TruncatedSeries {
public:
  /// coeffs must be nonempty and all in model.
  TruncatedSeries(RingModel model, std::vector<RingElement> coeffs);

  /// 1 + O(t^{order+1}).
  static TruncatedSeries one(RingModel model, std::size_t order);

  const RingModel &model() const noexcept { return model_; }
  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  std::span<const RingElement> coefficients() const noexcept { return coeffs_; }

  /// Coefficient of t^k; throws PrecisionError when k > order().
  const RingElement &operator[](std::size_t k) const;

  /// Drops known coefficients above new_order (must not exceed order()).
  TruncatedSeries truncated(std::size_t new_order) const;

  bool has_unit_constant() const;

  TruncatedSeries operator-() const;
  friend TruncatedSeries operator+(const TruncatedSeries &a,
                                   const TruncatedSeries &b);
  friend TruncatedSeries operator-(const TruncatedSeries &a,
                                   const TruncatedSeries &b);
  friend TruncatedSeries operator*(const TruncatedSeries &a,
                                   const TruncatedSeries &b);
  TruncatedSeries &operator*=(const TruncatedSeries &b);

private:
  RingModel model_;
  std::vector<RingElement> coeffs_;
};

TruncatedSeries series_from_coeffs(const RingModel &model,
                                   std::vector<RingElement> coeffs);

/// Cauchy product truncated at min(order A, order B).
TruncatedSeries series_mul(const TruncatedSeries &a, const TruncatedSeries &b);
TruncatedSeries series_add(const TruncatedSeries &a, const TruncatedSeries &b);

/// Multiplicative inverse; requires constant term 1.
TruncatedSeries series_invert(const TruncatedSeries &a);

/// A(t) -> A(t^k). The coefficients strictly between t^{kN} and t^{k(N+1)}
/// are known zeros, so the result has order k(N+1) - 1.
TruncatedSeries series_substitute_power(const TruncatedSeries &a,
                                        std::size_t k);

/// Agreement of c_0..c_up_to; throws PrecisionError if either series is
/// shorter than up_to.
bool series_equal(const TruncatedSeries &a, const TruncatedSeries &b,
                  std::size_t up_to);

/// First index <= up_to where the coefficients differ.
std::optional<std::size_t> first_mismatch(const TruncatedSeries &a,
                                          const TruncatedSeries &b,
                                          std::size_t up_to);

} // namespace powstr
