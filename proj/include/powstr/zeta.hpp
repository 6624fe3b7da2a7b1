#pragma once

// Motivic and categorical zeta functions and the identity relating them.
//
// The categorical measure of a class is modeled by the class itself: both
// zeta functions take values in the same coefficient ring, and the
// difference between them lies in the formulas, a single sigma versus a
// product over all n.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "powstr/ring.hpp"
#include "powstr/series.hpp"

namespace powstr {

struct GrothendieckClass {
  RingElement element;
  std::string label;

  const RingModel &model() const noexcept { return element.model(); }
};

/// sum_n [Sym^n X] t^n = (1/(1-t))^{[X]}.
TruncatedSeries z_mot(const GrothendieckClass &x, std::size_t order);

/// prod_{n=1}^{N} (1/(1-t^n))^{[X]}, each factor through power_series.
TruncatedSeries z_cat(const GrothendieckClass &x, std::size_t order);

/// prod_{n<=N} Z_mot(X, t^n), the n-th factor known to order floor(N/n).
TruncatedSeries z_mot_product(const GrothendieckClass &x, std::size_t order);

struct GsReport {
  std::size_t order = 0;
  TruncatedSeries categorical;   // z_cat
  TruncatedSeries motivic_product;
  std::vector<std::size_t> mismatches;
  /// Present only in the Z model: coefficients of z_cat against the
  /// stratified sums cat_sym_strata_chi.
  std::optional<std::vector<std::size_t>> strata_mismatches;

  std::size_t coefficients_checked() const { return order + 1; }
  bool passed() const;
};

/// Checks Z_cat(X, t) = prod_n Z_mot(X, t^n) coefficient by coefficient.
GsReport gs_verify(const GrothendieckClass &x, std::size_t order);

/// Graded character prod (1 - q^n)^{-chi} of the Fock space on chi towers.
TruncatedSeries fock_character(const Integer &chi, std::size_t order);

} // namespace powstr
