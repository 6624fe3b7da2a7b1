#pragma once

// Generating series of Hilbert schemes of points, H_X(t) = (H_{A^d,0}(t))^{[X]}.

#include <cstddef>

#include "powstr/ring.hpp"
#include "powstr/series.hpp"
#include "powstr/zeta.hpp"

namespace powstr {

/// Generating series of punctual Hilbert schemes of A^d at the origin.
struct PunctualSeries {
  int dimension = 0;
  TruncatedSeries series;
};

/// Z[L], the default model for surface classes.
RingModel lefschetz_model();

/// Built-in closed forms:
///   d = 1: sum_n t^n (works in any model);
///   d = 2: prod_{i>=1} (1 - L^{i-1} t^i)^{-1} (model must contain L).
/// Other dimensions throw; use punctual_from_coeffs.
PunctualSeries punctual_hilb_series(int d, std::size_t order,
                                    const RingModel &model = lefschetz_model());

/// User-supplied punctual coefficients; constant term must be 1.
PunctualSeries punctual_from_coeffs(int d, TruncatedSeries series);

TruncatedSeries hilb_series(const GrothendieckClass &x,
                            const PunctualSeries &punctual, std::size_t order);
TruncatedSeries hilb_series(const GrothendieckClass &x, int d,
                            std::size_t order);

/// [Hilb^2 X] for a smooth surface: Sym^2 X blown up along the diagonal,
/// i.e. sigma^2([X]) + L [X].
RingElement hilb2_oracle(const GrothendieckClass &x);

/// prod_{n<=N} (H_{A^d,0}(t^n))^{[X]}: the categorical image of H_X(t).
TruncatedSeries cat_hilb_series(const GrothendieckClass &x,
                                const PunctualSeries &punctual,
                                std::size_t order);
TruncatedSeries cat_hilb_series(const GrothendieckClass &x, int d,
                                std::size_t order);

} // namespace powstr
