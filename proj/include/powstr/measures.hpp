#pragma once

// Substitution homomorphisms between ring models (motivic measures) and the
// check of whether they commute with sigma_t and with the power structure.

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "powstr/ring.hpp"
#include "powstr/series.hpp"

namespace powstr {

class RingHomSpec {
public:
  /// images[i] is the image of source variable i.
  RingHomSpec(RingModel source, RingModel target,
              std::vector<RingElement> images);

  const RingModel &source() const noexcept { return source_; }
  const RingModel &target() const noexcept { return target_; }
  std::span<const RingElement> images() const noexcept { return images_; }

  /// Every image is a single monomial with coefficient 1.
  bool is_monomial() const;

private:
  RingModel source_;
  RingModel target_;
  std::vector<RingElement> images_;
};

/// "L=1", "L=u*v", "u=1, v=1". Every source variable must be assigned.
RingHomSpec parse_hom(const RingModel &source, const RingModel &target,
                      std::string_view text);

RingElement apply_hom(const RingHomSpec &h, const RingElement &a);
TruncatedSeries apply_hom_series(const RingHomSpec &h, const TruncatedSeries &a);

struct LambdaHomCase {
  RingElement sample;
  bool sigma_ok = true;
  std::optional<std::size_t> sigma_mismatch;
  /// phi(sigma_t(a))_k and sigma_t(phi(a))_k at the first mismatch.
  std::optional<std::pair<RingElement, RingElement>> sigma_values;
  bool power_ok = true;
  std::optional<std::size_t> power_mismatch;
};

struct LambdaHomReport {
  std::size_t order = 0;
  std::vector<LambdaHomCase> cases;

  bool passed() const;
};

/// For each sample a: phi(sigma_t(a)) = sigma_t(phi(a)), and
/// phi((A)^a) = (phi A)^{phi(a)} with A = 1 + sum_i s_{j+i} t^i built from
/// the other samples.
LambdaHomReport verify_lambda_hom(const RingHomSpec &h,
                                  std::span<const RingElement> samples,
                                  std::size_t order);

} // namespace powstr
