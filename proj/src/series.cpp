#include "powstr/series.hpp"

#include <algorithm>
#include <string>

namespace powstr {

TruncatedSeries::TruncatedSeries(RingModel model,
                                 std::vector<RingElement> coeffs)
    : model_(std::move(model)), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty())
    throw std::invalid_argument("series needs at least one coefficient");
  for (const auto &c : coeffs_)
    require_same_model(model_, c.model(), "series coefficient");
}

TruncatedSeries TruncatedSeries::one(RingModel model, std::size_t order) {
  std::vector<RingElement> c(order + 1, RingElement(model));
  c[0] = RingElement::one(model);
  return TruncatedSeries(std::move(model), std::move(c));
}

const RingElement &TruncatedSeries::operator[](std::size_t k) const {
  if (k >= coeffs_.size())
    throw PrecisionError("coefficient t^" + std::to_string(k) +
                         " requested from a series of order " +
                         std::to_string(order()));
  return coeffs_[k];
}

TruncatedSeries TruncatedSeries::truncated(std::size_t new_order) const {
  if (new_order > order())
    throw PrecisionError("cannot extend a series of order " +
                         std::to_string(order()) + " to order " +
                         std::to_string(new_order));
  return TruncatedSeries(
      model_, std::vector<RingElement>(coeffs_.begin(),
                                       coeffs_.begin() + new_order + 1));
}

bool TruncatedSeries::has_unit_constant() const {
  auto c = coeffs_[0].as_integer();
  return c && *c == 1;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r = *this;
  for (auto &c : r.coeffs_)
    c = -c;
  return r;
}

TruncatedSeries operator+(const TruncatedSeries &a, const TruncatedSeries &b) {
  require_same_model(a.model_, b.model_, "series add");
  std::size_t n = std::min(a.order(), b.order());
  std::vector<RingElement> c;
  c.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k)
    c.push_back(a.coeffs_[k] + b.coeffs_[k]);
  return TruncatedSeries(a.model_, std::move(c));
}

TruncatedSeries operator-(const TruncatedSeries &a, const TruncatedSeries &b) {
  return a + (-b);
}

TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b) {
  require_same_model(a.model_, b.model_, "series mul");
  std::size_t n = std::min(a.order(), b.order());
  std::vector<RingElement> c(n + 1, RingElement(a.model_));
  for (std::size_t i = 0; i <= n; ++i) {
    if (a.coeffs_[i].is_zero())
      continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (b.coeffs_[j].is_zero())
        continue;
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return TruncatedSeries(a.model_, std::move(c));
}

TruncatedSeries &TruncatedSeries::operator*=(const TruncatedSeries &b) {
  *this = *this * b;
  return *this;
}

TruncatedSeries series_from_coeffs(const RingModel &model,
                                   std::vector<RingElement> coeffs) {
  return TruncatedSeries(model, std::move(coeffs));
}

TruncatedSeries series_mul(const TruncatedSeries &a, const TruncatedSeries &b) {
  return a * b;
}

TruncatedSeries series_add(const TruncatedSeries &a, const TruncatedSeries &b) {
  return a + b;
}

TruncatedSeries series_invert(const TruncatedSeries &a) {
  if (!a.has_unit_constant())
    throw std::domain_error("series_invert: constant term must be 1, got " +
                            format_element(a[0]));
  const std::size_t n = a.order();
  std::vector<RingElement> inv(n + 1, RingElement(a.model()));
  inv[0] = RingElement::one(a.model());
  for (std::size_t k = 1; k <= n; ++k) {
    RingElement acc(a.model());
    for (std::size_t i = 1; i <= k; ++i)
      if (!a[i].is_zero() && !inv[k - i].is_zero())
        acc += a[i] * inv[k - i];
    inv[k] = -acc;
  }
  return TruncatedSeries(a.model(), std::move(inv));
}

TruncatedSeries series_substitute_power(const TruncatedSeries &a,
                                        std::size_t k) {
  if (k == 0)
    throw std::invalid_argument("series_substitute_power: k must be >= 1");
  const std::size_t out_order = k * (a.order() + 1) - 1;
  std::vector<RingElement> c(out_order + 1, RingElement(a.model()));
  for (std::size_t i = 0; i <= a.order(); ++i)
    c[i * k] = a[i];
  return TruncatedSeries(a.model(), std::move(c));
}

std::optional<std::size_t> first_mismatch(const TruncatedSeries &a,
                                          const TruncatedSeries &b,
                                          std::size_t up_to) {
  require_same_model(a.model(), b.model(), "series compare");
  if (up_to > a.order())
    throw PrecisionError("first series has order " + std::to_string(a.order()) +
                         ", comparison needs " + std::to_string(up_to));
  if (up_to > b.order())
    throw PrecisionError("second series has order " +
                         std::to_string(b.order()) + ", comparison needs " +
                         std::to_string(up_to));
  for (std::size_t k = 0; k <= up_to; ++k)
    if (!(a[k] == b[k]))
      return k;
  return std::nullopt;
}

bool series_equal(const TruncatedSeries &a, const TruncatedSeries &b,
                  std::size_t up_to) {
  return !first_mismatch(a, b, up_to).has_value();
}

} // namespace powstr
