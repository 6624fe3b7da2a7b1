#include "powstr/hilbert.hpp"

#include <string>

#include "powstr/lambda.hpp"

namespace powstr {

RingModel lefschetz_model() {
  static const RingModel zl = RingModel::polynomial({"L"});
  return zl;
}

PunctualSeries punctual_hilb_series(int d, std::size_t order,
                                    const RingModel &model) {
  if (d == 1) {
    std::vector<RingElement> c(order + 1, RingElement::one(model));
    return {1, TruncatedSeries(model, std::move(c))};
  }
  if (d == 2) {
    auto l_index = model.index_of("L");
    if (!l_index)
      throw ModelMismatch("punctual series of A^2 needs a model with L, got " +
                          model.name());
    // prod_i sigma_{t^i}(L^{i-1})
    TruncatedSeries s = TruncatedSeries::one(model, order);
    for (std::size_t i = 1; i <= order; ++i) {
      Monomial m(model.num_variables(), 0);
      m[*l_index] = static_cast<std::int32_t>(i - 1);
      s *= sigma_series_at(RingElement::monomial(model, std::move(m)), order, i);
    }
    return {2, std::move(s)};
  }
  throw std::invalid_argument("no built-in punctual Hilbert series for d = " +
                              std::to_string(d) +
                              "; supply the coefficients explicitly");
}

PunctualSeries punctual_from_coeffs(int d, TruncatedSeries series) {
  if (d < 1)
    throw std::invalid_argument("dimension must be >= 1");
  if (!series.has_unit_constant())
    throw std::invalid_argument("punctual series must have constant term 1");
  return {d, std::move(series)};
}

TruncatedSeries hilb_series(const GrothendieckClass &x,
                            const PunctualSeries &punctual,
                            std::size_t order) {
  require_same_model(punctual.series.model(), x.model(), "hilb_series");
  return power_series(punctual.series, x.element, order);
}

TruncatedSeries hilb_series(const GrothendieckClass &x, int d,
                            std::size_t order) {
  return hilb_series(x, punctual_hilb_series(d, order, x.model()), order);
}

RingElement hilb2_oracle(const GrothendieckClass &x) {
  auto l_index = x.model().index_of("L");
  if (!l_index)
    throw ModelMismatch("hilb2_oracle needs a model with L, got " +
                        x.model().name());
  return sigma_series(x.element, 2)[2] +
         RingElement::variable(x.model(), "L") * x.element;
}

TruncatedSeries cat_hilb_series(const GrothendieckClass &x,
                                const PunctualSeries &punctual,
                                std::size_t order) {
  require_same_model(punctual.series.model(), x.model(), "cat_hilb_series");
  if (punctual.series.order() < order)
    throw PrecisionError("cat_hilb_series: punctual series known to order " +
                         std::to_string(punctual.series.order()));
  TruncatedSeries result = TruncatedSeries::one(x.model(), order);
  if (x.element.is_zero())
    return result;
  for (std::size_t n = 1; n <= order; ++n) {
    auto base = series_substitute_power(punctual.series.truncated(order / n), n);
    result *= power_series(base, x.element, order);
  }
  return result;
}

TruncatedSeries cat_hilb_series(const GrothendieckClass &x, int d,
                                std::size_t order) {
  return cat_hilb_series(x, punctual_hilb_series(d, order, x.model()), order);
}

} // namespace powstr
