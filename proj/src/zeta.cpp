#include "powstr/zeta.hpp"

#include "powstr/lambda.hpp"
#include "powstr/strata.hpp"

namespace powstr {

namespace {

// 1/(1 - t^n) to the given order.
TruncatedSeries geometric_at(const RingModel &model, std::size_t n,
                             std::size_t order) {
  std::vector<RingElement> c(order + 1, RingElement(model));
  for (std::size_t k = 0; k <= order; k += n)
    c[k] = RingElement::one(model);
  return TruncatedSeries(model, std::move(c));
}

} // namespace

TruncatedSeries z_mot(const GrothendieckClass &x, std::size_t order) {
  return sigma_series(x.element, order);
}

TruncatedSeries z_cat(const GrothendieckClass &x, std::size_t order) {
  const RingModel &model = x.model();
  TruncatedSeries result = TruncatedSeries::one(model, order);
  if (x.element.is_zero())
    return result;
  for (std::size_t n = 1; n <= order; ++n)
    result *= power_series(geometric_at(model, n, order), x.element, order);
  return result;
}

TruncatedSeries z_mot_product(const GrothendieckClass &x, std::size_t order) {
  TruncatedSeries result = TruncatedSeries::one(x.model(), order);
  for (std::size_t n = 1; n <= order; ++n)
    result *= series_substitute_power(z_mot(x, order / n), n).truncated(order);
  return result;
}

bool GsReport::passed() const {
  return mismatches.empty() &&
         (!strata_mismatches || strata_mismatches->empty());
}

GsReport gs_verify(const GrothendieckClass &x, std::size_t order) {
  GsReport report{order, z_cat(x, order), z_mot_product(x, order), {}, {}};
  for (std::size_t k = 0; k <= order; ++k)
    if (!(report.categorical[k] == report.motivic_product[k]))
      report.mismatches.push_back(k);

  if (x.model().kind() == RingKind::integers) {
    const Integer m = *x.element.as_integer();
    std::vector<std::size_t> bad;
    for (std::size_t k = 0; k <= order; ++k) {
      auto strata = cat_sym_strata_chi(m, static_cast<std::int64_t>(k));
      if (*report.categorical[k].as_integer() != strata)
        bad.push_back(k);
    }
    report.strata_mismatches = std::move(bad);
  }
  return report;
}

TruncatedSeries fock_character(const Integer &chi, std::size_t order) {
  const RingModel z = RingModel::integers();
  return z_cat({RingElement::constant(z, chi), "Fock"}, order);
}

} // namespace powstr
