#include "powstr/lambda.hpp"

#include <algorithm>
#include <functional>

namespace powstr {

namespace {

// (1 - mu t)^{-c}: coefficient n is binom(c + n - 1, n) mu^n.
TruncatedSeries monomial_sigma(const RingModel &model,
                               const RingElement::Term &term,
                               std::size_t order) {
  std::vector<RingElement> c;
  c.reserve(order + 1);
  Integer binom = 1;
  Monomial power(term.exponents.size(), 0);
  for (std::size_t n = 0; n <= order; ++n) {
    if (n > 0) {
      // binom(c+n-1, n) = binom(c+n-2, n-1) * (c+n-1) / n
      binom = binom * (term.coeff + (n - 1)) / n;
      for (std::size_t v = 0; v < power.size(); ++v)
        power[v] += term.exponents[v];
    }
    if (binom.is_zero()) {
      c.resize(order + 1, RingElement(model));
      break;
    }
    c.push_back(RingElement::from_terms(model, {{power, binom}}));
  }
  return TruncatedSeries(model, std::move(c));
}

} // namespace

TruncatedSeries sigma_series(const RingElement &a, std::size_t order) {
  const RingModel &model = a.model();
  TruncatedSeries result = TruncatedSeries::one(model, order);
  for (const auto &term : a.terms())
    result *= monomial_sigma(model, term, order);
  return result;
}

TruncatedSeries sigma_series_at(const RingElement &a, std::size_t order,
                                std::size_t step) {
  if (step == 0)
    throw std::invalid_argument("sigma_series_at: step must be >= 1");
  if (a.is_zero())
    return TruncatedSeries::one(a.model(), order);
  return series_substitute_power(sigma_series(a, order / step), step)
      .truncated(order);
}

std::vector<RingElement> extract_exponents(const TruncatedSeries &a) {
  if (!a.has_unit_constant())
    throw std::domain_error("extract_exponents: constant term must be 1, got " +
                            format_element(a[0]));
  const std::size_t n = a.order();
  std::vector<RingElement> b;
  b.reserve(n);
  TruncatedSeries rest = a;
  for (std::size_t i = 1; i <= n; ++i) {
    // rest = 1 + O(t^i) here
    b.push_back(rest[i]);
    if (!rest[i].is_zero() && i < n)
      rest *= sigma_series_at(-rest[i], n, i);
  }
  return b;
}

TruncatedSeries reconstruct_from_exponents(const RingModel &model,
                                           std::span<const RingElement> b,
                                           std::size_t order) {
  TruncatedSeries result = TruncatedSeries::one(model, order);
  for (std::size_t i = 1; i <= std::min(order, b.size()); ++i) {
    require_same_model(model, b[i - 1].model(), "reconstruct_from_exponents");
    if (!b[i - 1].is_zero())
      result *= sigma_series_at(b[i - 1], order, i);
  }
  return result;
}

TruncatedSeries power_series(const TruncatedSeries &a, const RingElement &m,
                             std::size_t order) {
  require_same_model(a.model(), m.model(), "power_series");
  if (!a.has_unit_constant())
    throw std::domain_error("power_series: constant term must be 1, got " +
                            format_element(a[0]));
  if (order > a.order())
    throw PrecisionError("power_series: base known to order " +
                         std::to_string(a.order()) + ", requested " +
                         std::to_string(order));
  if (m.is_zero())
    return TruncatedSeries::one(a.model(), order);
  auto b = extract_exponents(a.truncated(order));
  for (auto &bi : b)
    if (!bi.is_zero())
      bi = bi * m;
  return reconstruct_from_exponents(a.model(), b, order);
}

bool AxiomReport::passed() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyResult &p) { return p.passed; });
}

AxiomReport verify_axioms(const RingModel &model,
                          std::span<const RingElement> elements,
                          std::span<const TruncatedSeries> series,
                          std::size_t order) {
  for (const auto &e : elements)
    require_same_model(model, e.model(), "verify_axioms element");
  for (const auto &s : series) {
    require_same_model(model, s.model(), "verify_axioms series");
    if (!s.has_unit_constant())
      throw std::invalid_argument("verify_axioms: sample series must start with 1");
    if (s.order() < order)
      throw PrecisionError("verify_axioms: sample series shorter than order");
  }

  AxiomReport report;
  report.order = order;
  const std::size_t r = elements.size();
  const std::size_t s = series.size();
  const std::size_t both = (r == 0 || s == 0) ? 0 : std::max(r, s);

  auto elem = [&](std::size_t j) -> const RingElement & { return elements[j % r]; };
  auto ser = [&](std::size_t j) { return series[j % s].truncated(order); };

  auto run = [&](int id, std::string statement, std::size_t cases,
                 const std::function<std::optional<std::size_t>(std::size_t)> &check) {
    PropertyResult p{id, std::move(statement), cases, true, {}, {}};
    for (std::size_t j = 0; j < cases; ++j) {
      if (auto bad = check(j)) {
        p.passed = false;
        p.failing_case = j;
        p.failing_coefficient = *bad;
        break;
      }
    }
    report.properties.push_back(std::move(p));
  };

  const RingElement zero(model);
  const RingElement one = RingElement::one(model);

  run(1, "(A)^0 = 1", s, [&](std::size_t j) {
    return first_mismatch(power_series(ser(j), zero, order),
                          TruncatedSeries::one(model, order), order);
  });
  run(2, "(A)^1 = A", s, [&](std::size_t j) {
    auto a = ser(j);
    return first_mismatch(power_series(a, one, order), a, order);
  });
  run(3, "(A B)^m = A^m B^m", both, [&](std::size_t j) {
    auto a = ser(j);
    auto b = ser(j + 1);
    const auto &m = elem(j);
    return first_mismatch(power_series(a * b, m, order),
                          power_series(a, m, order) * power_series(b, m, order),
                          order);
  });
  run(4, "(A)^(m+n) = A^m A^n", both, [&](std::size_t j) {
    auto a = ser(j);
    const auto &m = elem(j);
    const auto &n = elem(j + 1);
    return first_mismatch(power_series(a, m + n, order),
                          power_series(a, m, order) * power_series(a, n, order),
                          order);
  });
  run(5, "(A)^(mn) = ((A)^m)^n", both, [&](std::size_t j) {
    auto a = ser(j);
    const auto &m = elem(j);
    const auto &n = elem(j + 1);
    return first_mismatch(power_series(a, m * n, order),
                          power_series(power_series(a, m, order), n, order),
                          order);
  });
  run(6, "(1+t)^m = 1 + m t + O(t^2)", r, [&](std::size_t j) {
    const auto &m = elem(j);
    std::vector<RingElement> c(std::max<std::size_t>(order, 1) + 1, zero);
    c[0] = one;
    c[1] = one;
    auto p = power_series(TruncatedSeries(model, c), m, c.size() - 1);
    std::vector<RingElement> expect(2, one);
    expect[1] = m;
    return first_mismatch(p.truncated(1), TruncatedSeries(model, expect), 1);
  });
  run(7, "(A(t^k))^m = (A(t))^m |_{t -> t^k}", both, [&](std::size_t j) {
    auto a = ser(j);
    const auto &m = elem(j);
    const std::size_t k = 2 + j % 2;
    auto lhs = power_series(series_substitute_power(a, k), m, order);
    auto rhs = series_substitute_power(power_series(a, m, order), k);
    return first_mismatch(lhs, rhs, order);
  });
  return report;
}

} // namespace powstr
