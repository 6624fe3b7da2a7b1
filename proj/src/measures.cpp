#include "powstr/measures.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "powstr/lambda.hpp"

namespace powstr {

RingHomSpec::RingHomSpec(RingModel source, RingModel target,
                         std::vector<RingElement> images)
    : source_(std::move(source)), target_(std::move(target)),
      images_(std::move(images)) {
  if (images_.size() != source_.num_variables())
    throw std::invalid_argument("homomorphism needs one image per source "
                                "variable (" +
                                std::to_string(source_.num_variables()) +
                                "), got " + std::to_string(images_.size()));
  for (const auto &im : images_)
    require_same_model(target_, im.model(), "homomorphism image");
}

bool RingHomSpec::is_monomial() const {
  return std::all_of(images_.begin(), images_.end(), [](const RingElement &e) {
    return e.size() == 1 && e.terms()[0].coeff == 1;
  });
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

} // namespace

RingHomSpec parse_hom(const RingModel &source, const RingModel &target,
                      std::string_view text) {
  std::vector<std::optional<RingElement>> images(source.num_variables());
  std::size_t offset = 0;
  while (offset <= text.size()) {
    auto comma = text.find(',', offset);
    auto piece = text.substr(offset, comma == std::string_view::npos
                                         ? std::string_view::npos
                                         : comma - offset);
    auto eq = piece.find('=');
    if (eq == std::string_view::npos)
      throw ParseError("expected 'var=element'", offset);
    auto name = trim(piece.substr(0, eq));
    auto idx = source.index_of(name);
    if (!idx)
      throw ParseError("unknown source variable '" + std::string(name) + "'",
                       offset);
    if (images[*idx])
      throw ParseError("variable '" + std::string(name) + "' assigned twice",
                       offset);
    try {
      images[*idx] = parse_element(target, piece.substr(eq + 1));
    } catch (const ParseError &e) {
      throw ParseError(std::string("in image of ") + std::string(name) + ": " +
                           e.what(),
                       offset + eq + 1 + e.position());
    }
    if (comma == std::string_view::npos)
      break;
    offset = comma + 1;
  }
  std::vector<RingElement> out;
  out.reserve(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!images[i])
      throw std::invalid_argument("no image given for variable '" +
                                  source.variables()[i] + "'");
    out.push_back(std::move(*images[i]));
  }
  return RingHomSpec(source, target, std::move(out));
}

RingElement apply_hom(const RingHomSpec &h, const RingElement &a) {
  require_same_model(h.source(), a.model(), "apply_hom");
  const auto images = h.images();
  // powers[v] caches image_v^e for exponents seen so far.
  std::vector<std::vector<std::pair<std::int32_t, RingElement>>> powers(
      images.size());
  auto power_of = [&](std::size_t v, std::int32_t e) -> RingElement {
    for (const auto &[exp, val] : powers[v])
      if (exp == e)
        return val;
    RingElement val = images[v].pow(e);
    powers[v].emplace_back(e, val);
    return val;
  };

  RingElement result(h.target());
  for (const auto &term : a.terms()) {
    RingElement t = RingElement::constant(h.target(), term.coeff);
    for (std::size_t v = 0; v < images.size() && !t.is_zero(); ++v)
      if (term.exponents[v] != 0)
        t *= power_of(v, term.exponents[v]);
    result += t;
  }
  return result;
}

TruncatedSeries apply_hom_series(const RingHomSpec &h,
                                 const TruncatedSeries &a) {
  require_same_model(h.source(), a.model(), "apply_hom_series");
  std::vector<RingElement> c;
  c.reserve(a.order() + 1);
  for (const auto &x : a.coefficients())
    c.push_back(apply_hom(h, x));
  return TruncatedSeries(h.target(), std::move(c));
}

bool LambdaHomReport::passed() const {
  return std::all_of(cases.begin(), cases.end(), [](const LambdaHomCase &c) {
    return c.sigma_ok && c.power_ok;
  });
}

LambdaHomReport verify_lambda_hom(const RingHomSpec &h,
                                  std::span<const RingElement> samples,
                                  std::size_t order) {
  LambdaHomReport report;
  report.order = order;
  const std::size_t r = samples.size();
  for (std::size_t j = 0; j < r; ++j) {
    const RingElement &a = samples[j];
    require_same_model(h.source(), a.model(), "verify_lambda_hom");
    LambdaHomCase c{a, true, {}, {}, true, {}};

    auto lhs = apply_hom_series(h, sigma_series(a, order));
    auto rhs = sigma_series(apply_hom(h, a), order);
    if (auto k = first_mismatch(lhs, rhs, order)) {
      c.sigma_ok = false;
      c.sigma_mismatch = k;
      c.sigma_values = std::make_pair(lhs[*k], rhs[*k]);
    }

    std::vector<RingElement> coeffs;
    coeffs.reserve(order + 1);
    coeffs.push_back(RingElement::one(h.source()));
    for (std::size_t i = 1; i <= order; ++i)
      coeffs.push_back(samples[(j + i) % r]);
    TruncatedSeries base(h.source(), std::move(coeffs));
    auto p_lhs = apply_hom_series(h, power_series(base, a, order));
    auto p_rhs =
        power_series(apply_hom_series(h, base), apply_hom(h, a), order);
    if (auto k = first_mismatch(p_lhs, p_rhs, order)) {
      c.power_ok = false;
      c.power_mismatch = k;
    }
    report.cases.push_back(std::move(c));
  }
  return report;
}

} // namespace powstr
