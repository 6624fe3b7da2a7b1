#include "powstr/cli.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "powstr/hilbert.hpp"
#include "powstr/lambda.hpp"
#include "powstr/measures.hpp"
#include "powstr/strata.hpp"
#include "powstr/zeta.hpp"

namespace powstr::cli {

using json = nlohmann::ordered_json;

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos == std::string_view::npos
                                            ? std::string_view::npos
                                            : pos - start));
    if (pos == std::string_view::npos)
      return out;
    start = pos + 1;
  }
}

std::string strip(std::string_view s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos)
    return {};
  auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

RingElement parse_flag(const RingModel &model, const std::string &flag,
                       const std::string &text) {
  try {
    return parse_element(model, text);
  } catch (const ParseError &e) {
    throw UsageError("malformed " + flag + " '" + text + "': " + e.what());
  }
}

std::vector<RingElement> parse_list(const RingModel &model,
                                    const std::string &flag,
                                    const std::string &text) {
  std::vector<RingElement> out;
  for (const auto &piece : split(text, ','))
    out.push_back(parse_flag(model, flag, piece));
  return out;
}

RingElement random_element(const RingModel &model, std::mt19937_64 &rng,
                           bool effective) {
  std::uniform_int_distribution<int> nterms(0, 3);
  std::uniform_int_distribution<int> coeff(effective ? 0 : -2, 2);
  std::uniform_int_distribution<int> expo(0, 2);
  std::vector<RingElement::Term> terms;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    Monomial m(model.num_variables(), 0);
    for (auto &e : m)
      e = expo(rng);
    terms.push_back({std::move(m), coeff(rng)});
  }
  return RingElement::from_terms(model, std::move(terms));
}

TruncatedSeries random_series(const RingModel &model, std::size_t order,
                              std::mt19937_64 &rng) {
  std::vector<RingElement> c{RingElement::one(model)};
  for (std::size_t k = 1; k <= order; ++k)
    c.push_back(random_element(model, rng, false));
  return TruncatedSeries(model, std::move(c));
}

json coefficient_list(const TruncatedSeries &s) {
  json arr = json::array();
  for (const auto &c : s.coefficients())
    arr.push_back(format_element(c));
  return arr;
}

void print_series(std::ostringstream &out, const TruncatedSeries &s) {
  for (std::size_t k = 0; k <= s.order(); ++k)
    out << "t^" << k << ": " << format_element(s[k]) << '\n';
}

std::string pass_fail(bool ok) { return ok ? "PASS" : "FAIL"; }

std::string index_list(const std::vector<std::size_t> &v) {
  std::string s;
  for (auto k : v)
    s += (s.empty() ? "" : ", ") + std::string("t^") + std::to_string(k);
  return s;
}

struct Result {
  std::optional<TruncatedSeries> series;
  json report = json::object();
  std::vector<std::string> summary;
  bool mismatch = false;
};

const RingElement &require_element(const Command &c, const char *flag) {
  if (!c.element)
    throw UsageError(std::string("missing required flag ") + flag);
  return *c.element;
}

TruncatedSeries apply_measure(const Command &c, TruncatedSeries s,
                              json &report) {
  if (!c.hom)
    return s;
  RingModel target = infer_hom_target(*c.hom);
  RingHomSpec h = parse_hom(s.model(), target, *c.hom);
  report["measure"] = *c.hom;
  report["target_model"] = target.name();
  return apply_hom_series(h, s);
}

Result run_zeta(const Command &c) {
  GrothendieckClass x{require_element(c, "--class"), ""};
  Result r;
  if (c.kind == "mot")
    r.series = z_mot(x, c.order);
  else if (c.kind == "cat")
    r.series = z_cat(x, c.order);
  else
    throw UsageError("unknown --kind '" + c.kind + "' (expected mot or cat)");
  r.report["verb"] = "zeta";
  r.report["kind"] = c.kind;
  r.report["model"] = c.model.name();
  r.report["class"] = format_element(x.element);
  r.series = apply_measure(c, *r.series, r.report);
  return r;
}

PunctualSeries punctual_for(const Command &c) {
  if (!c.series.empty()) {
    if (c.series.size() < c.order + 1)
      throw UsageError("--series supplies " + std::to_string(c.series.size()) +
                       " punctual coefficients, order " +
                       std::to_string(c.order) + " needs " +
                       std::to_string(c.order + 1));
    return punctual_from_coeffs(c.d, TruncatedSeries(c.model, c.series));
  }
  return punctual_hilb_series(c.d, c.order, c.model);
}

Result run_hilb(const Command &c) {
  GrothendieckClass x{require_element(c, "--surface"), ""};
  Result r;
  auto punctual = punctual_for(c);
  if (c.kind == "mot")
    r.series = hilb_series(x, punctual, c.order);
  else if (c.kind == "cat")
    r.series = cat_hilb_series(x, punctual, c.order);
  else
    throw UsageError("unknown --kind '" + c.kind + "' (expected mot or cat)");
  r.report["verb"] = "hilb";
  r.report["kind"] = c.kind;
  r.report["model"] = c.model.name();
  r.report["d"] = c.d;
  r.report["class"] = format_element(x.element);
  r.series = apply_measure(c, *r.series, r.report);
  return r;
}

Result run_power(const Command &c) {
  if (c.series.empty())
    throw UsageError("missing required flag --series");
  if (!c.exponent)
    throw UsageError("missing required flag --exponent");
  // The series text is a polynomial: unspecified coefficients are zero.
  std::vector<RingElement> coeffs = c.series;
  if (coeffs.size() < c.order + 1)
    coeffs.resize(c.order + 1, RingElement(c.model));
  TruncatedSeries base(c.model, std::move(coeffs));
  Result r;
  r.series = power_series(base, *c.exponent, c.order);
  r.report["verb"] = "power";
  r.report["model"] = c.model.name();
  r.report["exponent"] = format_element(*c.exponent);
  r.series = apply_measure(c, *r.series, r.report);
  return r;
}

Result verify_gs(const Command &c) {
  GrothendieckClass x{require_element(c, "--class"), ""};
  auto rep = gs_verify(x, c.order);
  Result r;
  r.series = rep.categorical;
  bool ok = rep.mismatches.empty();
  std::string line = "GS identity: " + pass_fail(ok) + " (" +
                     std::to_string(rep.coefficients_checked()) +
                     " coefficients checked)";
  if (!ok)
    line += "; mismatch at " + index_list(rep.mismatches);
  r.summary.push_back(line);
  r.report["law"] = "gs";
  r.report["passed"] = rep.passed();
  r.report["checked"] = rep.coefficients_checked();
  r.report["mismatches"] = rep.mismatches;
  r.report["motivic_product"] = coefficient_list(rep.motivic_product);
  if (rep.strata_mismatches) {
    bool sok = rep.strata_mismatches->empty();
    std::string sline = "Strata cross-check: " + pass_fail(sok) + " (" +
                        std::to_string(rep.coefficients_checked()) +
                        " coefficients checked)";
    if (!sok)
      sline += "; mismatch at " + index_list(*rep.strata_mismatches);
    r.summary.push_back(sline);
    r.report["strata_mismatches"] = *rep.strata_mismatches;
  }
  r.mismatch = !rep.passed();
  return r;
}

Result verify_catsym(const Command &c) {
  if (c.model.kind() != RingKind::integers)
    throw UsageError("--law catsym runs in the Z model");
  const Integer m = *require_element(c, "--class").as_integer();
  Result r;
  r.series = z_cat({*c.element, ""}, c.order);
  std::vector<std::size_t> bad;
  json strata = json::array();
  for (std::size_t k = 0; k <= c.order; ++k) {
    Integer s = cat_sym_strata_chi(m, static_cast<std::int64_t>(k));
    strata.push_back(s.str());
    if (*(*r.series)[k].as_integer() != s)
      bad.push_back(k);
  }
  std::string line = "Categorical symmetric power strata: " +
                     pass_fail(bad.empty()) + " (" +
                     std::to_string(c.order + 1) + " coefficients checked)";
  if (!bad.empty())
    line += "; mismatch at " + index_list(bad);
  r.summary.push_back(line);
  r.report["law"] = "catsym";
  r.report["passed"] = bad.empty();
  r.report["checked"] = c.order + 1;
  r.report["mismatches"] = bad;
  r.report["strata"] = strata;
  r.mismatch = !bad.empty();
  return r;
}

Result verify_hilb2(const Command &c) {
  GrothendieckClass x{require_element(c, "--surface"), ""};
  const std::size_t order = std::max<std::size_t>(c.order, 2);
  Result r;
  r.series = hilb_series(x, 2, order);
  RingElement oracle = hilb2_oracle(x);
  bool ok = (*r.series)[2] == oracle;
  r.summary.push_back("Hilb^2 oracle: " + pass_fail(ok) + " (oracle " +
                      format_element(oracle) + ")");
  r.report["law"] = "hilb2";
  r.report["passed"] = ok;
  r.report["oracle"] = format_element(oracle);
  r.mismatch = !ok;
  return r;
}

Result verify_axioms_law(const Command &c) {
  std::mt19937_64 rng(c.seed);
  std::vector<RingElement> elements;
  std::vector<TruncatedSeries> series;
  for (std::size_t j = 0; j < c.cases; ++j) {
    elements.push_back(random_element(c.model, rng, false));
    series.push_back(random_series(c.model, c.order, rng));
  }
  auto rep = verify_axioms(c.model, elements, series, c.order);
  Result r;
  json props = json::array();
  for (const auto &p : rep.properties) {
    std::string line = "Property " + std::to_string(p.property) + " " +
                       p.statement + ": " + pass_fail(p.passed) + " (" +
                       std::to_string(p.cases) + " cases)";
    if (!p.passed)
      line += "; case " + std::to_string(*p.failing_case) + " differs at t^" +
              std::to_string(*p.failing_coefficient);
    r.summary.push_back(line);
    json jp = {{"property", p.property},
               {"statement", p.statement},
               {"cases", p.cases},
               {"passed", p.passed}};
    if (!p.passed) {
      jp["failing_case"] = *p.failing_case;
      jp["failing_coefficient"] = *p.failing_coefficient;
    }
    props.push_back(jp);
  }
  r.report["law"] = "axioms";
  r.report["model"] = c.model.name();
  r.report["seed"] = c.seed;
  r.report["passed"] = rep.passed();
  r.report["properties"] = props;
  r.mismatch = !rep.passed();
  return r;
}

Result verify_hom(const Command &c) {
  if (!c.hom)
    throw UsageError("missing required flag --hom");
  RingModel target = infer_hom_target(*c.hom);
  RingHomSpec h = parse_hom(c.model, target, *c.hom);
  std::vector<RingElement> samples = c.series;
  if (samples.empty())
    samples.push_back(require_element(c, "--class"));
  auto rep = verify_lambda_hom(h, samples, c.order);
  Result r;
  json cases = json::array();
  for (const auto &k : rep.cases) {
    std::string line = "sample " + format_element(k.sample) +
                       ": sigma " + pass_fail(k.sigma_ok) + ", power " +
                       pass_fail(k.power_ok);
    json jc = {{"sample", format_element(k.sample)},
               {"sigma_ok", k.sigma_ok},
               {"power_ok", k.power_ok}};
    if (k.sigma_mismatch) {
      line += "; sigma differs at t^" + std::to_string(*k.sigma_mismatch) +
              ": " + format_element(k.sigma_values->first) + " vs " +
              format_element(k.sigma_values->second);
      jc["sigma_mismatch"] = *k.sigma_mismatch;
      jc["sigma_values"] = {format_element(k.sigma_values->first),
                            format_element(k.sigma_values->second)};
    }
    if (k.power_mismatch) {
      line += "; power differs at t^" + std::to_string(*k.power_mismatch);
      jc["power_mismatch"] = *k.power_mismatch;
    }
    r.summary.push_back(line);
    cases.push_back(jc);
  }
  r.summary.push_back("Lambda homomorphism: " + pass_fail(rep.passed()) +
                      " (" + std::to_string(rep.cases.size()) + " samples)");
  r.report["law"] = "hom";
  r.report["hom"] = *c.hom;
  r.report["target_model"] = target.name();
  r.report["passed"] = rep.passed();
  r.report["cases"] = cases;
  r.mismatch = !rep.passed();
  return r;
}

Result run_verify(const Command &c) {
  if (c.law == "gs")
    return verify_gs(c);
  if (c.law == "catsym")
    return verify_catsym(c);
  if (c.law == "hilb2")
    return verify_hilb2(c);
  if (c.law == "axioms")
    return verify_axioms_law(c);
  if (c.law == "hom")
    return verify_hom(c);
  throw UsageError("unknown --law '" + c.law +
                   "' (expected axioms, gs, catsym, hilb2 or hom)");
}

std::optional<Verb> verb_from(std::string_view s) {
  if (s == "zeta")
    return Verb::zeta;
  if (s == "hilb")
    return Verb::hilb;
  if (s == "power")
    return Verb::power;
  if (s == "verify")
    return Verb::verify;
  return std::nullopt;
}

} // namespace

RingModel model_from_selector(std::string_view selector) {
  if (selector == "Z")
    return RingModel::integers();
  if (selector == "ZL")
    return RingModel::polynomial({"L"});
  if (selector == "Zuv")
    return RingModel::polynomial({"u", "v"});
  constexpr std::string_view prefix = "custom:";
  if (selector.substr(0, prefix.size()) == prefix) {
    std::string_view rest = selector.substr(prefix.size());
    int min_exponent = 0;
    if (auto semi = rest.find(';'); semi != std::string_view::npos) {
      std::string opt = strip(rest.substr(semi + 1));
      if (opt.rfind("min=", 0) != 0)
        throw UsageError("unknown model option '" + opt + "'");
      try {
        min_exponent = std::stoi(opt.substr(4));
      } catch (const std::exception &) {
        throw UsageError("bad min exponent in '" + opt + "'");
      }
      rest = rest.substr(0, semi);
    }
    std::vector<std::string> vars;
    if (!strip(rest).empty())
      for (const auto &v : split(rest, ','))
        vars.push_back(strip(v));
    try {
      return RingModel::polynomial(std::move(vars), min_exponent);
    } catch (const std::invalid_argument &e) {
      throw UsageError(std::string("bad model '") + std::string(selector) +
                       "': " + e.what());
    }
  }
  throw UsageError("unknown model '" + std::string(selector) +
                   "' (expected Z, ZL, Zuv or custom:<vars>)");
}

RingModel infer_hom_target(std::string_view hom_text) {
  std::vector<std::string> vars;
  for (const auto &piece : split(hom_text, ',')) {
    auto eq = piece.find('=');
    if (eq == std::string::npos)
      continue;
    std::string_view rhs = std::string_view(piece).substr(eq + 1);
    for (std::size_t i = 0; i < rhs.size();) {
      if (std::isalpha(static_cast<unsigned char>(rhs[i]))) {
        std::size_t j = i;
        while (j < rhs.size() &&
               (std::isalnum(static_cast<unsigned char>(rhs[j])) ||
                rhs[j] == '_'))
          ++j;
        std::string name(rhs.substr(i, j - i));
        if (std::find(vars.begin(), vars.end(), name) == vars.end())
          vars.push_back(name);
        i = j;
      } else {
        ++i;
      }
    }
  }
  if (vars.empty())
    return RingModel::integers();
  return RingModel::polynomial(std::move(vars));
}

Command parse_args(std::span<const std::string> args) {
  if (args.empty())
    throw UsageError("missing verb (expected zeta, hilb, power or verify)");
  Command c;
  if (args[0] == "--help" || args[0] == "-h") {
    c.help = "usage: powstr {zeta|hilb|power|verify} [flags]\n"
             "run 'powstr <verb> --help' for the flags of a verb\n";
    return c;
  }
  auto verb = verb_from(args[0]);
  if (!verb)
    throw UsageError("unknown verb '" + args[0] +
                     "' (expected zeta, hilb, power or verify)");
  c.verb = *verb;

  CLI::App app("powstr " + args[0], "powstr " + args[0]);
  std::string model_text, class_text, surface_text, series_text, exponent_text,
      format_text = "plain";
  std::optional<long long> order;
  std::optional<std::string> hom;
  app.add_option("--kind", c.kind, "mot or cat")
      ->check(CLI::IsMember({"mot", "cat"}));
  app.add_option("--model", model_text, "Z, ZL, Zuv or custom:<vars>");
  app.add_option("--class", class_text, "class of the variety");
  app.add_option("--surface", surface_text, "class of a surface (hilb)");
  app.add_option("--series", series_text, "comma-separated coefficients");
  app.add_option("--exponent", exponent_text, "exponent m of (A(t))^m");
  app.add_option("--order", order, "truncation order N");
  app.add_option("--d", c.d, "dimension of the punctual Hilbert series");
  app.add_option("--law", c.law, "axioms, gs, catsym, hilb2 or hom");
  app.add_option("--hom", hom, "substitution, e.g. L=1 or L=u*v");
  app.add_option("--cases", c.cases, "random cases per property (axioms)");
  app.add_option("--seed", c.seed, "random seed (axioms)");
  app.add_option("--format", format_text, "plain or json")
      ->check(CLI::IsMember({"plain", "json"}));

  std::vector<std::string> rest(args.begin() + 1, args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp &) {
    c.help = app.help();
    return c;
  } catch (const CLI::ParseError &e) {
    throw UsageError(e.what());
  }

  if (!order)
    throw UsageError("missing required flag --order");
  if (*order < 0)
    throw UsageError("--order must be >= 0");
  c.order = static_cast<std::size_t>(*order);
  c.format = format_text == "json" ? Format::json : Format::plain;
  c.hom = hom;

  if (model_text.empty())
    model_text = c.verb == Verb::hilb || c.law == "hilb2" ? "ZL" : "Z";
  c.model_selector = model_text;
  c.model = model_from_selector(model_text);

  if (c.verb == Verb::verify && c.law.empty())
    throw UsageError("missing required flag --law");
  if (!class_text.empty())
    c.element = parse_flag(c.model, "--class", class_text);
  if (!surface_text.empty()) {
    if (c.element)
      throw UsageError("give either --class or --surface, not both");
    c.element = parse_flag(c.model, "--surface", surface_text);
  }
  if (!series_text.empty())
    c.series = parse_list(c.model, "--series", series_text);
  if (!exponent_text.empty())
    c.exponent = parse_flag(c.model, "--exponent", exponent_text);

  switch (c.verb) {
  case Verb::zeta:
    require_element(c, "--class");
    break;
  case Verb::hilb:
    require_element(c, "--surface");
    break;
  case Verb::power:
    if (c.series.empty())
      throw UsageError("missing required flag --series");
    if (!c.exponent)
      throw UsageError("missing required flag --exponent");
    break;
  case Verb::verify:
    break;
  }
  return c;
}

Outcome execute(const Command &c) {
  if (c.help)
    return {*c.help, 0};
  Result r;
  try {
    switch (c.verb) {
    case Verb::zeta:
      r = run_zeta(c);
      break;
    case Verb::hilb:
      r = run_hilb(c);
      break;
    case Verb::power:
      r = run_power(c);
      break;
    case Verb::verify:
      r = run_verify(c);
      break;
    }
  } catch (const UsageError &e) {
    return {std::string("error: ") + e.what() + "\n", 1};
  } catch (const std::exception &e) {
    return {std::string("error: ") + e.what() + "\n", 1};
  }

  std::ostringstream out;
  if (c.format == Format::json) {
    json doc;
    doc["order"] = c.order;
    doc["coefficients"] = r.series ? coefficient_list(*r.series) : json::array();
    doc["report"] = r.report;
    out << doc.dump(2) << '\n';
  } else {
    if (r.series)
      print_series(out, *r.series);
    for (const auto &line : r.summary)
      out << line << '\n';
  }
  return {out.str(), r.mismatch ? 2 : 0};
}

int run(int argc, const char *const *argv, std::ostream &out,
        std::ostream &err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  Command c;
  try {
    c = parse_args(args);
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  Outcome o = execute(c);
  (o.exit_code == 1 ? err : out) << o.output;
  return o.exit_code;
}

} // namespace powstr::cli
