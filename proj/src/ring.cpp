#include "powstr/ring.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace powstr {

ParseError::ParseError(const std::string &what, std::size_t position)
    : std::invalid_argument(what + " at position " + std::to_string(position)),
      position_(position) {}

struct RingModel::Data {
  RingKind kind;
  std::vector<std::string> variables;
  int min_exponent;
};

namespace {

bool valid_identifier(std::string_view name) {
  if (name.empty())
    return false;
  auto alpha = [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
  };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(name.front()))
    return false;
  return std::all_of(name.begin() + 1, name.end(),
                     [&](char c) { return alpha(c) || digit(c) || c == '_'; });
}

std::int64_t total_degree(const Monomial &m) {
  return std::accumulate(m.begin(), m.end(), std::int64_t{0});
}

Monomial monomial_product(const Monomial &a, const Monomial &b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = a[i] + b[i];
  return r;
}

bool term_less(const RingElement::Term &a, const RingElement::Term &b) {
  return compare_monomials(a.exponents, b.exponents) < 0;
}

// Merges runs of equal monomials in a sorted term list and drops zeros.
void merge_sorted(std::vector<RingElement::Term> &terms) {
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    while (j < terms.size() && terms[j].exponents == terms[i].exponents) {
      terms[i].coeff += terms[j].coeff;
      ++j;
    }
    if (!terms[i].coeff.is_zero()) {
      if (out != i)
        terms[out] = std::move(terms[i]);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

} // namespace

RingModel RingModel::create(RingKind kind, std::vector<std::string> variables,
                            int min_exponent) {
  if (min_exponent > 0)
    throw std::invalid_argument("min_exponent must be <= 0, got " +
                                std::to_string(min_exponent));
  if (kind == RingKind::integers) {
    if (!variables.empty())
      throw std::invalid_argument("the integer model has no variables");
    if (min_exponent != 0)
      throw std::invalid_argument("the integer model requires min_exponent 0");
  }
  std::unordered_set<std::string> seen;
  for (const auto &v : variables) {
    if (!valid_identifier(v))
      throw std::invalid_argument("invalid variable name '" + v + "'");
    if (!seen.insert(v).second)
      throw std::invalid_argument("duplicate variable name '" + v + "'");
  }
  return RingModel(std::make_shared<const Data>(
      Data{kind, std::move(variables), min_exponent}));
}

RingModel RingModel::integers() {
  static const RingModel z = create(RingKind::integers, {}, 0);
  return z;
}

RingModel RingModel::polynomial(std::vector<std::string> variables,
                                int min_exponent) {
  return create(RingKind::polynomial, std::move(variables), min_exponent);
}

RingKind RingModel::kind() const noexcept { return data_->kind; }
const std::vector<std::string> &RingModel::variables() const noexcept {
  return data_->variables;
}
std::size_t RingModel::num_variables() const noexcept {
  return data_->variables.size();
}
int RingModel::min_exponent() const noexcept { return data_->min_exponent; }

std::optional<std::size_t> RingModel::index_of(std::string_view name) const {
  const auto &vars = data_->variables;
  auto it = std::find(vars.begin(), vars.end(), name);
  if (it == vars.end())
    return std::nullopt;
  return static_cast<std::size_t>(it - vars.begin());
}

std::string RingModel::name() const {
  if (kind() == RingKind::integers)
    return "Z";
  std::string s = "Z[";
  for (std::size_t i = 0; i < num_variables(); ++i) {
    if (i)
      s += ',';
    s += data_->variables[i];
  }
  if (min_exponent() != 0)
    s += "; min=" + std::to_string(min_exponent());
  return s + "]";
}

bool operator==(const RingModel &a, const RingModel &b) noexcept {
  if (a.data_ == b.data_)
    return true;
  return a.data_->kind == b.data_->kind &&
         a.data_->min_exponent == b.data_->min_exponent &&
         a.data_->variables == b.data_->variables;
}

RingModel create_model(RingKind kind, std::vector<std::string> variables,
                       int min_exponent) {
  return RingModel::create(kind, std::move(variables), min_exponent);
}

std::strong_ordering compare_monomials(const Monomial &a, const Monomial &b) {
  if (auto c = total_degree(a) <=> total_degree(b); c != 0)
    return c;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i])
      return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

void require_same_model(const RingModel &a, const RingModel &b,
                        std::string_view what) {
  if (!(a == b))
    throw ModelMismatch(std::string(what) + ": model mismatch (" + a.name() +
                        " vs " + b.name() + ")");
}

// -- RingElement ------------------------------------------------------------

RingElement::RingElement(RingModel model) : model_(std::move(model)) {}

RingElement RingElement::constant(RingModel model, const Integer &c) {
  RingElement r(std::move(model));
  if (!c.is_zero())
    r.terms_.push_back(Term{Monomial(r.model_.num_variables(), 0), c});
  return r;
}

RingElement RingElement::monomial(RingModel model, Monomial exponents,
                                  const Integer &coeff) {
  if (exponents.size() != model.num_variables())
    throw std::invalid_argument("exponent vector has length " +
                                std::to_string(exponents.size()) +
                                ", model has " +
                                std::to_string(model.num_variables()) +
                                " variables");
  for (auto e : exponents) {
    if (e < model.min_exponent())
      throw std::invalid_argument("exponent " + std::to_string(e) +
                                  " below model floor " +
                                  std::to_string(model.min_exponent()));
  }
  RingElement r(std::move(model));
  if (!coeff.is_zero())
    r.terms_.push_back(Term{std::move(exponents), coeff});
  return r;
}

RingElement RingElement::variable(RingModel model, std::string_view name) {
  auto idx = model.index_of(name);
  if (!idx)
    throw std::invalid_argument("unknown variable '" + std::string(name) +
                                "' in " + model.name());
  Monomial m(model.num_variables(), 0);
  m[*idx] = 1;
  return monomial(std::move(model), std::move(m));
}

RingElement RingElement::from_terms(RingModel model, std::vector<Term> terms) {
  for (const auto &t : terms) {
    if (t.exponents.size() != model.num_variables())
      throw std::invalid_argument("term has wrong number of exponents");
    for (auto e : t.exponents)
      if (e < model.min_exponent())
        throw std::invalid_argument("exponent below model floor");
  }
  std::sort(terms.begin(), terms.end(), term_less);
  merge_sorted(terms);
  return RingElement(std::move(model), std::move(terms));
}

std::optional<Integer> RingElement::as_integer() const {
  if (terms_.empty())
    return Integer(0);
  if (terms_.size() == 1 &&
      std::all_of(terms_[0].exponents.begin(), terms_[0].exponents.end(),
                  [](auto e) { return e == 0; }))
    return terms_[0].coeff;
  return std::nullopt;
}

bool RingElement::is_unit_monomial() const noexcept {
  return terms_.size() == 1 && (terms_[0].coeff == 1 || terms_[0].coeff == -1);
}

std::optional<std::int64_t> RingElement::top_degree() const {
  if (terms_.empty())
    return std::nullopt;
  // Sorted by ascending total degree.
  return total_degree(terms_.back().exponents);
}

RingElement RingElement::operator-() const {
  RingElement r = *this;
  for (auto &t : r.terms_)
    t.coeff = -t.coeff;
  return r;
}

RingElement &RingElement::operator+=(const RingElement &b) {
  require_same_model(model_, b.model_, "add");
  if (b.terms_.empty())
    return *this;
  if (terms_.empty()) {
    terms_ = b.terms_;
    return *this;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + b.terms_.size());
  auto i = terms_.begin();
  auto j = b.terms_.begin();
  while (i != terms_.end() && j != b.terms_.end()) {
    auto c = compare_monomials(i->exponents, j->exponents);
    if (c < 0) {
      out.push_back(std::move(*i++));
    } else if (c > 0) {
      out.push_back(*j++);
    } else {
      Integer s = i->coeff + j->coeff;
      if (!s.is_zero())
        out.push_back(Term{std::move(i->exponents), std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i != terms_.end(); ++i)
    out.push_back(std::move(*i));
  for (; j != b.terms_.end(); ++j)
    out.push_back(*j);
  terms_ = std::move(out);
  return *this;
}

RingElement &RingElement::operator-=(const RingElement &b) {
  return *this += -b;
}

RingElement operator*(const RingElement &a, const RingElement &b) {
  require_same_model(a.model_, b.model_, "mul");
  if (a.terms_.empty() || b.terms_.empty())
    return RingElement(a.model_);
  std::vector<RingElement::Term> out;
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    // Multiplying by a single monomial preserves the term order.
    const auto &single = a.terms_.size() == 1 ? a.terms_[0] : b.terms_[0];
    const auto &many = a.terms_.size() == 1 ? b.terms_ : a.terms_;
    out.reserve(many.size());
    for (const auto &t : many)
      out.push_back({monomial_product(t.exponents, single.exponents),
                     t.coeff * single.coeff});
    return RingElement(a.model_, std::move(out));
  }
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto &s : a.terms_)
    for (const auto &t : b.terms_)
      out.push_back(
          {monomial_product(s.exponents, t.exponents), s.coeff * t.coeff});
  std::sort(out.begin(), out.end(), term_less);
  merge_sorted(out);
  return RingElement(a.model_, std::move(out));
}

RingElement &RingElement::operator*=(const RingElement &b) {
  *this = *this * b;
  return *this;
}

RingElement RingElement::scaled(const Integer &c) const {
  if (c.is_zero())
    return RingElement(model_);
  RingElement r = *this;
  for (auto &t : r.terms_)
    t.coeff *= c;
  return r;
}

RingElement RingElement::pow(std::int64_t n) const {
  if (n < 0) {
    if (!is_unit_monomial())
      throw std::domain_error("negative power of a non-unit element");
    Monomial m = terms_[0].exponents;
    for (auto &e : m)
      e = static_cast<std::int32_t>(e * n);
    Integer c = (terms_[0].coeff == -1 && (n % 2 != 0)) ? Integer(-1)
                                                       : Integer(1);
    return RingElement(model_, {Term{std::move(m), std::move(c)}});
  }
  if (terms_.size() == 1) {
    Monomial m = terms_[0].exponents;
    for (auto &e : m)
      e = static_cast<std::int32_t>(e * n);
    Integer c = boost::multiprecision::pow(terms_[0].coeff,
                                           static_cast<unsigned>(n));
    return RingElement(model_, {Term{std::move(m), std::move(c)}});
  }
  RingElement result = one(model_);
  RingElement base = *this;
  while (n > 0) {
    if (n & 1)
      result *= base;
    n >>= 1;
    if (n)
      base *= base;
  }
  return result;
}

bool operator==(const RingElement &a, const RingElement &b) {
  return a.model_ == b.model_ && a.terms_ == b.terms_;
}

RingElement add(const RingElement &a, const RingElement &b) { return a + b; }
RingElement mul(const RingElement &a, const RingElement &b) { return a * b; }

bool is_effective(const RingElement &a) {
  return std::all_of(a.terms().begin(), a.terms().end(),
                     [](const auto &t) { return t.coeff >= 0; });
}

std::string format_element(const RingElement &a) {
  if (a.is_zero())
    return "0";
  const auto &vars = a.model().variables();
  std::string out;
  bool first = true;
  for (const auto &t : a.terms()) {
    bool negative = t.coeff < 0;
    Integer mag = negative ? Integer(-t.coeff) : t.coeff;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;

    std::string mono;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      auto e = t.exponents[i];
      if (e == 0)
        continue;
      if (!mono.empty())
        mono += '*';
      mono += vars[i];
      if (e != 1)
        mono += '^' + std::to_string(e);
    }
    if (mono.empty())
      out += mag.str();
    else if (mag == 1)
      out += mono;
    else
      out += mag.str() + '*' + mono;
  }
  return out;
}

Integer generalized_binomial(const Integer &x, std::uint64_t n) {
  Integer num = 1;
  Integer den = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    num *= x - i;
    den *= i + 1;
  }
  return num / den;
}

} // namespace powstr
