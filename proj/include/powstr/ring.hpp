#pragma once

// Exact sparse polynomial rings with integer coefficients. These are the
// computable stand-ins for Grothendieck-ring classes: Z (Euler
// characteristic), Z[L] (Lefschetz class) and Z[u,v] (Hodge-Deligne).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace powstr {

using Integer = boost::multiprecision::cpp_int;

/// Exponent vector, one entry per model variable.
using Monomial = boost::container::small_vector<std::int32_t, 4>;

class ModelMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
public:
  ParseError(const std::string &what, std::size_t position);
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

enum class RingKind { integers, polynomial };

/// Description of a coefficient ring. Copies share the same immutable data.
class RingModel {
public:
  static RingModel create(RingKind kind, std::vector<std::string> variables,
                          int min_exponent = 0);
  static RingModel integers();
  static RingModel polynomial(std::vector<std::string> variables,
                              int min_exponent = 0);

  RingKind kind() const noexcept;
  const std::vector<std::string> &variables() const noexcept;
  std::size_t num_variables() const noexcept;
  int min_exponent() const noexcept;
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// "Z", "Z[L]", "Z[u,v]"; a negative floor is shown as "Z[L; min=-2]".
  std::string name() const;

  friend bool operator==(const RingModel &a, const RingModel &b) noexcept;

private:
  struct Data;
  explicit RingModel(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;
};

/// Ascending total degree, then larger exponent of the earlier variable first.
std::strong_ordering compare_monomials(const Monomial &a, const Monomial &b);

/// Element of a RingModel in canonical form: terms sorted by
/// compare_monomials, no zero coefficients. Zero is the empty term list.
class RingElement {
public:
  struct Term {
    Monomial exponents;
    Integer coeff;
    friend bool operator==(const Term &, const Term &) = default;
  };

  explicit RingElement(RingModel model);

  static RingElement constant(RingModel model, const Integer &c);
  static RingElement one(RingModel model) { return constant(std::move(model), 1); }
  /// Checks exponents against the model's floor.
  static RingElement monomial(RingModel model, Monomial exponents,
                              const Integer &coeff = 1);
  static RingElement variable(RingModel model, std::string_view name);
  /// Canonicalizes: merges repeated monomials and drops zeros.
  static RingElement from_terms(RingModel model, std::vector<Term> terms);

  const RingModel &model() const noexcept { return model_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// The value if this is a constant (including zero).
  std::optional<Integer> as_integer() const;
  /// Single term with coefficient +1 or -1.
  bool is_unit_monomial() const noexcept;
  /// Largest total degree of a term; nullopt for zero.
  std::optional<std::int64_t> top_degree() const;

  RingElement operator-() const;
  RingElement &operator+=(const RingElement &b);
  RingElement &operator-=(const RingElement &b);
  RingElement &operator*=(const RingElement &b);
  friend RingElement operator+(RingElement a, const RingElement &b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement &b) { return a -= b; }
  friend RingElement operator*(const RingElement &a, const RingElement &b);

  RingElement scaled(const Integer &c) const;
  /// Negative n requires a unit monomial.
  RingElement pow(std::int64_t n) const;

  friend bool operator==(const RingElement &a, const RingElement &b);

private:
  RingElement(RingModel model, std::vector<Term> canonical_terms)
      : model_(std::move(model)), terms_(std::move(canonical_terms)) {}

  RingModel model_;
  std::vector<Term> terms_;
};

RingModel create_model(RingKind kind, std::vector<std::string> variables,
                       int min_exponent);

RingElement add(const RingElement &a, const RingElement &b);
RingElement mul(const RingElement &a, const RingElement &b);

/// Grammar: integers, identifiers, + - * ^ and parentheses; ^ takes an
/// integer literal exponent (negative only for unit monomials).
RingElement parse_element(const RingModel &model, std::string_view text);

/// Canonical text, e.g. "1 + 2*L + L^2" or "-1 + u*v".
std::string format_element(const RingElement &a);

/// All coefficients nonnegative.
bool is_effective(const RingElement &a);

/// Throws ModelMismatch unless a and b live in the same model.
void require_same_model(const RingModel &a, const RingModel &b,
                        std::string_view what);

/// x (x-1) ... (x-n+1) / n! for any integer x.
Integer generalized_binomial(const Integer &x, std::uint64_t n);

} // namespace powstr
