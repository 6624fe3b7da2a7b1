#include "powstr/ring.hpp"

#include <cctype>
#include <limits>

namespace powstr {

namespace {

// Recursive-descent parser evaluating directly into ring elements.
//
//   expr    := [+|-] term { (+|-) term }
//   term    := factor { * factor }
//   factor  := primary [ ^ [-] integer ]
//   primary := integer | identifier | ( expr )
class Parser {
public:
  Parser(const RingModel &model, std::string_view text)
      : model_(model), text_(text) {}

  RingElement parse() {
    RingElement r = expr();
    skip_ws();
    if (pos_ != text_.size())
      fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    check_floor(r);
    return r;
  }

private:
  [[noreturn]] void fail(const std::string &msg) const {
    throw ParseError(msg, pos_);
  }
  [[noreturn]] void fail_at(const std::string &msg, std::size_t at) const {
    throw ParseError(msg, at);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RingElement expr() {
    skip_ws();
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    RingElement acc = term();
    if (negate)
      acc = -acc;
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  RingElement term() {
    RingElement acc = factor();
    while (accept('*'))
      acc *= factor();
    return acc;
  }

  RingElement factor() {
    skip_ws();
    std::size_t start = pos_;
    RingElement base = primary();
    if (!accept('^'))
      return base;
    skip_ws();
    std::size_t exp_pos = pos_;
    bool negative = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    if (pos_ >= text_.size() ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected integer exponent");
    std::int64_t e = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      e = e * 10 + (text_[pos_] - '0');
      if (e > std::numeric_limits<std::int32_t>::max())
        fail_at("exponent too large", exp_pos);
      ++pos_;
    }
    if (negative) {
      if (!base.is_unit_monomial())
        fail_at("negative exponent of a non-invertible element", start);
      e = -e;
      RingElement r = base.pow(e);
      for (auto x : r.terms()[0].exponents)
        if (x < model_.min_exponent())
          fail_at("exponent below model floor " +
                      std::to_string(model_.min_exponent()),
                  start);
      return r;
    }
    return base.pow(e);
  }

  RingElement primary() {
    skip_ws();
    if (pos_ >= text_.size())
      fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RingElement r = expr();
      if (!accept(')'))
        fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      return RingElement::constant(
          model_, Integer(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (!model_.index_of(name))
        fail_at("unknown variable '" + name + "' in " + model_.name(), start);
      return RingElement::variable(model_, name);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  void check_floor(const RingElement &r) const {
    for (const auto &t : r.terms())
      for (auto e : t.exponents)
        if (e < model_.min_exponent())
          throw ParseError("exponent " + std::to_string(e) +
                               " below model floor " +
                               std::to_string(model_.min_exponent()),
                           0);
  }

  const RingModel &model_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

RingElement parse_element(const RingModel &model, std::string_view text) {
  return Parser(model, text).parse();
}

} // namespace powstr
