#include "reesblow/parser.hpp"

#include <cctype>
#include <limits>

#include "reesblow/errors.hpp"

namespace reesblow {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ctx) : text_(text), ctx_(ctx) {}

  Polynomial parse_all() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Polynomial acc = factor();
    while (accept('*')) acc *= factor();
    return negate ? -acc : acc;
  }

  Polynomial factor() {
    skip_ws();
    const std::size_t start = pos_;
    // t^-n alias for u^n
    if (auto alias = inverse_t_alias()) return *alias;
    Polynomial base = atom();
    if (accept('^')) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '-') fail("negative exponent");
      mpz_class e = natural();
      if (e > std::numeric_limits<unsigned>::max() / 2) {
        pos_ = start;
        fail("exponent too large");
      }
      return pow(base, static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  std::optional<Polynomial> inverse_t_alias() {
    if (ctx_->index_of("t")) return std::nullopt;
    auto u = ctx_->index_of("u");
    if (!u || ctx_->weight(*u) != -1) return std::nullopt;
    std::size_t p = pos_;
    if (p >= text_.size() || text_[p] != 't') return std::nullopt;
    ++p;
    if (p < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[p])) || text_[p] == '_')) return std::nullopt;
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    if (p >= text_.size() || text_[p] != '^') return std::nullopt;
    ++p;
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    if (p >= text_.size() || text_[p] != '-') return std::nullopt;
    pos_ = p + 1;
    mpz_class e = natural();
    if (e > 1'000'000) fail("exponent too large");
    return pow(Polynomial::variable(ctx_, *u), static_cast<unsigned>(e.get_ui()));
  }

  mpz_class natural() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a natural number");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = natural();
      mpz_class den = 1;
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        den = natural();
        if (den == 0) fail("division by zero");
      }
      return Polynomial::constant(ctx_, ctx_->field().from_rational(mpq_class(num, den)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      auto i = ctx_->index_of(name);
      if (!i) throw UnknownVariable(std::string(name));
      return Polynomial::variable(ctx_, *i);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const RingPtr& ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ctx) { return Parser(text, ctx).parse_all(); }

std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingPtr& ctx) {
  std::vector<Polynomial> out;
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) return out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      try {
        out.push_back(parse_polynomial(text.substr(start, i - start), ctx));
      } catch (const SyntaxError& e) {
        throw SyntaxError(e.reason(), start + e.position());
      }
      start = i + 1;
    } else if (text[i] == '(') {
      ++depth;
    } else if (text[i] == ')') {
      --depth;
    }
  }
  return out;
}

}  // namespace reesblow
