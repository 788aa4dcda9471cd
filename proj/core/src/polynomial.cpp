#include "singcoh/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "singcoh/error.hpp"

namespace singcoh {

// ------------------------------------------------------------ PowerProduct

PowerProduct::PowerProduct(const std::string& variable, unsigned exponent) {
  if (exponent > 0) factors_.emplace_back(variable, exponent);
}

unsigned PowerProduct::degree() const {
  unsigned d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

unsigned PowerProduct::exponent(const std::string& variable) const {
  for (const auto& [name, e] : factors_)
    if (name == variable) return e;
  return 0;
}

PowerProduct PowerProduct::operator*(const PowerProduct& other) const {
  PowerProduct out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return out;
}

std::optional<PowerProduct> PowerProduct::divide(const PowerProduct& other) const {
  PowerProduct out;
  auto b = other.factors_.begin();
  for (const auto& [name, e] : factors_) {
    if (b != other.factors_.end() && b->first < name) return std::nullopt;
    if (b != other.factors_.end() && b->first == name) {
      if (b->second > e) return std::nullopt;
      if (b->second < e) out.factors_.emplace_back(name, e - b->second);
      ++b;
    } else {
      out.factors_.emplace_back(name, e);
    }
  }
  if (b != other.factors_.end()) return std::nullopt;
  return out;
}

std::string PowerProduct::to_string() const {
  std::string s;
  for (const auto& [name, e] : factors_) {
    if (!s.empty()) s += "*";
    s += name;
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

bool GrlexDescending::operator()(const PowerProduct& a, const PowerProduct& b) const {
  const unsigned da = a.degree();
  const unsigned db = b.degree();
  if (da != db) return da > db;
  // Lex: the earliest variable (by name) carrying a different exponent
  // decides; a variable missing from one side has exponent zero there.
  auto ia = a.factors().begin();
  auto ib = b.factors().begin();
  while (ia != a.factors().end() && ib != b.factors().end()) {
    if (ia->first != ib->first) return ia->first < ib->first;
    if (ia->second != ib->second) return ia->second > ib->second;
    ++ia;
    ++ib;
  }
  return ia != a.factors().end() && ib == b.factors().end();
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0) terms_.emplace(PowerProduct{}, constant);
}

Polynomial Polynomial::variable(const std::string& name) {
  return term(Rational(1), PowerProduct(name));
}

Polynomial Polynomial::term(const Rational& coefficient, const PowerProduct& pp) {
  Polynomial p;
  if (coefficient != 0) p.terms_.emplace(pp, coefficient);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_value() const {
  require(is_constant(), "polynomial " + to_string() + " is not constant");
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

unsigned Polynomial::total_degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

std::set<std::string> Polynomial::variables() const {
  std::set<std::string> out;
  for (const auto& [pp, c] : terms_)
    for (const auto& f : pp.factors()) out.insert(f.first);
  return out;
}

std::optional<std::pair<Rational, std::string>> Polynomial::as_scaled_variable() const {
  if (terms_.size() != 1) return std::nullopt;
  const auto& [pp, c] = *terms_.begin();
  if (pp.factors().size() != 1 || pp.factors()[0].second != 1) return std::nullopt;
  return std::make_pair(c, pp.factors()[0].first);
}

void Polynomial::add_term(const PowerProduct& pp, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(pp, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [pp, c] : other.terms_) add_term(pp, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [pp, c] : other.terms_) add_term(pp, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& [pp, c] : p.terms_) c = -c;
  return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& [pa, ca] : a.terms_)
    for (const auto& [pb, cb] : b.terms_) out.add_term(pa * pb, ca * cb);
  return out;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result(Rational(1));
  Polynomial base = *this;
  while (exponent) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent) base *= base;
  }
  return result;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
  require(!divisor.is_zero(), "division by the zero polynomial");
  Polynomial quotient;
  Polynomial remainder = *this;
  const auto& [lead_pp, lead_c] = *divisor.terms_.begin();
  while (!remainder.is_zero()) {
    const auto& [rpp, rc] = *remainder.terms_.begin();
    auto q_pp = rpp.divide(lead_pp);
    if (!q_pp) return std::nullopt;
    const Polynomial t = term(rc / lead_c, *q_pp);
    quotient += t;
    remainder -= t * divisor;
  }
  return quotient;
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial>& replacements) const {
  Polynomial out;
  for (const auto& [pp, c] : terms_) {
    Polynomial piece(c);
    PowerProduct kept;
    for (const auto& [name, e] : pp.factors()) {
      auto it = replacements.find(name);
      if (it == replacements.end()) kept = kept * PowerProduct(name, e);
      else piece *= it->second.pow(e);
    }
    out += piece * term(Rational(1), kept);
  }
  return out;
}

Polynomial Polynomial::evaluate(const std::map<std::string, Rational>& assignment) const {
  Polynomial out;
  for (const auto& [pp, c] : terms_) {
    Rational coeff = c;
    PowerProduct kept;
    for (const auto& [name, e] : pp.factors()) {
      auto it = assignment.find(name);
      if (it == assignment.end()) {
        kept = kept * PowerProduct(name, e);
      } else {
        Rational v = 1;
        for (unsigned i = 0; i < e; ++i) v *= it->second;
        coeff *= v;
      }
    }
    out.add_term(kept, coeff);
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [pp, c] : terms_) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) s += negative ? "-" : "";
    else s += negative ? " - " : " + ";
    if (pp.is_one()) {
      s += rational_to_string(mag);
    } else {
      if (mag != 1) s += rational_to_string(mag) + "*";
      s += pp.to_string();
    }
    first = false;
  }
  return s;
}

// -------------------------------------------------------------- rationals

std::string rational_to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(const std::string& text) {
  std::string t = text;
  t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char ch) { return std::isspace(ch); }),
          t.end());
  if (t.empty()) fail(ErrorCode::Parse, "empty rational literal");
  const auto dot = t.find('.');
  try {
    if (dot != std::string::npos) {
      std::string digits = t.substr(0, dot) + t.substr(dot + 1);
      const std::size_t decimals = t.size() - dot - 1;
      Rational q(mpz_class(digits.empty() || digits == "-" ? "0" : digits, 10),
                 mpz_class("1" + std::string(decimals, '0'), 10));
      q.canonicalize();
      return q;
    }
    Rational q(t, 10);
    if (q.get_den() == 0) fail(ErrorCode::Parse, "zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    fail(ErrorCode::Parse, "malformed rational literal '" + text + "'");
  }
}

// ------------------------------------------------------------------ parser

namespace {

class Parser {
 public:
  Parser(const std::string& text, const std::vector<std::string>& variables)
      : text_(text), vars_(variables.begin(), variables.end()) {}

  Polynomial parse() {
    Polynomial p = expression();
    skip_space();
    if (pos_ != text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void error(const std::string& message) const { throw ParseError(message, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expression() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        const Polynomial d = unary();
        if (!d.is_constant() || d.is_zero()) {
          pos_ = at;
          error("division is only allowed by a non-zero constant");
        }
        acc *= Polynomial(Rational(1) / d.constant_value());
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (accept('^')) {
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) error("expected a non-negative integer exponent");
      const std::string digits = text_.substr(start, pos_ - start);
      if (digits.size() > 4) error("exponent too large");
      return base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  Polynomial primary() {
    skip_space();
    if (pos_ >= text_.size()) error("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression();
      if (!accept(')')) error("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
        ++pos_;
      return Polynomial(parse_rational(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string name = text_.substr(start, pos_ - start);
      if (!vars_.count(name)) {
        pos_ = start;
        error("undeclared variable '" + name + "'");
      }
      return Polynomial::variable(name);
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& text_;
  std::set<std::string> vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& variables) {
  return Parser(text, variables).parse();
}

}  // namespace singcoh
