#include "syzlab/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

namespace syzlab {

PolynomialRing::PolynomialRing(std::uint32_t modulus, std::vector<std::string> variables,
                               MonomialOrder order)
    : field_(modulus), variables_(std::move(variables)), order_(order) {
  if (variables_.empty()) throw Error("a polynomial ring needs at least one variable");
  if (variables_.size() > kMaxVariables) throw Error("at most 8 variables are supported");
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    const auto& v = variables_[i];
    if (v.empty() || !std::isalpha(static_cast<unsigned char>(v[0])))
      throw Error("invalid variable name '" + v + "'");
    for (char ch : v)
      if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_')
        throw Error("invalid variable name '" + v + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (variables_[j] == v) throw Error("duplicate variable '" + v + "'");
  }
}

int PolynomialRing::variable_index(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i)
    if (variables_[i] == name) return static_cast<int>(i);
  return -1;
}

bool PolynomialRing::compatible(const PolynomialRing& o) const {
  return modulus() == o.modulus() && nvars() == o.nvars() && order_ == o.order_;
}

RingPtr make_ring(std::uint32_t modulus, std::vector<std::string> variables, MonomialOrder order) {
  return std::make_shared<const PolynomialRing>(modulus, std::move(variables), order);
}

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
  Polynomial p(ring);
  std::uint32_t v = ring->field().reduce(c);
  if (v != 0) p.terms_.push_back({Monomial(ring->nvars()), v});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  return term(ring, Monomial::variable(ring->nvars(), index), 1);
}

Polynomial Polynomial::term(RingPtr ring, const Monomial& m, std::uint32_t coeff) {
  if (m.nvars() != ring->nvars()) throw VariableCountMismatch();
  Polynomial p(ring);
  coeff %= ring->modulus();
  if (coeff != 0) p.terms_.push_back({m, coeff});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const auto& F = ring->field();
  std::unordered_map<Monomial, std::uint32_t> acc;
  acc.reserve(terms.size());
  for (const auto& t : terms) {
    if (t.monomial.nvars() != ring->nvars()) throw VariableCountMismatch();
    auto [it, inserted] = acc.try_emplace(t.monomial, 0u);
    it->second = F.add(it->second, t.coeff % F.modulus());
  }
  Polynomial p(ring);
  for (const auto& [m, c] : acc)
    if (c != 0) p.terms_.push_back({m, c});
  const auto& ord = ring->order();
  std::sort(p.terms_.begin(), p.terms_.end(),
            [&](const Term& a, const Term& b) { return ord.compare(a.monomial, b.monomial) > 0; });
  return p;
}

void Polynomial::check(const Polynomial& o) const {
  if (ring_ == o.ring_) return;
  if (ring_->modulus() != o.ring_->modulus()) throw ModulusMismatch();
  if (ring_->nvars() != o.ring_->nvars()) throw VariableCountMismatch();
  if (!(ring_->order() == o.ring_->order())) throw Error("monomial order mismatch");
}

std::uint32_t Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.monomial == m) return t.coeff;
  return 0;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
  return true;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

Polynomial Polynomial::add_multiple(const Polynomial& o, const Monomial& m, std::uint32_t c) const {
  check(o);
  const auto& F = ring_->field();
  const auto& ord = ring_->order();
  Polynomial r(ring_);
  if (c == 0 || o.is_zero()) {
    r.terms_ = terms_;
    return r;
  }
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size()) {
      r.terms_.push_back(terms_[i++]);
      continue;
    }
    Monomial mj = o.terms_[j].monomial * m;
    if (i == terms_.size()) {
      r.terms_.push_back({mj, F.mul(o.terms_[j++].coeff, c)});
      continue;
    }
    auto cmp = ord.compare(terms_[i].monomial, mj);
    if (cmp > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      r.terms_.push_back({mj, F.mul(o.terms_[j++].coeff, c)});
    } else {
      std::uint32_t v = F.add(terms_[i].coeff, F.mul(o.terms_[j].coeff, c));
      if (v != 0) r.terms_.push_back({mj, v});
      ++i;
      ++j;
    }
  }
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  return add_multiple(o, Monomial(ring_->nvars()), 1);
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return add_multiple(o, Monomial(ring_->nvars()), ring_->modulus() - 1);
}

Polynomial Polynomial::operator-() const { return scaled(ring_->modulus() - 1); }

Polynomial Polynomial::scaled(std::uint32_t c) const {
  const auto& F = ring_->field();
  c %= F.modulus();
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff = F.mul(t.coeff, c);
  return r;
}

Polynomial Polynomial::times_term(const Monomial& m, std::uint32_t c) const {
  const auto& F = ring_->field();
  c %= F.modulus();
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, F.mul(t.coeff, c)});
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check(o);
  if (is_zero() || o.is_zero()) return Polynomial(ring_);
  if (o.size() == 1) return times_term(o.terms_[0].monomial, o.terms_[0].coeff);
  if (size() == 1) return o.times_term(terms_[0].monomial, terms_[0].coeff);
  const auto& F = ring_->field();
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) prod.push_back({a.monomial * b.monomial, F.mul(a.coeff, b.coeff)});
  return from_terms(ring_, std::move(prod));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(ring_->field().inv(lead_coeff()));
}

bool Polynomial::operator==(const Polynomial& o) const {
  check(o);
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].coeff != o.terms_[i].coeff || !(terms_[i].monomial == o.terms_[i].monomial))
      return false;
  return true;
}

std::string format_monomial(const PolynomialRing& ring, const Monomial& m) {
  std::string s;
  for (std::size_t v = 0; v < ring.nvars(); ++v) {
    if (m[v] == 0) continue;
    if (!s.empty()) s += '*';
    s += ring.variables()[v];
    if (m[v] > 1) s += '^' + std::to_string(m[v]);
  }
  return s;
}

void append_term(std::string& out, const PolynomialRing& ring, const Monomial& m, std::uint32_t c,
                 bool first) {
  std::int64_t b = ring.field().balanced(c);
  bool negative = b < 0;
  std::uint64_t mag = static_cast<std::uint64_t>(negative ? -b : b);
  if (first)
    out += negative ? "-" : "";
  else
    out += negative ? " - " : " + ";
  std::string mono = format_monomial(ring, m);
  if (mono.empty()) {
    out += std::to_string(mag);
  } else {
    if (mag != 1) out += std::to_string(mag) + "*";
    out += mono;
  }
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    append_term(s, *ring_, terms_[i].monomial, terms_[i].coeff, i == 0);
  return s;
}

namespace {

class PolynomialParser {
 public:
  PolynomialParser(const RingPtr& ring, std::string_view text) : ring_(ring), text_(text) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("empty polynomial", pos_);
    bool first = true;
    while (true) {
      skip_ws();
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      terms.push_back(parse_term(negative));
      first = false;
      skip_ws();
      if (pos_ == text_.size()) break;
    }
    return Polynomial::from_terms(ring_, std::move(terms));
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::uint64_t parse_integer() {
    std::size_t start = pos_;
    std::uint64_t v = 0;
    const std::uint64_t p = ring_->modulus();
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = (v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0')) % p;
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected integer", pos_);
    return v;
  }

  std::uint64_t parse_exponent() {
    std::size_t start = pos_;
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > 65535) throw ParseError("exponent too large", start);
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected exponent", pos_);
    return v;
  }

  Term parse_term(bool negative) {
    const auto& F = ring_->field();
    std::uint32_t coeff = 1;
    Monomial mono(ring_->nvars());
    bool any = false;
    while (true) {
      skip_ws();
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff = F.mul(coeff, static_cast<std::uint32_t>(parse_integer()));
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        std::size_t start = pos_;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
        std::string_view name = text_.substr(start, pos_ - start);
        int idx = ring_->variable_index(name);
        if (idx < 0) throw ParseError("unknown variable '" + std::string(name) + "'", start);
        skip_ws();
        std::uint64_t e = 1;
        if (peek() == '^') {
          ++pos_;
          skip_ws();
          e = parse_exponent();
        }
        mono.set(static_cast<std::size_t>(idx), mono[static_cast<std::size_t>(idx)] + static_cast<int>(e));
      } else {
        throw ParseError(c == '\0' ? "unexpected end of input" : std::string("unexpected character '") + c + "'",
                         pos_);
      }
      any = true;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        continue;
      }
      // Juxtaposed factor such as "3x".
      if (std::isalpha(static_cast<unsigned char>(peek()))) continue;
      break;
    }
    if (!any) throw ParseError("empty term", pos_);
    if (negative) coeff = F.neg(coeff);
    return {mono, coeff};
  }

  const RingPtr& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) {
  return PolynomialParser(ring, text).parse();
}

}  // namespace syzlab
