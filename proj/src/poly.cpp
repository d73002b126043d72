#include "torsionlab/poly.hpp"

#include "torsionlab/error.hpp"

#include <cctype>
#include <tuple>

namespace torsionlab {

namespace {

struct GridName {
  std::string prefix;
  long i = 0;
  long j = 0;
};

std::optional<GridName> parse_grid_name(const std::string& s) {
  const auto second = s.rfind('_');
  if (second == std::string::npos || second == 0) return std::nullopt;
  const auto first = s.rfind('_', second - 1);
  if (first == std::string::npos || first == 0) return std::nullopt;
  const std::string a = s.substr(first + 1, second - first - 1);
  const std::string b = s.substr(second + 1);
  auto digits = [](const std::string& x) {
    if (x.empty() || x.size() > 6) return false;
    for (char ch : x)
      if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
  };
  if (!digits(a) || !digits(b)) return std::nullopt;
  return GridName{s.substr(0, first), std::stol(a), std::stol(b)};
}

const std::map<std::string, std::string>& greek() {
  static const std::map<std::string, std::string> g = {
      {"xi", "\\xi"}, {"eta", "\\eta"}, {"lambda", "\\lambda"}, {"alpha", "\\alpha"},
      {"beta", "\\beta"}, {"epsilon", "\\varepsilon"}, {"mu", "\\mu"}};
  return g;
}

std::string format(const PolyQ::Terms& terms, bool latex) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [mono, c] = *it;
    const bool neg = c.sign() < 0;
    const Rational a = neg ? Rational(-c) : c;
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    std::string body;
    for (const auto& [var, e] : mono.exponents()) {
      std::string factor;
      if (latex) {
        factor = latex_name(var);
        if (e > 1) factor = "(" + factor + ")^{" + std::to_string(e) + "}";
        body += body.empty() ? factor : " " + factor;
      } else {
        factor = e > 1 ? "(" + var + ")^" + std::to_string(e) : var;
        body += body.empty() ? factor : "*" + factor;
      }
    }
    if (body.empty()) {
      out += to_string(a);
    } else if (a == 1) {
      out += body;
    } else if (latex) {
      const std::string num = numerator_of(a).str();
      const std::string den = denominator_of(a).str();
      out += (den == "1" ? num : "\\frac{" + num + "}{" + den + "}") + " " + body;
    } else {
      out += to_string(a) + "*" + body;
    }
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  PolyQ parse() {
    PolyQ p = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::Parse, why + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  PolyQ expr() {
    PolyQ acc;
    bool neg = eat('-');
    if (!neg) eat('+');
    acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else return acc;
    }
  }
  PolyQ term() {
    PolyQ acc = power();
    for (;;) {
      if (eat('*')) {
        acc *= power();
      } else if (eat('/')) {
        const PolyQ d = power();
        if (!d.is_constant() || d.constant_term().is_zero()) fail("division by a non-constant or zero");
        acc *= PolyQ(Rational(1) / d.constant_term());
      } else {
        skip();
        // Implicit multiplication: "2xi_1_1" or ")(".
        if (pos_ < s_.size() && (s_[pos_] == '(' || std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
          acc *= power();
        else
          return acc;
      }
    }
  }
  PolyQ power() {
    PolyQ base = atom();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
    }
    return base;
  }
  PolyQ atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      PolyQ e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (c == '-') {
      ++pos_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
      return PolyQ(parse_rational(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      return PolyQ::variable(std::string(s_.substr(start, pos_ - start)));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

bool VarLess::operator()(const std::string& a, const std::string& b) const {
  const auto ga = parse_grid_name(a);
  const auto gb = parse_grid_name(b);
  if (ga && gb) return std::tie(ga->prefix, ga->i, ga->j) < std::tie(gb->prefix, gb->i, gb->j);
  if (ga) return true;
  if (gb) return false;
  return a < b;
}

Monomial::Monomial(Exponents e) : exps_(std::move(e)) {
  for (auto it = exps_.begin(); it != exps_.end();) {
    if (it->second == 0) it = exps_.erase(it);
    else degree_ += (it++)->second;
  }
}

Monomial Monomial::variable(const std::string& name, unsigned power) { return Monomial(Exponents{{name, power}}); }

unsigned Monomial::exponent(const std::string& var) const {
  auto it = exps_.find(var);
  return it == exps_.end() ? 0 : it->second;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial::Exponents e = a.exps_;
  for (const auto& [v, k] : b.exps_) e[v] += k;
  return Monomial(std::move(e));
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  auto ia = a.exponents().begin();
  auto ib = b.exponents().begin();
  const VarLess less;
  while (ia != a.exponents().end() && ib != b.exponents().end()) {
    if (ia->first == ib->first) {
      if (ia->second != ib->second) return ia->second < ib->second;
      ++ia;
      ++ib;
    } else if (less(ia->first, ib->first)) {
      return false;  // a carries the more significant unknown
    } else {
      return true;
    }
  }
  return ia == a.exponents().end() && ib != b.exponents().end();
}

PolyQ::PolyQ(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Monomial(), c);
}
PolyQ::PolyQ(int c) : PolyQ(Rational(c)) {}

PolyQ PolyQ::variable(const std::string& name) { return term(Rational(1), Monomial::variable(name)); }

PolyQ PolyQ::term(const Rational& c, Monomial m) {
  PolyQ p;
  p.add_term(m, c);
  return p;
}

void PolyQ::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool PolyQ::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

Rational PolyQ::constant_term() const { return coeff(Monomial()); }

Rational PolyQ::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int PolyQ::total_degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.degree()); }

std::set<std::string, VarLess> PolyQ::variables() const {
  std::set<std::string, VarLess> vars;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.exponents()) vars.insert(v);
  return vars;
}

std::optional<std::pair<Monomial, Rational>> PolyQ::leading_term() const {
  if (terms_.empty()) return std::nullopt;
  return *terms_.rbegin();
}

PolyQ PolyQ::substitute(const std::string& var, const PolyQ& value) const {
  return substitute(std::map<std::string, PolyQ>{{var, value}});
}

PolyQ PolyQ::substitute(const std::map<std::string, PolyQ>& values) const {
  PolyQ out;
  for (const auto& [m, c] : terms_) {
    PolyQ t(c);
    Monomial::Exponents rest;
    for (const auto& [v, e] : m.exponents()) {
      auto it = values.find(v);
      if (it == values.end()) rest.emplace(v, e);
      else t *= it->second.pow(e);
    }
    t *= term(Rational(1), Monomial(std::move(rest)));
    out += t;
  }
  return out;
}

Rational PolyQ::evaluate(const std::map<std::string, Rational>& assignment) const {
  Rational acc = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (const auto& [v, e] : m.exponents()) {
      auto it = assignment.find(v);
      if (it == assignment.end()) throw Error(ErrorKind::Assignment, "no value for unknown '" + v + "'");
      for (unsigned k = 0; k < e; ++k) t *= it->second;
    }
    acc += t;
  }
  return acc;
}

std::optional<Rational> PolyQ::ratio_to(const PolyQ& other) const {
  if (is_zero() || other.is_zero()) {
    if (is_zero() && other.is_zero()) return Rational(1);
    return std::nullopt;
  }
  if (terms_.size() != other.terms_.size()) return std::nullopt;
  const Rational first = other.coeff(terms_.begin()->first);
  if (first.is_zero()) return std::nullopt;
  const Rational r = terms_.begin()->second / first;
  for (const auto& [m, c] : terms_) {
    const Rational oc = other.coeff(m);
    if (oc.is_zero() || c != r * oc) return std::nullopt;
  }
  return r;
}

PolyQ PolyQ::sign_normalized() const {
  if (terms_.empty() || terms_.rbegin()->second.sign() > 0) return *this;
  return -*this;
}

bool PolyQ::is_definite_sum_of_squares() const {
  const Rational c0 = constant_term();
  if (c0.is_zero()) return false;
  for (const auto& [m, c] : terms_) {
    if (m.is_one()) continue;
    if (c.sign() != c0.sign() || m.exponents().size() != 1 || m.degree() % 2 != 0) return false;
  }
  return true;
}

std::string PolyQ::to_string() const { return format(terms_, false); }
std::string PolyQ::to_latex() const { return format(terms_, true); }

PolyQ& PolyQ::operator+=(const PolyQ& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}
PolyQ& PolyQ::operator-=(const PolyQ& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}
PolyQ& PolyQ::operator*=(const PolyQ& o) {
  PolyQ out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) out.add_term(ma * mb, ca * cb);
  *this = std::move(out);
  return *this;
}

PolyQ operator-(const PolyQ& a) {
  PolyQ n = a;
  for (auto& [m, c] : n.terms_) c = -c;
  return n;
}

PolyQ PolyQ::pow(unsigned k) const {
  PolyQ r(1);
  for (unsigned i = 0; i < k; ++i) r *= *this;
  return r;
}

PolyQ parse_poly(std::string_view text) { return Parser(text).parse(); }

std::string latex_name(const std::string& var) {
  if (auto g = parse_grid_name(var)) {
    auto it = greek().find(g->prefix);
    const std::string base = it == greek().end() ? g->prefix : it->second;
    return base + "^{" + std::to_string(g->i) + "}_{" + std::to_string(g->j) + "}";
  }
  auto it = greek().find(var);
  return it == greek().end() ? var : it->second;
}

}  // namespace torsionlab
