#include "torsionlab/rational.hpp"

#include "torsionlab/error.hpp"

#include <cctype>
#include <sstream>

namespace torsionlab {

namespace {

Integer parse_integer(std::string_view s, std::string_view whole) {
  std::size_t pos = 0;
  bool neg = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) neg = s[pos++] == '-';
  if (pos == s.size()) throw Error(ErrorKind::Parse, "bad rational '" + std::string(whole) + "'");
  Integer v = 0;
  for (; pos < s.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(s[pos])))
      throw Error(ErrorKind::Parse, "bad rational '" + std::string(whole) + "'");
    v = v * 10 + (s[pos] - '0');
  }
  return neg ? Integer(-v) : v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(trim(s.substr(0, slash)), text);
    Integer den = parse_integer(trim(s.substr(slash + 1)), text);
    if (den == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot);
    std::string_view fp = s.substr(dot + 1);
    bool neg = !ip.empty() && ip.front() == '-';
    if (!ip.empty() && (ip.front() == '-' || ip.front() == '+')) ip.remove_prefix(1);
    Integer whole = ip.empty() ? Integer(0) : parse_integer(ip, text);
    Integer frac = fp.empty() ? Integer(0) : parse_integer(fp, text);
    if (!fp.empty() && (fp.front() == '-' || fp.front() == '+'))
      throw Error(ErrorKind::Parse, "bad rational '" + std::string(text) + "'");
    Integer scale = 1;
    for (std::size_t k = 0; k < fp.size(); ++k) scale *= 10;
    Rational r = Rational(whole) + Rational(frac, scale);
    return neg ? Rational(-r) : r;
  }
  return Rational(parse_integer(s, text));
}

std::string to_string(const Rational& r) {
  if (denominator_of(r) == 1) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r.sign() < 0) return std::nullopt;
  const Integer n = numerator_of(r);
  const Integer d = denominator_of(r);
  const Integer sn = boost::multiprecision::sqrt(n);
  const Integer sd = boost::multiprecision::sqrt(d);
  if (sn * sn != n || sd * sd != d) return std::nullopt;
  return Rational(sn, sd);
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  const Rational n = o.norm();
  if (n.is_zero()) throw Error(ErrorKind::Singularity, "division by zero in Q(i)");
  *this *= o.conj();
  re /= n;
  im /= n;
  return *this;
}

std::string to_string(const GaussianRational& z) {
  if (z.im.is_zero()) return to_string(z.re);
  if (z.re.is_zero()) return to_string(z.im) + "i";
  return to_string(z.re) + (z.im.sign() < 0 ? "-" : "+") + to_string(abs(z.im)) + "i";
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << to_string(z); }

namespace {

// a + bi with a^2 + b^2 = p for a prime p = 1 mod 4 (Cornacchia).
GaussianRational two_squares_prime(const Integer& p) {
  Integer t;
  for (Integer c = 2;; ++c) {
    t = boost::multiprecision::powm(c, (p - 1) / 4, p);
    if ((t * t) % p == p - 1) break;
  }
  Integer a = p, b = t;
  while (b * b > p) {
    Integer r = a % b;
    a = b;
    b = r;
  }
  const Integer rest = boost::multiprecision::sqrt(Integer(p - b * b));
  return {Rational(b), Rational(rest)};
}

GaussianRational power(GaussianRational z, unsigned e) {
  GaussianRational out(1);
  for (; e > 0; --e) out *= z;
  return out;
}

}  // namespace

std::optional<GaussianRational> norm_preimage(const Rational& r) {
  if (r.sign() < 0) return std::nullopt;
  if (r.is_zero()) return GaussianRational(0);
  const Integer den = denominator_of(r);
  Integer n = numerator_of(r) * den;
  GaussianRational z(1);
  const Integer limit = 10'000'000;
  for (Integer d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (d > limit) return std::nullopt;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e == 0) continue;
    if (d == 2) z *= power(GaussianRational(1, 1), e);
    else if (d % 4 == 3) {
      if (e % 2 != 0) return std::nullopt;
      z *= power(GaussianRational(Rational(d)), e / 2);
    } else {
      z *= power(two_squares_prime(d), e);
    }
  }
  if (n > 1) {
    if (n % 4 == 3) return std::nullopt;
    z *= n == 2 ? GaussianRational(1, 1) : two_squares_prime(n);
  }
  return z / GaussianRational(Rational(den));
}

}  // namespace torsionlab
