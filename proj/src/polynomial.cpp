#include "lrc/polynomial.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace lrc {

namespace {
constexpr unsigned shift_of(std::size_t v) {
  return static_cast<unsigned>(8 * (Monomial::kMaxVars - 1 - v));
}
}  // namespace

Monomial Monomial::variable(std::size_t v, unsigned power) {
  if (v >= kMaxVars) throw std::out_of_range("monomial: variable index exceeds chart limit");
  if (power > 0xffu) throw std::overflow_error("monomial: exponent overflow");
  Monomial m;
  m.packed = static_cast<std::uint64_t>(power) << shift_of(v);
  m.degree = power;
  return m;
}

Monomial Monomial::times(const Monomial& o) const {
  Monomial r;
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    unsigned e = exponent(v) + o.exponent(v);
    if (e > 0xffu) throw std::overflow_error("monomial: exponent overflow");
    r.packed |= static_cast<std::uint64_t>(e) << shift_of(v);
  }
  r.degree = degree + o.degree;
  return r;
}

Monomial Monomial::lowered(std::size_t v) const {
  Monomial r = *this;
  r.packed -= std::uint64_t{1} << shift_of(v);
  r.degree -= 1;
  return r;
}

Polynomial::Polynomial(std::size_t nvars) : nvars_(nvars) {
  if (nvars > Monomial::kMaxVars) throw std::out_of_range("polynomial: too many variables");
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  if (c != 0) p.terms_.emplace_back(Monomial{}, c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t v) {
  if (v >= nvars) throw std::out_of_range("polynomial: variable index out of range");
  Polynomial p(nvars);
  p.terms_.emplace_back(Monomial::variable(v), Rational(1));
  return p;
}

Polynomial Polynomial::from_terms(std::size_t nvars, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  Polynomial p(nvars);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second == 0) p.terms_.pop_back();
    } else if (t.second != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.degree == 0);
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_[0].first.degree == 0) return terms_[0].second;
  return 0;
}

unsigned Polynomial::total_degree() const {
  return terms_.empty() ? 0 : terms_.back().first.degree;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& k) { return t.first < k; });
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

void Polynomial::check_same_chart(const Polynomial& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial: chart mismatch");
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

void Polynomial::add_scaled(const Polynomial& o, int sign) {
  check_same_chart(o);
  if (o.terms_.empty()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      out.emplace_back(b->first, sign > 0 ? b->second : Rational(-b->second));
      ++b;
    } else {
      Rational c = sign > 0 ? Rational(a->second + b->second) : Rational(a->second - b->second);
      if (c != 0) out.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  add_scaled(o, 1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  add_scaled(o, -1);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same_chart(b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.nvars_);
  std::map<Monomial, Rational> acc;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) acc[ma.times(mb)] += ca * cb;
  Polynomial r(a.nvars_);
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) r.terms_.emplace_back(m, std::move(c));
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r = constant(nvars_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1u) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

Polynomial differentiate(const Polynomial& p, std::size_t var) {
  if (var >= p.nvars()) throw std::out_of_range("differentiate: variable index out of range");
  std::vector<Polynomial::Term> out;
  for (const auto& [m, c] : p.terms()) {
    unsigned e = m.exponent(var);
    if (e == 0) continue;
    out.emplace_back(m.lowered(var), c * e);
  }
  return Polynomial::from_terms(p.nvars(), std::move(out));
}

Polynomial differentiate(const Polynomial& p, const std::string& coord,
                         const std::vector<std::string>& coords) {
  auto it = std::find(coords.begin(), coords.end(), coord);
  if (it == coords.end()) throw std::invalid_argument("differentiate: unknown coordinate '" + coord + "'");
  return differentiate(p, static_cast<std::size_t>(it - coords.begin()));
}

std::string to_string(const Rational& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Polynomial& p, const std::vector<std::string>& coords) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& ts = p.terms();
  for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = abs(c);
    if (it == ts.rbegin()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string mono;
    for (std::size_t v = 0; v < p.nvars(); ++v) {
      unsigned e = m.exponent(v);
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += coords.at(v);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + "*" + mono;
    }
  }
  return out;
}

}  // namespace lrc
