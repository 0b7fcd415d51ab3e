#include "lrc/forms.hpp"

#include <algorithm>
#include <stdexcept>

#include "lrc/expression.hpp"

namespace lrc {

std::vector<std::string> Chart::coordinates() const {
  std::vector<std::string> all = leaf;
  all.insert(all.end(), transverse.begin(), transverse.end());
  return all;
}

void Chart::validate() const {
  auto all = coordinates();
  if (all.size() > Monomial::kMaxVars)
    throw std::invalid_argument("chart: at most " + std::to_string(Monomial::kMaxVars) + " coordinates");
  for (std::size_t a = 0; a < all.size(); ++a) {
    if (all[a].empty()) throw std::invalid_argument("chart: empty coordinate name");
    for (std::size_t b = a + 1; b < all.size(); ++b)
      if (all[a] == all[b]) throw std::invalid_argument("chart: duplicate coordinate '" + all[a] + "'");
  }
}

int monomial_wedge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  int inv = 0;
  for (Mask rest = b; rest; rest &= rest - 1) {
    int y = __builtin_ctz(rest);
    Mask above = y >= 31 ? 0 : ~((Mask{2} << y) - 1);
    inv += popcount(a & above);
  }
  return (inv & 1) ? -1 : 1;
}

void accumulate(Components& out, Mask mask, const Polynomial& p) {
  if (p.is_zero()) return;
  auto it = out.find(mask);
  if (it == out.end()) {
    out.emplace(mask, p);
    return;
  }
  it->second += p;
  if (it->second.is_zero()) out.erase(it);
}

void accumulate_wedge(Components& out, const Components& a, const Components& b, const Rational& scale) {
  for (const auto& [ma, pa] : a)
    for (const auto& [mb, pb] : b) {
      int s = monomial_wedge_sign(ma, mb);
      if (s == 0) continue;
      Polynomial prod = pa * pb;
      if (s < 0 || scale != 1) prod *= (s < 0 ? Rational(-scale) : scale);
      accumulate(out, ma | mb, prod);
    }
}

Splitting::Splitting(Chart chart, std::vector<std::vector<Polynomial>> v)
    : chart_(std::move(chart)), v_(std::move(v)) {}

std::shared_ptr<const Splitting> Splitting::make(Chart chart, std::vector<std::vector<Polynomial>> v) {
  chart.validate();
  const std::size_t n = chart.n(), p = chart.p(), m = chart.m();
  if (v.size() != p) throw std::invalid_argument("splitting: need one row of coefficients per transverse coordinate");
  for (auto& row : v) {
    if (row.size() != n) throw std::invalid_argument("splitting: need one coefficient per leaf coordinate");
    for (auto& f : row)
      if (f.nvars() != m) throw std::invalid_argument("splitting: coefficient over the wrong chart");
  }
  std::shared_ptr<Splitting> sp(new Splitting(std::move(chart), std::move(v)));

  // d(d^C x^i) = - sum_a d(V_a^i) ^ du^a, expanded in the adapted coframe.
  std::vector<Components> d_gen(m);
  for (std::size_t i = 0; i < n; ++i) {
    Components out;
    for (std::size_t a = 0; a < p; ++a) {
      const Polynomial& f = sp->v_[a][i];
      if (f.is_zero()) continue;
      Components df;
      for (std::size_t b = 0; b < m; ++b) accumulate(df, Mask{1} << b, sp->frame_derivative(b, f));
      Components du{{Mask{1} << (n + a), Polynomial::constant(m, 1)}};
      accumulate_wedge(out, df, du, Rational(-1));
    }
    d_gen[i] = std::move(out);
  }
  const std::size_t count = std::size_t{1} << m;
  sp->d_cache_.resize(count);
  for (Mask mask = 0; mask < count; ++mask) {
    Components out;
    int position = 0;
    for (Mask rest = mask; rest; rest &= rest - 1, ++position) {
      int g = __builtin_ctz(rest);
      if (d_gen[g].empty()) continue;
      Mask before = mask & ((Mask{1} << g) - 1);
      Mask after = mask & ~((Mask{2} << g) - 1);
      Components left{{before, Polynomial::constant(m, 1)}};
      Components right{{after, Polynomial::constant(m, 1)}};
      Components tmp;
      accumulate_wedge(tmp, left, d_gen[g], Rational((position & 1) ? -1 : 1));
      accumulate_wedge(out, tmp, right);
    }
    sp->d_cache_[mask] = std::move(out);
  }
  return sp;
}

std::shared_ptr<const Splitting> Splitting::flat(Chart chart) {
  const std::size_t m = chart.m();
  std::vector<std::vector<Polynomial>> v(chart.p(), std::vector<Polynomial>(chart.n(), Polynomial(m)));
  return make(std::move(chart), std::move(v));
}

Polynomial Splitting::frame_derivative(std::size_t b, const Polynomial& f) const {
  const std::size_t nn = n();
  if (b < nn) return differentiate(f, b);
  const std::size_t a = b - nn;
  Polynomial r = differentiate(f, b);
  for (std::size_t i = 0; i < nn; ++i)
    if (!v_[a][i].is_zero()) r += v_[a][i] * differentiate(f, i);
  return r;
}

void require_same(const SplittingPtr& a, const SplittingPtr& b, const char* where) {
  if (!a || !b) throw std::invalid_argument(std::string(where) + ": form without splitting");
  if (a != b && !a->same_as(*b)) throw std::invalid_argument(std::string(where) + ": splitting mismatch");
}

Form::Form(SplittingPtr sp, Components comps) : sp_(std::move(sp)), comps_(std::move(comps)) {
  for (auto it = comps_.begin(); it != comps_.end();) {
    if (it->second.is_zero())
      it = comps_.erase(it);
    else
      ++it;
  }
}

Form Form::function(SplittingPtr sp, const Polynomial& f) { return monomial(std::move(sp), 0, f); }

Form Form::constant(SplittingPtr sp, const Rational& c) {
  Polynomial f = sp->constant(c);
  return monomial(std::move(sp), 0, f);
}

Form Form::generator(SplittingPtr sp, std::size_t g) {
  if (g >= sp->m()) throw std::out_of_range("form generator out of range");
  Polynomial one = sp->constant(1);
  return monomial(std::move(sp), Mask{1} << g, one);
}

Form Form::monomial(SplittingPtr sp, Mask mask, const Polynomial& coeff) {
  Form f(std::move(sp));
  if (!coeff.is_zero()) f.comps_.emplace(mask, coeff);
  return f;
}

std::optional<int> Form::degree() const {
  auto ds = degrees();
  if (ds.size() != 1) return std::nullopt;
  return *ds.begin();
}

std::set<int> Form::degrees() const {
  std::set<int> out;
  for (const auto& [mask, p] : comps_) out.insert(popcount(mask));
  return out;
}

Form Form::part_of_degree(int deg) const {
  Form r(sp_);
  for (const auto& [mask, p] : comps_)
    if (popcount(mask) == deg) r.comps_.emplace(mask, p);
  return r;
}

int Form::max_du_count() const {
  int best = 0;
  for (const auto& [mask, p] : comps_) best = std::max(best, popcount(mask & sp_->du_mask()));
  return best;
}

Form& Form::operator+=(const Form& o) {
  if (o.comps_.empty()) {
    if (!sp_) sp_ = o.sp_;
    return *this;
  }
  if (!sp_) sp_ = o.sp_;
  require_same(sp_, o.sp_, "form addition");
  for (const auto& [mask, p] : o.comps_) accumulate(comps_, mask, p);
  return *this;
}

Form& Form::operator-=(const Form& o) { return *this += -o; }

Form& Form::operator*=(const Rational& c) {
  if (c == 0) {
    comps_.clear();
    return *this;
  }
  for (auto& [mask, p] : comps_) p *= c;
  return *this;
}

Form Form::operator-() const {
  Form r = *this;
  for (auto& [mask, p] : r.comps_) p = -p;
  return r;
}

Form operator*(const Polynomial& f, const Form& a) {
  Form r(a.sp_);
  if (f.is_zero()) return r;
  for (const auto& [mask, p] : a.comps_) accumulate(r.comps_, mask, f * p);
  return r;
}

bool operator==(const Form& a, const Form& b) {
  if (a.comps_.empty() && b.comps_.empty()) return true;
  if (a.sp_ && b.sp_ && a.sp_ != b.sp_ && !a.sp_->same_as(*b.sp_)) return false;
  return a.comps_ == b.comps_;
}

Form wedge(const Form& a, const Form& b) {
  require_same(a.splitting(), b.splitting(), "wedge");
  Components out;
  accumulate_wedge(out, a.components(), b.components());
  return Form(a.splitting(), std::move(out));
}

Form exterior_d(const Form& a) {
  const auto& sp = a.splitting();
  Components out;
  if (!sp) return a;
  const std::size_t m = sp->m();
  for (const auto& [mask, f] : a.components()) {
    Components df;
    for (std::size_t b = 0; b < m; ++b) {
      Mask g = Mask{1} << b;
      if (mask & g) continue;
      Polynomial eb = sp->frame_derivative(b, f);
      if (eb.is_zero()) continue;
      int s = monomial_wedge_sign(g, mask);
      accumulate(out, g | mask, s < 0 ? -eb : eb);
    }
    for (const auto& [dm, coeff] : sp->d_monomial(mask)) accumulate(out, dm, f * coeff);
  }
  return Form(sp, std::move(out));
}

Form bidegree_project(const Form& a, int r, int s) {
  const auto& sp = a.splitting();
  Components out;
  for (const auto& [mask, p] : a.components()) {
    if (popcount(mask & sp->du_mask()) != r) continue;
    if (s >= 0 && popcount(mask & sp->leaf_mask()) != s) continue;
    out.emplace(mask, p);
  }
  return Form(sp, std::move(out));
}

VectorField VectorField::zero(SplittingPtr sp) {
  VectorField x{sp, std::vector<Polynomial>(sp->m(), sp->zero())};
  return x;
}

VectorField VectorField::coordinate(SplittingPtr sp, std::size_t c) {
  VectorField x = zero(sp);
  x.coeff.at(c) = sp->constant(1);
  return x;
}

VectorField VectorField::transversal(SplittingPtr sp, std::size_t a) {
  VectorField x = zero(sp);
  const std::size_t n = sp->n();
  x.coeff.at(n + a) = sp->constant(1);
  for (std::size_t i = 0; i < n; ++i) x.coeff[i] = sp->v(a, i);
  return x;
}

Polynomial VectorField::apply(const Polynomial& f) const {
  Polynomial r = sp->zero();
  for (std::size_t c = 0; c < coeff.size(); ++c)
    if (!coeff[c].is_zero()) r += coeff[c] * differentiate(f, c);
  return r;
}

std::vector<Polynomial> VectorField::adapted() const {
  const std::size_t n = sp->n(), p = sp->p();
  std::vector<Polynomial> out = coeff;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < p; ++a)
      if (!coeff[n + a].is_zero() && !sp->v(a, i).is_zero()) out[i] -= sp->v(a, i) * coeff[n + a];
  return out;
}

Form contract_vector(const VectorField& x, const Form& a) {
  require_same(x.sp, a.splitting(), "contract_vector");
  const auto comp = x.adapted();
  Components out;
  for (const auto& [mask, f] : a.components()) {
    int position = 0;
    for (Mask rest = mask; rest; rest &= rest - 1, ++position) {
      int g = __builtin_ctz(rest);
      if (comp[g].is_zero()) continue;
      Polynomial t = f * comp[g];
      if (position & 1) t = -t;
      accumulate(out, mask & ~(Mask{1} << g), t);
    }
  }
  return Form(a.splitting(), std::move(out));
}

Form reframe(const Form& a, const SplittingPtr& target) {
  const auto& src = a.splitting();
  if (!(src->chart() == target->chart())) throw std::invalid_argument("reframe: chart mismatch");
  const std::size_t n = src->n(), p = src->p(), m = src->m();
  // d^C x^i = d^C' x^i + (V'_a^i - V_a^i) du^a
  std::vector<Components> image(m);
  for (std::size_t g = 0; g < m; ++g) {
    image[g].emplace(Mask{1} << g, Polynomial::constant(m, 1));
    if (g < n)
      for (std::size_t a = 0; a < p; ++a)
        accumulate(image[g], Mask{1} << (n + a), target->v(a, g) - src->v(a, g));
  }
  Components out;
  for (const auto& [mask, f] : a.components()) {
    Components prod{{0, f}};
    for (Mask rest = mask; rest; rest &= rest - 1) {
      Components next;
      accumulate_wedge(next, prod, image[__builtin_ctz(rest)]);
      prod = std::move(next);
    }
    for (auto& [mm, c] : prod) accumulate(out, mm, c);
  }
  return Form(target, std::move(out));
}

namespace {

Form evaluate_form(const ExprNode& node, const SplittingPtr& sp, const std::vector<std::string>& coords) {
  switch (node.kind) {
    case ExprNode::Kind::Number:
      return Form::constant(sp, node.value);
    case ExprNode::Kind::Identifier: {
      auto it = std::find(coords.begin(), coords.end(), node.name);
      if (it != coords.end())
        return Form::function(sp, sp->coordinate(static_cast<std::size_t>(it - coords.begin())));
      if (node.name.size() > 1 && node.name[0] == 'd') {
        auto jt = std::find(coords.begin(), coords.end(), node.name.substr(1));
        if (jt != coords.end())
          return exterior_d(Form::function(sp, sp->coordinate(static_cast<std::size_t>(jt - coords.begin()))));
      }
      throw ParseError("unknown coordinate '" + node.name + "'", node.line, node.column);
    }
    case ExprNode::Kind::Add:
      return evaluate_form(*node.kids[0], sp, coords) + evaluate_form(*node.kids[1], sp, coords);
    case ExprNode::Kind::Sub:
      return evaluate_form(*node.kids[0], sp, coords) - evaluate_form(*node.kids[1], sp, coords);
    case ExprNode::Kind::Neg:
      return -evaluate_form(*node.kids[0], sp, coords);
    case ExprNode::Kind::Mul:
    case ExprNode::Kind::Wedge:
      return wedge(evaluate_form(*node.kids[0], sp, coords), evaluate_form(*node.kids[1], sp, coords));
    case ExprNode::Kind::Pow: {
      Form base = evaluate_form(*node.kids[0], sp, coords);
      if (!base.is_zero() && base.degrees() != std::set<int>{0})
        throw ParseError("power of a non-scalar factor", node.line, node.column);
      Polynomial f = base.is_zero() ? sp->zero() : base.components().begin()->second;
      return Form::function(sp, f.pow(node.power));
    }
  }
  throw ParseError("malformed form literal", node.line, node.column);
}

}  // namespace

Form parse_form(const std::string& text, const SplittingPtr& sp, int line, int column) {
  auto ast = parse_ast(text, line, column);
  return evaluate_form(*ast, sp, sp->chart().coordinates());
}

std::string generator_name(const Chart& chart, std::size_t g) {
  if (g < chart.n()) return "dC" + chart.leaf[g];
  return "d" + chart.transverse.at(g - chart.n());
}

std::string to_string(const Form& a) {
  if (a.is_zero()) return "0";
  const auto& chart = a.splitting()->chart();
  const auto coords = chart.coordinates();
  std::string out;
  for (const auto& [mask, p] : a.components()) {
    if (!out.empty()) out += " + ";
    out += "(" + to_string(p, coords) + ")";
    for (Mask rest = mask; rest; rest &= rest - 1) {
      out += (rest == mask) ? " " : "^";
      out += generator_name(chart, static_cast<std::size_t>(__builtin_ctz(rest)));
    }
  }
  return out;
}

}  // namespace lrc
