#include "lrc/fn_calculus.hpp"

#include <stdexcept>

#include "lrc/combinatorics.hpp"
#include "lrc/sampling.hpp"

namespace lrc {

FormVector::FormVector(SplittingPtr sp) : sp_(std::move(sp)), comps_(sp_->m(), Form(sp_)) {}

FormVector::FormVector(SplittingPtr sp, std::vector<Form> comps) : sp_(std::move(sp)), comps_(std::move(comps)) {
  if (comps_.size() != sp_->m()) throw std::invalid_argument("form vector: wrong number of components");
  for (auto& c : comps_) {
    if (c.is_zero())
      c = Form(sp_);
    else
      require_same(sp_, c.splitting(), "form vector");
  }
}

FormVector FormVector::tensor(const Form& omega, const VectorField& x) {
  require_same(omega.splitting(), x.sp, "tensor");
  const auto& sp = omega.splitting();
  auto adapted = x.adapted();
  std::vector<Form> comps(sp->m(), Form(sp));
  for (std::size_t b = 0; b < sp->m(); ++b)
    if (!adapted[b].is_zero()) comps[b] = adapted[b] * omega;
  return FormVector(sp, std::move(comps));
}

FormVector FormVector::frame(const Form& omega, std::size_t b) {
  FormVector z(omega.splitting());
  z.comps_.at(b) = omega;
  return z;
}

bool FormVector::is_zero() const {
  for (const auto& c : comps_)
    if (!c.is_zero()) return false;
  return true;
}

std::set<int> FormVector::degrees() const {
  std::set<int> out;
  for (const auto& c : comps_) {
    auto d = c.degrees();
    out.insert(d.begin(), d.end());
  }
  return out;
}

std::optional<int> FormVector::degree() const {
  auto ds = degrees();
  if (ds.size() != 1) return std::nullopt;
  return *ds.begin();
}

FormVector FormVector::part_of_degree(int deg) const {
  FormVector r(sp_);
  for (std::size_t b = 0; b < comps_.size(); ++b) r.comps_[b] = comps_[b].part_of_degree(deg);
  return r;
}

Form FormVector::apply(const Polynomial& f) const {
  Form out(sp_);
  for (std::size_t b = 0; b < comps_.size(); ++b) {
    if (comps_[b].is_zero()) continue;
    Polynomial eb = sp_->frame_derivative(b, f);
    if (!eb.is_zero()) out += eb * comps_[b];
  }
  return out;
}

FormVector& FormVector::operator+=(const FormVector& o) {
  if (!sp_) {
    *this = o;
    return *this;
  }
  if (!o.sp_) return *this;
  require_same(sp_, o.sp_, "form vector addition");
  for (std::size_t b = 0; b < comps_.size(); ++b) comps_[b] += o.comps_[b];
  return *this;
}

FormVector& FormVector::operator-=(const FormVector& o) { return *this += -o; }

FormVector& FormVector::operator*=(const Rational& c) {
  for (auto& f : comps_) f *= c;
  return *this;
}

FormVector FormVector::operator-() const {
  FormVector r = *this;
  for (auto& f : r.comps_) f = -f;
  return r;
}

bool operator==(const FormVector& a, const FormVector& b) {
  if (a.is_zero() && b.is_zero()) return true;
  if (!a.sp_ || !b.sp_) return false;
  return a.comps_ == b.comps_;
}

FormVector wedge(const Form& omega, const FormVector& z) {
  FormVector r(z.sp_);
  for (std::size_t b = 0; b < z.comps_.size(); ++b)
    if (!z.comps_[b].is_zero()) r.comps_[b] = wedge(omega, z.comps_[b]);
  return r;
}

namespace {

// i_Z for homogeneous Z of form degree deg.
void insert_homogeneous(Components& out, const FormVector& z, int deg, const Form& a) {
  const int dz = deg - 1;
  for (const auto& [mask, f] : a.components()) {
    int position = 0;
    for (Mask rest = mask; rest; rest &= rest - 1, ++position) {
      const int g = __builtin_ctz(rest);
      const Form& c = z.component(static_cast<std::size_t>(g));
      if (c.is_zero()) continue;
      const Mask left = mask & ((Mask{1} << g) - 1);
      const Mask right = mask & ~((Mask{2} << g) - 1);
      const bool flip = (static_cast<long long>(dz) * position) & 1;
      for (const auto& [cm, cp] : c.components()) {
        int s1 = monomial_wedge_sign(left, cm);
        if (s1 == 0) continue;
        int s2 = monomial_wedge_sign(left | cm, right);
        if (s2 == 0) continue;
        Polynomial t = f * cp;
        if ((s1 * s2 < 0) != flip) t = -t;
        accumulate(out, left | cm | right, t);
      }
    }
  }
}

}  // namespace

Form insertion(const FormVector& z, const Form& a) {
  if (a.is_zero() || z.is_zero()) return Form(z.splitting() ? z.splitting() : a.splitting());
  require_same(z.splitting(), a.splitting(), "insertion");
  Components out;
  for (int deg : z.degrees()) insert_homogeneous(out, z.part_of_degree(deg), deg, a);
  return Form(a.splitting(), std::move(out));
}

FormVector insertion(const FormVector& z, const FormVector& y) {
  std::vector<Form> comps;
  for (const auto& c : y.components()) comps.push_back(insertion(z, c));
  return FormVector(y.splitting(), std::move(comps));
}

Form lie_derivative(const FormVector& z, const Form& a) {
  Form out(a.splitting());
  if (a.is_zero() || z.is_zero()) return out;
  for (int deg : z.degrees()) {
    FormVector zp = z.part_of_degree(deg);
    out += insertion(zp, exterior_d(a));
    Form t = exterior_d(insertion(zp, a));
    if ((deg - 1) % 2 == 0)
      out -= t;
    else
      out += t;
  }
  return out;
}

FormVector nr_bracket(const FormVector& z1, const FormVector& z2) {
  require_same(z1.splitting(), z2.splitting(), "nr_bracket");
  FormVector out(z1.splitting());
  for (int d1 : z1.degrees())
    for (int d2 : z2.degrees()) {
      FormVector a = z1.part_of_degree(d1), b = z2.part_of_degree(d2);
      out += insertion(a, b);
      FormVector t = insertion(b, a);
      if (parity_sign(static_cast<long long>(d1 - 1) * (d2 - 1)) > 0)
        out -= t;
      else
        out += t;
    }
  return out;
}

FormVector from_coordinate_values(const SplittingPtr& sp, const std::vector<Form>& values) {
  const std::size_t n = sp->n(), p = sp->p();
  std::vector<Form> comps(sp->m(), Form(sp));
  for (std::size_t a = 0; a < p; ++a) comps[n + a] = values.at(n + a);
  for (std::size_t i = 0; i < n; ++i) {
    Form c = values.at(i);
    for (std::size_t a = 0; a < p; ++a)
      if (!sp->v(a, i).is_zero() && !values[n + a].is_zero()) c -= sp->v(a, i) * values[n + a];
    comps[i] = std::move(c);
  }
  return FormVector(sp, std::move(comps));
}

FormVector fn_bracket(const FormVector& z1, const FormVector& z2) {
  require_same(z1.splitting(), z2.splitting(), "fn_bracket");
  const auto& sp = z1.splitting();
  std::vector<Form> values(sp->m(), Form(sp));
  for (int d1 : z1.degrees())
    for (int d2 : z2.degrees()) {
      FormVector a = z1.part_of_degree(d1), b = z2.part_of_degree(d2);
      const bool minus = parity_sign(static_cast<long long>(d1) * d2) > 0;
      for (std::size_t c = 0; c < sp->m(); ++c) {
        const Polynomial xc = sp->coordinate(c);
        Form t1 = lie_derivative(a, b.apply(xc));
        Form t2 = lie_derivative(b, a.apply(xc));
        values[c] += t1;
        if (minus)
          values[c] -= t2;
        else
          values[c] += t2;
      }
    }
  return from_coordinate_values(sp, values);
}

FormVector identity_field(const SplittingPtr& sp) {
  std::vector<Form> comps;
  for (std::size_t b = 0; b < sp->m(); ++b) comps.push_back(Form::generator(sp, b));
  return FormVector(sp, std::move(comps));
}

std::string to_string(const FormVector& z) {
  if (z.is_zero()) return "0";
  const auto& chart = z.splitting()->chart();
  std::string out;
  for (std::size_t b = 0; b < z.components().size(); ++b) {
    const Form& c = z.component(b);
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string frame = b < chart.n() ? "d/d" + chart.leaf[b] : "V_" + chart.transverse[b - chart.n()];
    out += "[" + to_string(c) + "] (x) " + frame;
  }
  return out;
}

bool IdentityReport::all_zero() const {
  for (const auto& e : entries)
    if (!e.residual.empty()) return false;
  return true;
}

namespace {

int sgn(long long e) { return parity_sign(e); }

// Graded commutator [A, B] of operators of degrees da, db, applied to a.
template <class OpA, class OpB>
Form commutator(OpA A, int da, OpB B, int db, const Form& a) {
  Form r = A(B(a));
  Form t = B(A(a));
  return sgn(static_cast<long long>(da) * db) > 0 ? r - t : r + t;
}

}  // namespace

IdentityReport fn_identity_suite(const SplittingPtr& sp, Rng& rng, std::size_t samples) {
  IdentityReport report;
  const int top = static_cast<int>(sp->m());
  auto deg = [&](int hi) { return rng.uniform_int(0, std::min(hi, top)); };
  auto record = [&](const char* name, std::size_t k, const std::string& residual) {
    report.entries.push_back({name, k, residual});
  };
  auto form_residual = [](const Form& f) { return f.is_zero() ? std::string() : to_string(f); };
  auto fv_residual = [](const FormVector& f) { return f.is_zero() ? std::string() : to_string(f); };

  for (std::size_t k = 0; k < samples; ++k) {
    // L_{wZ} = w L_Z + (-)^{w+Z} dw i_Z
    {
      int w = deg(2), z = deg(2);
      Form omega = random_form_of_degree(rng, sp, w);
      FormVector Z = random_form_vector(rng, sp, z);
      Form a = random_form_of_degree(rng, sp, deg(2));
      Form lhs = lie_derivative(wedge(omega, Z), a);
      Form rhs = wedge(omega, lie_derivative(Z, a)) +
                 Rational(sgn(w + z)) * wedge(exterior_d(omega), insertion(Z, a));
      record("lie-of-product", k, form_residual(lhs - rhs));
    }
    // [i_Z, L_Y] = L_{i_Z Y} + (-)^Y i_{[[Z,Y]]}
    // a minus in front of the last term fails already for two vector fields
    {
      int z = deg(2), y = deg(2);
      FormVector Z = random_form_vector(rng, sp, z), Y = random_form_vector(rng, sp, y);
      Form a = random_form_of_degree(rng, sp, deg(2));
      Form lhs = commutator([&](const Form& f) { return insertion(Z, f); }, z - 1,
                            [&](const Form& f) { return lie_derivative(Y, f); }, y, a);
      Form rhs = lie_derivative(insertion(Z, Y), a) + Rational(sgn(y)) * insertion(fn_bracket(Z, Y), a);
      record("insertion-lie-commutator", k, form_residual(lhs - rhs));
    }
    // [wZ, Y]_nr = w [Z,Y]_nr - (-)^{(w+Z-1)(Y-1)} (i_Y w) Z
    {
      int w = deg(2), z = deg(2), y = deg(2);
      Form omega = random_form_of_degree(rng, sp, w);
      FormVector Z = random_form_vector(rng, sp, z), Y = random_form_vector(rng, sp, y);
      FormVector lhs = nr_bracket(wedge(omega, Z), Y);
      FormVector rhs = wedge(omega, nr_bracket(Z, Y)) -
                       Rational(sgn(static_cast<long long>(w + z - 1) * (y - 1))) * wedge(insertion(Y, omega), Z);
      record("nr-of-product", k, fv_residual(lhs - rhs));
    }
    // [[wZ, Y]] = w[[Z,Y]] - (-)^{(w+Z)Y} (L_Y w) Z + (-)^{w+Z} dw i_Z Y
    {
      int w = deg(2), z = deg(1), y = deg(1);
      Form omega = random_form_of_degree(rng, sp, w);
      FormVector Z = random_form_vector(rng, sp, z), Y = random_form_vector(rng, sp, y);
      FormVector lhs = fn_bracket(wedge(omega, Z), Y);
      FormVector rhs = wedge(omega, fn_bracket(Z, Y)) -
                       Rational(sgn(static_cast<long long>(w + z) * y)) * wedge(lie_derivative(Y, omega), Z) +
                       Rational(sgn(w + z)) * wedge(exterior_d(omega), insertion(Z, Y));
      record("fn-of-product", k, fv_residual(lhs - rhs));
    }
    // i_X[[Z,Y]] = [[i_X Z, Y]] + (-)^{(X-1)Z}[[Z, i_X Y]] + (-)^Z i_{[[X,Z]]}Y - (-)^{Y(Z-1)} i_{[[X,Y]]}Z
    {
      int x = deg(2), z = deg(1), y = deg(1);
      FormVector X = random_form_vector(rng, sp, x), Z = random_form_vector(rng, sp, z),
                 Y = random_form_vector(rng, sp, y);
      FormVector lhs = insertion(X, fn_bracket(Z, Y));
      FormVector rhs = fn_bracket(insertion(X, Z), Y) +
                       Rational(sgn(static_cast<long long>(x - 1) * z)) * fn_bracket(Z, insertion(X, Y)) +
                       Rational(sgn(z)) * insertion(fn_bracket(X, Z), Y) -
                       Rational(sgn(static_cast<long long>(y) * (z - 1))) * insertion(fn_bracket(X, Y), Z);
      record("insertion-into-fn", k, fv_residual(lhs - rhs));
    }
    // [[X,[Z,Y]_nr]] = [[[X,Z]],Y]_nr + (-)^{X(Z-1)}([Z,[[X,Y]]]_nr - [[i_Z X, Y]])
    //                      + (-)^{(X+Z-1)(Y-1)} [[i_Y X, Z]]
    {
      int x = deg(1), z = deg(2), y = deg(2);
      FormVector X = random_form_vector(rng, sp, x), Z = random_form_vector(rng, sp, z),
                 Y = random_form_vector(rng, sp, y);
      FormVector lhs = fn_bracket(X, nr_bracket(Z, Y));
      FormVector rhs = nr_bracket(fn_bracket(X, Z), Y) +
                       Rational(sgn(static_cast<long long>(x) * (z - 1))) *
                           (nr_bracket(Z, fn_bracket(X, Y)) - fn_bracket(insertion(Z, X), Y)) +
                       Rational(sgn(static_cast<long long>(x + z - 1) * (y - 1))) * fn_bracket(insertion(Y, X), Z);
      record("fn-of-nr", k, fv_residual(lhs - rhs));
    }
  }
  return report;
}

}  // namespace lrc
