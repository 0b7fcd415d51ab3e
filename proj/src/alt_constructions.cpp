#include "lrc/alt_constructions.hpp"

#include <stdexcept>

#include "lrc/combinatorics.hpp"
#include "lrc/sampling.hpp"

namespace lrc {

namespace {

Rational sgn(long long e) { return Rational(parity_sign(e)); }

std::string label(const std::string& what, std::size_t sample) { return what + "#" + std::to_string(sample); }

int deg_or_zero(const Form& a) { return a.is_zero() ? 0 : form_degree(a); }

}  // namespace

// ---------------------------------------------------------------------------------------------
// First order operators

FirstOrderOperator FirstOrderOperator::zero(const SplittingPtr& sp) {
  return {FormVector(sp), FormVector(sp), Form(sp)};
}

FirstOrderOperator FirstOrderOperator::derivation(FormVector z, FormVector y) {
  auto sp = z.splitting();
  require_same(sp, y.splitting(), "first order operator");
  return {std::move(z), std::move(y), Form(sp)};
}

FirstOrderOperator FirstOrderOperator::multiplication(Form w) {
  auto sp = w.splitting();
  return {FormVector(sp), FormVector(sp), std::move(w)};
}

FirstOrderOperator FirstOrderOperator::exterior_d(const SplittingPtr& sp) {
  return derivation(FormVector(sp), identity_field(sp));
}

std::set<int> FirstOrderOperator::degrees() const {
  std::set<int> out;
  for (int d : z.degrees()) out.insert(d - 1);
  for (int d : y.degrees()) out.insert(d);
  for (int d : scalar.degrees()) out.insert(d);
  return out;
}

FirstOrderOperator FirstOrderOperator::part_of_degree(int deg) const {
  return {z.part_of_degree(deg + 1), y.part_of_degree(deg), scalar.part_of_degree(deg)};
}

Form FirstOrderOperator::apply_derivation(const Form& a) const {
  Form out(a.splitting());
  if (!z.is_zero()) out += insertion(z, a);
  if (!y.is_zero()) out += lie_derivative(y, a);
  return out;
}

Form FirstOrderOperator::apply(const Form& a) const { return apply_derivation(a) + wedge(scalar, a); }

FirstOrderOperator& FirstOrderOperator::operator+=(const FirstOrderOperator& o) {
  z += o.z;
  y += o.y;
  scalar += o.scalar;
  return *this;
}

FirstOrderOperator& FirstOrderOperator::operator-=(const FirstOrderOperator& o) {
  z -= o.z;
  y -= o.y;
  scalar -= o.scalar;
  return *this;
}

FirstOrderOperator& FirstOrderOperator::operator*=(const Rational& c) {
  z *= c;
  y *= c;
  scalar *= c;
  return *this;
}

FirstOrderOperator commutator(const FirstOrderOperator& a, const FirstOrderOperator& b) {
  const auto sp = a.splitting();
  require_same(sp, b.splitting(), "commutator");
  FirstOrderOperator out = FirstOrderOperator::zero(sp);
  for (int da : a.degrees()) {
    const FirstOrderOperator A = a.part_of_degree(da);
    for (int db : b.degrees()) {
      const FirstOrderOperator B = b.part_of_degree(db);
      const Rational swap = sgn(static_cast<long long>(da) * db);
      // [i_Z1, i_Z2] = i_{[Z1,Z2]_nr}
      if (!A.z.is_zero() && !B.z.is_zero()) out.z += nr_bracket(A.z, B.z);
      // [i_Z, L_Y] = L_{i_Z Y} + (-)^Y i_{[[Z,Y]]}
      if (!A.z.is_zero() && !B.y.is_zero()) {
        out.y += insertion(A.z, B.y);
        out.z += sgn(db) * fn_bracket(A.z, B.y);
      }
      if (!A.y.is_zero() && !B.z.is_zero()) {
        out.y -= swap * insertion(B.z, A.y);
        out.z -= (swap * sgn(da)) * fn_bracket(B.z, A.y);
      }
      if (!A.y.is_zero() && !B.y.is_zero()) out.y += fn_bracket(A.y, B.y);
      out.scalar += A.apply_derivation(B.scalar) - swap * B.apply_derivation(A.scalar);
    }
  }
  return out;
}

FirstOrderOperator vdata_embed(const FormVector& q) { return FirstOrderOperator::derivation(q, FormVector(q.splitting())); }

FirstOrderOperator vdata_embed(const Form& a) { return FirstOrderOperator::multiplication(-a); }

VProjection vdata_project(const FirstOrderOperator& op) {
  const auto& sp = op.splitting();
  const std::size_t n = sp->n();
  std::vector<Form> comps(sp->m(), Form(sp));
  for (std::size_t a = 0; a < sp->p(); ++a) comps[n + a] = overline(op.apply_derivation(Form::generator(sp, n + a)));
  return {FormVector(sp, std::move(comps)), -overline(op.scalar)};
}

int MixedArg::degree() const { return is_q ? shifted_degree(q) : deg_or_zero(a); }

VProjection derived_bracket(const SplittingPtr& sp, const std::vector<MixedArg>& args) {
  FirstOrderOperator cur = FirstOrderOperator::exterior_d(sp);
  for (const auto& b : args) cur = commutator(cur, b.embed());
  return vdata_project(cur);
}

namespace {

FirstOrderOperator random_operator(Rng& rng, const SplittingPtr& sp, int deg) {
  return {random_form_vector(rng, sp, deg + 1), random_form_vector(rng, sp, deg), random_form_of_degree(rng, sp, deg)};
}

FirstOrderOperator embed(const VProjection& v) { return vdata_embed(v.q) + vdata_embed(v.a); }

std::string residual_of(const VProjection& v) {
  std::string r = residual_of(v.q), s = residual_of(v.a);
  if (r.empty()) return s;
  if (s.empty()) return r;
  return r + " ; " + s;
}

std::string residual_of(const FirstOrderOperator& op) {
  std::string out;
  for (const auto& part : {residual_of(op.z), residual_of(op.y), residual_of(op.scalar)})
    if (!part.empty()) out += (out.empty() ? "" : " ; ") + part;
  return out;
}

}  // namespace

CheckReport vdata_check(const FoliationStructure& F, Rng& rng, std::size_t samples) {
  CheckReport rep;
  const auto& sp = F.sp;
  const auto D = FirstOrderOperator::exterior_d(sp);
  rep.add("PD=0", residual_of(vdata_project(D)));
  rep.add("D^2=0", residual_of(commutator(D, D)));
  for (std::size_t s = 0; s < samples; ++s) {
    const FormVector q1 = random_q(rng, sp, 1), q2 = random_q(rng, sp, 1);
    const Form a1 = random_abar(rng, sp, 1), a2 = random_abar(rng, sp, 1);
    const VProjection pq = vdata_project(vdata_embed(q1));
    rep.add(label("Pi=id/q", s), residual_of(VProjection{pq.q - q1, pq.a}));
    const VProjection pa = vdata_project(vdata_embed(a1));
    rep.add(label("Pi=id/a", s), residual_of(VProjection{pa.q, pa.a - a1}));
    rep.add(label("abelian/qq", s), residual_of(commutator(vdata_embed(q1), vdata_embed(q2))));
    rep.add(label("abelian/qa", s), residual_of(commutator(vdata_embed(q1), vdata_embed(a1))));
    rep.add(label("abelian/aa", s), residual_of(commutator(vdata_embed(a1), vdata_embed(a2))));

    const int d1 = rng.uniform_int(0, 1), d2 = rng.uniform_int(0, 1);
    FirstOrderOperator x1 = random_operator(rng, sp, d1), x2 = random_operator(rng, sp, d2);
    x1 -= embed(vdata_project(x1));
    x2 -= embed(vdata_project(x2));
    rep.add(label("kerP", s), residual_of(vdata_project(x1)));
    rep.add(label("kerP-subalgebra", s), residual_of(vdata_project(commutator(x1, x2))));

    // the symbolic commutator is the operator commutator
    const FirstOrderOperator y1 = random_operator(rng, sp, d1), y2 = random_operator(rng, sp, d2);
    const Form rho = random_form_of_degree(rng, sp, rng.uniform_int(0, 2));
    const Form lhs = commutator(y1, y2).apply(rho);
    const Form rhs = y1.apply(y2.apply(rho)) - sgn(d1 * d2) * y2.apply(y1.apply(rho));
    rep.add(label("commutator-as-operator", s), residual_of(lhs - rhs));
  }
  return rep;
}

CheckReport derived_equivalence_check(const FoliationStructure& F, Rng& rng, std::size_t samples, int max_arity) {
  CheckReport rep;
  const auto& sp = F.sp;
  FoliationAlgebra alg(F);
  for (std::size_t s = 0; s < samples; ++s)
    for (int k = 1; k <= max_arity; ++k) {
      const std::string tag = "/" + std::to_string(k);
      std::vector<FormVector> qs;
      std::vector<int> deg;
      std::vector<MixedArg> args;
      for (int i = 0; i < k; ++i) {
        qs.push_back(random_q(rng, sp, 1));
        deg.push_back(shifted_degree(qs.back()));
        args.push_back(MixedArg::from_q(qs.back()));
      }
      const VProjection all_q = derived_bracket(sp, args);
      rep.add(label("derived-bracket" + tag, s), residual_of(VProjection{all_q.q - alg.bracket(qs, deg), all_q.a}));

      const Form a = random_abar(rng, sp, 1);
      const int ad = deg_or_zero(a);
      std::vector<MixedArg> with_a(args.begin(), args.end() - 1);
      with_a.push_back(MixedArg::from_abar(a));
      const std::vector<FormVector> head(qs.begin(), qs.end() - 1);
      const std::vector<int> head_deg(deg.begin(), deg.end() - 1);
      const Form anchor = alg.anchor(head, head_deg, a);
      const VProjection last = derived_bracket(sp, with_a);
      rep.add(label("derived-anchor" + tag, s), residual_of(VProjection{last.q, last.a - anchor}));
      if (k >= 2) {
        // graded symmetry: a moved in front of the Q entries
        std::vector<MixedArg> front{MixedArg::from_abar(a)};
        front.insert(front.end(), args.begin(), args.end() - 1);
        const VProjection first = derived_bracket(sp, front);
        const Rational sg = sgn(static_cast<long long>(ad) * detail::degree_sum(head_deg));
        rep.add(label("derived-anchor-front" + tag, s), residual_of(VProjection{first.q, first.a - sg * anchor}));
        std::vector<MixedArg> two = with_a;
        two.front() = MixedArg::from_abar(random_abar(rng, sp, 1));
        rep.add(label("two-abar-entries" + tag, s), residual_of(derived_bracket(sp, two)));
      }
    }
  return rep;
}

// ---------------------------------------------------------------------------------------------
// Derivations of Abar and contraction data

LBarDerivation LBarDerivation::zero(const SplittingPtr& sp, int degree) {
  return {sp, degree, std::vector<Form>(sp->m(), Form(sp)), std::vector<Form>(sp->n(), Form(sp))};
}

Form LBarDerivation::apply(const Form& lambda) const {
  require_same(sp, lambda.splitting(), "derivation of Abar");
  const std::size_t n = sp->n(), m = sp->m();
  const Polynomial one = sp->constant(1);
  Form out(sp);
  for (const auto& [mask, f] : lambda.components()) {
    if ((mask & sp->du_mask()) != 0) throw std::invalid_argument("derivation of Abar: argument has du factors");
    Form df(sp);
    for (std::size_t c = 0; c < m; ++c) {
      const Polynomial pc = differentiate(f, c);
      if (!pc.is_zero() && !on_coordinates[c].is_zero()) df += pc * on_coordinates[c];
    }
    if (!df.is_zero()) out += wedge(df, Form::monomial(sp, mask, one));
    int passed = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const Mask bit = Mask{1} << i;
      if ((mask & bit) == 0) continue;
      if (!on_differentials[i].is_zero()) {
        const Mask before = mask & (bit - 1), after = mask & ~((bit << 1) - 1);
        const Form term =
            wedge(wedge(Form::monomial(sp, before, one), on_differentials[i]), Form::monomial(sp, after, one));
        out += sgn(static_cast<long long>(degree) * passed) * (f * term);
      }
      ++passed;
    }
  }
  return out;
}

bool LBarDerivation::is_zero() const {
  for (const auto& v : on_coordinates)
    if (!v.is_zero()) return false;
  for (const auto& v : on_differentials)
    if (!v.is_zero()) return false;
  return true;
}

LBarDerivation& LBarDerivation::operator+=(const LBarDerivation& o) {
  for (std::size_t c = 0; c < on_coordinates.size(); ++c) on_coordinates[c] += o.on_coordinates[c];
  for (std::size_t i = 0; i < on_differentials.size(); ++i) on_differentials[i] += o.on_differentials[i];
  return *this;
}

LBarDerivation& LBarDerivation::operator-=(const LBarDerivation& o) {
  for (std::size_t c = 0; c < on_coordinates.size(); ++c) on_coordinates[c] -= o.on_coordinates[c];
  for (std::size_t i = 0; i < on_differentials.size(); ++i) on_differentials[i] -= o.on_differentials[i];
  return *this;
}

LBarDerivation lbar_commutator(const LBarDerivation& a, const LBarDerivation& b) {
  LBarDerivation out = LBarDerivation::zero(a.sp, a.degree + b.degree);
  const Rational swap = sgn(static_cast<long long>(a.degree) * b.degree);
  for (std::size_t c = 0; c < out.on_coordinates.size(); ++c)
    out.on_coordinates[c] = a.apply(b.on_coordinates[c]) - swap * b.apply(a.on_coordinates[c]);
  for (std::size_t i = 0; i < out.on_differentials.size(); ++i)
    out.on_differentials[i] = a.apply(b.on_differentials[i]) - swap * b.apply(a.on_differentials[i]);
  return out;
}

LBarDerivation dbar_derivation(const FoliationStructure& F) {
  const auto& sp = F.sp;
  LBarDerivation out = LBarDerivation::zero(sp, 1);
  for (std::size_t c = 0; c < sp->m(); ++c) out.on_coordinates[c] = dbar(F, Form::function(sp, sp->coordinate(c)));
  for (std::size_t i = 0; i < sp->n(); ++i) out.on_differentials[i] = dbar(F, Form::generator(sp, i));
  return out;
}

LBarDerivation delta(const FoliationStructure& F, const LBarDerivation& d) {
  return lbar_commutator(dbar_derivation(F), d);
}

std::string residual_of(const LBarDerivation& d) {
  std::string out;
  const auto& names = d.sp->chart().coordinates();
  for (std::size_t c = 0; c < d.on_coordinates.size(); ++c)
    if (!d.on_coordinates[c].is_zero()) out += (out.empty() ? "" : " ; ") + names[c] + ": " + to_string(d.on_coordinates[c]);
  for (std::size_t i = 0; i < d.on_differentials.size(); ++i)
    if (!d.on_differentials[i].is_zero())
      out += (out.empty() ? "" : " ; ") + ("d" + names[i]) + ": " + to_string(d.on_differentials[i]);
  return out;
}

LBarDerivation transfer_j(const FoliationStructure& F, const FormVector& z) {
  const auto& sp = F.sp;
  LBarDerivation out = LBarDerivation::zero(sp, z.is_zero() ? 0 : *z.degree());
  if (z.is_zero()) return out;
  for (std::size_t c = 0; c < sp->m(); ++c)
    out.on_coordinates[c] = overline(lie_derivative(z, Form::function(sp, sp->coordinate(c))));
  for (std::size_t i = 0; i < sp->n(); ++i) out.on_differentials[i] = overline(lie_derivative(z, Form::generator(sp, i)));
  return out;
}

FormVector transfer_p(const LBarDerivation& d) {
  const auto& sp = d.sp;
  std::vector<Form> comps(sp->m(), Form(sp));
  for (std::size_t a = 0; a < sp->p(); ++a) comps[sp->n() + a] = d.on_coordinates[sp->n() + a];
  return FormVector(sp, std::move(comps));
}

LBarDerivation transfer_h(const FoliationStructure& F, const LBarDerivation& d) {
  const auto& sp = F.sp;
  LBarDerivation out = LBarDerivation::zero(sp, d.degree - 1);
  const LBarDerivation jp = transfer_j(F, transfer_p(d));
  for (std::size_t i = 0; i < sp->n(); ++i)
    out.on_differentials[i] = sgn(d.degree) * (d.on_coordinates[i] - jp.on_coordinates[i]);
  return out;
}

LBarDerivation random_lbar_derivation(Rng& rng, const SplittingPtr& sp, int degree) {
  LBarDerivation out = LBarDerivation::zero(sp, degree);
  const int n = static_cast<int>(sp->n());
  for (auto& v : out.on_coordinates)
    if (degree >= 0 && degree <= n && rng.coin()) v = random_leaf_form(rng, sp, degree);
  for (auto& v : out.on_differentials)
    if (degree + 1 >= 0 && degree + 1 <= n && rng.coin()) v = random_leaf_form(rng, sp, degree + 1);
  return out;
}

CheckReport contraction_identity_check(const FoliationStructure& F, Rng& rng, std::size_t samples) {
  CheckReport rep;
  const auto& sp = F.sp;
  const int n = static_cast<int>(sp->n());
  for (std::size_t s = 0; s < samples; ++s) {
    const FormVector z = random_q(rng, sp, n);
    const LBarDerivation jz = transfer_j(F, z);
    rep.add(label("pj=id", s), residual_of(transfer_p(jz) - z));
    rep.add(label("j-chain", s), residual_of(delta(F, jz) - transfer_j(F, dbar(F, z))));
    rep.add(label("hj=0", s), residual_of(transfer_h(F, jz)));
    const Form lambda = random_abar(rng, sp, n);
    rep.add(label("j=overline(L_Z)", s), residual_of(jz.apply(lambda) - overline(lie_derivative(z, lambda))));

    const int l = rng.uniform_int(-1, n);
    const LBarDerivation d = random_lbar_derivation(rng, sp, l);
    const LBarDerivation dd = delta(F, d);
    rep.add(label("p-chain", s), residual_of(transfer_p(dd) - dbar(F, transfer_p(d))));
    const LBarDerivation hd = transfer_h(F, d);
    const LBarDerivation homotopy = delta(F, hd) + transfer_h(F, dd);
    rep.add(label("id-jp=Dh+hD", s), residual_of(d - transfer_j(F, transfer_p(d)) - homotopy));
    rep.add(label("hh=0", s), residual_of(transfer_h(F, hd)));
    const Form mu = random_abar(rng, sp, n);
    const Rational leib = sgn(static_cast<long long>(l) * deg_or_zero(lambda));
    rep.add(label("derivation-Leibniz", s),
            residual_of(d.apply(wedge(lambda, mu)) - wedge(d.apply(lambda), mu) - leib * wedge(lambda, d.apply(mu))));
  }
  return rep;
}

CheckReport transferred_binary_check(const FoliationStructure& F, Rng& rng, std::size_t samples, int* sign_out) {
  CheckReport rep;
  const auto& sp = F.sp;
  FoliationAlgebra alg(F);
  int sign = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    const FormVector z1 = random_q(rng, sp, 1), z2 = random_q(rng, sp, 1);
    const int f1 = z1.is_zero() ? 0 : *z1.degree();
    const FormVector transferred = transfer_p(lbar_commutator(transfer_j(F, z1), transfer_j(F, z2)));
    const FormVector fol = sgn(f1) * alg.bracket({z1, z2});
    if (sign == 0 && !fol.is_zero()) {
      if (transferred == fol) sign = 1;
      else if (transferred == -fol) sign = -1;
    }
    const int use = sign == 0 ? 1 : sign;
    rep.add(label("transferred-binary", s), residual_of(transferred - Rational(use) * fol));
    // swapped arguments, and on odd samples a repeated argument
    const FormVector w = s % 2 ? z1 : z2;
    const int fw = w.is_zero() ? 0 : *w.degree();
    const FormVector swapped = transfer_p(lbar_commutator(transfer_j(F, w), transfer_j(F, z1)));
    rep.add(label("transferred-binary-swapped", s),
            residual_of(swapped - Rational(use) * sgn(fw) * alg.bracket({w, z1})));
  }
  rep.add("global-sign=" + std::string(sign < 0 ? "-1" : "+1"), sign == 0 ? "no nonzero sample" : "");
  if (sign_out) *sign_out = sign;
  return rep;
}

}  // namespace lrc
