#include "lrc/foliation.hpp"

#include <stdexcept>

#include "lrc/combinatorics.hpp"
#include "lrc/sampling.hpp"

namespace lrc {

namespace {

Rational sgn(long long e) { return Rational(parity_sign(e)); }

int du_count(const SplittingPtr& sp, Mask mask) { return popcount(mask & sp->du_mask()); }

// Graded commutator [A, B] = AB - (-)^{ab} BA applied to a.
template <class OpA, class OpB>
Form commutator(const OpA& A, int da, const OpB& B, int db, const Form& a) {
  return A(B(a)) - sgn(static_cast<long long>(da) * db) * B(A(a));
}

std::string label(const std::string& what, std::size_t sample) { return what + "#" + std::to_string(sample); }

}  // namespace

FoliationStructure FoliationStructure::build(SplittingPtr sp) {
  FoliationStructure F;
  F.sp = sp;
  const std::size_t n = sp->n();
  std::vector<Form> c(sp->m(), Form(sp)), v(sp->m(), Form(sp));
  for (std::size_t b = 0; b < sp->m(); ++b) (b < n ? c : v)[b] = Form::generator(sp, b);
  F.pC = FormVector(sp, std::move(c));
  F.pV = FormVector(sp, std::move(v));
  F.curvature = fn_bracket(F.pC, F.pC) * Rational(1, 2);
  return F;
}

FoliationStructure FoliationStructure::build(const Chart& chart, const std::vector<std::vector<Polynomial>>& v) {
  return build(Splitting::make(chart, v));
}

Form overline(const Form& a) {
  if (a.is_zero()) return a;
  const auto& sp = a.splitting();
  Components out;
  for (const auto& [mask, f] : a.components())
    if ((mask & sp->du_mask()) == 0) out.emplace(mask, f);
  return Form(sp, std::move(out));
}

FormVector overline(const FormVector& z) {
  if (!z.splitting()) return z;
  const auto& sp = z.splitting();
  std::vector<Form> comps(sp->m(), Form(sp));
  for (std::size_t b = sp->n(); b < sp->m(); ++b) comps[b] = overline(z.component(b));
  return FormVector(sp, std::move(comps));
}

bool is_abar(const Form& a) {
  if (a.is_zero()) return true;
  for (const auto& [mask, f] : a.components())
    if (mask & a.splitting()->du_mask()) return false;
  return true;
}

bool is_q_element(const FormVector& z) {
  if (!z.splitting()) return true;
  for (std::size_t b = 0; b < z.splitting()->m(); ++b) {
    const Form& c = z.component(b);
    if (b < z.splitting()->n() ? !c.is_zero() : !is_abar(c)) return false;
  }
  return true;
}

int shifted_degree(const FormVector& z) {
  if (!z.splitting() || z.is_zero()) return 0;
  auto d = z.degree();
  if (!d) throw std::invalid_argument("shifted degree: inhomogeneous element");
  return *d - 1;
}

int form_degree(const Form& a) {
  if (a.is_zero()) return 0;
  auto d = a.degree();
  if (!d) throw std::invalid_argument("form degree: inhomogeneous form");
  return *d;
}

Form d_C(const FoliationStructure& F, const Form& a) { return lie_derivative(F.pC, a); }
Form d_V(const FoliationStructure& F, const Form& a) { return lie_derivative(F.pV, a); }
Form i_R(const FoliationStructure& F, const Form& a) { return insertion(F.curvature, a); }
Form L_R(const FoliationStructure& F, const Form& a) { return lie_derivative(F.curvature, a); }

Form d_component(const Form& a, int k) {
  if (a.is_zero()) return a;
  const auto& sp = a.splitting();
  Form out(sp);
  for (int r = 0; r <= static_cast<int>(sp->p()); ++r) {
    Form part = bidegree_project(a, r);
    if (part.is_zero()) continue;
    out += bidegree_project(exterior_d(part), r + k);
  }
  return out;
}

Form dbar(const FoliationStructure& F, const Form& lambda) {
  if (!is_abar(lambda)) throw std::invalid_argument("dbar: input has du components");
  if (lambda.is_zero()) return Form(F.sp);
  return bidegree_project(exterior_d(lambda), 0);
}

FormVector dbar(const FoliationStructure& F, const FormVector& z) {
  if (!is_q_element(z)) throw std::invalid_argument("dbar: input is not in Q");
  return fn_bracket(F.pC, z) - nr_bracket(F.curvature, z);
}

FormVector dbar_bott(const FoliationStructure& F, const FormVector& z) {
  if (!is_q_element(z)) throw std::invalid_argument("dbar: input is not in Q");
  std::vector<Form> comps(F.sp->m(), Form(F.sp));
  for (std::size_t b = F.sp->n(); b < F.sp->m(); ++b) comps[b] = dbar(F, z.component(b));
  return FormVector(F.sp, std::move(comps));
}

Form evaluate_pairing(const Form& omega, const std::vector<FormVector>& zs, PairingSign convention) {
  const auto& sp = omega.splitting();
  if (omega.is_zero()) return omega;
  const int r = static_cast<int>(zs.size());
  for (const auto& [mask, f] : omega.components())
    if (du_count(sp, mask) != r)
      throw std::invalid_argument("pairing: form has " + std::to_string(du_count(sp, mask)) + " du factors but " +
                                  std::to_string(r) + " arguments");
  long long zsum = 0;
  for (const auto& z : zs) {
    if (z.is_zero()) return Form(sp);
    zsum += shifted_degree(z);
  }
  Form out(sp);
  for (int w : omega.degrees()) {
    Form t = omega.part_of_degree(w);
    for (int i = r - 1; i >= 0; --i) t = insertion(zs[static_cast<std::size_t>(i)], t);
    long long chi = r + static_cast<long long>(w) * zsum;
    if (convention == PairingSign::Printed) chi += static_cast<long long>(w) * r * (r - 1) / 2;
    out += sgn(chi) * t;
  }
  return out;
}

FoliationAlgebra::FoliationAlgebra(FoliationStructure F, BracketMutation mutation)
    : F_(std::move(F)), mutation_(mutation) {}

namespace {

std::vector<int> shifted_degrees(const std::vector<FormVector>& zs) {
  std::vector<int> out;
  for (const auto& z : zs) out.push_back(shifted_degree(z));
  return out;
}

}  // namespace

Form FoliationAlgebra::anchor(const std::vector<FormVector>& zs, const Form& lambda) const {
  return anchor(zs, shifted_degrees(zs), lambda);
}

FormVector FoliationAlgebra::bracket(const std::vector<FormVector>& zs) const {
  return bracket(zs, shifted_degrees(zs));
}

Form FoliationAlgebra::anchor(const std::vector<FormVector>& zs, const std::vector<int>& deg,
                              const Form& lambda) const {
  const auto& sp = F_.sp;
  if (lambda.is_zero()) return Form(sp);
  for (const auto& z : zs)
    if (z.is_zero()) return Form(sp);
  const FormVector& R = F_.curvature;
  switch (zs.size()) {
    case 0:
      return d_C(F_, lambda) - i_R(F_, lambda);
    case 1: {
      return sgn(deg[0] + 1) * lie_derivative(zs[0], lambda) + insertion(nr_bracket(R, zs[0]), lambda);
    }
    case 2:
      return -insertion(nr_bracket(nr_bracket(R, zs[0]), zs[1]), lambda);
    default:
      return Form(sp);
  }
}

FormVector FoliationAlgebra::bracket(const std::vector<FormVector>& zs, const std::vector<int>& deg) const {
  const auto& sp = F_.sp;
  for (const auto& z : zs)
    if (z.is_zero()) return FormVector(sp);
  const FormVector& R = F_.curvature;
  switch (zs.size()) {
    case 1:
      return fn_bracket(F_.pC, zs[0]) - nr_bracket(R, zs[0]);
    case 2: {
      const int z1 = deg[0], z2 = deg[1];
      long long parity = z1;
      Rational fn_sign = -1, curvature_sign = 1;
      switch (mutation_) {
        case BracketMutation::None: break;
        case BracketMutation::DropParity: parity = 0; break;
        case BracketMutation::FlipFnTerm: fn_sign = 1; break;
        case BracketMutation::FlipCurvatureTerm: curvature_sign = -1; break;
        case BracketMutation::SecondParity: parity = z2; break;
        case BracketMutation::FormDegreeParity: parity = z1 + 1; break;
      }
      return fn_sign * sgn(parity) * fn_bracket(zs[0], zs[1]) +
             curvature_sign * nr_bracket(nr_bracket(R, zs[0]), zs[1]);
    }
    case 3:
      return -nr_bracket(nr_bracket(nr_bracket(R, zs[0]), zs[1]), zs[2]);
    default:
      return FormVector(sp);
  }
}

BracketOracle<FormVector> FoliationAlgebra::bracket_oracle() const {
  BracketOracle<FormVector> o;
  o.max_arity = 3;
  o.bracket = [this](const std::vector<FormVector>& v, const std::vector<int>& d) { return bracket(v, d); };
  auto sp = F_.sp;
  o.zero = [sp] { return FormVector(sp); };
  return o;
}

AnchorOracle<FormVector, Form> FoliationAlgebra::anchor_oracle() const {
  AnchorOracle<FormVector, Form> o;
  o.max_arity = 3;
  o.anchor = [this](const std::vector<FormVector>& v, const std::vector<int>& d, const Form& a, int) {
    return anchor(v, d, a);
  };
  auto sp = F_.sp;
  o.zero = [sp] { return Form(sp); };
  return o;
}

Form DerivedFromD::anchor(const std::vector<FormVector>& zs, const Form& lambda) const {
  const auto& sp = F_.sp;
  if (lambda.is_zero()) return Form(sp);
  long long zsum = 0;
  for (const auto& z : zs) {
    if (z.is_zero()) return Form(sp);
    zsum += shifted_degree(z);
  }
  Form out(sp);
  for (int a : lambda.degrees()) {
    Form part = lambda.part_of_degree(a);
    const int k = static_cast<int>(zs.size());
    out += sgn(a * zsum) * evaluate_pairing(d_component(part, k), zs);
  }
  return out;
}

FormVector DerivedFromD::bracket(const std::vector<FormVector>& zs) const {
  const auto& sp = F_.sp;
  const std::size_t n = sp->n(), p = sp->p();
  const int k = static_cast<int>(zs.size());
  std::vector<int> deg;
  int total = 1;
  for (const auto& z : zs) {
    if (z.is_zero()) return FormVector(sp);
    deg.push_back(shifted_degree(z));
    total += deg.back();
  }
  std::vector<Form> comps(sp->m(), Form(sp));
  for (std::size_t a = 0; a < p; ++a) {
    const Form omega = Form::generator(sp, n + a);  // degree 1 element of Q^*
    Form value(sp);
    int before = 0;
    for (int i = 0; i < k; ++i) {
      std::vector<FormVector> rest;
      for (int j = 0; j < k; ++j)
        if (j != i) rest.push_back(zs[static_cast<std::size_t>(j)]);
      Form inner = evaluate_pairing(omega, {zs[static_cast<std::size_t>(i)]});
      value += sgn(static_cast<long long>(deg[static_cast<std::size_t>(i)]) * before) *
               evaluate_pairing(d_component(inner, k - 1), rest);
      before += deg[static_cast<std::size_t>(i)];
    }
    value -= evaluate_pairing(d_component(omega, k - 1), zs);
    value = -value;  // (-)^omega with omega of degree 1
    // <du^a | X> = (-)^{1 + Xbar} X^a
    comps[n + a] = sgn(1 + total) * value;
  }
  return FormVector(sp, std::move(comps));
}

bool CheckReport::all_passed() const {
  for (const auto& e : entries)
    if (!e.passed()) return false;
  return true;
}

std::string residual_of(const Form& a) { return a.is_zero() ? std::string() : to_string(a); }
std::string residual_of(const FormVector& z) { return z.is_zero() ? std::string() : to_string(z); }

FormVector random_q(Rng& rng, const SplittingPtr& sp, int max_form_degree) {
  const int top = std::min(max_form_degree, static_cast<int>(sp->n()));
  return random_q_element(rng, sp, rng.uniform_int(0, top));
}

Form random_abar(Rng& rng, const SplittingPtr& sp, int max_degree) {
  const int top = std::min(max_degree, static_cast<int>(sp->n()));
  for (;;) {
    Form f = random_leaf_form(rng, sp, rng.uniform_int(0, top));
    if (!f.is_zero()) return f;
  }
}

CheckReport bracket_table_check(const FoliationStructure& F, Rng& rng, std::size_t samples) {
  CheckReport rep;
  const FormVector& C = F.pC;
  const FormVector& V = F.pV;
  const FormVector& R = F.curvature;
  const FormVector zero(F.sp);
  const FormVector two_r = R * Rational(2);
  struct Entry {
    const char* name;
    const FormVector* a;
    const FormVector* b;
    FormVector expected;
  };
  const Entry table[] = {
      {"[[PC,PC]]=2R", &C, &C, two_r},  {"[[PC,PV]]=-2R", &C, &V, -two_r}, {"[[PC,R]]=0", &C, &R, zero},
      {"[[PV,PC]]=-2R", &V, &C, -two_r}, {"[[PV,PV]]=2R", &V, &V, two_r},  {"[[PV,R]]=0", &V, &R, zero},
      {"[[R,PC]]=0", &R, &C, zero},      {"[[R,PV]]=0", &R, &V, zero},     {"[[R,R]]=0", &R, &R, zero},
  };
  for (const auto& e : table) rep.add(std::string("table/") + e.name, residual_of(fn_bracket(*e.a, *e.b) - e.expected));
  rep.add("table/PC+PV=I", residual_of(C + V - identity_field(F.sp)));

  // R lies in C Lambda^2 (x) C X: only du^du form factors along d/dx.
  bool adapted = true;
  for (std::size_t b = 0; b < F.sp->m(); ++b)
    for (const auto& [mask, f] : R.component(b).components())
      if (b >= F.sp->n() || (mask & F.sp->leaf_mask()) || popcount(mask) != 2) adapted = false;
  rep.add("table/R-in-CLambda2-CX", adapted ? "" : to_string(R));

  using Op = std::function<Form(const Form&)>;
  struct Named {
    const char* name;
    Op op;
    int degree;
  };
  const Named ops[] = {
      {"dC", [&](const Form& a) { return d_C(F, a); }, 1},
      {"dV", [&](const Form& a) { return d_V(F, a); }, 1},
      {"iR", [&](const Form& a) { return i_R(F, a); }, 1},
      {"LR", [&](const Form& a) { return L_R(F, a); }, 2},
  };
  // expected[i][j] as a multiple of L_R
  const int expected[4][4] = {{2, -2, 1, 0}, {-2, 2, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 0}};
  for (std::size_t s = 0; s < samples; ++s) {
    Form a = random_form_of_degree(rng, F.sp, rng.uniform_int(0, static_cast<int>(F.sp->m()) - 1));
    Form lr = L_R(F, a);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        Form lhs = commutator(ops[i].op, ops[i].degree, ops[j].op, ops[j].degree, a);
        std::string id = std::string("operators/[") + ops[i].name + "," + ops[j].name + "]";
        rep.add(label(id, s), residual_of(lhs - Rational(expected[i][j]) * lr));
      }
  }
  return rep;
}

CheckReport differential_components_check(const FoliationStructure& F, Rng& rng, std::size_t samples) {
  CheckReport rep;
  auto d0 = [&](const Form& a) { return d_component(a, 0); };
  auto d1 = [&](const Form& a) { return d_component(a, 1); };
  auto d2 = [&](const Form& a) { return d_component(a, 2); };
  for (std::size_t s = 0; s < samples; ++s) {
    Form a = random_form_of_degree(rng, F.sp, rng.uniform_int(0, static_cast<int>(F.sp->m()) - 1));
    rep.add(label("d0=dC-iR", s), residual_of(d0(a) - (d_C(F, a) - i_R(F, a))));
    rep.add(label("d1=dV+2iR", s), residual_of(d1(a) - (d_V(F, a) + Rational(2) * i_R(F, a))));
    rep.add(label("d2=-iR", s), residual_of(d2(a) + i_R(F, a)));
    Form others = d_component(a, -1);
    for (int k = 3; k <= static_cast<int>(F.sp->p()) + 1; ++k) others += d_component(a, k);
    rep.add(label("d-other-bidegrees=0", s), residual_of(others));
    rep.add(label("d=d0+d1+d2", s), residual_of(exterior_d(a) - d0(a) - d1(a) - d2(a)));
    rep.add(label("dd=0", s), residual_of(exterior_d(exterior_d(a))));
    rep.add(label("[d0,d0]=0", s), residual_of(commutator(d0, 1, d0, 1, a)));
    rep.add(label("[d0,d1]=0", s), residual_of(commutator(d0, 1, d1, 1, a)));
    rep.add(label("[d1,d2]=0", s), residual_of(commutator(d1, 1, d2, 1, a)));
    rep.add(label("[d2,d2]=0", s), residual_of(commutator(d2, 1, d2, 1, a)));
    rep.add(label("[d1,d1]=2LR", s), residual_of(commutator(d1, 1, d1, 1, a) - Rational(2) * L_R(F, a)));
    rep.add(label("[d0,d2]=-LR", s), residual_of(commutator(d0, 1, d2, 1, a) + L_R(F, a)));
  }
  return rep;
}

CheckReport dbar_check(const FoliationStructure& F, Rng& rng, std::size_t samples) {
  CheckReport rep;
  for (std::size_t s = 0; s < samples; ++s) {
    Form lambda = random_abar(rng, F.sp, 1);
    rep.add(label("dbar=dC-iR", s), residual_of(dbar(F, lambda) - (d_C(F, lambda) - i_R(F, lambda))));
    rep.add(label("dbar^2=0", s), residual_of(dbar(F, dbar(F, lambda))));
    FormVector z = random_q(rng, F.sp, 1);
    FormVector direct = dbar(F, z), bott = dbar_bott(F, z);
    rep.add(label("dbarZ=[[PC,Z]]-[R,Z]nr", s), residual_of(direct - bott));
    rep.add(label("dbarZ-in-Q", s), is_q_element(direct) ? "" : to_string(direct));
    rep.add(label("dbar^2Z=0", s), residual_of(dbar(F, bott)));
  }
  return rep;
}

CheckReport pairing_check(const FoliationStructure& F, Rng& rng, std::size_t samples) {
  CheckReport rep;
  const auto& sp = F.sp;
  const int p = static_cast<int>(sp->p());
  for (std::size_t s = 0; s < samples; ++s) {
    const int r = std::min(2, p);
    if (r < 1) break;
    Form omega = random_form(rng, sp, r, rng.uniform_int(0, static_cast<int>(sp->n())));
    std::vector<FormVector> zs;
    for (int i = 0; i < r; ++i) zs.push_back(random_q(rng, sp, 1));
    const int w = form_degree(omega);
    Form base = evaluate_pairing(omega, zs);
    rep.add(label("pairing-in-Abar", s), is_abar(base) ? "" : to_string(base));
    if (r == 2) {
      const int z0 = shifted_degree(zs[0]), z1 = shifted_degree(zs[1]);
      Form swapped = evaluate_pairing(omega, {zs[1], zs[0]});
      rep.add(label("pairing-symmetry", s), residual_of(base - sgn(static_cast<long long>(z0) * z1) * swapped));
    }
    Form a = random_abar(rng, sp, 1);
    const int ad = form_degree(a);
    std::vector<FormVector> scaled = zs;
    scaled[0] = wedge(a, zs[0]);
    rep.add(label("pairing-A-linear", s),
            residual_of(evaluate_pairing(omega, scaled) - sgn(static_cast<long long>(ad) * w) * wedge(a, base)));
    // product of two Q^* elements against two arguments
    if (p >= 1) {
      Form o1 = random_form(rng, sp, 1, rng.uniform_int(0, static_cast<int>(sp->n())));
      Form o2 = random_form(rng, sp, 1, rng.uniform_int(0, static_cast<int>(sp->n())));
      FormVector q1 = random_q(rng, sp, 1), q2 = random_q(rng, sp, 1);
      const long long w2 = form_degree(o2), d1 = shifted_degree(q1), d2 = shifted_degree(q2);
      Form lhs = evaluate_pairing(wedge(o1, o2), {q1, q2});
      Form rhs = sgn(w2 * d1) * wedge(evaluate_pairing(o1, {q1}), evaluate_pairing(o2, {q2})) +
                 sgn(w2 * d2 + d1 * d2) * wedge(evaluate_pairing(o1, {q2}), evaluate_pairing(o2, {q1}));
      rep.add(label("pairing-product", s), residual_of(lhs - rhs));
    }
  }
  return rep;
}

CheckReport alt_binary_check(const FoliationStructure& F, Rng& rng, std::size_t samples) {
  CheckReport rep;
  FoliationAlgebra alg(F);
  for (std::size_t s = 0; s < samples; ++s) {
    FormVector z1 = random_q(rng, F.sp, 1), z2 = random_q(rng, F.sp, 1);
    FormVector alt = -sgn(shifted_degree(z1)) * overline(fn_bracket(z1, z2));
    rep.add(label("binary-bracket", s), residual_of(alg.bracket({z1, z2}) - alt));
    FormVector z = random_q(rng, F.sp, 1);
    Form lambda = random_abar(rng, F.sp, 1);
    Form alt_anchor = -sgn(shifted_degree(z)) * overline(lie_derivative(z, lambda));
    rep.add(label("binary-anchor", s), residual_of(alg.anchor({z}, lambda) - alt_anchor));
  }
  return rep;
}

CheckReport ce_component_check(const FoliationStructure& F, Rng& rng, std::size_t samples, int max_r, int max_k) {
  CheckReport rep;
  FoliationAlgebra alg(F);
  const auto& sp = F.sp;
  for (std::size_t s = 0; s < samples; ++s)
    for (int r = 0; r <= std::min(max_r, static_cast<int>(sp->p())); ++r)
      for (int k = 0; k <= max_k; ++k) {
        Form omega = random_form(rng, sp, r, rng.uniform_int(0, static_cast<int>(sp->n())));
        if (omega.is_zero()) continue;
        const int w = form_degree(omega);
        std::vector<FormVector> q;
        std::vector<int> deg;
        for (int i = 0; i < r + k; ++i) {
          q.push_back(random_q(rng, sp, 1));
          deg.push_back(shifted_degree(q.back()));
        }
        Form lhs = (r + k <= static_cast<int>(sp->p())) ? evaluate_pairing(d_component(omega, k), q) : Form(sp);
        Form rhs(sp);
        {
          const int blocks[2] = {k, r};
          for (const auto& sg : unshuffles_with_empty(blocks)) {
            const auto head = detail::pick(q, sg, 0, k), tail = detail::pick(q, sg, k, k + r);
            const int hd = detail::degree_sum(detail::pick(deg, sg, 0, k));
            const int sign = parity_sign(static_cast<long long>(w) * hd) * koszul_sign(sg, deg, SignFlavor::Symmetric);
            rhs += Rational(sign) * alg.anchor(head, evaluate_pairing(omega, tail));
          }
        }
        if (r >= 1) {
          const int blocks[2] = {k + 1, r - 1};
          for (const auto& tg : unshuffles_with_empty(blocks)) {
            std::vector<FormVector> args{alg.bracket(detail::pick(q, tg, 0, k + 1))};
            for (auto& t : detail::pick(q, tg, k + 1, k + r)) args.push_back(t);
            const int sign = parity_sign(w) * koszul_sign(tg, deg, SignFlavor::Symmetric);
            rhs -= Rational(sign) * evaluate_pairing(omega, args);
          }
        }
        rep.add(label("ce/r=" + std::to_string(r) + "/k=" + std::to_string(k), s), residual_of(lhs - rhs));
      }
  return rep;
}

namespace {

void sample_tuple(Rng& rng, const SplittingPtr& sp, int k, std::vector<FormVector>& v, std::vector<int>& deg) {
  v.clear();
  deg.clear();
  for (int i = 0; i < k; ++i) {
    v.push_back(random_q(rng, sp, 1));
    deg.push_back(shifted_degree(v.back()));
  }
}

}  // namespace

CheckReport jacobiator_check(const FoliationAlgebra& alg, Rng& rng, std::size_t samples, int max_arity) {
  CheckReport rep;
  const auto& sp = alg.splitting();
  const auto bo = alg.bracket_oracle();
  const auto ao = alg.anchor_oracle();
  std::vector<FormVector> v;
  std::vector<int> deg;
  for (int k = 1; k <= max_arity; ++k)
    for (std::size_t s = 0; s < samples; ++s) {
      sample_tuple(rng, sp, k, v, deg);
      rep.add(label("J" + std::to_string(k), s), residual_of(jacobiator(bo, v, deg)));
      sample_tuple(rng, sp, k - 1, v, deg);
      Form lambda = random_abar(rng, sp, 1);
      rep.add(label("Jmod" + std::to_string(k), s),
              residual_of(module_jacobiator(bo, ao, v, deg, lambda, form_degree(lambda))));
    }
  return rep;
}

CheckReport lrp_check(const FoliationAlgebra& alg, Rng& rng, std::size_t samples, int max_k) {
  CheckReport rep;
  const auto& sp = alg.splitting();
  std::vector<FormVector> v;
  std::vector<int> deg;
  for (int k = 1; k <= max_k; ++k)
    for (std::size_t s = 0; s < samples; ++s) {
      sample_tuple(rng, sp, k, v, deg);
      Form lambda = random_abar(rng, sp, 1);
      const long long ld = form_degree(lambda);
      std::vector<FormVector> head(v.begin(), v.end() - 1);
      std::vector<FormVector> scaled = v;
      scaled.back() = wedge(lambda, v.back());
      const long long hd = detail::degree_sum(std::vector<int>(deg.begin(), deg.end() - 1));
      FormVector rhs = wedge(alg.anchor(head, lambda), v.back()) + sgn(ld * (hd + 1)) * wedge(lambda, alg.bracket(v));
      rep.add(label("LRP/k=" + std::to_string(k), s), residual_of(alg.bracket(scaled) - rhs));
    }
  return rep;
}

CheckReport structure_check(const FoliationAlgebra& alg, Rng& rng, std::size_t samples) {
  CheckReport rep;
  const auto& sp = alg.splitting();
  std::vector<FormVector> v;
  std::vector<int> deg;
  for (int k = 1; k <= 3; ++k)
    for (std::size_t s = 0; s < samples; ++s) {
      sample_tuple(rng, sp, k, v, deg);
      FormVector b = alg.bracket(v);
      const std::string tag = "/k=" + std::to_string(k);
      rep.add(label("bracket-in-Q" + tag, s), is_q_element(b) ? "" : to_string(b));
      Form lambda = random_abar(rng, sp, 1), mu = random_abar(rng, sp, 1);
      std::vector<FormVector> head(v.begin(), v.end() - 1);
      Form an = alg.anchor(head, lambda);
      rep.add(label("anchor-in-Abar" + tag, s), is_abar(an) ? "" : to_string(an));
      if (k >= 2) {
        auto swapped = v;
        std::swap(swapped[0], swapped[1]);
        const Rational sg = sgn(static_cast<long long>(deg[0]) * deg[1]);
        rep.add(label("bracket-symmetry" + tag, s), residual_of(b - sg * alg.bracket(swapped)));
        if (k == 3) {
          std::vector<FormVector> hs{head[1], head[0]};
          rep.add(label("anchor-symmetry" + tag, s), residual_of(an - sg * alg.anchor(hs, lambda)));
        }
      }
      const long long hd = detail::degree_sum(std::vector<int>(deg.begin(), deg.end() - 1));
      const long long ld = form_degree(lambda);
      Form lhs = alg.anchor(head, wedge(lambda, mu));
      Form rhs = wedge(alg.anchor(head, lambda), mu) + sgn(ld * (hd + 1)) * wedge(lambda, alg.anchor(head, mu));
      rep.add(label("anchor-derivation" + tag, s), residual_of(lhs - rhs));
      if (!head.empty()) {
        auto scaled = head;
        scaled[0] = wedge(mu, head[0]);
        const long long md = form_degree(mu);
        rep.add(label("anchor-A-linear" + tag, s),
                residual_of(alg.anchor(scaled, lambda) - sgn(md) * wedge(mu, an)));
      }
    }
  return rep;
}

}  // namespace lrc
