#include "lrc/presymplectic.hpp"

#include <stdexcept>

#include "lrc/combinatorics.hpp"
#include "lrc/sampling.hpp"

namespace lrc {

namespace {

Rational sgn(long long e) { return Rational(parity_sign(e)); }

std::string label(const std::string& what, std::size_t sample) { return what + "#" + std::to_string(sample); }

using Matrix = std::vector<std::vector<Polynomial>>;

Polynomial determinant(const Matrix& m, std::size_t nvars) {
  const int p = static_cast<int>(m.size());
  Polynomial det(nvars);
  if (p == 0) return Polynomial::constant(nvars, 1);
  for (const auto& s : all_permutations(p)) {
    Polynomial term = Polynomial::constant(nvars, permutation_sign(s));
    for (int r = 0; r < p; ++r) term = term * m[static_cast<std::size_t>(r)][static_cast<std::size_t>(s[static_cast<std::size_t>(r)])];
    det += term;
  }
  return det;
}

Matrix minor_of(const Matrix& m, std::size_t row, std::size_t col) {
  Matrix out;
  for (std::size_t r = 0; r < m.size(); ++r) {
    if (r == row) continue;
    std::vector<Polynomial> line;
    for (std::size_t c = 0; c < m.size(); ++c)
      if (c != col) line.push_back(m[r][c]);
    out.push_back(std::move(line));
  }
  return out;
}

int form_deg(const Form& a) { return a.is_zero() ? 0 : form_degree(a); }

// w = sum_a w_a ^ du^a with w_a leafwise.
std::vector<Form> split_du(const SplittingPtr& sp, const Form& w) {
  const std::size_t n = sp->n(), p = sp->p();
  std::vector<Form> out(p, Form(sp));
  for (const auto& [mask, f] : w.components()) {
    const Mask du = mask & sp->du_mask();
    if (popcount(du) != 1) throw std::invalid_argument("sharp: expected exactly one du factor");
    const std::size_t a = static_cast<std::size_t>(__builtin_ctz(du)) - n;
    out[a] += Form::monomial(sp, mask & sp->leaf_mask(), f);
  }
  return out;
}

}  // namespace

PresymplecticData PresymplecticData::validate(FoliationStructure F, const Form& omega, PresymplecticConventions conv) {
  const auto& sp = F.sp;
  const std::size_t n = sp->n(), p = sp->p(), m = sp->m();
  PresymplecticData D;
  D.omega = reframe(omega, sp);
  D.conv = conv;
  D.omega_matrix.assign(p, std::vector<Polynomial>(p, Polynomial(m)));
  for (const auto& [mask, f] : D.omega.components()) {
    if (mask & sp->leaf_mask()) throw std::invalid_argument("presymplectic form: leaf factor present");
    if (popcount(mask) != 2) throw std::invalid_argument("presymplectic form: not a 2-form");
    for (std::size_t i = 0; i < n; ++i)
      if (!differentiate(f, i).is_zero())
        throw std::invalid_argument("presymplectic form: coefficient depends on a leaf coordinate");
    const std::size_t a = static_cast<std::size_t>(__builtin_ctz(mask)) - n;
    const std::size_t b = static_cast<std::size_t>(31 - __builtin_clz(mask)) - n;
    D.omega_matrix[a][b] += f;
    D.omega_matrix[b][a] -= f;
  }
  if (!exterior_d(D.omega).is_zero()) throw std::invalid_argument("presymplectic form: not closed");
  const Polynomial det = determinant(D.omega_matrix, m);
  if (!det.is_constant() || det.is_zero())
    throw std::invalid_argument("presymplectic form: determinant is not a nonzero constant");
  const Rational inv_det = Rational(1) / det.constant_term();
  D.inverse.assign(p, std::vector<Polynomial>(p, Polynomial(m)));
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = 0; b < p; ++b) {
      // adjugate entry (a, b) is the (b, a) cofactor
      const int s = ((a + b) % 2 == 0) ? 1 : -1;
      D.inverse[a][b] = determinant(minor_of(D.omega_matrix, b, a), m) * (inv_det * s);
    }
  D.F = std::move(F);
  return D;
}

FormVector sharp(const PresymplecticData& D, const Form& w) {
  const auto& sp = D.F.sp;
  const std::size_t n = sp->n(), p = sp->p();
  std::vector<Form> comps(sp->m(), Form(sp));
  if (w.is_zero()) return FormVector(sp, std::move(comps));
  const auto parts = split_du(sp, w);
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = 0; b < p; ++b)
      if (!D.inverse[a][b].is_zero()) comps[n + b] += D.inverse[a][b] * parts[a];
  FormVector out(sp, std::move(comps));
  return D.conv.sharp_sign > 0 ? out : -out;
}

Form flat(const PresymplecticData& D, const FormVector& y) {
  const auto& sp = D.F.sp;
  const std::size_t n = sp->n(), p = sp->p();
  Form out(sp);
  for (std::size_t b = 0; b < p; ++b)
    for (std::size_t a = 0; a < p; ++a)
      if (!D.omega_matrix[b][a].is_zero())
        out += wedge(D.omega_matrix[b][a] * y.component(n + b), Form::generator(sp, n + a));
  return D.conv.sharp_sign > 0 ? out : -out;
}

Form omega_pairing(const PresymplecticData& D, const Form& w1, const Form& w2) {
  return evaluate_pairing(w1, {sharp(D, w2)});
}

Form r_sharp_action(const PresymplecticData& D, const Form& lambda, const Form& w) {
  if (lambda.is_zero() || w.is_zero()) return Form(D.F.sp);
  Form out = insertion(insertion(sharp(D, w), D.F.curvature), lambda);
  long long e = 0;
  if (D.conv.lambda_parity) e += form_deg(lambda);
  if (D.conv.omega_parity) e += form_deg(w);
  if (D.conv.cross_parity) e += static_cast<long long>(form_deg(lambda)) * form_deg(w);
  return (sgn(e) * D.conv.r_sharp_scale) * out;
}

Form op_bracket(const PresymplecticData& D, const std::vector<Form>& ls, const std::vector<int>& deg) {
  const auto& sp = D.F.sp;
  const int k = static_cast<int>(ls.size());
  if (k == 0 || deg.size() != ls.size()) throw std::invalid_argument("op bracket: arity mismatch");
  if (k == 1) return dbar(D.F, ls[0]);
  Form acc(sp);
  for (const auto& s : all_permutations(k)) {
    auto at = [&](int i) -> const Form& { return ls[static_cast<std::size_t>(s[static_cast<std::size_t>(i)])]; };
    Form w = d_component(at(k - 1), 1);
    for (int t = k - 2; t >= 1 && !w.is_zero(); --t) w = r_sharp_action(D, at(t), w);
    if (w.is_zero()) continue;
    acc += Rational(koszul_sign(s, deg, SignFlavor::Symmetric)) * omega_pairing(D, d_component(at(0), 1), w);
  }
  return acc * D.conv.op_prefactor;
}

FormVector hamiltonian_tower(const PresymplecticData& D, const std::vector<Form>& ls, const std::vector<int>& deg) {
  const auto& sp = D.F.sp;
  const std::size_t n = sp->n(), p = sp->p();
  std::vector<Form> comps(sp->m(), Form(sp));
  std::vector<Form> args = ls;
  std::vector<int> d = deg;
  args.push_back(Form(sp));
  d.push_back(-1);
  // {X|u^a} = -(-)^X X^a on functions
  const Rational s = -sgn(detail::degree_sum(deg));
  for (std::size_t a = 0; a < p; ++a) {
    args.back() = Form::function(sp, sp->coordinate(n + a));
    comps[n + a] = s * op_bracket(D, args, d);
  }
  return FormVector(sp, std::move(comps));
}

BracketOracle<Form> op_oracle(const PresymplecticData& D, int max_arity) {
  BracketOracle<Form> o;
  o.max_arity = max_arity;
  o.bracket = [D](const std::vector<Form>& v, const std::vector<int>& d) { return op_bracket(D, v, d); };
  const auto sp = D.F.sp;
  o.zero = [sp] { return Form(sp); };
  return o;
}

MorphismFamily<Form, FormVector> hamiltonian_family(const PresymplecticData& D, int max_arity) {
  MorphismFamily<Form, FormVector> f;
  f.max_arity = max_arity;
  f.map = [D](const std::vector<Form>& v, const std::vector<int>& d) { return hamiltonian_tower(D, v, d); };
  const auto sp = D.F.sp;
  f.zero = [sp] { return FormVector(sp); };
  return f;
}

namespace {

Form random_abar_any(Rng& rng, const SplittingPtr& sp) {
  return random_abar(rng, sp, static_cast<int>(sp->n()));
}

// Even elements of Abar[1] are odd-degree forms.
Form random_even(Rng& rng, const SplittingPtr& sp) {
  const int n = static_cast<int>(sp->n());
  if (n < 1) return Form(sp);
  const int top = (n % 2 == 1) ? n : n - 1;
  const int deg = 1 + 2 * rng.uniform_int(0, (top - 1) / 2);
  for (;;) {
    Form f = random_leaf_form(rng, sp, deg);
    if (!f.is_zero()) return f;
  }
}

std::vector<int> shifted(const std::vector<Form>& ls) {
  std::vector<int> d;
  for (const auto& l : ls) d.push_back(form_deg(l) - 1);
  return d;
}

}  // namespace

CheckReport presymplectic_data_check(const PresymplecticData& D, Rng& rng, std::size_t samples) {
  CheckReport rep;
  const auto& sp = D.F.sp;
  const std::size_t p = sp->p(), m = sp->m();
  rep.add("dOmega=0", residual_of(exterior_d(D.omega)));
  rep.add("dbarOmega=0", residual_of(d_component(D.omega, 0)));
  rep.add("d2Omega=0", residual_of(d_component(D.omega, 2)));
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t c = 0; c < p; ++c) {
      Polynomial e(m);
      for (std::size_t b = 0; b < p; ++b) e += D.omega_matrix[a][b] * D.inverse[b][c];
      if (a == c) e -= Polynomial::constant(m, 1);
      const std::string id = "OmegaP=1/" + std::to_string(a) + std::to_string(c);
      rep.add(id, e.is_zero() ? "" : to_string(e, sp->chart().coordinates()));
      rep.add("dbarP=0/" + std::to_string(a) + std::to_string(c),
              residual_of(dbar(D.F, Form::function(sp, D.inverse[a][c]))));
    }
  for (std::size_t s = 0; s < samples; ++s) {
    Form w = random_form(rng, sp, 1, rng.uniform_int(0, static_cast<int>(sp->n())));
    rep.add(label("flat(sharp)=id", s), residual_of(flat(D, sharp(D, w)) - w));
    FormVector y = random_q(rng, sp, 1);
    rep.add(label("sharp(flat)=id", s), residual_of(sharp(D, flat(D, y)) - y));
    Form a = random_abar(rng, sp, 1);
    rep.add(label("sharp-A-linear", s), residual_of(sharp(D, wedge(a, w)) - wedge(a, sharp(D, w))));
    // {X_k(l..)|f} = {l.., f}^op on every coordinate function, not only on the u's
    FoliationAlgebra alg(D.F);
    for (int k = 1; k <= 2; ++k) {
      std::vector<Form> ls;
      for (int i = 0; i < k; ++i) ls.push_back(random_abar_any(rng, sp));
      const auto d = shifted(ls);
      FormVector x = hamiltonian_tower(D, ls, d);
      for (std::size_t i = 0; i < sp->n(); ++i) {
        std::vector<Form> args = ls;
        args.push_back(Form::function(sp, sp->coordinate(i)));
        std::vector<int> dd = d;
        dd.push_back(-1);
        rep.add(label("X_" + std::to_string(k) + "-in-Q", s),
                residual_of(op_bracket(D, args, dd) - alg.anchor({x}, {detail::degree_sum(d)}, args.back())));
      }
    }
  }
  return rep;
}

CheckReport anchor_recursion_check(const PresymplecticData& D, Rng& rng, std::size_t samples, int max_k, const Rational& c) {
  CheckReport rep;
  const auto& sp = D.F.sp;
  FoliationAlgebra alg(D.F);
  for (std::size_t s = 0; s < samples; ++s) {
    Form lambda = random_even(rng, sp);
    std::vector<FormVector> Z(static_cast<std::size_t>(max_k) + 1);
    for (int k = 1; k <= max_k; ++k)
      Z[static_cast<std::size_t>(k)] = hamiltonian_tower(D, std::vector<Form>(static_cast<std::size_t>(k), lambda),
                                                         std::vector<int>(static_cast<std::size_t>(k), 0));
    const Form f = Form::function(sp, random_polynomial(rng, sp->m()));
    const Form probes[3] = {f, dbar(D.F, f), random_abar_any(rng, sp)};
    const char* names[3] = {"f", "dbar f", "random"};
    for (int k = 1; k <= max_k; ++k)
      for (int t = 0; t < 3; ++t) {
        const Form& lp = probes[t];
        Form lhs = alg.anchor({Z[static_cast<std::size_t>(k)]}, {0}, lp);
        std::vector<Form> args(static_cast<std::size_t>(k), lambda);
        args.push_back(lp);
        std::vector<int> d(static_cast<std::size_t>(k), 0);
        d.push_back(form_deg(lp) - 1);
        Form rhs = op_bracket(D, args, d);
        for (int i = 1; i < k; ++i)
          rhs -= c * Rational(static_cast<long>(binomial(k, i))) *
                 alg.anchor({Z[static_cast<std::size_t>(i)], Z[static_cast<std::size_t>(k - i)]}, {0, 0}, lp);
        rep.add(label("anchor-recursion/k=" + std::to_string(k) + "/" + names[t], s), residual_of(lhs - rhs));
      }
  }
  return rep;
}

CheckReport kx_defect_check(const PresymplecticData& D, Rng& rng, std::size_t samples, int max_arity) {
  CheckReport rep;
  const auto& sp = D.F.sp;
  FoliationAlgebra alg(D.F);
  const auto src = op_oracle(D, max_arity + 1);
  const auto tgt = alg.bracket_oracle();
  const auto X = hamiltonian_family(D, max_arity);
  for (std::size_t s = 0; s < samples; ++s)
    for (int m = 1; m <= max_arity; ++m) {
      std::vector<Form> ls;
      for (int i = 0; i < m; ++i) ls.push_back(random_abar_any(rng, sp));
      rep.add(label("K_X/" + std::to_string(m), s), residual_of(morphism_defect(X, src, tgt, ls, shifted(ls))));
    }
  return rep;
}

CheckReport op_jacobiator_check(const PresymplecticData& D, Rng& rng, std::size_t samples, int max_arity) {
  CheckReport rep;
  const auto& sp = D.F.sp;
  const auto o = op_oracle(D, max_arity);
  for (std::size_t s = 0; s < samples; ++s) {
    for (int k = 1; k <= max_arity; ++k) {
      std::vector<Form> ls;
      for (int i = 0; i < k; ++i) ls.push_back(random_abar_any(rng, sp));
      // odd samples end with a transverse coordinate, where random polynomials rarely probe sharply
      if (s % 2 == 1 && k >= 2 && sp->p() > 0)
        ls.back() = Form::function(sp, sp->coordinate(sp->n() + s / 2 % sp->p()));
      rep.add(label("Jop" + std::to_string(k), s), residual_of(jacobiator(o, ls, shifted(ls))));
    }
    std::vector<Form> ls;
    for (int i = 0; i < 2; ++i) ls.push_back(random_abar_any(rng, sp));
    const auto d = shifted(ls);
    rep.add(label("op-symmetry", s),
            residual_of(op_bracket(D, ls, d) - sgn(static_cast<long long>(d[0]) * d[1]) *
                                                   op_bracket(D, {ls[1], ls[0]}, {d[1], d[0]})));
    if (D.F.is_flat()) {
      // strict graded Jacobi: sum over the three cyclic arrangements of {{a,b},c}
      std::vector<Form> t;
      for (int i = 0; i < 3; ++i) t.push_back(random_abar_any(rng, sp));
      const auto td = shifted(t);
      Form acc(sp);
      const int blocks[2] = {2, 1};
      for (const auto& sg : unshuffles(blocks)) {
        const auto in = detail::pick(t, sg, 0, 2);
        const auto ind = detail::pick(td, sg, 0, 2);
        Form inner = op_bracket(D, in, ind);
        const int last = sg[2];
        acc += Rational(koszul_sign(sg, td, SignFlavor::Symmetric)) *
               op_bracket(D, {inner, t[static_cast<std::size_t>(last)]},
                          {detail::degree_sum(ind) + 1, td[static_cast<std::size_t>(last)]});
      }
      rep.add(label("strict-Jacobi", s), residual_of(acc));
    }
  }
  return rep;
}

}  // namespace lrc
