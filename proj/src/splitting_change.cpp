#include "lrc/splitting_change.hpp"

#include <stdexcept>

#include "lrc/combinatorics.hpp"
#include "lrc/sampling.hpp"

namespace lrc {

namespace {

Rational sgn(long long e) { return Rational(parity_sign(e)); }

std::string label(const std::string& what, std::size_t sample) { return what + "#" + std::to_string(sample); }

Form i_delta_power(const SplittingPair& pr, Form a, int k) {
  for (int t = 0; t < k; ++t) a = insertion(pr.delta, a);
  return a;
}

std::vector<int> degrees_of(const std::vector<FormVector>& zs) {
  std::vector<int> d;
  for (const auto& z : zs) d.push_back(shifted_degree(z));
  return d;
}

int abar_degree(const Form& a) { return a.is_zero() ? 0 : form_degree(a); }

}  // namespace

SplittingPair SplittingPair::build(SplittingPtr v, SplittingPtr v_prime) {
  if (!(v->chart() == v_prime->chart())) throw std::invalid_argument("splitting pair: chart mismatch");
  SplittingPair pr;
  pr.target = FoliationStructure::build(v);
  pr.source = FoliationStructure::build(v_prime);
  const std::size_t n = v->n(), p = v->p();
  std::vector<Form> comps(v->m(), Form(v_prime));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < p; ++a)
      comps[i] += Form::monomial(v_prime, Mask{1} << (n + a), v_prime->v(a, i) - v->v(a, i));
  pr.delta = FormVector(v_prime, std::move(comps));
  return pr;
}

SplittingPair SplittingPair::reversed() const { return build(source.sp, target.sp); }

Form identify(const SplittingPair& pr, const Form& a) { return overline(reframe(a, pr.target.sp)); }
Form identify_back(const SplittingPair& pr, const Form& a) { return overline(reframe(a, pr.source.sp)); }

FormVector identify(const SplittingPair& pr, const FormVector& z) {
  const auto& sp = pr.target.sp;
  std::vector<Form> comps(sp->m(), Form(sp));
  for (std::size_t b = sp->n(); b < sp->m(); ++b) comps[b] = identify(pr, z.component(b));
  return FormVector(sp, std::move(comps));
}

Form psi(const SplittingPair& pr, const Form& lambda, int k) {
  return bidegree_project(reframe(lambda, pr.source.sp), k);
}

Form psi_closed(const SplittingPair& pr, const Form& lambda, int k) {
  return i_delta_power(pr, psi(pr, lambda, 0), k) * Rational(1, static_cast<long>(factorial(k)));
}

Form Psi(const SplittingPair& pr, const Form& omega, int k) {
  return bidegree_project(reframe(omega, pr.source.sp), k);
}

Form Psi_closed(const SplittingPair& pr, const Form& omega, int k) {
  if (k < 1) return Form(pr.source.sp);
  return i_delta_power(pr, Psi(pr, omega, 1), k - 1) * Rational(1, static_cast<long>(factorial(k - 1)));
}

Form phi(const SplittingPair& pr, const std::vector<FormVector>& zs, const std::vector<int>& deg, const Form& lambda,
         int lambda_deg) {
  if (zs.empty()) return lambda;
  const long long zsum = detail::degree_sum(deg);
  return sgn(lambda_deg * zsum) * identify(pr, evaluate_pairing(psi(pr, lambda, static_cast<int>(zs.size())), zs));
}

Form phi_rhs(const SplittingPair& pr, const Form& omega, const std::vector<FormVector>& zs,
             const std::vector<int>& deg) {
  const int k = static_cast<int>(zs.size());
  Form out = identify(pr, evaluate_pairing(Psi(pr, omega, k), zs));
  for (int i = 1; i < k; ++i) {
    const int blocks[2] = {i, k - i};
    for (const auto& s : unshuffles(blocks)) {
      FormVector x = Phi(pr, detail::pick(zs, s, 0, i), detail::pick(deg, s, 0, i));
      Form a = evaluate_pairing(omega, {x});
      out -= Rational(koszul_sign(s, deg, SignFlavor::Symmetric)) *
             identify(pr, evaluate_pairing(psi(pr, a, k - i), detail::pick(zs, s, i, k)));
    }
  }
  return out;
}

FormVector Phi(const SplittingPair& pr, const std::vector<FormVector>& zs, const std::vector<int>& deg) {
  const auto& sp = pr.target.sp;
  if (zs.empty()) throw std::invalid_argument("Phi: needs at least one argument");
  const std::size_t n = sp->n(), p = sp->p();
  const long long total = detail::degree_sum(deg);
  // X^a = (-)^{1 + X} <du^a | X>
  std::vector<Form> comps(sp->m(), Form(sp));
  for (std::size_t a = 0; a < p; ++a)
    comps[n + a] = sgn(1 + total) * phi_rhs(pr, Form::generator(sp, n + a), zs, deg);
  return FormVector(sp, std::move(comps));
}

FormVector Phi_closed(const SplittingPair& pr, const std::vector<FormVector>& zs, const std::vector<int>& deg,
                      const Rational& delta_scale) {
  const int k = static_cast<int>(zs.size());
  if (k == 1) return identify(pr, zs[0]);
  FormVector acc(pr.source.sp);
  for (const auto& s : all_permutations(k)) {
    auto dz = [&](int at) {
      return delta_scale * insertion(pr.delta, zs[static_cast<std::size_t>(s[static_cast<std::size_t>(at)])]);
    };
    FormVector y = dz(k - 1);
    for (int t = k - 2; t >= 1; --t) y = insertion(dz(t), y);
    y = insertion(zs[static_cast<std::size_t>(s[0])], y);
    acc += y * Rational(koszul_sign(s, deg, SignFlavor::Symmetric));
  }
  return identify(pr, acc);
}

MorphismFamily<FormVector, FormVector> Phi_family(const SplittingPair& pr, int max_arity) {
  MorphismFamily<FormVector, FormVector> f;
  f.max_arity = max_arity;
  f.map = [pr](const std::vector<FormVector>& v, const std::vector<int>& d) { return Phi(pr, v, d); };
  const auto sp = pr.target.sp;
  f.zero = [sp] { return FormVector(sp); };
  return f;
}

AnchoredFamily<FormVector, Form> phi_family(const SplittingPair& pr) {
  AnchoredFamily<FormVector, Form> f;
  f.max_arity = static_cast<int>(pr.target.sp->n());
  f.map = [pr](const std::vector<FormVector>& v, const std::vector<int>& d, const Form& a, int ad) {
    return phi(pr, v, d, a, ad);
  };
  return f;
}

AnchorOracle<FormVector, Form> source_anchor_oracle(const SplittingPair& pr) {
  auto alg = std::make_shared<FoliationAlgebra>(pr.source);
  AnchorOracle<FormVector, Form> o;
  o.max_arity = 3;
  o.anchor = [pr, alg](const std::vector<FormVector>& v, const std::vector<int>& d, const Form& a, int) {
    return identify(pr, alg->anchor(v, d, identify_back(pr, a)));
  };
  const auto sp = pr.target.sp;
  o.zero = [sp] { return Form(sp); };
  return o;
}

namespace {

// psi(w)_k(p..) through phi and Phi: sum over l0 + l1 + .. + lr = k, l1 <= .. <= lr and T_{l0|l1..lr}.
Form expansion(const SplittingPair& pr, const Form& omega, int r, const std::vector<FormVector>& zs,
               const std::vector<int>& deg) {
  const int k = static_cast<int>(zs.size());
  const long long w = abar_degree(omega);
  Form acc(pr.target.sp);
  for (int l0 = 0; l0 <= k; ++l0)
    for (const auto& parts : sorted_compositions(k - l0)) {
      if (static_cast<int>(parts.size()) != r) continue;
      for (const auto& s : block_permutations(l0, parts)) {
        std::vector<FormVector> images;
        int at = l0;
        for (int b : parts) {
          images.push_back(Phi(pr, detail::pick(zs, s, at, at + b), detail::pick(deg, s, at, at + b)));
          at += b;
        }
        Form inner = evaluate_pairing(omega, images);
        const auto d0 = detail::pick(deg, s, 0, l0);
        const long long chi = w * detail::degree_sum(d0);
        acc += sgn(chi) * Rational(koszul_sign(s, deg, SignFlavor::Symmetric)) *
               phi(pr, detail::pick(zs, s, 0, l0), d0, inner, abar_degree(inner));
      }
    }
  return acc;
}

}  // namespace

CheckReport splitting_change_check(const SplittingPair& pr, Rng& rng, std::size_t samples, int max_arity) {
  CheckReport rep;
  const auto& sp = pr.target.sp;
  const auto& spp = pr.source.sp;
  const int n = static_cast<int>(sp->n()), p = static_cast<int>(sp->p());
  FoliationAlgebra src(pr.source), tgt(pr.target);
  const auto src_br = src.bracket_oracle(), tgt_br = tgt.bracket_oracle();
  const auto tgt_anchor = tgt.anchor_oracle(), src_anchor = source_anchor_oracle(pr);
  const auto Phis = Phi_family(pr, max_arity);
  const auto phis = phi_family(pr);
  const SplittingPair back = pr.reversed();
  const auto Phis_back = Phi_family(back, max_arity);
  for (std::size_t s = 0; s < samples; ++s) {
    Form lambda = random_leaf_form(rng, sp, rng.uniform_int(0, n));
    for (int k = 0; k <= n; ++k)
      rep.add(label("psi_" + std::to_string(k) + "=iDelta^k/k!", s),
              residual_of(psi(pr, lambda, k) - psi_closed(pr, lambda, k)));
    if (p >= 1) {
      Form omega = random_form(rng, sp, 1, rng.uniform_int(0, n));
      for (int k = 1; k <= n + 1; ++k)
        rep.add(label("Psi_" + std::to_string(k) + "=iDelta^(k-1)/(k-1)!", s),
                residual_of(Psi(pr, omega, k) - Psi_closed(pr, omega, k)));
    }

    std::vector<FormVector> zs;
    for (int i = 0; i < max_arity + 1; ++i) zs.push_back(random_q(rng, spp, 1));
    const auto deg = degrees_of(zs);
    auto first = [&](int k) {
      return std::pair{std::vector<FormVector>(zs.begin(), zs.begin() + k), std::vector<int>(deg.begin(), deg.begin() + k)};
    };

    for (int k = 1; k <= max_arity; ++k) {
      const auto [v, d] = first(k);
      const std::string ks = std::to_string(k);
      rep.add(label("Phi_" + ks + "-closed", s), residual_of(Phi(pr, v, d) - Phi_closed(pr, v, d)));
      if (k > 1) rep.add(label("Phi_" + ks + "-symmetric", s), [&] {
        std::vector<FormVector> sw = v;
        std::vector<int> sd = d;
        std::swap(sw[0], sw[1]);
        std::swap(sd[0], sd[1]);
        return residual_of(Phi(pr, v, d) - Rational(parity_sign(static_cast<long long>(d[0]) * d[1])) * Phi(pr, sw, sd));
      }());
      if (p >= 1) {
        Form omega = random_form(rng, sp, 1, rng.uniform_int(0, n));
        Form a = random_abar(rng, sp, 1);
        rep.add(label("R_" + ks + "-A-linear", s),
                residual_of(phi_rhs(pr, wedge(a, omega), v, d) - wedge(a, phi_rhs(pr, omega, v, d))));
      }
      rep.add(label("K_Phi/" + ks, s), residual_of(morphism_defect(Phis, src_br, tgt_br, v, d)));
    }

    for (int r = 0; r <= std::min(2, p); ++r)
      for (int k = r; k <= std::min(3, max_arity + 1); ++k) {
        Form omega = random_form(rng, sp, r, rng.uniform_int(0, n));
        const auto [v, d] = first(k);
        Form lhs = identify(pr, evaluate_pairing(bidegree_project(reframe(omega, spp), k), v));
        rep.add(label("expansion/r=" + std::to_string(r) + "/k=" + std::to_string(k), s),
                residual_of(lhs - expansion(pr, omega, r, v, d)));
      }

    Form a = random_abar(rng, sp, n);
    for (int k = 0; k <= std::min(3, max_arity); ++k) {
      const auto [v, d] = first(k);
      rep.add(label("anchor-morphism/" + std::to_string(k), s),
              residual_of(anchored_morphism_defect(phis, Phis, src_br, src_anchor, tgt_anchor, v, d, a,
                                                   abar_degree(a))));
    }

    // both composites of the pair and its reverse are identity morphisms
    const auto round = compose_morphisms(Phis_back, Phis);
    const auto round_back = compose_morphisms(Phis, Phis_back);
    std::vector<FormVector> ys;
    for (int i = 0; i < 2; ++i) ys.push_back(random_q(rng, sp, 1));
    const auto ydeg = degrees_of(ys);
    for (int k = 1; k <= std::min(2, max_arity); ++k) {
      const auto [v, d] = first(k);
      const std::vector<FormVector> w(ys.begin(), ys.begin() + k);
      const std::vector<int> wd(ydeg.begin(), ydeg.begin() + k);
      FormVector expected = (k == 1) ? v[0] : FormVector(spp);
      FormVector expected_back = (k == 1) ? w[0] : FormVector(sp);
      rep.add(label("round-trip/" + std::to_string(k), s), residual_of(round.map(v, d) - expected));
      rep.add(label("round-trip-back/" + std::to_string(k), s), residual_of(round_back.map(w, wd) - expected_back));
    }

    FormVector even = random_q_element(rng, spp, 1);
    rep.add(label("Phi_2(Z,Z)", s),
            residual_of(Phi(pr, {even, even}, {0, 0}) -
                        Rational(2) * identify(pr, insertion(even, insertion(pr.delta, even)))));
  }
  return rep;
}

}  // namespace lrc
