#include "lrc/sampling.hpp"

#include <algorithm>

namespace lrc {

namespace {

Monomial random_monomial(Rng& rng, unsigned max_degree, const std::vector<std::size_t>& vars) {
  const unsigned deg = static_cast<unsigned>(rng.uniform_int(0, static_cast<int>(max_degree)));
  Monomial m;
  for (unsigned k = 0; k < deg && !vars.empty(); ++k)
    m = m.times(Monomial::variable(vars[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(vars.size()) - 1))]));
  return m;
}

std::vector<std::size_t> all_vars(std::size_t nvars) {
  std::vector<std::size_t> v(nvars);
  for (std::size_t i = 0; i < nvars; ++i) v[i] = i;
  return v;
}

std::vector<Mask> masks_with(const SplittingPtr& sp, int r, int s) {
  std::vector<Mask> out;
  const Mask count = Mask{1} << sp->m();
  for (Mask mask = 0; mask < count; ++mask)
    if (popcount(mask & sp->du_mask()) == r && popcount(mask & sp->leaf_mask()) == s) out.push_back(mask);
  return out;
}

}  // namespace

Polynomial random_polynomial(Rng& rng, std::size_t nvars, unsigned max_degree, int max_terms,
                             const std::vector<std::size_t>& vars) {
  const auto& pool = vars.empty() ? all_vars(nvars) : vars;
  const int terms = rng.uniform_int(1, max_terms);
  std::vector<Polynomial::Term> ts;
  for (int t = 0; t < terms; ++t) {
    Monomial m = random_monomial(rng, max_degree, pool);
    ts.emplace_back(m, Rational(rng.uniform_int(-2, 2)));
  }
  return Polynomial::from_terms(nvars, std::move(ts));
}

Polynomial random_nonzero_polynomial(Rng& rng, std::size_t nvars, unsigned max_degree, int max_terms,
                                     const std::vector<std::size_t>& vars) {
  for (;;) {
    Polynomial p = random_polynomial(rng, nvars, max_degree, max_terms, vars);
    if (!p.is_zero()) return p;
  }
}

Form random_form(Rng& rng, const SplittingPtr& sp, int r, int s) {
  const auto masks = masks_with(sp, r, s);
  Components comps;
  if (masks.empty()) return Form(sp);
  // at least one component, the rest with probability 1/2
  const std::size_t forced = static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(masks.size()) - 1));
  for (std::size_t k = 0; k < masks.size(); ++k) {
    if (k != forced && !rng.coin()) continue;
    accumulate(comps, masks[k], random_nonzero_polynomial(rng, sp->m()));
  }
  return Form(sp, std::move(comps));
}

Form random_form_of_degree(Rng& rng, const SplittingPtr& sp, int deg) {
  Form out(sp);
  const int n = static_cast<int>(sp->n()), p = static_cast<int>(sp->p());
  std::vector<int> rs;
  for (int r = 0; r <= std::min(deg, p); ++r)
    if (deg - r <= n) rs.push_back(r);
  if (rs.empty()) return out;
  const int forced = rs[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(rs.size()) - 1))];
  for (int r : rs)
    if (r == forced || rng.coin()) out += random_form(rng, sp, r, deg - r);
  return out;
}

Form random_leaf_form(Rng& rng, const SplittingPtr& sp, int s) { return random_form(rng, sp, 0, s); }

VectorField random_vector_field(Rng& rng, const SplittingPtr& sp) {
  VectorField x = VectorField::zero(sp);
  for (auto& c : x.coeff)
    if (rng.coin()) c = random_polynomial(rng, sp->m());
  return x;
}

FormVector random_form_vector(Rng& rng, const SplittingPtr& sp, int deg) {
  std::vector<Form> comps(sp->m(), Form(sp));
  const std::size_t forced = static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(sp->m()) - 1));
  for (std::size_t b = 0; b < sp->m(); ++b)
    if (b == forced || rng.coin()) comps[b] = random_form_of_degree(rng, sp, deg);
  return FormVector(sp, std::move(comps));
}

FormVector random_q_element(Rng& rng, const SplittingPtr& sp, int s) {
  std::vector<Form> comps(sp->m(), Form(sp));
  const std::size_t n = sp->n(), p = sp->p();
  if (p == 0) return FormVector(sp, std::move(comps));
  const std::size_t forced = static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(p) - 1));
  for (std::size_t a = 0; a < p; ++a)
    if (a == forced || rng.coin()) comps[n + a] = random_leaf_form(rng, sp, s);
  return FormVector(sp, std::move(comps));
}

}  // namespace lrc
