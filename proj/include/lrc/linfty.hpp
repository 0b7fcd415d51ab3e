#pragma once

#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "lrc/combinatorics.hpp"
#include "lrc/polynomial.hpp"

namespace lrc {

/// Graded-symmetric brackets of degree +1 on some argument space.  Arguments travel
/// with explicit degrees so that zero values never need a degree of their own.
template <class E>
struct BracketOracle {
  int max_arity = 0;  // brackets of higher arity vanish
  std::function<E(const std::vector<E>&, const std::vector<int>&)> bracket;
  std::function<E()> zero;
};

/// Anchors {v1..v_{k-1}|m} of a module over an L-infinity[1] algebra; arity counts the module slot.
template <class E, class M>
struct AnchorOracle {
  int max_arity = 0;
  std::function<M(const std::vector<E>&, const std::vector<int>&, const M&, int)> anchor;
  std::function<M()> zero;
};

/// Degree-0 graded-symmetric maps f_k; f_k with k > max_arity vanish.
template <class E, class F>
struct MorphismFamily {
  int max_arity = 1;
  std::function<F(const std::vector<E>&, const std::vector<int>&)> map;
  std::function<F()> zero;
};

namespace detail {

template <class T>
std::vector<T> pick(const std::vector<T>& v, const Permutation& s, int from, int to) {
  std::vector<T> out;
  out.reserve(static_cast<std::size_t>(to - from));
  for (int p = from; p < to; ++p) out.push_back(v[static_cast<std::size_t>(s[static_cast<std::size_t>(p)])]);
  return out;
}

inline int degree_sum(const std::vector<int>& d) { return std::accumulate(d.begin(), d.end(), 0); }

inline Rational sign(int s) { return Rational(s); }

}  // namespace detail

/// All nondecreasing sequences of positive integers summing to `total`; {{}} for total 0.
inline std::vector<std::vector<int>> sorted_compositions(int total, int min_part = 1) {
  std::vector<std::vector<int>> out;
  if (total == 0) return {{}};
  for (int first = min_part; first <= total; ++first)
    for (auto& rest : sorted_compositions(total - first, first)) {
      rest.insert(rest.begin(), first);
      out.push_back(std::move(rest));
    }
  return out;
}

/// J^k(v) = sum_{i+j=k} sum_{S_{i,j}} alpha {{v_s(1..i)}, v_s(i+1..k)}.
template <class E>
E jacobiator(const BracketOracle<E>& o, const std::vector<E>& v, const std::vector<int>& deg) {
  if (v.size() != deg.size() || v.empty()) throw std::invalid_argument("jacobiator: arity mismatch");
  const int k = static_cast<int>(v.size());
  E acc = o.zero();
  for (int i = 1; i <= k; ++i) {
    const int j = k - i;
    if (i > o.max_arity || j + 1 > o.max_arity) continue;
    const int blocks[2] = {i, j};
    for (const auto& s : unshuffles_with_empty(blocks)) {
      const auto inner_deg = detail::pick(deg, s, 0, i);
      E inner = o.bracket(detail::pick(v, s, 0, i), inner_deg);
      std::vector<E> outer{std::move(inner)};
      std::vector<int> outer_deg{detail::degree_sum(inner_deg) + 1};
      for (int p = i; p < k; ++p) {
        outer.push_back(v[static_cast<std::size_t>(s[static_cast<std::size_t>(p)])]);
        outer_deg.push_back(deg[static_cast<std::size_t>(s[static_cast<std::size_t>(p)])]);
      }
      acc += o.bracket(outer, outer_deg) * detail::sign(koszul_sign(s, deg, SignFlavor::Symmetric));
    }
  }
  return acc;
}

/// Skew flavor: J^k(v) = sum_{i+j=k} (-)^{ij} sum_{S_{i,j}} chi [[v_s(1..i)], v_s(i+1..k)], brackets of degree 2 - k.
template <class E>
E skew_jacobiator(const BracketOracle<E>& o, const std::vector<E>& v, const std::vector<int>& deg) {
  if (v.size() != deg.size() || v.empty()) throw std::invalid_argument("skew_jacobiator: arity mismatch");
  const int k = static_cast<int>(v.size());
  E acc = o.zero();
  for (int i = 1; i <= k; ++i) {
    const int j = k - i;
    if (i > o.max_arity || j + 1 > o.max_arity) continue;
    const int blocks[2] = {i, j};
    for (const auto& s : unshuffles_with_empty(blocks)) {
      const auto inner_deg = detail::pick(deg, s, 0, i);
      E inner = o.bracket(detail::pick(v, s, 0, i), inner_deg);
      std::vector<E> outer{std::move(inner)};
      std::vector<int> outer_deg{detail::degree_sum(inner_deg) + 2 - i};
      for (int p = i; p < k; ++p) {
        outer.push_back(v[static_cast<std::size_t>(s[static_cast<std::size_t>(p)])]);
        outer_deg.push_back(deg[static_cast<std::size_t>(s[static_cast<std::size_t>(p)])]);
      }
      const int sg = parity_sign(static_cast<long long>(i) * j) * koszul_sign(s, deg, SignFlavor::Antisymmetric);
      acc += o.bracket(outer, outer_deg) * detail::sign(sg);
    }
  }
  return acc;
}

/// Jacobiator of the direct-sum extension on (v_1..v_{k-1}, m), module entry last.
template <class E, class M>
M module_jacobiator(const BracketOracle<E>& alg, const AnchorOracle<E, M>& mod, const std::vector<E>& v,
                    const std::vector<int>& deg, const M& m, int mdeg) {
  if (v.size() != deg.size()) throw std::invalid_argument("module_jacobiator: arity mismatch");
  const int k = static_cast<int>(v.size()) + 1;
  std::vector<int> all = deg;
  all.push_back(mdeg);
  M acc = mod.zero();
  for (int i = 1; i <= k; ++i) {
    const int j = k - i;
    const int blocks[2] = {i, j};
    for (const auto& s : unshuffles_with_empty(blocks)) {
      const Rational sg = detail::sign(koszul_sign(s, all, SignFlavor::Symmetric));
      const bool m_inside = s[static_cast<std::size_t>(i - 1)] == k - 1;
      if (m_inside) {
        if (i > mod.max_arity || j + 1 > mod.max_arity) continue;
        const auto in_deg = detail::pick(deg, s, 0, i - 1);
        M inner = mod.anchor(detail::pick(v, s, 0, i - 1), in_deg, m, mdeg);
        const int inner_deg = detail::degree_sum(in_deg) + mdeg + 1;
        const auto rest_deg = detail::pick(all, s, i, k);
        std::vector<E> rest;
        for (int p = i; p < k; ++p) rest.push_back(v[static_cast<std::size_t>(s[static_cast<std::size_t>(p)])]);
        const int move = parity_sign(static_cast<long long>(inner_deg) * detail::degree_sum(rest_deg));
        acc += mod.anchor(rest, rest_deg, inner, inner_deg) * detail::sign(move) * sg;
      } else {
        if (i > alg.max_arity || j + 1 > mod.max_arity) continue;
        const auto in_deg = detail::pick(deg, s, 0, i);
        E inner = alg.bracket(detail::pick(v, s, 0, i), in_deg);
        std::vector<E> outer{std::move(inner)};
        std::vector<int> outer_deg{detail::degree_sum(in_deg) + 1};
        for (int p = i; p < k - 1; ++p) {
          outer.push_back(v[static_cast<std::size_t>(s[static_cast<std::size_t>(p)])]);
          outer_deg.push_back(all[static_cast<std::size_t>(s[static_cast<std::size_t>(p)])]);
        }
        acc += mod.anchor(outer, outer_deg, m, mdeg) * sg;
      }
    }
  }
  return acc;
}

/// The restricted sum over k1 <= ... <= kl and S^<: {f_{k1}(..), .., f_{kl}(..)}' or g_l(f_{k1}(..), ..).
template <class E, class F, class Outer>
F sum_over_strict_blocks(const MorphismFamily<E, F>& f, int outer_max, const std::vector<E>& v,
                         const std::vector<int>& deg, Outer outer, F acc) {
  const int k = static_cast<int>(v.size());
  for (const auto& parts : sorted_compositions(k)) {
    if (static_cast<int>(parts.size()) > outer_max) continue;
    if (parts.back() > f.max_arity) continue;
    for (const auto& s : strict_unshuffles(parts)) {
      std::vector<F> images;
      std::vector<int> image_deg;
      int at = 0;
      for (int b : parts) {
        const auto d = detail::pick(deg, s, at, at + b);
        images.push_back(f.map(detail::pick(v, s, at, at + b), d));
        image_deg.push_back(detail::degree_sum(d));
        at += b;
      }
      acc += outer(images, image_deg) * detail::sign(koszul_sign(s, deg, SignFlavor::Symmetric));
    }
  }
  return acc;
}

/// K_f^k(v): sum alpha f_{j+1}({v..}, v..) minus the restricted sum of target brackets of f-images.
template <class E, class F>
F morphism_defect(const MorphismFamily<E, F>& f, const BracketOracle<E>& src, const BracketOracle<F>& tgt,
                  const std::vector<E>& v, const std::vector<int>& deg) {
  if (v.size() != deg.size() || v.empty()) throw std::invalid_argument("morphism_defect: arity mismatch");
  const int k = static_cast<int>(v.size());
  F acc = f.zero();
  for (int i = 1; i <= k; ++i) {
    const int j = k - i;
    if (i > src.max_arity || j + 1 > f.max_arity) continue;
    const int blocks[2] = {i, j};
    for (const auto& s : unshuffles_with_empty(blocks)) {
      const auto in_deg = detail::pick(deg, s, 0, i);
      std::vector<E> args{src.bracket(detail::pick(v, s, 0, i), in_deg)};
      std::vector<int> args_deg{detail::degree_sum(in_deg) + 1};
      for (int p = i; p < k; ++p) {
        args.push_back(v[static_cast<std::size_t>(s[static_cast<std::size_t>(p)])]);
        args_deg.push_back(deg[static_cast<std::size_t>(s[static_cast<std::size_t>(p)])]);
      }
      acc += f.map(args, args_deg) * detail::sign(koszul_sign(s, deg, SignFlavor::Symmetric));
    }
  }
  F images = sum_over_strict_blocks(f, tgt.max_arity, v, deg,
                                    [&](const std::vector<F>& x, const std::vector<int>& d) { return tgt.bracket(x, d); },
                                    f.zero());
  acc -= images;
  return acc;
}

/// (g o f)_k as the restricted sum g_l(f_{k1}, .., f_{kl}).
template <class E, class F, class G>
MorphismFamily<E, G> compose_morphisms(const MorphismFamily<F, G>& g, const MorphismFamily<E, F>& f) {
  MorphismFamily<E, G> out;
  out.max_arity = f.max_arity * g.max_arity;
  out.zero = g.zero;
  out.map = [g, f](const std::vector<E>& v, const std::vector<int>& deg) {
    return sum_over_strict_blocks(
        f, g.max_arity, v, deg, [&](const std::vector<F>& x, const std::vector<int>& d) { return g.map(x, d); },
        g.zero());
  };
  return out;
}

template <class E>
MorphismFamily<E, E> identity_morphism(std::function<E()> zero) {
  MorphismFamily<E, E> out;
  out.max_arity = 1;
  out.zero = zero;
  out.map = [](const std::vector<E>& v, const std::vector<int>&) { return v.front(); };
  return out;
}

/// phi_k(p_1..p_k | a): degree 0, graded symmetric in the p's, phi_0 = identity.
template <class P, class A>
struct AnchoredFamily {
  int max_arity = 0;
  std::function<A(const std::vector<P>&, const std::vector<int>&, const A&, int)> map;
};

/// Left minus right side of the anchor condition for an LR-infinity[1] morphism
/// (phi, Phi): (A, P) -> (A, Q):
///   sum_m sum_{l0 + l1 + .. + lm = k, l1 <= .. <= lm} sum_{T_{l0|l1..lm}} (-)^{p_s(1)+..+p_s(l0)} alpha
///       phi_{l0}(p.. | {Phi_{l1}(..), .., Phi_{lm}(..) | a}_Q)
///   - sum_{S_{l,r}} alpha {p.. | phi_r(p.. | a)}_P + sum_{S_{l,r}, l >= 1} alpha phi_{r+1}({p..}_P, p.. | a).
template <class P, class Q, class A>
A anchored_morphism_defect(const AnchoredFamily<P, A>& phi, const MorphismFamily<P, Q>& Phi,
                           const BracketOracle<P>& src, const AnchorOracle<P, A>& src_anchor,
                           const AnchorOracle<Q, A>& tgt_anchor, const std::vector<P>& v,
                           const std::vector<int>& deg, const A& a, int adeg) {
  if (v.size() != deg.size()) throw std::invalid_argument("anchored_morphism_defect: arity mismatch");
  const int k = static_cast<int>(v.size());
  A acc = src_anchor.zero();
  for (int l0 = 0; l0 <= k; ++l0) {
    if (l0 > phi.max_arity) continue;
    for (const auto& parts : sorted_compositions(k - l0)) {
      const int m = static_cast<int>(parts.size());
      if (m + 1 > tgt_anchor.max_arity) continue;
      if (!parts.empty() && parts.back() > Phi.max_arity) continue;
      for (const auto& s : block_permutations(l0, parts)) {
        std::vector<Q> images;
        std::vector<int> image_deg;
        int at = l0;
        for (int b : parts) {
          const auto d = detail::pick(deg, s, at, at + b);
          images.push_back(Phi.map(detail::pick(v, s, at, at + b), d));
          image_deg.push_back(detail::degree_sum(d));
          at += b;
        }
        A inner = tgt_anchor.anchor(images, image_deg, a, adeg);
        const int inner_deg = detail::degree_sum(image_deg) + adeg + 1;
        const auto d0 = detail::pick(deg, s, 0, l0);
        const int sg = parity_sign(detail::degree_sum(d0)) * koszul_sign(s, deg, SignFlavor::Symmetric);
        acc += phi.map(detail::pick(v, s, 0, l0), d0, inner, inner_deg) * detail::sign(sg);
      }
    }
  }
  for (int l = 0; l <= k; ++l) {
    const int r = k - l;
    if (r > phi.max_arity) continue;
    const int blocks[2] = {l, r};
    for (const auto& s : unshuffles_with_empty(blocks)) {
      const Rational sg = detail::sign(koszul_sign(s, deg, SignFlavor::Symmetric));
      const auto dl = detail::pick(deg, s, 0, l), dr = detail::pick(deg, s, l, k);
      if (l + 1 <= src_anchor.max_arity) {
        A inner = phi.map(detail::pick(v, s, l, k), dr, a, adeg);
        acc -= src_anchor.anchor(detail::pick(v, s, 0, l), dl, inner, detail::degree_sum(dr) + adeg) * sg;
      }
      if (l >= 1 && l <= src.max_arity && r + 1 <= phi.max_arity) {
        std::vector<P> args{src.bracket(detail::pick(v, s, 0, l), dl)};
        std::vector<int> args_deg{detail::degree_sum(dl) + 1};
        for (int p = l; p < k; ++p) {
          args.push_back(v[static_cast<std::size_t>(s[static_cast<std::size_t>(p)])]);
          args_deg.push_back(deg[static_cast<std::size_t>(s[static_cast<std::size_t>(p)])]);
        }
        acc += phi.map(args, args_deg, a, adeg) * sg;
      }
    }
  }
  return acc;
}

}  // namespace lrc
