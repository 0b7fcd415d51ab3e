#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace lrc {

/// sigma[p] = image of position p, zero-based: a permuted tuple reads v[sigma[0]], v[sigma[1]], ...
using Permutation = std::vector<int>;

enum class SignFlavor { Symmetric, Antisymmetric };

/// Permutations increasing inside each consecutive block of the given sizes.
/// Blocks must be positive. Lexicographic order.
std::vector<Permutation> unshuffles(std::span<const int> blocks);
/// Same enumeration with empty blocks allowed (S_{k,0} = {id}).
std::vector<Permutation> unshuffles_with_empty(std::span<const int> blocks);

/// Unshuffles whose equal-size neighbouring blocks have increasing lead elements.
/// Blocks must be sorted ascending.
std::vector<Permutation> strict_unshuffles(std::span<const int> blocks);

/// T_{l0|l1..lr}: the l0 block is free, later blocks follow the strict rule.
std::vector<Permutation> block_permutations(int l0, std::span<const int> later);

/// Streamed enumeration, same order as the eager lists.  The callback returns false to stop.
/// lead_rule[b] requests lead(b-1) < lead(b); lead_rule[0] is ignored.
void for_each_block_permutation(std::span<const int> blocks, const std::vector<bool>& lead_rule,
                                const std::function<bool(const Permutation&)>& visit);

std::vector<Permutation> all_permutations(int n);

std::uint64_t multinomial(std::span<const int> blocks);
/// C(k1..kl) = |S^<_{k1..kl}|: multinomial divided by the factorials of block-size multiplicities.
std::uint64_t strict_count(std::span<const int> blocks);
/// C(l0|l1..lr) = |T_{l0|l1..lr}|.
std::uint64_t block_count(int l0, std::span<const int> later);
std::uint64_t binomial(int n, int k);
std::uint64_t factorial(int n);

/// alpha(sigma, v) for Symmetric, chi(sigma, v) = sgn(sigma) alpha(sigma, v) for Antisymmetric.
int koszul_sign(const Permutation& sigma, std::span<const int> degrees, SignFlavor flavor);
int permutation_sign(const Permutation& sigma);

/// (-1)^{(k-1)v1 + (k-2)v2 + ... + v_{k-1}} for pre-shift degrees v1..vk.
int decalage_sign(std::span<const int> degrees);

inline int parity_sign(long long e) { return (e % 2 == 0) ? 1 : -1; }

/// compose(s, t)[p] = s[t[p]]; alpha(compose(s,t), v) = alpha(s, v) alpha(t, v o s).
Permutation compose(const Permutation& s, const Permutation& t);
Permutation inverse(const Permutation& s);

}  // namespace lrc
