#include "lrc/combinatorics.hpp"

#include <numeric>
#include <stdexcept>

namespace lrc {

namespace {

struct BlockWalker {
  std::vector<int> sizes;
  std::vector<bool> lead_rule;
  const std::function<bool(const Permutation&)>* visit;
  int n = 0;
  Permutation sigma;
  std::vector<bool> used;
  std::vector<int> block_start;
  bool stopped = false;

  void run() {
    n = std::accumulate(sizes.begin(), sizes.end(), 0);
    sigma.assign(n, -1);
    used.assign(n, false);
    block_start.clear();
    int s = 0;
    for (int k : sizes) {
      block_start.push_back(s);
      s += k;
    }
    place(0, 0);
  }

  // Position p belongs to block b.
  void place(int p, std::size_t b) {
    if (stopped) return;
    while (b < sizes.size() && p == block_start[b] + sizes[b]) ++b;
    if (p == n) {
      if (!(*visit)(sigma)) stopped = true;
      return;
    }
    const bool at_lead = p == block_start[b];
    int lo = at_lead ? 0 : sigma[p - 1] + 1;
    if (at_lead && b > 0 && lead_rule[b]) {
      // previous nonempty block's lead
      std::size_t pb = b - 1;
      while (sizes[pb] == 0) {
        if (pb == 0) break;
        --pb;
      }
      if (sizes[pb] > 0) lo = std::max(lo, sigma[block_start[pb]] + 1);
    }
    const int remaining_in_block = block_start[b] + sizes[b] - p;
    for (int v = lo; v < n; ++v) {
      if (used[v]) continue;
      // enough unused larger values for the rest of this block
      int avail = 0;
      for (int w = v + 1; w < n && avail < remaining_in_block - 1; ++w)
        if (!used[w]) ++avail;
      if (avail < remaining_in_block - 1) break;
      used[v] = true;
      sigma[p] = v;
      place(p + 1, b);
      used[v] = false;
      if (stopped) return;
    }
  }
};

std::vector<Permutation> collect(std::span<const int> blocks, const std::vector<bool>& rule) {
  std::vector<Permutation> out;
  std::function<bool(const Permutation&)> f = [&](const Permutation& s) {
    out.push_back(s);
    return true;
  };
  for_each_block_permutation(blocks, rule, f);
  return out;
}

std::vector<bool> equal_size_rule(std::span<const int> blocks, std::size_t first) {
  std::vector<bool> rule(blocks.size(), false);
  for (std::size_t b = first + 1; b < blocks.size(); ++b) rule[b] = blocks[b] == blocks[b - 1];
  return rule;
}

}  // namespace

void for_each_block_permutation(std::span<const int> blocks, const std::vector<bool>& lead_rule,
                                const std::function<bool(const Permutation&)>& visit) {
  for (int k : blocks)
    if (k < 0) throw std::invalid_argument("block sizes must be nonnegative");
  BlockWalker w;
  w.sizes.assign(blocks.begin(), blocks.end());
  w.lead_rule = lead_rule;
  w.lead_rule.resize(blocks.size(), false);
  w.visit = &visit;
  w.run();
}

std::vector<Permutation> unshuffles(std::span<const int> blocks) {
  if (blocks.empty()) throw std::invalid_argument("unshuffles: need at least one block");
  for (int k : blocks)
    if (k <= 0) throw std::invalid_argument("unshuffles: block sizes must be positive");
  return collect(blocks, std::vector<bool>(blocks.size(), false));
}

std::vector<Permutation> unshuffles_with_empty(std::span<const int> blocks) {
  return collect(blocks, std::vector<bool>(blocks.size(), false));
}

std::vector<Permutation> strict_unshuffles(std::span<const int> blocks) {
  if (blocks.empty()) throw std::invalid_argument("strict_unshuffles: need at least one block");
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b] <= 0) throw std::invalid_argument("strict_unshuffles: block sizes must be positive");
    if (b > 0 && blocks[b] < blocks[b - 1])
      throw std::invalid_argument("strict_unshuffles: blocks must be sorted ascending");
  }
  return collect(blocks, equal_size_rule(blocks, 0));
}

std::vector<Permutation> block_permutations(int l0, std::span<const int> later) {
  if (l0 < 0) throw std::invalid_argument("block_permutations: negative leading block");
  std::vector<int> blocks{l0};
  for (std::size_t b = 0; b < later.size(); ++b) {
    if (later[b] < 0) throw std::invalid_argument("block_permutations: negative block");
    if (b > 0 && later[b] < later[b - 1])
      throw std::invalid_argument("block_permutations: later blocks must be sorted ascending");
    blocks.push_back(later[b]);
  }
  return collect(blocks, equal_size_rule(blocks, 1));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> ones(static_cast<std::size_t>(n), 1);
  return collect(ones, std::vector<bool>(ones.size(), false));
}

std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

std::uint64_t multinomial(std::span<const int> blocks) {
  std::uint64_t r = 1;
  int total = 0;
  for (int k : blocks) {
    total += k;
    r *= binomial(total, k);
  }
  return r;
}

namespace {
std::uint64_t multiplicity_factor(std::span<const int> blocks) {
  std::uint64_t f = 1;
  std::size_t i = 0;
  while (i < blocks.size()) {
    std::size_t j = i;
    while (j < blocks.size() && blocks[j] == blocks[i]) ++j;
    f *= factorial(static_cast<int>(j - i));
    i = j;
  }
  return f;
}
}  // namespace

std::uint64_t strict_count(std::span<const int> blocks) {
  return multinomial(blocks) / multiplicity_factor(blocks);
}

std::uint64_t block_count(int l0, std::span<const int> later) {
  std::vector<int> all{l0};
  all.insert(all.end(), later.begin(), later.end());
  return multinomial(all) / multiplicity_factor(later);
}

int permutation_sign(const Permutation& s) {
  int inv = 0;
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b)
      if (s[a] > s[b]) ++inv;
  return parity_sign(inv);
}

int koszul_sign(const Permutation& s, std::span<const int> degrees, SignFlavor flavor) {
  if (s.size() != degrees.size()) throw std::invalid_argument("koszul_sign: length mismatch");
  long long e = 0;
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b)
      if (s[a] > s[b]) {
        e += static_cast<long long>(degrees[s[a]]) * degrees[s[b]];
        if (flavor == SignFlavor::Antisymmetric) e += 1;
      }
  return parity_sign(e);
}

int decalage_sign(std::span<const int> degrees) {
  const long long k = static_cast<long long>(degrees.size());
  long long e = 0;
  for (long long i = 0; i < k; ++i) e += (k - 1 - i) * degrees[static_cast<std::size_t>(i)];
  return parity_sign(e);
}

Permutation compose(const Permutation& s, const Permutation& t) {
  if (s.size() != t.size()) throw std::invalid_argument("compose: size mismatch");
  Permutation r(s.size());
  for (std::size_t p = 0; p < s.size(); ++p) r[p] = s[static_cast<std::size_t>(t[p])];
  return r;
}

Permutation inverse(const Permutation& s) {
  Permutation r(s.size());
  for (std::size_t p = 0; p < s.size(); ++p) r[static_cast<std::size_t>(s[p])] = static_cast<int>(p);
  return r;
}

}  // namespace lrc
