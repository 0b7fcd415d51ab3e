#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "lrc/combinatorics.hpp"
#include "lrc/sampling.hpp"

using namespace lrc;

namespace {

using Blocks = std::vector<int>;

bool increasing_in_blocks(const Permutation& s, const Blocks& b) {
  int at = 0;
  for (int k : b) {
    for (int p = at; p + 1 < at + k; ++p)
      if (s[p] > s[p + 1]) return false;
    at += k;
  }
  return true;
}

// brute-force filter for the strict rule: equal neighbouring blocks have increasing leads
bool strict_leads(const Permutation& s, const Blocks& b, std::size_t first) {
  std::vector<int> lead;
  int at = 0;
  for (int k : b) {
    lead.push_back(k > 0 ? s[at] : -1);
    at += k;
  }
  for (std::size_t i = std::max<std::size_t>(first, 1); i < b.size(); ++i)
    if (i >= first + 1 && b[i] == b[i - 1] && lead[i - 1] > lead[i]) return false;
  return true;
}

std::set<Permutation> brute(const Blocks& b, bool strict, std::size_t first = 0) {
  int n = 0;
  for (int k : b) n += k;
  std::set<Permutation> out;
  for (const auto& s : all_permutations(n))
    if (increasing_in_blocks(s, b) && (!strict || strict_leads(s, b, first))) out.insert(s);
  return out;
}

std::set<Permutation> as_set(const std::vector<Permutation>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(Unshuffles, SmallCounts) {
  EXPECT_EQ(unshuffles(Blocks{2, 1}).size(), 3u);
  ASSERT_EQ(unshuffles(Blocks{1}).size(), 1u);
  EXPECT_EQ(unshuffles(Blocks{1}).front(), Permutation({0}));
  const auto s22 = unshuffles(Blocks{2, 2});
  EXPECT_EQ(s22.size(), 6u);
  EXPECT_EQ(as_set(s22), brute({2, 2}, false));
}

TEST(Unshuffles, RejectNonPositiveBlocks) {
  EXPECT_THROW(unshuffles(Blocks{2, 0}), std::invalid_argument);
  EXPECT_EQ(unshuffles_with_empty(Blocks{2, 0}).size(), 1u);
}

TEST(Unshuffles, MultinomialCountsUpToEight) {
  for (int total = 1; total <= 8; ++total)
    for (int a = 1; a < total; ++a)
      for (int b = 1; a + b <= total; ++b) {
        const int c = total - a - b;
        Blocks blocks{a, b};
        if (c > 0) blocks.push_back(c);
        EXPECT_EQ(unshuffles(blocks).size(), multinomial(blocks));
      }
}

TEST(Unshuffles, LexicographicOrder) {
  const auto v = unshuffles(Blocks{1, 2});
  EXPECT_TRUE(std::is_sorted(v.begin(), v.end()));
}

TEST(StrictUnshuffles, Examples) {
  EXPECT_EQ(strict_unshuffles(Blocks{1, 1}).size(), 1u);
  EXPECT_EQ(strict_unshuffles(Blocks{1, 1}).front(), Permutation({0, 1}));
  EXPECT_EQ(strict_unshuffles(Blocks{1, 2}).size(), 3u);
  EXPECT_EQ(strict_unshuffles(Blocks{1, 1, 1}).size(), 1u);
  EXPECT_EQ(strict_count(Blocks{1, 1, 1}), 1u);
  EXPECT_THROW(strict_unshuffles(Blocks{2, 1}), std::invalid_argument);
}

TEST(StrictUnshuffles, BruteForceUpToSeven) {
  for (const Blocks& b : std::vector<Blocks>{{1, 1}, {2, 2}, {1, 1, 2}, {1, 2, 2}, {1, 1, 1, 1}, {2, 2, 3}, {1, 3, 3}})
    EXPECT_EQ(as_set(strict_unshuffles(b)), brute(b, true)) << b.size();
}

TEST(BlockPermutations, Examples) {
  EXPECT_EQ(block_permutations(0, Blocks{1, 1}).size(), 1u);
  EXPECT_EQ(block_permutations(2, Blocks{}).size(), 1u);
  EXPECT_EQ(block_permutations(1, Blocks{1, 1}).size(), 3u);
  EXPECT_EQ(block_count(1, Blocks{1, 1}), 3u);
  EXPECT_THROW(block_permutations(1, Blocks{2, 1}), std::invalid_argument);
}

TEST(BlockPermutations, BruteForce) {
  for (int l0 = 0; l0 <= 3; ++l0)
    for (const Blocks& later : std::vector<Blocks>{{}, {1}, {1, 1}, {1, 2}, {2, 2}, {1, 1, 1}}) {
      int total = l0;
      for (int k : later) total += k;
      if (total == 0 || total > 7) continue;
      Blocks all{l0};
      all.insert(all.end(), later.begin(), later.end());
      EXPECT_EQ(as_set(block_permutations(l0, later)), brute(all, true, 1)) << l0;
    }
}

TEST(BlockPermutations, StreamingMatchesEager) {
  const Blocks blocks{1, 2, 2};
  std::vector<Permutation> seen;
  for_each_block_permutation(blocks, {false, false, true}, [&](const Permutation& s) {
    seen.push_back(s);
    return true;
  });
  EXPECT_EQ(seen, block_permutations(1, Blocks{2, 2}));
}

TEST(KoszulSign, Basics) {
  const Permutation id{0, 1, 2};
  const std::vector<int> deg{1, 3, 2};
  EXPECT_EQ(koszul_sign(id, deg, SignFlavor::Symmetric), 1);
  EXPECT_EQ(koszul_sign(id, deg, SignFlavor::Antisymmetric), 1);
  const Permutation swap{1, 0};
  EXPECT_EQ(koszul_sign(swap, std::vector<int>{1, 1}, SignFlavor::Symmetric), -1);
  EXPECT_EQ(koszul_sign(swap, std::vector<int>{1, 1}, SignFlavor::Antisymmetric), 1);
  EXPECT_EQ(koszul_sign(swap, std::vector<int>{0, 2}, SignFlavor::Antisymmetric), -1);
  EXPECT_THROW(koszul_sign(swap, std::vector<int>{1}, SignFlavor::Symmetric), std::invalid_argument);
}

TEST(KoszulSign, InverseLaw) {
  Rng rng(3);
  for (int k = 0; k < 200; ++k) {
    const int n = rng.uniform_int(1, 6);
    auto perms = all_permutations(n);
    const Permutation s = perms[rng.uniform_int(0, static_cast<int>(perms.size()) - 1)];
    std::vector<int> v(n), sv(n);
    for (auto& d : v) d = rng.uniform_int(-2, 3);
    for (int p = 0; p < n; ++p) sv[p] = v[s[p]];
    EXPECT_EQ(koszul_sign(s, v, SignFlavor::Symmetric) * koszul_sign(inverse(s), sv, SignFlavor::Symmetric), 1);
  }
}

TEST(KoszulSign, Multiplicative) {
  Rng rng(4);
  for (int k = 0; k < 200; ++k) {
    const int n = rng.uniform_int(1, 5);
    auto perms = all_permutations(n);
    const Permutation s = perms[rng.uniform_int(0, static_cast<int>(perms.size()) - 1)];
    const Permutation t = perms[rng.uniform_int(0, static_cast<int>(perms.size()) - 1)];
    std::vector<int> v(n), sv(n);
    for (auto& d : v) d = rng.uniform_int(0, 3);
    for (int p = 0; p < n; ++p) sv[p] = v[s[p]];
    for (auto flavor : {SignFlavor::Symmetric, SignFlavor::Antisymmetric})
      EXPECT_EQ(koszul_sign(compose(s, t), v, flavor), koszul_sign(s, v, flavor) * koszul_sign(t, sv, flavor));
  }
}

TEST(DecalageSign, Examples) {
  EXPECT_EQ(decalage_sign(std::vector<int>{5}), 1);
  EXPECT_EQ(decalage_sign(std::vector<int>{1, 4}), -1);
  EXPECT_EQ(decalage_sign(std::vector<int>{2, 1}), 1);
  EXPECT_EQ(decalage_sign(std::vector<int>{1, 1, 0}), -1);
}

TEST(Counting, Binomials) {
  EXPECT_EQ(binomial(5, 2), 10u);
  EXPECT_EQ(factorial(6), 720u);
  EXPECT_EQ(multinomial(Blocks{2, 2, 1}), 30u);
  EXPECT_EQ(strict_count(Blocks{2, 2}), 3u);
}
