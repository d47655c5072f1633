#include <doctest.h>

#include <algorithm>
#include <random>

#include "symcop/generators.hpp"
#include "symcop/structure.hpp"

using namespace symcop;

namespace {

SymTensor block_ones(int k, const std::vector<std::vector<int>> &blocks, int n) {
  SymTensorBuilder b(k, n);
  for (const auto &blk : blocks)
    for_each_canonical_index(k, static_cast<int>(blk.size()),
                             [&](const MultiIndex &m) {
                               MultiIndex g(m);
                               for (auto &i : g)
                                 i = blk[i];
                               b.set(g, 1.0);
                             });
  return b.build();
}

SymTensor random_sparse_nonneg(std::mt19937_64 &rng, int k, int n,
                               double density) {
  GeneratorParams p;
  p.order = k;
  p.dim = n;
  p.density = density;
  return generate(GeneratorKind::RandomNonneg, p, rng());
}

} // namespace

TEST_CASE("classify examples") {
  auto j = classify(all_ones_tensor(3, 3));
  CHECK(j.symmetric);
  CHECK(j.nonnegative);
  CHECK(j.essentially_nonnegative);
  CHECK_FALSE(j.essentially_nonpositive);

  auto mi = classify(negate(identity_tensor(3, 3)));
  CHECK_FALSE(mi.nonnegative);
  CHECK(mi.essentially_nonnegative);
  CHECK(mi.essentially_nonpositive);

  auto s = classify(zero_diagonal_copositive_example());
  CHECK_FALSE(s.essentially_nonnegative);
  CHECK_FALSE(s.essentially_nonpositive);
}

TEST_CASE("essential decomposition examples") {
  auto j = all_ones_tensor(3, 2);
  auto dj = essential_decomposition(j);
  CHECK(dj.shift == 0.0);
  CHECK(dj.nonnegative_part == j);

  auto mi = negate(identity_tensor(3, 4));
  auto dm = essential_decomposition(mi);
  CHECK(dm.shift == -1.0);
  CHECK(dm.nonnegative_part == SymTensor(3, 4));

  auto a = SymTensorBuilder(3, 2)
               .set({0, 0, 0}, -2)
               .set({1, 1, 1}, 3)
               .set({0, 0, 1}, 1)
               .set({0, 1, 1}, 1)
               .build();
  auto da = essential_decomposition(a);
  CHECK(da.shift == -2.0);
  CHECK(da.nonnegative_part.diagonal(0) == 0.0);
  CHECK(da.nonnegative_part.diagonal(1) == 5.0);
  CHECK(da.nonnegative_part.at({1, 0, 0}) == 1.0);
  CHECK(da.nonnegative_part.at({1, 1, 0}) == 1.0);

  CHECK_THROWS(essential_decomposition(zero_diagonal_copositive_example()));
}

TEST_CASE("essential decomposition round trip on dyadic values") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 3);
    const int n = 1 + static_cast<int>(rng() % 4);
    SymTensorBuilder b(k, n);
    for_each_canonical_index(k, n, [&](const MultiIndex &m) {
      const bool diag = m.front() == m.back();
      const double v = static_cast<double>(static_cast<int>(rng() % 17)) / 8.0;
      if (rng() % 3)
        b.set(m, diag ? v - 1.0 : v);
    });
    const auto a = b.build();
    const auto d = essential_decomposition(a);
    CHECK(classify(d.nonnegative_part).nonnegative);
    CHECK(add_identity(d.nonnegative_part, d.shift) == a);
    CHECK(d.shift <= 0.0);
  }
}

TEST_CASE("reducibility examples") {
  auto wi = is_reducible(identity_tensor(3, 3));
  REQUIRE(wi);
  CHECK(*wi == std::vector<int>{0});

  CHECK_FALSE(is_reducible(all_ones_tensor(3, 3)));

  auto jj = block_ones(3, {{0, 1}, {2, 3}}, 4);
  auto wj = is_reducible(jj);
  REQUIRE(wj);
  CHECK(*wj == std::vector<int>{0, 1});
  CHECK(is_reducing_set(jj, {0, 1}));
  CHECK(is_reducing_set(jj, {2, 3}));
  CHECK_FALSE(is_reducing_set(jj, {0, 2}));

  // Connected graph, yet {1} is reducing: the only entry is a_{112}.
  auto weak = SymTensorBuilder(3, 2).set({0, 0, 1}, 1.0).build();
  CHECK(is_weakly_irreducible(weak));
  auto ww = is_reducible(weak);
  REQUIRE(ww);
  CHECK(is_reducing_set(weak, *ww));

  CHECK_THROWS_AS(is_reducible(all_ones_tensor(2, 13)), std::domain_error);
}

TEST_CASE("representation graph examples") {
  auto gj = representation_graph(all_ones_tensor(3, 3));
  CHECK(gj.edges.size() == 3);
  CHECK(is_weakly_irreducible(all_ones_tensor(3, 3)));

  CHECK(representation_graph(identity_tensor(3, 3)).edges.empty());
  CHECK_FALSE(is_weakly_irreducible(identity_tensor(3, 2)));
  CHECK(is_weakly_irreducible(identity_tensor(3, 1)));

  auto gs = representation_graph(zero_diagonal_copositive_example());
  const std::vector<std::pair<int, int>> expect{{0, 1}, {0, 2}, {1, 2}};
  CHECK(gs.edges == expect);
  CHECK(is_weakly_irreducible(zero_diagonal_copositive_example()));
}

TEST_CASE("partition examples") {
  CHECK(weakly_irreducible_partition(all_ones_tensor(3, 4)).blocks ==
        std::vector<std::vector<int>>{{0, 1, 2, 3}});
  CHECK(weakly_irreducible_partition(identity_tensor(3, 3)).blocks ==
        std::vector<std::vector<int>>{{0}, {1}, {2}});
  CHECK(weakly_irreducible_partition(block_ones(3, {{0, 1}, {2, 3}}, 4))
            .blocks == std::vector<std::vector<int>>{{0, 1}, {2, 3}});
  // Interleaved blocks are ordered by smallest member.
  CHECK(weakly_irreducible_partition(block_ones(3, {{1, 3}, {0, 2}}, 4))
            .blocks == std::vector<std::vector<int>>{{0, 2}, {1, 3}});
  // Zero rows become singleton blocks.
  CHECK(weakly_irreducible_partition(SymTensor(3, 2)).blocks ==
        std::vector<std::vector<int>>{{0}, {1}});
}

TEST_CASE("partition soundness and irreducibility properties") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 3);
    const int n = 1 + static_cast<int>(rng() % 7);
    const double density = 0.05 + 0.3 * static_cast<double>(rng() % 100) / 100;
    const auto a = random_sparse_nonneg(rng, k, n, density);
    const auto part = weakly_irreducible_partition(a);

    // Blocks cover 1..n disjointly, sorted by smallest member.
    std::vector<int> owner(static_cast<std::size_t>(n), -1);
    for (std::size_t r = 0; r < part.blocks.size(); ++r) {
      CHECK_FALSE(part.blocks[r].empty());
      for (int i : part.blocks[r]) {
        CHECK(owner[i] == -1);
        owner[i] = static_cast<int>(r);
      }
      if (r > 0)
        CHECK(part.blocks[r - 1].front() < part.blocks[r].front());
    }
    CHECK(std::none_of(owner.begin(), owner.end(),
                       [](int o) { return o < 0; }));

    // No stored entry crosses blocks.
    for (const auto &e : a.entries())
      for (int i : e.index)
        CHECK(owner[i] == owner[e.index[0]]);

    // Each block is weakly irreducible on its own.
    for (const auto &blk : part.blocks)
      CHECK(is_weakly_irreducible(subtensor(a, blk).tensor));

    // irreducible implies weakly irreducible
    if (n <= 8) {
      const auto red = is_reducible(a);
      if (!red)
        CHECK(is_weakly_irreducible(a));
      else
        CHECK(is_reducing_set(a, *red));
    }
  }
}
