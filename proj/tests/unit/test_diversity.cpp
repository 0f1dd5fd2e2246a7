#include "minedit/diversity.hpp"
#include "minedit/errors.hpp"

#include "corpus.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace minedit;
using Indices = std::vector<std::size_t>;

namespace {

NormalizedProgram lines_of(std::vector<std::string> lines) {
  NormalizedProgram p;
  p.lines = std::move(lines);
  return p;
}

Eigen::MatrixXd random_similarity(std::mt19937_64& rng, Eigen::Index m, int levels = 5) {
  // Coarse levels so ties actually happen and the tie-break is exercised.
  std::uniform_int_distribution<int> level(0, levels);
  Eigen::MatrixXd sim(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j)
      sim(i, j) = i == j ? 1.0 : 1.0 - static_cast<double>(level(rng)) / levels;
  return sim;
}

} // namespace

TEST(BuildSimilarity, Examples) {
  const std::vector<NormalizedProgram> same{lines_of({"a", "b"}), lines_of({"a", "b"})};
  EXPECT_EQ(build_similarity(same)(0, 1), 1.0);

  const std::vector<NormalizedProgram> disjoint{lines_of({"a", "b", "c"}),
                                                lines_of({"x", "y", "z"})};
  EXPECT_EQ(build_similarity(disjoint)(0, 1), 0.0);

  const std::vector<NormalizedProgram> grown{lines_of({"q"}), lines_of({"a", "b"}),
                                             lines_of({"a", "b", "c", "d", "e"})};
  const auto sim = build_similarity(grown);
  EXPECT_DOUBLE_EQ(sim(1, 2), -0.5);
  EXPECT_DOUBLE_EQ(sim(2, 1), 1.0 - 3.0 / 5.0);
  for (Eigen::Index i = 0; i < 3; ++i) EXPECT_EQ(sim(i, i), 1.0);
}

TEST(BuildSimilarity, EmptyItem) {
  const std::vector<NormalizedProgram> items{lines_of({"a"}), lines_of({})};
  EXPECT_THROW(build_similarity(items), Error);
}

TEST(SelectDiverse, ThreeItems) {
  Eigen::MatrixXd sim(3, 3);
  sim << 1.0, 0.9, 0.2, //
      0.9, 1.0, 0.5,    //
      0.2, 0.5, 1.0;
  for (auto strategy : {SelectionStrategy::exact, SelectionStrategy::greedy}) {
    const auto sel = select_diverse(sim, 2, strategy);
    EXPECT_EQ(sel.indices, (Indices{0, 2}));
    EXPECT_DOUBLE_EQ(sel.objective, 0.2);
  }
}

TEST(SelectDiverse, KEqualsM) {
  std::mt19937_64 rng(1);
  const auto sim = random_similarity(rng, 5);
  EXPECT_EQ(select_diverse(sim, 5, SelectionStrategy::exact).indices, (Indices{0, 1, 2, 3, 4}));
  EXPECT_EQ(select_diverse(sim, 5, SelectionStrategy::greedy).indices, (Indices{0, 1, 2, 3, 4}));
}

TEST(SelectDiverse, UsesTheLargerDirection) {
  Eigen::MatrixXd sim(3, 3);
  sim << 1.0, 0.1, 0.4, //
      0.8, 1.0, 0.3,    //
      0.4, 0.3, 1.0;
  // (0, 1) looks dissimilar one way only; symmetrized it is 0.8.
  EXPECT_EQ(select_diverse(sim, 2, SelectionStrategy::exact).indices, (Indices{1, 2}));
}

TEST(SelectDiverse, ErrorsOnBadK) {
  const Eigen::MatrixXd sim = Eigen::MatrixXd::Identity(4, 4);
  for (std::size_t k : {0u, 1u, 5u}) {
    try {
      select_diverse(sim, k, SelectionStrategy::exact);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::DomainError);
    }
  }
}

TEST(SelectDiverse, ExactTooLarge) {
  const Eigen::MatrixXd sim = Eigen::MatrixXd::Identity(40, 40);
  try {
    select_diverse(sim, 10, SelectionStrategy::exact); // C(40, 10) ~ 8.5e8
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ExactTooLarge);
  }
  EXPECT_NO_THROW(select_diverse(sim, 10, SelectionStrategy::greedy));
  EXPECT_THROW(select_diverse(sim, 3, SelectionStrategy::exact, 100), Error);
}

TEST(SelectDiverse, ExactMatchesEnumerationSixItems) {
  std::mt19937_64 rng(2024);
  const auto sim = random_similarity(rng, 6, 1000);
  const auto [subset, value] = oracle::brute_min_max(sim, 3);
  const auto sel = select_diverse(sim, 3, SelectionStrategy::exact);
  EXPECT_EQ(sel.objective, value);
  EXPECT_EQ(sel.indices, subset);
}

TEST(SelectDiverse, ExactVsBruteForceAndGreedyBound) {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> msize(2, 10);
  for (int trial = 0; trial < 400; ++trial) {
    const auto m = msize(rng);
    std::uniform_int_distribution<int> ksize(2, std::min(5, m));
    const auto k = static_cast<std::size_t>(ksize(rng));
    const auto sim = random_similarity(rng, m);
    const auto [subset, value] = oracle::brute_min_max(sim, k);
    const auto exact = select_diverse(sim, k, SelectionStrategy::exact);
    ASSERT_EQ(exact.objective, value);
    ASSERT_EQ(exact.indices, subset);
    ASSERT_DOUBLE_EQ(max_pairwise_similarity(sim, exact.indices), exact.objective);

    const auto greedy = select_diverse(sim, k, SelectionStrategy::greedy);
    ASSERT_EQ(greedy.indices.size(), k);
    ASSERT_GE(greedy.objective, exact.objective);
    ASSERT_DOUBLE_EQ(max_pairwise_similarity(sim, greedy.indices), greedy.objective);
    // deterministic
    ASSERT_EQ(select_diverse(sim, k, SelectionStrategy::greedy).indices, greedy.indices);
  }
}

TEST(SelectDiverse, OnRealPrograms) {
  const auto base = corpus::unique_lines(Language::python, 10, "d");
  std::vector<NormalizedProgram> variants;
  for (int v = 0; v < 8; ++v) {
    auto lines = base;
    for (int e = 0; e <= v % 4; ++e)
      lines[static_cast<std::size_t>((v + 3 * e) % 10)] = "bug_" + std::to_string(v * 10 + e) + " = 0";
    variants.push_back(normalize({corpus::join(lines), Language::python}));
  }
  const auto sim = build_similarity(variants);
  const auto sel = select_diverse(sim, 4, SelectionStrategy::exact);
  EXPECT_EQ(sel.indices.size(), 4u);
  EXPECT_EQ(sel.objective, oracle::brute_min_max(sim, 4).second);
}
