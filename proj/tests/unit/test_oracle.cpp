#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "reference.hpp"

namespace cyclat {
namespace {

using testing::load;

IntegerMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
  IntegerMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      m(r, c) = lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    }
  }
  return m;
}

TEST(EnumerateCycles, SmallGraphs) {
  EXPECT_EQ(enumerate_cycles(load("k4")).size(), 7u);
  EXPECT_EQ(enumerate_cycles(load("b3")).size(), 3u);
  EXPECT_TRUE(enumerate_cycles(load("p2")).empty());
  EXPECT_EQ(enumerate_cycles(load("loop")), (std::vector<std::vector<EdgeId>>{{0}}));
}

TEST(EnumerateCycles, MatchesSubsetSearch) {
  auto corpus = testing::random_corpus(40, 3, 13);
  for (const auto& f : testing::all_fixtures()) {
    if (f.graph.num_edges() <= 14) corpus.push_back(f.graph);
  }
  for (const Multigraph& g : corpus) {
    const auto cycles = enumerate_cycles(g);
    EXPECT_EQ(cycles, testing::brute_force_cycles(g)) << format_edge_list(g);
    for (const auto& c : cycles) EXPECT_TRUE(is_cycle(g, c));
  }
}

TEST(EnumerateCycles, LimitIsEnforced) {
  EXPECT_THROW(enumerate_cycles(load("k4"), 6), CapacityError);
  EXPECT_NO_THROW(enumerate_cycles(load("k4"), 7));
}

TEST(Determinant, KnownValues) {
  EXPECT_EQ(exact_determinant(IntegerMatrix::identity(5)), 1);
  EXPECT_EQ(exact_determinant(IntegerMatrix::from_rows({{1, 1, 0}, {1, 0, 1}, {0, 1, 1}})), -2);
  EXPECT_EQ(exact_determinant(IntegerMatrix::from_rows({{0, 1}, {1, 0}})), -1);
  EXPECT_EQ(exact_determinant(IntegerMatrix::from_rows({{1, 2}, {2, 4}})), 0);
  EXPECT_EQ(exact_determinant(IntegerMatrix(0, 0)), 1);
  EXPECT_THROW(exact_determinant(IntegerMatrix(2, 3)), ArgumentError);
}

TEST(Determinant, AgreesWithCofactorExpansion) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const IntegerMatrix m = random_matrix(rng, 4, 4, -5, 5);
    EXPECT_EQ(exact_determinant(m), testing::cofactor_determinant(testing::to_rows(m)));
  }
}

TEST(Determinant, AgreesWithRationalElimination) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 30; ++i) {
    const IntegerMatrix m = random_matrix(rng, 9, 9, -40, 40);
    EXPECT_EQ(exact_determinant(m), testing::rational_determinant(m));
  }
  // Zero-one matrices that need row swaps.
  for (int i = 0; i < 50; ++i) {
    const IntegerMatrix m = random_matrix(rng, 7, 7, 0, 1);
    EXPECT_EQ(exact_determinant(m), testing::rational_determinant(m));
  }
}

void expect_hermite_shape(const IntegerMatrix& h) {
  std::size_t last_pivot = 0;
  bool seen = false;
  bool zero_tail = false;
  for (std::size_t c = 0; c < h.cols(); ++c) {
    std::size_t r = 0;
    while (r < h.rows() && h(r, c) == 0) ++r;
    if (r == h.rows()) {
      zero_tail = true;
      continue;
    }
    EXPECT_FALSE(zero_tail) << "non-zero column after a zero column";
    if (seen) EXPECT_GT(r, last_pivot);
    EXPECT_GT(h(r, c), 0);
    for (std::size_t k = 0; k < c; ++k) {
      EXPECT_GE(h(r, k), 0);
      EXPECT_LT(h(r, k), h(r, c));
    }
    last_pivot = r;
    seen = true;
  }
}

TEST(HermiteNormalForm, ShapeAndIdempotence) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 60; ++i) {
    const IntegerMatrix m = random_matrix(rng, 1 + rng() % 6, 1 + rng() % 8, -6, 6);
    const IntegerMatrix h = hermite_normal_form(m);
    expect_hermite_shape(h);
    EXPECT_EQ(hermite_normal_form(h), h);
  }
}

TEST(HermiteNormalForm, PreservesSquareDeterminant) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 40; ++i) {
    const IntegerMatrix m = random_matrix(rng, 5, 5, -4, 4);
    const Integer d = exact_determinant(m);
    if (d == 0) continue;  // the normal form drops dependent columns
    const Integer dh = exact_determinant(hermite_normal_form(m));
    EXPECT_EQ(abs(d), abs(dh));
  }
}

TEST(HermiteNormalForm, TwoAndThreeGenerateTheIntegers) {
  EXPECT_TRUE(hnf_lattices_equal(IntegerMatrix::from_rows({{2, 3}}), IntegerMatrix::from_rows({{1}})));
  EXPECT_FALSE(hnf_lattices_equal(IntegerMatrix::from_rows({{2, 4}}), IntegerMatrix::from_rows({{1}})));
  EXPECT_THROW(hnf_lattices_equal(IntegerMatrix(2, 1), IntegerMatrix(3, 1)), ArgumentError);
}

TEST(HermiteNormalForm, LatticeEqualityAgreesWithRationalSolving) {
  std::mt19937_64 rng(5);
  int equal = 0;
  for (int i = 0; i < 80; ++i) {
    IntegerMatrix a = random_matrix(rng, 4, 4, -3, 3);
    if (exact_determinant(a) == 0) continue;
    // b = a * u for a random unimodular u, or a random perturbation of a.
    IntegerMatrix b = a;
    if (rng() % 2 == 0) {
      for (int step = 0; step < 6; ++step) {
        const std::size_t x = rng() % 4, y = (x + 1 + rng() % 3) % 4;
        const int k = static_cast<int>(rng() % 5) - 2;
        for (std::size_t r = 0; r < 4; ++r) b(r, x) += k * b(r, y);
      }
    } else {
      b(rng() % 4, rng() % 4) += 1;
      if (exact_determinant(b) == 0) continue;
    }
    const bool same = hnf_lattices_equal(a, b);
    EXPECT_EQ(same, testing::same_lattice(a, b));
    equal += same ? 1 : 0;
  }
  EXPECT_GT(equal, 10);
}

TEST(HermiteNormalForm, ContainsAgreesWithRationalSolving) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 40; ++i) {
    const IntegerMatrix a = random_matrix(rng, 4, 3, -3, 3);
    if (rank_rational(a) != 3) continue;
    const IntegerMatrix h = hermite_normal_form(a);
    for (int j = 0; j < 20; ++j) {
      std::vector<Integer> v(4);
      for (auto& x : v) x = static_cast<int>(rng() % 7) - 3;
      if (j % 2 == 0) {
        // Force membership by taking a combination of the columns.
        for (auto& x : v) x = 0;
        for (std::size_t c = 0; c < 3; ++c) {
          const int k = static_cast<int>(rng() % 5) - 2;
          for (std::size_t r = 0; r < 4; ++r) v[r] += k * a(r, c);
        }
      }
      EXPECT_EQ(hnf_contains(h, v), testing::in_lattice_of(a, v));
    }
  }
}

TEST(RankModP, CompleteGraphCycles) {
  const Multigraph g = load("k4");
  const IntegerMatrix m = indicator_matrix(g, enumerate_cycles(g));
  EXPECT_EQ(rank_mod_p(m, 2), 3u);
  EXPECT_EQ(rank_mod_p(m, 3), 6u);
  EXPECT_EQ(rank_rational(m), 6u);
  EXPECT_EQ(rank_mod_p(IntegerMatrix(4, 4), 5), 0u);
  EXPECT_THROW(rank_mod_p(m, 4), ArgumentError);
}

TEST(RankModP, AgreesWithSpanCounting) {
  std::mt19937_64 rng(7);
  for (int p : {2, 3, 5}) {
    for (int i = 0; i < 25; ++i) {
      const IntegerMatrix m = random_matrix(rng, 5, 1 + rng() % 5, -2, 2);
      std::vector<std::vector<int>> cols;
      for (std::size_t c = 0; c < m.cols(); ++c) {
        std::vector<int> v;
        for (const auto& x : m.column(c)) v.push_back(static_cast<int>(x));
        cols.push_back(v);
      }
      EXPECT_EQ(rank_mod_p(m, p), testing::brute_force_rank_mod_p(cols, p));
    }
  }
}

TEST(Primes, SmallValues) {
  EXPECT_FALSE(is_prime(0));
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(97));
  EXPECT_FALSE(is_prime(91));
  EXPECT_TRUE(is_prime(4294967291ULL));
}

TEST(GroupSpan, ParallelEdges) {
  const Multigraph g = load("b3");
  const auto cycles = enumerate_cycles(g);
  std::vector<EdgeVector> vs;
  for (const auto& c : cycles) vs.push_back(EdgeVector::indicator(g, c));
  EXPECT_EQ(group_span_size(3, vs, {{2}}), 4u);
  EXPECT_EQ(group_span_size(3, vs, {{4}}), 32u);
  EXPECT_EQ(group_span_size(3, {}, {{4}}), 1u);
  EXPECT_THROW(group_span_size(3, vs, {{4}}, 10), CapacityError);
}

TEST(GroupSpan, AgreesWithSumsetEnumeration) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 30; ++i) {
    const std::size_t dim = 1 + rng() % 3;
    std::vector<std::vector<int>> raw;
    std::vector<EdgeVector> vs;
    for (std::size_t k = 0, n = rng() % 4; k < n; ++k) {
      std::vector<int> v(dim);
      EdgeVector e(dim);
      for (std::size_t j = 0; j < dim; ++j) {
        v[j] = static_cast<int>(rng() % 5) - 2;
        e[j] = v[j];
      }
      raw.push_back(v);
      vs.push_back(e);
    }
    const std::vector<std::vector<std::uint64_t>> groups{{2}, {4}, {6}, {2, 3}, {2, 4}};
    for (const auto& orders : groups) {
      std::vector<int> q(orders.begin(), orders.end());
      EXPECT_EQ(group_span_size(dim, vs, {orders}), testing::brute_force_span_size(raw, q));
    }
  }
}

}  // namespace
}  // namespace cyclat
