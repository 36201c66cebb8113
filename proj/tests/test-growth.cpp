#include <random>
#include <set>

#include "catch_amalgamated.hpp"

#include "greenidx/growth.hpp"
#include "greenidx/relgreen.hpp"

#include "instances.hpp"
#include "oracles.hpp"

using namespace greenidx;
using namespace greenidx::testing;

namespace {
  // {1} together with a representative of every complement class.
  std::vector<element_type> r_set(FiniteSemigroup const& S, GreenData const& G) {
    std::vector<element_type> R{S.one()};
    for (class_index i = 1; i < G.num_indices(); ++i) {
      R.push_back(G.representative(i));
    }
    return R;
  }

  // Greedy generating set of T.
  std::vector<element_type> gens_of(FiniteSemigroup const& S, SubSemigroup const& T) {
    std::vector<element_type> B;
    for (auto t : T.members()) {
      if (B.empty() || !closure(S, B).contains(t)) {
        B.push_back(t);
      }
    }
    return B;
  }
}  // namespace

TEST_CASE("growth of Z6", "[growth][quick]") {
  auto S = cyclic_group(6);
  auto g = growth_function(S, std::vector<element_type>{1}, 10);
  REQUIRE(g == std::vector<std::size_t>{1, 2, 3, 4, 5, 6, 7, 7, 7, 7, 7});
}

TEST_CASE("growth of the trivial semigroup", "[growth][quick]") {
  auto S = trivial_semigroup();
  auto g = growth_function(S, std::vector<element_type>{0}, 5);
  REQUIRE(g == std::vector<std::size_t>{1, 2, 2, 2, 2, 2});
}

TEST_CASE("black-box naturals", "[growth][quick]") {
  auto                                 N = natural_numbers_under_addition();
  std::vector<unsigned long long> const X{1};
  auto                                 g = growth_function(N, std::span(X), 20);
  for (std::size_t m = 0; m <= 20; ++m) {
    REQUIRE(g[m] == m + 1);
  }
  for (std::size_t m = 0; m <= 20; ++m) {
    auto ball = out_ball(N, std::span(X), std::optional<unsigned long long>(0), m);
    REQUIRE(ball.size() == m + 1);
  }
  auto b0 = out_ball(N, std::span(X), std::optional<unsigned long long>(7), 0);
  REQUIRE(b0.size() == 1);
  REQUIRE(b0[0] == 7ULL);
}

TEST_CASE("black-box budget", "[growth][quick]") {
  auto N   = natural_numbers_under_addition();
  N.budget = 50;
  std::vector<unsigned long long> const X{1, 1000};
  try {
    growth_function(N, std::span(X), 100);
    FAIL("expected BudgetExceeded");
  } catch (error const& e) {
    REQUIRE(e.kind() == error_kind::budget_exceeded);
  }
  REQUIRE_THROWS_AS(out_ball(N, std::span(X), std::optional<unsigned long long>{}, 100),
                    error);
}

TEST_CASE("finite out-balls", "[growth][random]") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    auto rp = random_pair(rng, 30);
    if (!rp) {
      continue;
    }
    auto const& S = rp->S;
    auto const& X = rp->T_gens;
    auto        C = closure(S, X).members1();
    for (element_type s = 0; s <= S.size(); ++s) {
      REQUIRE(out_ball(S, X, s, 0) == std::vector<element_type>{s});
      // saturation: s closure(X)^1
      std::set<element_type> want;
      for (auto c : C) {
        want.insert(S.product1(s, c));
      }
      auto ball = out_ball(S, X, s, S.size());
      REQUIRE(std::set<element_type>(ball.begin(), ball.end()) == want);
      // monotone in the radius
      for (std::size_t n = 0; n < 4; ++n) {
        auto small = out_ball(S, X, s, n), big = out_ball(S, X, s, n + 1);
        REQUIRE(std::includes(big.begin(), big.end(), small.begin(), small.end()));
      }
    }
  }
}

TEST_CASE("growth of T is dominated by growth of S", "[growth][random]") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    auto rp = random_pair(rng, 30);
    if (!rp) {
      continue;
    }
    auto const& S = rp->S;
    auto        B = rp->T_gens;
    std::vector<element_type> A = B;
    for (element_type x = 0; x < S.size(); ++x) {
      if (!closure(S, A).contains(x)) {
        A.push_back(x);
      }
    }
    auto gs = growth_function(S, A, 8), gt = growth_function(S, B, 8);
    for (std::size_t m = 0; m <= 8; ++m) {
      REQUIRE(gt[m] <= gs[m]);
      if (m > 0) {
        REQUIRE(gs[m - 1] <= gs[m]);
      }
    }
    REQUIRE(gs.back() <= S.size() + 1);
  }
}

TEST_CASE("domination on the fixed instances", "[growth][quick]") {
  for (auto const& inst : fixed_instances()) {
    INFO(inst.name);
    auto G   = relative_green(inst.S, inst.T);
    auto R   = r_set(inst.S, G);
    auto B   = gens_of(inst.S, inst.T);
    auto rep = domination_check(inst.S, inst.T, R, B, 12);
    REQUIRE(rep.k1 == R.size());
    REQUIRE(rep.k2 >= 1);
    REQUIRE(rep.rows.size() == 13);
    REQUIRE(rep.holds());
    // independent recomputation of each row
    auto gs = growth_function(inst.S, rep.a, 12);
    auto gt = growth_function(inst.S, B, rep.k2 * 12);
    for (auto const& row : rep.rows) {
      REQUIRE(row.g_s == gs[row.n]);
      REQUIRE(row.g_t == gt[rep.k2 * row.n]);
      REQUIRE(row.bound == rep.k1 * row.g_t);
    }
  }
}

TEST_CASE("domination with T = S", "[growth][quick]") {
  auto S   = cyclic_group(6);
  auto rep = domination_check(S, whole(S), std::vector<element_type>{S.one()},
                              std::vector<element_type>{1}, 12);
  REQUIRE(rep.k1 == 1);
  // 1 + 1 = 2 needs two letters of B
  REQUIRE(rep.k2 == 2);
  REQUIRE(rep.holds());
  auto g = growth_function(S, std::vector<element_type>{1}, 24);
  for (auto const& row : rep.rows) {
    REQUIRE(row.g_s == g[row.n]);
    REQUIRE(row.g_t == g[2 * row.n]);
  }
}

TEST_CASE("domination hypotheses", "[growth][quick]") {
  auto inst = z6_instance();
  std::vector<element_type> B{3};
  try {
    domination_check(inst.S, inst.T, std::vector<element_type>{inst.S.one()}, B, 4);
    FAIL("expected HypothesisFails");
  } catch (error const& e) {
    REQUIRE(e.kind() == error_kind::hypothesis_fails);
  }
  try {
    domination_check(inst.S, inst.T, std::vector<element_type>{1, 2}, B, 4);
    FAIL("expected HypothesisFails");
  } catch (error const& e) {
    REQUIRE(e.kind() == error_kind::hypothesis_fails);
  }
  REQUIRE_THROWS_AS(domination_check(inst.S, inst.T,
                                     std::vector<element_type>{inst.S.one(), 1, 2},
                                     std::vector<element_type>{1}, 4),
                    error);
}
