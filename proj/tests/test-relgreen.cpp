#include <random>
#include <set>

#include "catch_amalgamated.hpp"

#include "greenidx/relgreen.hpp"

#include "instances.hpp"
#include "oracles.hpp"

using namespace greenidx;
using namespace greenidx::testing;

namespace {
  std::set<std::size_t> as_set(SubSemigroup const& T) {
    return {T.members().begin(), T.members().end()};
  }

  void check_against_oracle(FiniteSemigroup const& S, SubSemigroup const& T) {
    auto G  = relative_green(S, T);
    auto t  = S.rows();
    auto Ts = as_set(T);
    for (element_type u = 0; u < S.size(); ++u) {
      for (element_type v = 0; v < S.size(); ++v) {
        REQUIRE((G.r_class(u) == G.r_class(v)) == naive_r_related(t, Ts, u, v));
        REQUIRE((G.l_class(u) == G.l_class(v)) == naive_l_related(t, Ts, u, v));
      }
    }
    auto classes = complement_h_classes(t, Ts);
    REQUIRE(G.num_complement_classes() == classes.size());
    REQUIRE(G.green_index() == classes.size() + 1);
    for (class_index i = 1; i < G.num_indices(); ++i) {
      REQUIRE(G.complement_class(i) == classes[i - 1]);
      REQUIRE(G.representative(i) == classes[i - 1].front());
    }
  }

  void check_connectors(FiniteSemigroup const& S, SubSemigroup const& T) {
    auto G = relative_green(S, T);
    auto C = connectors(S, G);
    for (element_type s = 0; s <= S.size(); ++s) {
      for (class_index i = 0; i < G.num_indices(); ++i) {
        auto h = G.representative(i);
        REQUIRE(G.in_t(C.sigma(s, i)));
        REQUIRE(G.in_t(C.tau(i, s)));
        REQUIRE(S.product1(s, h)
                == S.product1(G.representative(C.rho(s, i)), C.sigma(s, i)));
        REQUIRE(S.product1(h, s)
                == S.product1(C.tau(i, s), G.representative(C.lambda(i, s))));
        REQUIRE((C.rho(s, i) == one_class) == G.in_t(S.product1(s, h)));
        REQUIRE((C.lambda(i, s) == one_class) == G.in_t(S.product1(h, s)));
      }
    }
  }
}  // namespace

TEST_CASE("Z6 relative to {0,3}", "[relgreen][quick]") {
  auto inst = z6_instance();
  auto G    = relative_green(inst.S, inst.T);
  REQUIRE(G.green_index() == 3);
  REQUIRE(G.complement_class(1) == std::vector<element_type>{1, 4});
  REQUIRE(G.complement_class(2) == std::vector<element_type>{2, 5});
  REQUIRE(rees_index(inst.S, inst.T) == 4);
  auto C = connectors(inst.S, G);
  // 1 + h_1 = 2 lies in {2,5}
  REQUIRE(C.rho(1, 1) == 2);
  REQUIRE(inst.S.product(G.representative(2), C.sigma(1, 1)) == 2);
}

TEST_CASE("T = S has Green index 1", "[relgreen][quick]") {
  auto S = symmetric_group(3);
  auto G = relative_green(S, whole(S));
  REQUIRE(G.num_complement_classes() == 0);
  REQUIRE(G.green_index() == 1);
  REQUIRE(rees_index(S, whole(S)) == 0);
}

TEST_CASE("Strong semilattice of Z2 over the trivial group has index 2",
          "[relgreen][quick]") {
  auto inst = semilattice_z2_trivial();
  auto G    = relative_green(inst.S, inst.T);
  REQUIRE(G.green_index() == 2);
  REQUIRE(rees_index(inst.S, inst.T) == 1);
}

TEST_CASE("connectors: the adjoined identity acts trivially", "[relgreen][quick]") {
  for (auto const& inst : fixed_instances()) {
    auto G = relative_green(inst.S, inst.T);
    auto C = connectors(inst.S, G);
    for (class_index i = 0; i < G.num_indices(); ++i) {
      REQUIRE(C.rho(inst.S.one(), i) == i);
      REQUIRE(C.sigma(inst.S.one(), i) == inst.S.one());
      REQUIRE(C.lambda(i, inst.S.one()) == i);
      REQUIRE(C.tau(i, inst.S.one()) == inst.S.one());
    }
  }
}

TEST_CASE("fixed instances agree with principal-set oracle", "[relgreen][quick]") {
  for (auto const& inst : fixed_instances()) {
    INFO(inst.name);
    check_against_oracle(inst.S, inst.T);
    check_connectors(inst.S, inst.T);
  }
}

TEST_CASE("random pairs agree with principal-set oracle", "[relgreen][random]") {
  std::mt19937 rng(2024);
  int          done = 0;
  while (done < 60) {
    auto p = random_pair(rng, 40);
    if (!p) {
      continue;
    }
    auto T = closure(p->S, p->T_gens);
    check_against_oracle(p->S, T);
    check_connectors(p->S, T);
    ++done;
  }
}

TEST_CASE("R^T is a left congruence, L^T a right congruence", "[relgreen][random]") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    auto p = random_pair(rng, 30);
    if (!p) {
      continue;
    }
    auto const& S = p->S;
    auto        G = relative_green(S, closure(S, p->T_gens));
    for (element_type u = 0; u < S.size(); ++u) {
      for (element_type v = 0; v < S.size(); ++v) {
        for (element_type a = 0; a < S.size(); ++a) {
          if (G.r_class(u) == G.r_class(v)) {
            REQUIRE(G.r_class(S.product(a, u)) == G.r_class(S.product(a, v)));
          }
          if (G.l_class(u) == G.l_class(v)) {
            REQUIRE(G.l_class(S.product(u, a)) == G.l_class(S.product(v, a)));
          }
        }
      }
    }
  }
}

TEST_CASE("normal subgroup: index is the group index", "[relgreen][quick]") {
  auto S  = symmetric_group(3);
  // A_3 = closure of the 3-cycle
  auto A3 = closure(S, std::vector<element_type>{find_named(S, "[1,2,0]")});
  REQUIRE(A3.size() == 3);
  auto G = relative_green(S, A3);
  REQUIRE(G.green_index() == 2);
  // and the trivial subgroup: every element is its own class
  auto E  = SubSemigroup::from_members(S, {find_named(S, "[0,1,2]")});
  REQUIRE(relative_green(S, E).green_index() == 6);
}

TEST_CASE("Green data rejects a subsemigroup of another semigroup", "[relgreen][quick]") {
  auto Z6 = cyclic_group(6);
  auto Z3 = cyclic_group(3);
  REQUIRE_THROWS_AS(relative_green(Z6, whole(Z3)), error);
}
