// Out-balls, growth functions and the domination inequality
// g_S(n) <= k1 g_T(k2 n) for a subsemigroup with S^1 = R T^1.

#ifndef GREENIDX_GROWTH_HPP_
#define GREENIDX_GROWTH_HPP_

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "error.hpp"
#include "semigroup.hpp"
#include "words.hpp"

namespace greenidx {

  inline constexpr std::size_t default_budget = 1'000'000;

  //! A semigroup given only by its multiplication.  Elements must be
  //! hashable and equality comparable; the canonical encoding is the value
  //! itself.  An empty optional stands for the adjoined identity.
  template <typename Element, typename Hash = std::hash<Element>>
  struct BlackBoxSemigroup {
    using element_type = Element;
    using hash_type    = Hash;
    std::function<Element(Element const&, Element const&)> multiply;
    std::size_t budget = default_budget;
  };

  //! (N, +) with 0 playing no special role.
  inline BlackBoxSemigroup<unsigned long long> natural_numbers_under_addition() {
    return {[](unsigned long long x, unsigned long long y) { return x + y; },
            default_budget};
  }

  //! {s x_1 ... x_r : x_k in X^1, r <= n} by breadth first search.
  //! ball(s, 0) = {s}.  std::nullopt stands for the adjoined identity.
  template <typename Element, typename Hash>
  std::vector<std::optional<Element>>
  out_ball(BlackBoxSemigroup<Element, Hash> const& sem,
           std::span<Element const>                X,
           std::optional<Element> const&           s,
           std::size_t                             n) {
    struct OptHash {
      std::size_t operator()(std::optional<Element> const& x) const {
        return x ? Hash{}(*x) * 2 + 1 : 0;
      }
    };
    std::unordered_set<std::optional<Element>, OptHash> seen{s};
    std::vector<std::optional<Element>>                 ball{s};
    std::vector<std::optional<Element>>                 frontier{s};
    for (std::size_t r = 0; r < n && !frontier.empty(); ++r) {
      std::vector<std::optional<Element>> next;
      for (auto const& y : frontier) {
        for (auto const& x : X) {
          std::optional<Element> z = y ? sem.multiply(*y, x) : x;
          if (seen.insert(z).second) {
            if (seen.size() > sem.budget) {
              throw error(error_kind::budget_exceeded,
                          "more than " + std::to_string(sem.budget)
                              + " elements explored");
            }
            ball.push_back(z);
            next.push_back(std::move(z));
          }
        }
      }
      frontier = std::move(next);
    }
    return ball;
  }

  //! Ball in a finite semigroup; s may be the adjoined identity S.one().
  inline std::vector<element_type> out_ball(FiniteSemigroup const&        S,
                                            std::span<element_type const> X,
                                            element_type                  s,
                                            std::size_t                   n) {
    check_elements(S, X);
    if (s > S.size()) {
      throw error(error_kind::out_of_range, std::to_string(s) + " is not in S^1");
    }
    std::vector<bool>         seen(S.size() + 1, false);
    std::vector<element_type> ball{s}, frontier{s};
    seen[s] = true;
    for (std::size_t r = 0; r < n && !frontier.empty(); ++r) {
      std::vector<element_type> next;
      for (auto y : frontier) {
        for (auto x : X) {
          auto z = S.product1(y, x);
          if (!seen[z]) {
            seen[z] = true;
            ball.push_back(z);
            next.push_back(z);
          }
        }
      }
      frontier = std::move(next);
    }
    std::sort(ball.begin(), ball.end());
    return ball;
  }

  //! g(m) = |ball(1, m)| for m = 0..m_max.
  inline std::vector<std::size_t> growth_function(FiniteSemigroup const&        S,
                                                  std::span<element_type const> A,
                                                  std::size_t m_max) {
    check_elements(S, A);
    std::vector<std::size_t> g;
    std::vector<bool>         seen(S.size() + 1, false);
    std::vector<element_type> frontier{S.one()};
    seen[S.one()]     = true;
    std::size_t count = 1;
    g.push_back(count);
    for (std::size_t m = 1; m <= m_max; ++m) {
      std::vector<element_type> next;
      for (auto y : frontier) {
        for (auto x : A) {
          auto z = S.product1(y, x);
          if (!seen[z]) {
            seen[z] = true;
            next.push_back(z);
          }
        }
      }
      count += next.size();
      frontier = std::move(next);
      g.push_back(count);
    }
    return g;
  }

  template <typename Element, typename Hash>
  std::vector<std::size_t> growth_function(BlackBoxSemigroup<Element, Hash> const& sem,
                                           std::span<Element const>                A,
                                           std::size_t m_max) {
    struct OptHash {
      std::size_t operator()(std::optional<Element> const& x) const {
        return x ? Hash{}(*x) * 2 + 1 : 0;
      }
    };
    std::unordered_set<std::optional<Element>, OptHash> seen{std::nullopt};
    std::vector<std::optional<Element>>                 frontier{std::nullopt};
    std::vector<std::size_t>                            g{1};
    for (std::size_t m = 1; m <= m_max; ++m) {
      std::vector<std::optional<Element>> next;
      for (auto const& y : frontier) {
        for (auto const& x : A) {
          std::optional<Element> z = y ? sem.multiply(*y, x) : x;
          if (seen.insert(z).second) {
            if (seen.size() > sem.budget) {
              throw error(error_kind::budget_exceeded,
                          "more than " + std::to_string(sem.budget)
                              + " elements explored");
            }
            next.push_back(std::move(z));
          }
        }
      }
      frontier = std::move(next);
      g.push_back(seen.size());
    }
    return g;
  }

  struct DominationRow {
    std::size_t n, g_s, g_t, bound;
    bool        holds;
  };

  struct DominationReport {
    std::size_t                k1 = 0, k2 = 0;
    std::vector<element_type>  a;  // A = B u R \ {1}, sorted
    std::vector<DominationRow> rows;

    bool holds() const {
      return std::all_of(rows.begin(), rows.end(),
                         [](auto const& r) { return r.holds; });
    }
  };

  //! Checks S^1 = R T^1 with 1 in R, builds the constants k1 = |R| and
  //! k2 = max l_B(mu(a1, a2)) over a1 in A, a2 in A u {1}, where
  //! a1 a2 = r mu with r in R and mu in T^1 of least B-length, and tests
  //! g_S(n) <= k1 g_T(k2 n) for n = 0..m_max.
  inline DominationReport domination_check(FiniteSemigroup const&        S,
                                           SubSemigroup const&           T,
                                           std::span<element_type const> R,
                                           std::span<element_type const> B,
                                           std::size_t                   m_max) {
    check_elements(S, B);
    for (auto r : R) {
      if (r > S.size()) {
        throw error(error_kind::out_of_range, std::to_string(r) + " is not in S^1");
      }
    }
    if (std::find(R.begin(), R.end(), S.one()) == R.end()) {
      throw error(error_kind::hypothesis_fails, "1 is not in R");
    }
    if (!(closure(S, B) == T)) {
      throw error(error_kind::not_generating, "B does not generate T");
    }
    auto const        t1 = T.members1();
    std::vector<bool> covered(S.size() + 1, false);
    for (auto r : R) {
      for (auto t : t1) {
        covered[S.product1(r, t)] = true;
      }
    }
    for (element_type s = 0; s <= S.size(); ++s) {
      if (!covered[s]) {
        throw error(error_kind::hypothesis_fails,
                    "no decomposition s = r t for s = "
                        + (s == S.one() ? std::string("1") : S.name(s)));
      }
    }
    std::vector<element_type> rset(R.begin(), R.end());
    std::sort(rset.begin(), rset.end());
    rset.erase(std::unique(rset.begin(), rset.end()), rset.end());

    DominationReport rep;
    rep.k1 = rset.size();
    rep.a.assign(B.begin(), B.end());
    for (auto r : rset) {
      if (r != S.one()) {
        rep.a.push_back(r);
      }
    }
    std::sort(rep.a.begin(), rep.a.end());
    rep.a.erase(std::unique(rep.a.begin(), rep.a.end()), rep.a.end());

    ShortlexFactorizer fact(S, B);
    std::size_t        k2 = 1;
    auto               a1s = rep.a;
    auto               a2s = rep.a;
    a2s.push_back(S.one());
    for (auto a1 : a1s) {
      for (auto a2 : a2s) {
        auto        x    = S.product1(a1, a2);
        std::size_t best = std::numeric_limits<std::size_t>::max();
        for (auto r : rset) {
          for (auto t : t1) {
            if (S.product1(r, t) == x) {
              best = std::min(best, fact.length(t));
            }
          }
        }
        if (best == std::numeric_limits<std::size_t>::max()) {
          throw error(error_kind::hypothesis_fails, "no decomposition of a product");
        }
        k2 = std::max(k2, best);
      }
    }
    rep.k2  = k2;
    auto gs = growth_function(S, rep.a, m_max);
    auto gt = growth_function(S, B, k2 * m_max);
    for (std::size_t n = 0; n <= m_max; ++n) {
      DominationRow row{n, gs[n], gt[k2 * n], rep.k1 * gt[k2 * n], false};
      row.holds = row.g_s <= row.bound;
      rep.rows.push_back(row);
    }
    return rep;
  }

}  // namespace greenidx

#endif  // GREENIDX_GROWTH_HPP_
