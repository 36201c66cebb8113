// Relative Schutzenberger groups realized as permutation groups of an
// H^T-class, the data (Lambda, p, p') of the R^T-class around it, and
// generators of the group obtained from generators of T.

#ifndef GREENIDX_SCHUTZ_HPP_
#define GREENIDX_SCHUTZ_HPP_

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "error.hpp"
#include "relgreen.hpp"
#include "semigroup.hpp"

namespace greenidx {

  //! A finite group given by its Cayley table.
  struct GroupTable {
    std::vector<std::vector<std::size_t>> table;
    std::size_t                           identity = 0;

    std::size_t size() const noexcept {
      return table.size();
    }
    std::size_t product(std::size_t x, std::size_t y) const {
      return table[x][y];
    }
    std::size_t order_of(std::size_t x) const {
      std::size_t k = 1;
      for (auto y = x; y != identity; y = product(y, x)) {
        ++k;
      }
      return k;
    }
  };

  //! Elements of the subgroup generated by gens, sorted.
  inline std::vector<std::size_t>
  subgroup_closure(GroupTable const& G, std::span<std::size_t const> gens) {
    std::vector<bool>        seen(G.size(), false);
    std::vector<std::size_t> out{G.identity};
    seen[G.identity] = true;
    for (std::size_t k = 0; k < out.size(); ++k) {
      for (auto g : gens) {
        auto y = G.product(out[k], g);
        if (!seen[y]) {
          seen[y] = true;
          out.push_back(y);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  inline constexpr std::size_t isomorphism_order_cap = 24;

  //! Brute-force isomorphism test over images of a greedy generating set.
  //! Returns nullopt ("unchecked") above isomorphism_order_cap.
  inline std::optional<bool> isomorphic(GroupTable const& G,
                                        GroupTable const& H) {
    if (G.size() != H.size()) {
      return false;
    }
    if (G.size() > isomorphism_order_cap) {
      return std::nullopt;
    }
    std::size_t const        n = G.size();
    std::vector<std::size_t> gens;
    for (std::size_t x = 0; x < n; ++x) {
      if (subgroup_closure(G, gens).size() == n) {
        break;
      }
      auto sub = subgroup_closure(G, gens);
      if (!std::binary_search(sub.begin(), sub.end(), x)) {
        gens.push_back(x);
      }
    }
    std::vector<std::vector<std::size_t>> candidates(gens.size());
    for (std::size_t k = 0; k < gens.size(); ++k) {
      for (std::size_t y = 0; y < n; ++y) {
        if (H.order_of(y) == G.order_of(gens[k])) {
          candidates[k].push_back(y);
        }
      }
      if (candidates[k].empty()) {
        return false;
      }
    }
    std::vector<std::size_t> choice(gens.size(), 0);
    while (true) {
      // Extend the generator assignment along right multiplication.
      constexpr auto           undef = std::numeric_limits<std::size_t>::max();
      std::vector<std::size_t> map(n, undef);
      std::vector<std::size_t> queue{G.identity};
      map[G.identity] = H.identity;
      bool ok         = true;
      for (std::size_t q = 0; q < queue.size() && ok; ++q) {
        auto x = queue[q];
        for (std::size_t k = 0; k < gens.size() && ok; ++k) {
          auto y   = G.product(x, gens[k]);
          auto img = H.product(map[x], candidates[k][choice[k]]);
          if (map[y] == undef) {
            map[y] = img;
            queue.push_back(y);
          } else if (map[y] != img) {
            ok = false;
          }
        }
      }
      if (ok) {
        std::vector<bool> hit(n, false);
        for (auto v : map) {
          ok = ok && v != undef && !hit[v];
          if (ok) {
            hit[v] = true;
          }
        }
        for (std::size_t x = 0; x < n && ok; ++x) {
          for (std::size_t y = 0; y < n && ok; ++y) {
            ok = map[G.product(x, y)] == H.product(map[x], map[y]);
          }
        }
        if (ok) {
          return true;
        }
      }
      std::size_t k = 0;
      for (; k < gens.size(); ++k) {
        if (++choice[k] < candidates[k].size()) {
          break;
        }
        choice[k] = 0;
      }
      if (k == gens.size()) {
        return false;
      }
    }
  }

  //! Gamma(H) = Stab(H)/gamma, realized by the right translations x -> xt
  //! of H.  Group element k is the translation sending the basepoint to
  //! h_class()[k], so the identity is the position of the basepoint.
  class SchutzGroup {
   public:
    std::vector<element_type> const& h_class() const noexcept {
      return _h;
    }
    element_type basepoint() const noexcept {
      return _basepoint;
    }
    //! Stab(H), sorted; may contain the adjoined identity.
    std::vector<element_type> const& stabilizer() const noexcept {
      return _stab;
    }
    //! The gamma-classes of Stab(H), listed in group element order.
    std::vector<std::vector<element_type>> const& gamma_classes() const noexcept {
      return _gamma;
    }
    GroupTable const& group() const noexcept {
      return _group;
    }
    std::size_t order() const noexcept {
      return _group.size();
    }
    //! Permutation of positions in h_class() for group element g.
    std::vector<std::size_t> const& permutation(std::size_t g) const {
      return _perms[g];
    }
    bool in_stabilizer(element_type t) const {
      return std::binary_search(_stab.begin(), _stab.end(), t);
    }
    //! t/gamma for t in Stab(H).
    std::size_t quotient(element_type t) const {
      auto it = _quotient.find(t);
      if (it == _quotient.end()) {
        throw error(error_kind::not_in_subsemigroup,
                    std::to_string(t) + " does not stabilize H");
      }
      return it->second;
    }

   private:
    friend SchutzGroup schutz_group(FiniteSemigroup const&,
                                    GreenData const&,
                                    std::span<element_type const>,
                                    element_type);

    std::vector<element_type>              _h;
    element_type                           _basepoint = 0;
    std::vector<element_type>              _stab;
    std::vector<std::vector<element_type>> _gamma;
    std::vector<std::vector<std::size_t>>  _perms;
    GroupTable                             _group;
    std::map<element_type, std::size_t>    _quotient;
  };

  //! H must be exactly one H^T-class (inside T or inside S \ T).
  inline SchutzGroup schutz_group(FiniteSemigroup const&        S,
                                  GreenData const&              G,
                                  std::span<element_type const> H,
                                  element_type                  basepoint) {
    if (H.empty()) {
      throw error(error_kind::not_an_h_class, "empty set");
    }
    check_elements(S, H);
    std::vector<element_type> h(H.begin(), H.end());
    std::sort(h.begin(), h.end());
    if (h != G.h_class_members(G.h_class(h.front()))) {
      throw error(error_kind::not_an_h_class,
                  "the given set is not a relative H-class");
    }
    if (!std::binary_search(h.begin(), h.end(), basepoint)) {
      throw error(error_kind::not_an_h_class, "basepoint not in H");
    }
    auto pos = [&h](element_type x) -> std::optional<std::size_t> {
      auto it = std::lower_bound(h.begin(), h.end(), x);
      if (it == h.end() || *it != x) {
        return std::nullopt;
      }
      return static_cast<std::size_t>(it - h.begin());
    };

    SchutzGroup Gamma;
    Gamma._h         = h;
    Gamma._basepoint = basepoint;
    std::size_t const m = h.size();
    Gamma._perms.assign(m, {});
    Gamma._gamma.assign(m, {});
    for (auto t : G.sub().members1()) {
      if (!pos(S.product1(basepoint, t))) {
        continue;
      }
      Gamma._stab.push_back(t);
      std::vector<std::size_t> perm(m);
      for (std::size_t k = 0; k < m; ++k) {
        auto img = pos(S.product1(h[k], t));
        if (!img) {
          throw error(error_kind::internal_inconsistency,
                      "stabilizer element moves H outside itself");
        }
        perm[k] = *img;
      }
      auto g = *pos(S.product1(basepoint, t));
      if (Gamma._perms[g].empty()) {
        Gamma._perms[g] = std::move(perm);
      } else if (Gamma._perms[g] != perm) {
        throw error(error_kind::internal_inconsistency,
                    "translations agreeing at the basepoint differ on H");
      }
      Gamma._gamma[g].push_back(t);
      Gamma._quotient[t] = g;
    }
    std::sort(Gamma._stab.begin(), Gamma._stab.end());
    for (std::size_t g = 0; g < m; ++g) {
      if (Gamma._perms[g].empty()) {
        throw error(error_kind::internal_inconsistency,
                    "H is not the orbit of its basepoint under Stab(H)");
      }
    }
    auto const base = *pos(basepoint);
    Gamma._group.identity = base;
    Gamma._group.table.assign(m, std::vector<std::size_t>(m));
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        // Act by a, then by b.
        Gamma._group.table[a][b] = Gamma._perms[b][Gamma._perms[a][base]];
      }
    }
    return Gamma;
  }

  inline SchutzGroup schutz_group(FiniteSemigroup const&        S,
                                  SubSemigroup const&           T,
                                  std::span<element_type const> H,
                                  element_type                  basepoint) {
    return schutz_group(S, relative_green(S, T), H, basepoint);
  }

  //! Gamma_i for a complement class i in I, based at h_i.
  inline SchutzGroup complement_schutz_group(FiniteSemigroup const& S,
                                             GreenData const&       G,
                                             class_index            i) {
    if (i == one_class || i >= G.num_indices()) {
      throw error(error_kind::out_of_range,
                  "class index " + std::to_string(i) + " is not in I");
    }
    auto H = G.complement_class(i);
    return schutz_group(S, G, H, G.representative(i));
  }

  //! The H^T-classes H_lambda in the R^T-class of H, with connecting
  //! elements p_lambda, p'_lambda of T^1 and the action of T^1 on
  //! Lambda u {0}.  Index 0 is lambda_1, with H_{lambda_1} = H.
  struct LambdaData {
    static constexpr std::size_t sink = std::numeric_limits<std::size_t>::max();

    std::vector<std::vector<element_type>> classes;
    std::vector<element_type>              p, p_prime;
    //! Elements of T^1 in the order used by action.
    std::vector<element_type> t_order;
    //! action[lambda][k] = lambda . t_order[k], or sink.
    std::vector<std::vector<std::size_t>> action;

    std::size_t size() const noexcept {
      return classes.size();
    }

    std::size_t act(std::size_t lambda, element_type t) const {
      auto it = std::lower_bound(t_order.begin(), t_order.end(), t);
      if (it == t_order.end() || *it != t) {
        throw error(error_kind::not_in_subsemigroup,
                    std::to_string(t) + " is not in T^1");
      }
      return action[lambda][it - t_order.begin()];
    }
  };

  inline LambdaData lambda_data(FiniteSemigroup const&        S,
                                GreenData const&              G,
                                std::span<element_type const> H,
                                element_type                  basepoint) {
    check_elements(S, H);
    std::vector<element_type> h(H.begin(), H.end());
    std::sort(h.begin(), h.end());
    if (h.empty() || h != G.h_class_members(G.h_class(h.front()))
        || !std::binary_search(h.begin(), h.end(), basepoint)) {
      throw error(error_kind::not_an_h_class,
                  "the given set is not a relative H-class with basepoint");
    }
    LambdaData L;
    auto const own = G.h_class(basepoint);
    auto const row = G.r_class(basepoint);
    std::vector<std::size_t> ids{own};
    for (std::size_t id = 0; id < G.num_h_classes(); ++id) {
      if (id != own && G.r_class(G.h_class_members(id).front()) == row) {
        ids.push_back(id);
      }
    }
    auto const t1 = G.sub().members1();
    L.t_order     = t1;  // members then S.one(), which is the largest index
    for (auto id : ids) {
      L.classes.push_back(G.h_class_members(id));
    }
    for (std::size_t lam = 0; lam < ids.size(); ++lam) {
      if (lam == 0) {
        L.p.push_back(S.one());
        L.p_prime.push_back(S.one());
        continue;
      }
      auto const target = ids[lam];
      std::optional<element_type> p, pp;
      for (auto t : t1) {
        auto x = S.product1(basepoint, t);
        if (G.h_class(x) == target) {
          p = t;
          break;
        }
      }
      if (p) {
        auto v = S.product1(basepoint, *p);
        for (auto t : t1) {
          if (S.product1(v, t) == basepoint) {
            pp = t;
            break;
          }
        }
      }
      if (!p || !pp) {
        throw error(error_kind::internal_inconsistency,
                    "no connecting elements for an H-class of the R-class");
      }
      L.p.push_back(*p);
      L.p_prime.push_back(*pp);
    }
    // H p = H_lambda, h1 p p' = h1, h2 p' p = h2.
    for (std::size_t lam = 0; lam < ids.size(); ++lam) {
      std::vector<element_type> image;
      for (auto x : h) {
        image.push_back(S.product1(x, L.p[lam]));
        if (S.product1(image.back(), L.p_prime[lam]) != x) {
          throw error(error_kind::internal_inconsistency, "p' p is not 1 on H");
        }
      }
      std::sort(image.begin(), image.end());
      if (image != L.classes[lam]) {
        throw error(error_kind::internal_inconsistency, "H p != H_lambda");
      }
      for (auto y : L.classes[lam]) {
        if (S.product1(S.product1(y, L.p_prime[lam]), L.p[lam]) != y) {
          throw error(error_kind::internal_inconsistency,
                      "p' p is not 1 on H_lambda");
        }
      }
    }
    L.action.assign(ids.size(), std::vector<std::size_t>(t1.size(), LambdaData::sink));
    for (std::size_t lam = 0; lam < ids.size(); ++lam) {
      for (std::size_t k = 0; k < t1.size(); ++k) {
        std::vector<element_type> image;
        for (auto x : L.classes[lam]) {
          image.push_back(S.product1(x, t1[k]));
        }
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        for (std::size_t mu = 0; mu < ids.size(); ++mu) {
          if (image == L.classes[mu]) {
            L.action[lam][k] = mu;
            break;
          }
        }
      }
    }
    return L;
  }

  //! X = {(p_lambda b p'_{lambda.b})/gamma : lambda.b != 0}, as group
  //! elements of Gamma, sorted.  B must generate T.
  inline std::vector<std::size_t>
  schutz_generators(FiniteSemigroup const&        S,
                    SubSemigroup const&           T,
                    std::span<element_type const> B,
                    LambdaData const&             L,
                    SchutzGroup const&            Gamma) {
    if (B.empty() || !(closure(S, B) == T)) {
      throw error(error_kind::not_generating, "B does not generate T");
    }
    std::vector<std::size_t> X;
    for (std::size_t lam = 0; lam < L.size(); ++lam) {
      for (auto b : B) {
        auto mu = L.act(lam, b);
        if (mu == LambdaData::sink) {
          continue;
        }
        auto x = S.product1(S.product1(L.p[lam], b), L.p_prime[mu]);
        X.push_back(Gamma.quotient(x));
      }
    }
    std::sort(X.begin(), X.end());
    X.erase(std::unique(X.begin(), X.end()), X.end());
    if (subgroup_closure(Gamma.group(), X).size() != Gamma.order()) {
      throw error(error_kind::not_generating,
                  "X does not generate the Schutzenberger group");
    }
    return X;
  }

  struct TransportReport {
    bool                l_related           = false;
    bool                r_related           = false;
    bool                stabilizers_equal   = false;
    bool                gamma_classes_equal = false;
    //! nullopt when the order exceeds isomorphism_order_cap.
    std::optional<bool> isomorphic;
  };

  //! Compares Gamma_i and Gamma_j for complement classes i, j that share an
  //! L^T-class (equal stabilizers and gamma) or an R^T-class (isomorphic).
  inline TransportReport check_L_R_transport(FiniteSemigroup const& S,
                                             GreenData const&       G,
                                             class_index            i,
                                             class_index            j) {
    auto Gi = complement_schutz_group(S, G, i);
    auto Gj = complement_schutz_group(S, G, j);
    TransportReport rep;
    auto hi       = G.representative(i);
    auto hj       = G.representative(j);
    rep.l_related = G.l_class(hi) == G.l_class(hj);
    rep.r_related = G.r_class(hi) == G.r_class(hj);
    if (!rep.l_related && !rep.r_related) {
      throw error(error_kind::not_comparable,
                  "classes " + std::to_string(i) + " and " + std::to_string(j)
                      + " are neither L- nor R-related");
    }
    rep.stabilizers_equal = Gi.stabilizer() == Gj.stabilizer();
    auto canon = [](SchutzGroup const& g) {
      auto parts = g.gamma_classes();
      std::sort(parts.begin(), parts.end());
      return parts;
    };
    rep.gamma_classes_equal = canon(Gi) == canon(Gj);
    rep.isomorphic          = isomorphic(Gi.group(), Gj.group());
    return rep;
  }

}  // namespace greenidx

#endif  // GREENIDX_SCHUTZ_HPP_
