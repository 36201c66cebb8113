// Green's relations of S relative to a subsemigroup T, the Green index, and
// the connector tables rho, lambda, sigma, tau.

#ifndef GREENIDX_RELGREEN_HPP_
#define GREENIDX_RELGREEN_HPP_

#include <cstddef>
#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "semigroup.hpp"

namespace greenidx {

  //! Index into I^1.  0 is the distinguished index "1" whose representative
  //! is the adjoined identity; complement classes are 1..|I|.
  using class_index                = std::size_t;
  inline constexpr class_index one_class = 0;

  namespace detail {
    // Bitset over the elements of S, used as a key for principal sets.
    using bitset_key = std::vector<std::uint64_t>;

    inline void set_bit(bitset_key& b, std::size_t x) {
      b[x / 64] |= std::uint64_t(1) << (x % 64);
    }

    // Assigns class ids in order of first appearance as u runs upwards, so
    // that ids are ordered by smallest member.
    inline std::vector<std::size_t>
    classes_from_keys(std::vector<bitset_key> const& keys) {
      std::map<bitset_key, std::size_t> ids;
      std::vector<std::size_t>          out(keys.size());
      for (std::size_t u = 0; u < keys.size(); ++u) {
        out[u] = ids.emplace(keys[u], ids.size()).first->second;
      }
      return out;
    }
  }  // namespace detail

  //! The relative R, L and H classes of S with respect to T, and the
  //! complement H-classes indexed by I.
  class GreenData {
   public:
    std::size_t r_class(element_type u) const {
      return _r[u];
    }
    std::size_t l_class(element_type u) const {
      return _l[u];
    }
    std::size_t h_class(element_type u) const {
      return _h[u];
    }

    std::size_t num_r_classes() const noexcept {
      return _num_r;
    }
    std::size_t num_l_classes() const noexcept {
      return _num_l;
    }
    std::size_t num_h_classes() const noexcept {
      return _h_members.size();
    }

    //! Members of the H-class with the given id.
    std::vector<element_type> const& h_class_members(std::size_t id) const {
      return _h_members[id];
    }

    //! |I|, the number of H-classes inside S \ T.
    std::size_t num_complement_classes() const noexcept {
      return _complement_h.size();
    }

    //! |I^1| = |I| + 1.
    std::size_t num_indices() const noexcept {
      return _complement_h.size() + 1;
    }

    std::size_t green_index() const noexcept {
      return _complement_h.size() + 1;
    }

    //! h_i; representative(0) is the adjoined identity.
    element_type representative(class_index i) const {
      return _reps[i];
    }

    std::vector<element_type> const& representatives() const noexcept {
      return _reps;
    }

    //! Members of H_i for i in I; H_1 = {1}.
    std::vector<element_type> complement_class(class_index i) const {
      if (i == one_class) {
        return {_order};
      }
      return _h_members[_complement_h[i - 1]];
    }

    //! The index i with u in H_i, or one_class when u lies in T^1.
    class_index index_of(element_type u) const {
      return u == _order ? one_class : _index_of[u];
    }

    bool in_t(element_type u) const {
      return u == _order || _t.contains(u);
    }

    std::size_t order() const noexcept {
      return _order;
    }

    SubSemigroup const& sub() const noexcept {
      return _t;
    }

   private:
    friend GreenData relative_green(FiniteSemigroup const&, SubSemigroup const&);

    std::size_t                            _order = 0;
    SubSemigroup                           _t;
    std::vector<std::size_t>               _r, _l, _h;
    std::size_t                            _num_r = 0, _num_l = 0;
    std::vector<std::vector<element_type>> _h_members;
    std::vector<std::size_t>               _complement_h;  // I -> H-class id
    std::vector<element_type>              _reps;
    std::vector<class_index>               _index_of;
  };

  //! Computes R^T, L^T and H^T by comparing the principal sets uT^1 and
  //! T^1u as bitsets.
  inline GreenData relative_green(FiniteSemigroup const& S,
                                  SubSemigroup const&    T) {
    if (T.parent_order() != S.size()) {
      throw error(error_kind::domain_mismatch,
                  "subsemigroup belongs to a semigroup of another order");
    }
    std::size_t const                  n     = S.size();
    std::size_t const                  words = (n + 63) / 64;
    std::vector<detail::bitset_key>    rkey(n, detail::bitset_key(words, 0));
    std::vector<detail::bitset_key>    lkey(n, detail::bitset_key(words, 0));
    for (std::size_t u = 0; u < n; ++u) {
      detail::set_bit(rkey[u], u);
      detail::set_bit(lkey[u], u);
      for (auto t : T.members()) {
        detail::set_bit(rkey[u], S.product(u, t));
        detail::set_bit(lkey[u], S.product(t, u));
      }
    }
    GreenData G;
    G._order = n;
    G._t     = T;
    G._r     = detail::classes_from_keys(rkey);
    G._l     = detail::classes_from_keys(lkey);
    G._num_r = n == 0 ? 0 : *std::max_element(G._r.begin(), G._r.end()) + 1;
    G._num_l = n == 0 ? 0 : *std::max_element(G._l.begin(), G._l.end()) + 1;

    std::map<std::pair<std::size_t, std::size_t>, std::size_t> hid;
    G._h.resize(n);
    for (std::size_t u = 0; u < n; ++u) {
      auto [it, fresh] = hid.emplace(std::pair(G._r[u], G._l[u]), hid.size());
      if (fresh) {
        G._h_members.emplace_back();
      }
      G._h[u] = it->second;
      G._h_members[it->second].push_back(u);
    }

    G._reps.push_back(S.one());
    G._index_of.assign(n, one_class);
    for (std::size_t id = 0; id < G._h_members.size(); ++id) {
      auto const& members = G._h_members[id];
      bool        inside  = T.contains(members.front());
      for (auto u : members) {
        if (T.contains(u) != inside) {
          throw error(error_kind::internal_inconsistency,
                      "an H-class straddles T and its complement");
        }
      }
      if (!inside) {
        G._complement_h.push_back(id);
        G._reps.push_back(members.front());
        for (auto u : members) {
          G._index_of[u] = G._complement_h.size();
        }
      }
    }
    return G;
  }

  //! |S \ T|.
  inline std::size_t rees_index(FiniteSemigroup const& S,
                                SubSemigroup const&    T) {
    return S.size() - T.size();
  }

  //! Dense tables of rho, lambda (class transport) and sigma, tau (elements
  //! of T^1) with
  //!   s h_i = h_{rho(s,i)} sigma(s,i)   and   h_i s = tau(i,s) h_{lambda(i,s)}
  //! for s in S^1 and i in I^1.
  class ConnectorTables {
   public:
    class_index rho(element_type s, class_index i) const {
      return _rho[s * _k + i];
    }
    class_index lambda(class_index i, element_type s) const {
      return _lambda[s * _k + i];
    }
    element_type sigma(element_type s, class_index i) const {
      return _sigma[s * _k + i];
    }
    element_type tau(class_index i, element_type s) const {
      return _tau[s * _k + i];
    }

    //! Number of rows, |S^1|.
    std::size_t num_elements() const noexcept {
      return _n1;
    }
    //! Number of columns, |I^1|.
    std::size_t num_indices() const noexcept {
      return _k;
    }

   private:
    friend ConnectorTables connectors(FiniteSemigroup const&, GreenData const&);

    std::size_t               _n1 = 0, _k = 0;
    std::vector<class_index>  _rho, _lambda;
    std::vector<element_type> _sigma, _tau;
  };

  //! Witnesses are the smallest element of T^1 (members of T in increasing
  //! order, then the adjoined identity) satisfying the defining equation;
  //! for s = 1 the witnesses are 1.
  inline ConnectorTables connectors(FiniteSemigroup const& S,
                                    GreenData const&       G) {
    if (G.order() != S.size()) {
      throw error(error_kind::domain_mismatch,
                  "Green data computed for a different semigroup");
    }
    ConnectorTables C;
    C._n1            = S.size() + 1;
    C._k             = G.num_indices();
    std::size_t cells = C._n1 * C._k;
    C._rho.resize(cells);
    C._lambda.resize(cells);
    C._sigma.resize(cells);
    C._tau.resize(cells);
    auto const candidates = G.sub().members1();

    for (element_type s = 0; s < C._n1; ++s) {
      for (class_index i = 0; i < C._k; ++i) {
        auto const h    = G.representative(i);
        std::size_t const cell = s * C._k + i;

        auto const left = S.product1(s, h);
        auto const rho  = G.index_of(left);
        C._rho[cell]    = rho;
        if (s == S.one()) {
          C._sigma[cell] = S.one();
        } else if (rho == one_class) {
          C._sigma[cell] = left;
        } else {
          auto hj    = G.representative(rho);
          bool found = false;
          for (auto t : candidates) {
            if (S.product1(hj, t) == left) {
              C._sigma[cell] = t;
              found          = true;
              break;
            }
          }
          if (!found) {
            throw error(error_kind::internal_inconsistency,
                        "no sigma witness for s = " + std::to_string(s)
                            + ", i = " + std::to_string(i));
          }
        }

        auto const right = S.product1(h, s);
        auto const lam   = G.index_of(right);
        C._lambda[cell]  = lam;
        if (s == S.one()) {
          C._tau[cell] = S.one();
        } else if (lam == one_class) {
          C._tau[cell] = right;
        } else {
          auto hj    = G.representative(lam);
          bool found = false;
          for (auto t : candidates) {
            if (S.product1(t, hj) == right) {
              C._tau[cell] = t;
              found        = true;
              break;
            }
          }
          if (!found) {
            throw error(error_kind::internal_inconsistency,
                        "no tau witness for i = " + std::to_string(i)
                            + ", s = " + std::to_string(s));
          }
        }
      }
    }
    return C;
  }

}  // namespace greenidx

#endif  // GREENIDX_RELGREEN_HPP_
