// Finite semigroups given by Cayley tables, subsemigroups, homomorphisms
// and the strong semilattice construction.
//
// Elements are dense indices 0..n-1.  The semigroup S^1 obtained by
// adjoining a fresh identity is handled implicitly: index n always denotes
// the adjoined identity, even when S already has an identity of its own.

#ifndef GREENIDX_SEMIGROUP_HPP_
#define GREENIDX_SEMIGROUP_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace greenidx {

  using element_type = std::size_t;
  using word_type    = std::vector<std::size_t>;

  class FiniteSemigroup {
   public:
    FiniteSemigroup() = default;

    //! Validates an n x n table (entries in [0, n), associativity) and
    //! records a two-sided identity if there is one.
    static FiniteSemigroup
    from_table(std::vector<std::vector<std::size_t>> const& rows,
               std::vector<std::string>                     names = {}) {
      std::size_t const n = rows.size();
      if (n == 0) {
        throw error(error_kind::out_of_range, "a semigroup needs order >= 1");
      }
      FiniteSemigroup S;
      S._n = n;
      S._table.reserve(n * n);
      for (std::size_t x = 0; x < n; ++x) {
        if (rows[x].size() != n) {
          throw error(error_kind::out_of_range,
                      "row " + std::to_string(x) + " has length "
                          + std::to_string(rows[x].size()) + ", expected "
                          + std::to_string(n));
        }
        for (std::size_t y = 0; y < n; ++y) {
          if (rows[x][y] >= n) {
            throw error(error_kind::out_of_range,
                        "entry (" + std::to_string(x) + "," + std::to_string(y)
                            + ") = " + std::to_string(rows[x][y])
                            + " is not below the order "
                            + std::to_string(n));
          }
          S._table.push_back(rows[x][y]);
        }
      }
      if (auto w = S.associativity_witness()) {
        auto [x, y, z] = *w;
        throw not_associative_error(
            *w,
            "(" + std::to_string(x) + "*" + std::to_string(y) + ")*"
                + std::to_string(z) + " = "
                + std::to_string(S.product(S.product(x, y), z)) + " but "
                + std::to_string(x) + "*(" + std::to_string(y) + "*"
                + std::to_string(z)
                + ") = " + std::to_string(S.product(x, S.product(y, z))));
      }
      S.set_names(std::move(names));
      S.find_identity();
      return S;
    }

    std::size_t size() const noexcept {
      return _n;
    }

    //! Index of the adjoined identity of S^1.
    element_type one() const noexcept {
      return _n;
    }

    element_type product(element_type x, element_type y) const noexcept {
      return _table[x * _n + y];
    }

    //! Product in S^1.
    element_type product1(element_type x, element_type y) const noexcept {
      if (x == _n) {
        return y;
      } else if (y == _n) {
        return x;
      }
      return _table[x * _n + y];
    }

    //! Evaluates a word over S^1; the empty word evaluates to one().
    element_type evaluate(std::span<element_type const> w) const noexcept {
      element_type r = one();
      for (auto x : w) {
        r = product1(r, x);
      }
      return r;
    }

    std::optional<element_type> identity() const noexcept {
      return _identity;
    }

    std::vector<std::vector<std::size_t>> rows() const {
      std::vector<std::vector<std::size_t>> out(_n);
      for (std::size_t x = 0; x < _n; ++x) {
        out[x].assign(_table.begin() + x * _n, _table.begin() + (x + 1) * _n);
      }
      return out;
    }

    std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    //! Name used for pretty printing; the adjoined identity prints as "1".
    std::string name(element_type x) const {
      if (x == _n) {
        return "1";
      }
      return _names.empty() ? std::to_string(x) : _names[x];
    }

    bool operator==(FiniteSemigroup const& that) const {
      return _n == that._n && _table == that._table;
    }

    // Exhaustive O(n^3) search for a failure of associativity.
    //! Triples are searched from (n-1, n-1, n-1) downwards.
    std::optional<std::array<std::size_t, 3>> associativity_witness() const {
      for (std::size_t x = _n; x-- > 0;) {
        for (std::size_t y = _n; y-- > 0;) {
          auto xy = product(x, y);
          for (std::size_t z = _n; z-- > 0;) {
            if (product(xy, z) != product(x, product(y, z))) {
              return std::array<std::size_t, 3>{x, y, z};
            }
          }
        }
      }
      return std::nullopt;
    }

   private:
    void set_names(std::vector<std::string> names) {
      if (!names.empty() && names.size() != _n) {
        throw error(error_kind::input_error,
                    "expected " + std::to_string(_n) + " names, got "
                        + std::to_string(names.size()));
      }
      _names = std::move(names);
    }

    void find_identity() {
      for (std::size_t e = 0; e < _n; ++e) {
        bool ok = true;
        for (std::size_t x = 0; x < _n && ok; ++x) {
          ok = product(e, x) == x && product(x, e) == x;
        }
        if (ok) {
          _identity = e;
          return;
        }
      }
    }

    std::size_t                 _n = 0;
    std::vector<std::size_t>    _table;
    std::vector<std::string>    _names;
    std::optional<element_type> _identity;
  };

  //! A nonempty subset of a finite semigroup closed under multiplication.
  class SubSemigroup {
   public:
    SubSemigroup() = default;

    static SubSemigroup from_members(FiniteSemigroup const&    S,
                                     std::vector<element_type> members) {
      if (members.empty()) {
        throw error(error_kind::empty_generators,
                    "a subsemigroup must be nonempty");
      }
      SubSemigroup T;
      T._parent_order = S.size();
      T._in.assign(S.size(), false);
      for (auto x : members) {
        if (x >= S.size()) {
          throw error(error_kind::out_of_range,
                      "member " + std::to_string(x) + " is not an element");
        }
        T._in[x] = true;
      }
      for (std::size_t x = 0; x < S.size(); ++x) {
        if (T._in[x]) {
          T._members.push_back(x);
        }
      }
      for (auto x : T._members) {
        for (auto y : T._members) {
          if (!T._in[S.product(x, y)]) {
            throw error(error_kind::input_error,
                        "members are not closed: " + std::to_string(x) + "*"
                            + std::to_string(y) + " = "
                            + std::to_string(S.product(x, y)));
          }
        }
      }
      return T;
    }

    std::size_t parent_order() const noexcept {
      return _parent_order;
    }

    std::size_t size() const noexcept {
      return _members.size();
    }

    //! Sorted list of members.
    std::vector<element_type> const& members() const noexcept {
      return _members;
    }

    bool contains(element_type x) const noexcept {
      return x < _parent_order && _in[x];
    }

    //! Membership in T^1, where index parent_order() is the adjoined 1.
    bool contains1(element_type x) const noexcept {
      return x == _parent_order || contains(x);
    }

    //! Members of T followed by the adjoined identity: the search order for
    //! all smallest-witness choices.
    std::vector<element_type> members1() const {
      auto out = _members;
      out.push_back(_parent_order);
      return out;
    }

    std::vector<element_type> complement() const {
      std::vector<element_type> out;
      for (std::size_t x = 0; x < _parent_order; ++x) {
        if (!_in[x]) {
          out.push_back(x);
        }
      }
      return out;
    }

    bool operator==(SubSemigroup const& that) const {
      return _parent_order == that._parent_order && _members == that._members;
    }

   private:
    std::size_t               _parent_order = 0;
    std::vector<bool>         _in;
    std::vector<element_type> _members;
  };

  inline void check_elements(FiniteSemigroup const&          S,
                             std::span<element_type const> xs) {
    for (auto x : xs) {
      if (x >= S.size()) {
        throw error(error_kind::out_of_range,
                    std::to_string(x) + " is not an element of a semigroup of "
                        "order " + std::to_string(S.size()));
      }
    }
  }

  //! Smallest subsemigroup containing gens.
  inline SubSemigroup closure(FiniteSemigroup const&        S,
                              std::span<element_type const> gens) {
    if (gens.empty()) {
      throw error(error_kind::empty_generators, "no generators given");
    }
    check_elements(S, gens);
    std::vector<bool>         seen(S.size(), false);
    std::vector<element_type> found;
    for (auto g : gens) {
      if (!seen[g]) {
        seen[g] = true;
        found.push_back(g);
      }
    }
    // Right multiplication by generators reaches every product.
    for (std::size_t k = 0; k < found.size(); ++k) {
      for (auto g : gens) {
        auto y = S.product(found[k], g);
        if (!seen[y]) {
          seen[y] = true;
          found.push_back(y);
        }
      }
    }
    return SubSemigroup::from_members(S, std::move(found));
  }

  inline SubSemigroup whole(FiniteSemigroup const& S) {
    std::vector<element_type> all(S.size());
    std::iota(all.begin(), all.end(), 0);
    return SubSemigroup::from_members(S, std::move(all));
  }

  //! The subsemigroup T as a semigroup in its own right; element k of the
  //! result is T.members()[k].
  inline FiniteSemigroup restrict_to(FiniteSemigroup const& S,
                                     SubSemigroup const&    T) {
    auto const&                           m = T.members();
    std::vector<std::size_t>              pos(S.size(), 0);
    std::vector<std::vector<std::size_t>> rows(m.size(),
                                               std::vector<std::size_t>(m.size()));
    for (std::size_t k = 0; k < m.size(); ++k) {
      pos[m[k]] = k;
    }
    std::vector<std::string> names;
    for (std::size_t a = 0; a < m.size(); ++a) {
      names.push_back(S.name(m[a]));
      for (std::size_t b = 0; b < m.size(); ++b) {
        rows[a][b] = pos[S.product(m[a], m[b])];
      }
    }
    return FiniteSemigroup::from_table(rows, std::move(names));
  }

  //! A map between finite semigroups, validated to respect multiplication.
  class Homomorphism {
   public:
    Homomorphism() = default;

    static Homomorphism make(FiniteSemigroup const&    source,
                             FiniteSemigroup const&    target,
                             std::vector<element_type> map) {
      if (map.size() != source.size()) {
        throw error(error_kind::domain_mismatch,
                    "map has " + std::to_string(map.size())
                        + " images but the source has order "
                        + std::to_string(source.size()));
      }
      check_elements(target, map);
      for (std::size_t x = 0; x < source.size(); ++x) {
        for (std::size_t y = 0; y < source.size(); ++y) {
          if (map[source.product(x, y)] != target.product(map[x], map[y])) {
            throw error(error_kind::not_homomorphism,
                        "phi(" + std::to_string(x) + "*" + std::to_string(y)
                            + ") != phi(" + std::to_string(x) + ")*phi("
                            + std::to_string(y) + ")");
          }
        }
      }
      Homomorphism phi;
      phi._source_order = source.size();
      phi._target_order = target.size();
      phi._map          = std::move(map);
      return phi;
    }

    element_type operator()(element_type x) const noexcept {
      return _map[x];
    }

    std::size_t source_order() const noexcept {
      return _source_order;
    }

    std::size_t target_order() const noexcept {
      return _target_order;
    }

    std::vector<element_type> const& images() const noexcept {
      return _map;
    }

   private:
    std::size_t               _source_order = 0;
    std::size_t               _target_order = 0;
    std::vector<element_type> _map;
  };

  struct StrongSemilattice {
    FiniteSemigroup semigroup;
    //! The copy of T; its complement is the copy of U.
    SubSemigroup lower;
  };

  //! S(T, U, phi) on the disjoint union T u U: elements 0..|T|-1 are T,
  //! the rest are U.  Mixed products push the T factor through phi.
  inline StrongSemilattice strong_semilattice(FiniteSemigroup const& T,
                                              FiniteSemigroup const& U,
                                              Homomorphism const&    phi) {
    if (phi.source_order() != T.size() || phi.target_order() != U.size()) {
      throw error(error_kind::domain_mismatch,
                  "phi does not map T into U");
    }
    std::size_t const                     t = T.size(), n = T.size() + U.size();
    std::vector<std::vector<std::size_t>> rows(n, std::vector<std::size_t>(n));
    auto to_u = [&](std::size_t x) { return x < t ? phi(x) : x - t; };
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (x < t && y < t) {
          rows[x][y] = T.product(x, y);
        } else {
          rows[x][y] = t + U.product(to_u(x), to_u(y));
        }
      }
    }
    std::vector<std::string> names;
    if (!T.names().empty() || !U.names().empty()) {
      for (std::size_t x = 0; x < t; ++x) {
        names.push_back(T.name(x));
      }
      for (std::size_t u = 0; u < U.size(); ++u) {
        names.push_back(U.name(u) + "'");
      }
    }
    auto S = FiniteSemigroup::from_table(rows, std::move(names));
    std::vector<element_type> lower(t);
    std::iota(lower.begin(), lower.end(), 0);
    auto Tsub = SubSemigroup::from_members(S, std::move(lower));
    return {std::move(S), std::move(Tsub)};
  }

  inline bool is_cancellative(FiniteSemigroup const& S) {
    std::size_t const n = S.size();
    for (std::size_t x = 0; x < n; ++x) {
      std::vector<bool> row(n, false), col(n, false);
      for (std::size_t y = 0; y < n; ++y) {
        auto r = S.product(x, y);
        auto c = S.product(y, x);
        if (row[r] || col[c]) {
          return false;
        }
        row[r] = col[c] = true;
      }
    }
    return true;
  }

  inline bool is_group(FiniteSemigroup const& S) {
    auto e = S.identity();
    if (!e) {
      return false;
    }
    for (std::size_t x = 0; x < S.size(); ++x) {
      bool invertible = false;
      for (std::size_t y = 0; y < S.size() && !invertible; ++y) {
        invertible = S.product(x, y) == *e && S.product(y, x) == *e;
      }
      if (!invertible) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Standard examples
  ////////////////////////////////////////////////////////////////////////

  inline FiniteSemigroup cyclic_group(std::size_t n) {
    std::vector<std::vector<std::size_t>> rows(n, std::vector<std::size_t>(n));
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        rows[x][y] = (x + y) % n;
      }
    }
    return FiniteSemigroup::from_table(rows);
  }

  inline FiniteSemigroup trivial_semigroup() {
    return FiniteSemigroup::from_table({{0}});
  }

  //! The semigroup generated by transformations of {0..degree-1}, composed
  //! left to right (x acts first).  Elements are numbered in order of
  //! discovery by breadth-first search; names are image lists.
  inline FiniteSemigroup
  transformation_semigroup(std::vector<std::vector<std::size_t>> const& gens,
                           std::size_t max_size = 100000) {
    if (gens.empty()) {
      throw error(error_kind::empty_generators, "no transformations given");
    }
    std::size_t const deg = gens[0].size();
    for (auto const& g : gens) {
      if (g.size() != deg) {
        throw error(error_kind::input_error, "transformations differ in degree");
      }
      for (auto v : g) {
        if (v >= deg) {
          throw error(error_kind::out_of_range, "image outside the domain");
        }
      }
    }
    using transf = std::vector<std::size_t>;
    auto compose = [deg](transf const& x, transf const& y) {
      transf r(deg);
      for (std::size_t i = 0; i < deg; ++i) {
        r[i] = y[x[i]];
      }
      return r;
    };
    std::vector<transf>           elts;
    std::map<transf, std::size_t> index;
    for (auto const& g : gens) {
      if (index.emplace(g, elts.size()).second) {
        elts.push_back(g);
      }
    }
    for (std::size_t k = 0; k < elts.size(); ++k) {
      for (auto const& g : gens) {
        auto p = compose(elts[k], g);
        if (index.emplace(p, elts.size()).second) {
          elts.push_back(std::move(p));
          if (elts.size() > max_size) {
            throw error(error_kind::budget_exceeded,
                        "transformation semigroup larger than "
                            + std::to_string(max_size));
          }
        }
      }
    }
    std::size_t const                     n = elts.size();
    std::vector<std::vector<std::size_t>> rows(n, std::vector<std::size_t>(n));
    std::vector<std::string>              names;
    for (std::size_t x = 0; x < n; ++x) {
      std::string nm = "[";
      for (std::size_t i = 0; i < deg; ++i) {
        nm += (i ? "," : "") + std::to_string(elts[x][i]);
      }
      names.push_back(nm + "]");
      for (std::size_t y = 0; y < n; ++y) {
        rows[x][y] = index.at(compose(elts[x], elts[y]));
      }
    }
    return FiniteSemigroup::from_table(rows, std::move(names));
  }

  inline FiniteSemigroup symmetric_group(std::size_t degree) {
    std::vector<std::size_t> swap(degree), cycle(degree);
    std::iota(swap.begin(), swap.end(), 0);
    for (std::size_t i = 0; i < degree; ++i) {
      cycle[i] = (i + 1) % degree;
    }
    if (degree > 1) {
      std::swap(swap[0], swap[1]);
    }
    return transformation_semigroup({swap, cycle});
  }

  inline FiniteSemigroup full_transformation_monoid(std::size_t degree) {
    std::vector<std::vector<std::size_t>> gens;
    std::vector<std::size_t>              id(degree);
    std::iota(id.begin(), id.end(), 0);
    gens.push_back(id);
    if (degree > 1) {
      auto swap = id;
      std::swap(swap[0], swap[1]);
      gens.push_back(swap);
      std::vector<std::size_t> cycle(degree);
      for (std::size_t i = 0; i < degree; ++i) {
        cycle[i] = (i + 1) % degree;
      }
      gens.push_back(cycle);
      auto collapse = id;
      collapse[1]   = 0;
      gens.push_back(collapse);
    }
    return transformation_semigroup(gens);
  }

}  // namespace greenidx

#endif  // GREENIDX_SEMIGROUP_HPP_
