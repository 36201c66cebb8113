// Finite automata over integer symbols, synchronous padded relations, and
// composition of such relations.

#ifndef GREENIDX_AUTOMATA_HPP_
#define GREENIDX_AUTOMATA_HPP_

#include <algorithm>
#include <cstddef>
#include <deque>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <tuple>
#include <vector>

#include "error.hpp"
#include "semigroup.hpp"

namespace greenidx {

  using symbol_type = std::size_t;
  using state_type  = std::size_t;

  //! Nondeterministic automaton without epsilon transitions.
  class Nfa {
   public:
    Nfa() = default;
    explicit Nfa(std::size_t num_symbols) : _k(num_symbols) {}

    std::size_t num_symbols() const noexcept {
      return _k;
    }
    std::size_t num_states() const noexcept {
      return _out.size();
    }

    state_type add_state(bool accepting = false) {
      _out.emplace_back();
      _acc.push_back(accepting);
      return _out.size() - 1;
    }

    void add_transition(state_type q, symbol_type a, state_type r) {
      if (q >= num_states() || r >= num_states()) {
        throw error(error_kind::out_of_range, "no such state");
      }
      if (a >= _k) {
        throw error(error_kind::invalid_letter,
                    "symbol " + std::to_string(a) + " not in alphabet");
      }
      _out[q].emplace_back(a, r);
      _sorted = false;
    }

    void add_initial(state_type q) {
      if (q >= num_states()) {
        throw error(error_kind::out_of_range, "no such state");
      }
      _init.push_back(q);
      _sorted = false;
    }

    void set_accepting(state_type q, bool value = true) {
      if (q >= num_states()) {
        throw error(error_kind::out_of_range, "no such state");
      }
      _acc[q] = value;
    }

    bool accepting(state_type q) const {
      return _acc[q];
    }

    //! Transitions out of q as (symbol, target), sorted.
    std::vector<std::pair<symbol_type, state_type>> const& out(state_type q) const {
      normalize();
      return _out[q];
    }

    std::vector<state_type> const& initial() const {
      normalize();
      return _init;
    }

    //! Sorted, duplicate-free set of successors of a set of states.
    std::vector<state_type> step(std::vector<state_type> const& from,
                                 symbol_type                    a) const {
      std::vector<state_type> to;
      for (auto q : from) {
        auto const& tr = out(q);
        auto it = std::lower_bound(tr.begin(), tr.end(), std::pair(a, state_type(0)));
        for (; it != tr.end() && it->first == a; ++it) {
          to.push_back(it->second);
        }
      }
      std::sort(to.begin(), to.end());
      to.erase(std::unique(to.begin(), to.end()), to.end());
      return to;
    }

    bool any_accepting(std::vector<state_type> const& qs) const {
      return std::any_of(qs.begin(), qs.end(), [this](auto q) { return _acc[q]; });
    }

    bool accepts(std::vector<symbol_type> const& w) const {
      auto cur = initial();
      for (auto a : w) {
        if (a >= _k) {
          throw error(error_kind::invalid_letter,
                      "symbol " + std::to_string(a) + " not in alphabet");
        }
        cur = step(cur, a);
        if (cur.empty()) {
          return false;
        }
      }
      return any_accepting(cur);
    }

    std::size_t num_transitions() const {
      normalize();
      std::size_t n = 0;
      for (auto const& tr : _out) {
        n += tr.size();
      }
      return n;
    }

   private:
    void normalize() const {
      if (_sorted) {
        return;
      }
      for (auto& tr : _out) {
        std::sort(tr.begin(), tr.end());
        tr.erase(std::unique(tr.begin(), tr.end()), tr.end());
      }
      std::sort(_init.begin(), _init.end());
      _init.erase(std::unique(_init.begin(), _init.end()), _init.end());
      _sorted = true;
    }

    std::size_t                                                   _k = 0;
    mutable std::vector<std::vector<std::pair<symbol_type, state_type>>> _out;
    mutable std::vector<state_type>                               _init;
    std::vector<bool>                                             _acc;
    mutable bool                                                  _sorted = true;
  };

  ////////////////////////////////////////////////////////////////////////
  // Regular algebra
  ////////////////////////////////////////////////////////////////////////

  inline void check_same_alphabet(Nfa const& A, Nfa const& B) {
    if (A.num_symbols() != B.num_symbols()) {
      throw error(error_kind::alphabet_mismatch,
                  "alphabets of sizes " + std::to_string(A.num_symbols())
                      + " and " + std::to_string(B.num_symbols()));
    }
  }

  //! States from which an accepting state is reachable.
  inline std::vector<bool> coreachable(Nfa const& A) {
    std::vector<std::vector<state_type>> rev(A.num_states());
    std::vector<bool>                    ok(A.num_states(), false);
    std::vector<state_type>              stack;
    for (state_type q = 0; q < A.num_states(); ++q) {
      for (auto [a, r] : A.out(q)) {
        rev[r].push_back(q);
      }
      if (A.accepting(q)) {
        ok[q] = true;
        stack.push_back(q);
      }
    }
    while (!stack.empty()) {
      auto q = stack.back();
      stack.pop_back();
      for (auto p : rev[q]) {
        if (!ok[p]) {
          ok[p] = true;
          stack.push_back(p);
        }
      }
    }
    return ok;
  }

  //! Complete deterministic automaton (subset construction, with a sink).
  inline Nfa determinize(Nfa const& A) {
    Nfa                                          D(A.num_symbols());
    std::map<std::vector<state_type>, state_type> ids;
    std::vector<std::vector<state_type>>          sets;
    auto id_of = [&](std::vector<state_type> const& s) {
      auto [it, fresh] = ids.emplace(s, sets.size());
      if (fresh) {
        sets.push_back(s);
        D.add_state(A.any_accepting(s));
      }
      return it->second;
    };
    D.add_initial(id_of(A.initial()));
    for (std::size_t k = 0; k < sets.size(); ++k) {
      for (symbol_type a = 0; a < A.num_symbols(); ++a) {
        auto next = A.step(sets[k], a);
        D.add_transition(k, a, id_of(next));
      }
    }
    return D;
  }

  //! Complement with respect to all words over the alphabet.
  inline Nfa complement(Nfa const& A) {
    auto D = determinize(A);
    for (state_type q = 0; q < D.num_states(); ++q) {
      D.set_accepting(q, !D.accepting(q));
    }
    return D;
  }

  inline Nfa intersect(Nfa const& A, Nfa const& B) {
    check_same_alphabet(A, B);
    Nfa                                              P(A.num_symbols());
    std::map<std::pair<state_type, state_type>, state_type> ids;
    std::vector<std::pair<state_type, state_type>>   todo;
    auto id_of = [&](state_type p, state_type q) {
      auto [it, fresh] = ids.emplace(std::pair(p, q), todo.size());
      if (fresh) {
        todo.emplace_back(p, q);
        P.add_state(A.accepting(p) && B.accepting(q));
      }
      return it->second;
    };
    for (auto p : A.initial()) {
      for (auto q : B.initial()) {
        P.add_initial(id_of(p, q));
      }
    }
    for (std::size_t k = 0; k < todo.size(); ++k) {
      auto [p, q] = todo[k];
      for (auto [a, p2] : A.out(p)) {
        for (auto [b, q2] : B.out(q)) {
          if (a == b) {
            P.add_transition(k, a, id_of(p2, q2));
          }
        }
      }
    }
    return P;
  }

  inline Nfa unite(Nfa const& A, Nfa const& B) {
    check_same_alphabet(A, B);
    Nfa U(A.num_symbols());
    for (state_type q = 0; q < A.num_states(); ++q) {
      U.add_state(A.accepting(q));
    }
    std::size_t const off = A.num_states();
    for (state_type q = 0; q < B.num_states(); ++q) {
      U.add_state(B.accepting(q));
    }
    for (state_type q = 0; q < A.num_states(); ++q) {
      for (auto [a, r] : A.out(q)) {
        U.add_transition(q, a, r);
      }
    }
    for (state_type q = 0; q < B.num_states(); ++q) {
      for (auto [a, r] : B.out(q)) {
        U.add_transition(q + off, a, r + off);
      }
    }
    for (auto q : A.initial()) {
      U.add_initial(q);
    }
    for (auto q : B.initial()) {
      U.add_initial(q + off);
    }
    return U;
  }

  inline Nfa concatenate(Nfa const& A, Nfa const& B) {
    check_same_alphabet(A, B);
    Nfa C(A.num_symbols());
    bool b_empty_word = B.any_accepting(B.initial());
    for (state_type q = 0; q < A.num_states(); ++q) {
      C.add_state(A.accepting(q) && b_empty_word);
    }
    std::size_t const off = A.num_states();
    for (state_type q = 0; q < B.num_states(); ++q) {
      C.add_state(B.accepting(q));
    }
    for (state_type q = 0; q < A.num_states(); ++q) {
      for (auto [a, r] : A.out(q)) {
        C.add_transition(q, a, r);
      }
      if (A.accepting(q)) {
        for (auto i : B.initial()) {
          for (auto [a, r] : B.out(i)) {
            C.add_transition(q, a, r + off);
          }
        }
      }
    }
    for (state_type q = 0; q < B.num_states(); ++q) {
      for (auto [a, r] : B.out(q)) {
        C.add_transition(q + off, a, r + off);
      }
    }
    for (auto q : A.initial()) {
      C.add_initial(q);
    }
    if (A.any_accepting(A.initial())) {
      for (auto q : B.initial()) {
        C.add_initial(q + off);
      }
    }
    return C;
  }

  inline bool is_empty(Nfa const& A) {
    auto ok = coreachable(A);
    return std::none_of(A.initial().begin(), A.initial().end(),
                        [&ok](auto q) { return ok[q]; });
  }

  //! Accepted words of length at most max_len, in shortlex order.
  inline std::vector<std::vector<symbol_type>> enumerate(Nfa const& A,
                                                         std::size_t max_len) {
    auto ok   = coreachable(A);
    auto trim = [&ok](std::vector<state_type> s) {
      s.erase(std::remove_if(s.begin(), s.end(), [&ok](auto q) { return !ok[q]; }),
              s.end());
      return s;
    };
    std::vector<std::vector<symbol_type>> out;
    std::vector<std::pair<std::vector<symbol_type>, std::vector<state_type>>> level;
    auto start = trim(A.initial());
    if (!start.empty()) {
      level.emplace_back(std::vector<symbol_type>{}, start);
    }
    for (std::size_t len = 0; !level.empty(); ++len) {
      for (auto const& [w, s] : level) {
        if (A.any_accepting(s)) {
          out.push_back(w);
        }
      }
      if (len == max_len) {
        break;
      }
      std::vector<std::pair<std::vector<symbol_type>, std::vector<state_type>>> next;
      for (auto const& [w, s] : level) {
        // Only symbols that actually occur, in increasing order.
        std::vector<symbol_type> syms;
        for (auto q : s) {
          for (auto [a, r] : A.out(q)) {
            syms.push_back(a);
          }
        }
        std::sort(syms.begin(), syms.end());
        syms.erase(std::unique(syms.begin(), syms.end()), syms.end());
        for (auto a : syms) {
          auto t = trim(A.step(s, a));
          if (!t.empty()) {
            auto w2 = w;
            w2.push_back(a);
            next.emplace_back(std::move(w2), std::move(t));
          }
        }
      }
      level = std::move(next);
    }
    return out;
  }

  //! Accepts exactly the given words.
  inline Nfa trie_nfa(std::size_t num_symbols,
                      std::vector<std::vector<symbol_type>> const& words) {
    Nfa                                                 A(num_symbols);
    std::map<std::pair<state_type, symbol_type>, state_type> child;
    A.add_initial(A.add_state());
    for (auto const& w : words) {
      state_type q = 0;
      for (auto a : w) {
        auto it = child.find({q, a});
        if (it == child.end()) {
          auto r = A.add_state();
          A.add_transition(q, a, r);
          it = child.emplace(std::pair(q, a), r).first;
        }
        q = it->second;
      }
      A.set_accepting(q);
    }
    return A;
  }

  //! Removes states that are unreachable or cannot reach acceptance.
  inline Nfa trim(Nfa const& A) {
    auto                    ok = coreachable(A);
    std::vector<state_type> id(A.num_states(), std::numeric_limits<state_type>::max());
    Nfa                     B(A.num_symbols());
    std::vector<state_type> stack;
    for (auto q : A.initial()) {
      if (ok[q] && id[q] == std::numeric_limits<state_type>::max()) {
        id[q] = B.add_state(A.accepting(q));
        stack.push_back(q);
      }
    }
    // Depth-first numbering; order does not affect the language.
    std::vector<state_type> order;
    while (!stack.empty()) {
      auto q = stack.back();
      stack.pop_back();
      order.push_back(q);
      for (auto [a, r] : A.out(q)) {
        if (ok[r] && id[r] == std::numeric_limits<state_type>::max()) {
          id[r] = B.add_state(A.accepting(r));
          stack.push_back(r);
        }
      }
    }
    for (auto q : order) {
      for (auto [a, r] : A.out(q)) {
        if (ok[r]) {
          B.add_transition(id[q], a, id[r]);
        }
      }
    }
    for (auto q : A.initial()) {
      if (ok[q]) {
        B.add_initial(id[q]);
      }
    }
    return B;
  }

  ////////////////////////////////////////////////////////////////////////
  // Padded relations
  ////////////////////////////////////////////////////////////////////////

  //! Synchronous two-track automaton.  Track alphabets have sizes
  //! left_size and right_size; the padding symbol $ is index left_size on
  //! the left track and right_size on the right track.  The pair (a, b)
  //! is symbol a * (right_size + 1) + b; ($, $) never occurs.
  struct PaddedRelationNfa {
    std::size_t left_size  = 0;
    std::size_t right_size = 0;
    Nfa         nfa;

    PaddedRelationNfa() = default;
    PaddedRelationNfa(std::size_t l, std::size_t r)
        : left_size(l), right_size(r), nfa((l + 1) * (r + 1)) {}

    std::size_t left_pad() const noexcept {
      return left_size;
    }
    std::size_t right_pad() const noexcept {
      return right_size;
    }
    symbol_type pair(std::size_t a, std::size_t b) const {
      if (a > left_size || b > right_size || (a == left_size && b == right_size)) {
        throw error(error_kind::invalid_letter, "invalid padded pair");
      }
      return a * (right_size + 1) + b;
    }
    std::size_t left_of(symbol_type s) const noexcept {
      return s / (right_size + 1);
    }
    std::size_t right_of(symbol_type s) const noexcept {
      return s % (right_size + 1);
    }

    bool accepts(word_type const& u, word_type const& v) const;
  };

  //! The padded convolution of u and v: the shorter word is filled with $.
  inline std::vector<symbol_type> convolve(PaddedRelationNfa const& R,
                                           word_type const&         u,
                                           word_type const&         v) {
    std::vector<symbol_type> out;
    std::size_t const        m = std::max(u.size(), v.size());
    for (std::size_t k = 0; k < m; ++k) {
      std::size_t a = k < u.size() ? u[k] : R.left_pad();
      std::size_t b = k < v.size() ? v[k] : R.right_pad();
      if (a > R.left_size || b > R.right_size || (k < u.size() && a == R.left_pad())
          || (k < v.size() && b == R.right_pad())) {
        throw error(error_kind::invalid_letter, "letter outside track alphabet");
      }
      out.push_back(R.pair(a, b));
    }
    return out;
  }

  //! Inverse of convolve; throws if the string is not well padded.
  inline std::pair<word_type, word_type>
  deconvolve(PaddedRelationNfa const& R, std::vector<symbol_type> const& s) {
    word_type u, v;
    bool      u_done = false, v_done = false;
    for (auto x : s) {
      auto a = R.left_of(x), b = R.right_of(x);
      if (a == R.left_pad()) {
        u_done = true;
      } else if (u_done) {
        throw error(error_kind::invalid_letter, "letter after padding");
      } else {
        u.push_back(a);
      }
      if (b == R.right_pad()) {
        v_done = true;
      } else if (v_done) {
        throw error(error_kind::invalid_letter, "letter after padding");
      } else {
        v.push_back(b);
      }
    }
    return {u, v};
  }

  inline bool PaddedRelationNfa::accepts(word_type const& u,
                                         word_type const& v) const {
    return nfa.accepts(convolve(*this, u, v));
  }

  //! Accepted pairs whose padded length is at most max_len, in shortlex
  //! order of the padded strings.
  inline std::vector<std::pair<word_type, word_type>>
  enumerate_pairs(PaddedRelationNfa const& R, std::size_t max_len) {
    std::vector<std::pair<word_type, word_type>> out;
    for (auto const& s : enumerate(R.nfa, max_len)) {
      out.push_back(deconvolve(R, s));
    }
    return out;
  }

  //! All well-padded strings over the pair alphabet.
  inline PaddedRelationNfa padding_language(std::size_t l, std::size_t r) {
    PaddedRelationNfa W(l, r);
    // 0: neither track ended, 1: left ended, 2: right ended.
    for (int k = 0; k < 3; ++k) {
      W.nfa.add_state(true);
    }
    W.nfa.add_initial(0);
    for (std::size_t a = 0; a <= l; ++a) {
      for (std::size_t b = 0; b <= r; ++b) {
        if (a == l && b == r) {
          continue;
        }
        auto s = W.pair(a, b);
        if (a < l && b < r) {
          W.nfa.add_transition(0, s, 0);
        } else if (a == l) {
          W.nfa.add_transition(0, s, 1);
          W.nfa.add_transition(1, s, 1);
        } else {
          W.nfa.add_transition(0, s, 2);
          W.nfa.add_transition(2, s, 2);
        }
      }
    }
    return W;
  }

  inline void check_same_tracks(PaddedRelationNfa const& R1,
                                PaddedRelationNfa const& R2) {
    if (R1.left_size != R2.left_size || R1.right_size != R2.right_size) {
      throw error(error_kind::alphabet_mismatch, "track alphabets differ");
    }
  }

  //! Complement within the well-padded pairs.
  inline PaddedRelationNfa complement(PaddedRelationNfa const& R) {
    PaddedRelationNfa C(R.left_size, R.right_size);
    C.nfa = intersect(complement(R.nfa), padding_language(R.left_size, R.right_size).nfa);
    return C;
  }

  inline PaddedRelationNfa intersect(PaddedRelationNfa const& R1,
                                     PaddedRelationNfa const& R2) {
    check_same_tracks(R1, R2);
    PaddedRelationNfa C(R1.left_size, R1.right_size);
    C.nfa = intersect(R1.nfa, R2.nfa);
    return C;
  }

  inline PaddedRelationNfa unite(PaddedRelationNfa const& R1,
                                 PaddedRelationNfa const& R2) {
    check_same_tracks(R1, R2);
    PaddedRelationNfa C(R1.left_size, R1.right_size);
    C.nfa = unite(R1.nfa, R2.nfa);
    return C;
  }

  //! {(v, u) : (u, v) in R}.
  inline PaddedRelationNfa invert(PaddedRelationNfa const& R) {
    PaddedRelationNfa I(R.right_size, R.left_size);
    for (state_type q = 0; q < R.nfa.num_states(); ++q) {
      I.nfa.add_state(R.nfa.accepting(q));
    }
    for (state_type q = 0; q < R.nfa.num_states(); ++q) {
      for (auto [s, r] : R.nfa.out(q)) {
        I.nfa.add_transition(q, I.pair(R.right_of(s), R.left_of(s)), r);
      }
    }
    for (auto q : R.nfa.initial()) {
      I.nfa.add_initial(q);
    }
    return I;
  }

  namespace detail {
    // Removes epsilon moves: eps[q] lists the epsilon successors of q.
    inline Nfa eliminate_epsilon(
        std::size_t num_symbols,
        std::vector<std::vector<std::pair<symbol_type, state_type>>> const& moves,
        std::vector<std::vector<state_type>> const& eps,
        std::vector<bool> const& acc, std::vector<state_type> const& init) {
      std::size_t const n = moves.size();
      Nfa               A(num_symbols);
      for (std::size_t q = 0; q < n; ++q) {
        A.add_state(false);
      }
      for (std::size_t q = 0; q < n; ++q) {
        std::vector<bool>       seen(n, false);
        std::vector<state_type> stack{q};
        seen[q] = true;
        while (!stack.empty()) {
          auto p = stack.back();
          stack.pop_back();
          if (acc[p]) {
            A.set_accepting(q);
          }
          for (auto [a, r] : moves[p]) {
            A.add_transition(q, a, r);
          }
          for (auto r : eps[p]) {
            if (!seen[r]) {
              seen[r] = true;
              stack.push_back(r);
            }
          }
        }
      }
      for (auto q : init) {
        A.add_initial(q);
      }
      return A;
    }
  }  // namespace detail

  //! The language of one track (0 = left, 1 = right).
  inline Nfa project(PaddedRelationNfa const& R, int track) {
    if (track != 0 && track != 1) {
      throw error(error_kind::out_of_range, "track must be 0 or 1");
    }
    std::size_t const n = R.nfa.num_states();
    std::vector<std::vector<std::pair<symbol_type, state_type>>> moves(n);
    std::vector<std::vector<state_type>>                         eps(n);
    std::vector<bool>                                            acc(n);
    for (state_type q = 0; q < n; ++q) {
      acc[q] = R.nfa.accepting(q);
      for (auto [s, r] : R.nfa.out(q)) {
        auto x   = track == 0 ? R.left_of(s) : R.right_of(s);
        auto pad = track == 0 ? R.left_pad() : R.right_pad();
        if (x == pad) {
          eps[q].push_back(r);
        } else {
          moves[q].emplace_back(x, r);
        }
      }
    }
    return trim(detail::eliminate_epsilon(track == 0 ? R.left_size : R.right_size,
                                          moves, eps, acc, R.nfa.initial()));
  }

  //! {(u, u) : u in L}.
  inline PaddedRelationNfa identity_relation(Nfa const& L) {
    PaddedRelationNfa I(L.num_symbols(), L.num_symbols());
    for (state_type q = 0; q < L.num_states(); ++q) {
      I.nfa.add_state(L.accepting(q));
    }
    for (state_type q = 0; q < L.num_states(); ++q) {
      for (auto [a, r] : L.out(q)) {
        I.nfa.add_transition(q, I.pair(a, a), r);
      }
    }
    for (auto q : L.initial()) {
      I.nfa.add_initial(q);
    }
    return I;
  }

  //! Accepts exactly the given pairs.
  inline PaddedRelationNfa
  pair_trie(std::size_t l, std::size_t r,
            std::vector<std::pair<word_type, word_type>> const& pairs) {
    PaddedRelationNfa                     R(l, r);
    std::vector<std::vector<symbol_type>> strings;
    for (auto const& [u, v] : pairs) {
      strings.push_back(convolve(R, u, v));
    }
    R.nfa = trie_nfa(R.nfa.num_symbols(), strings);
    return R;
  }

  //! (u, w) such that the right track of R1 equals the left track of R2 for
  //! some middle word v.
  class DelayExceeded : public error {
   public:
    DelayExceeded(std::string const& msg, word_type u, word_type w,
                  std::size_t overhang)
        : error(error_kind::delay_exceeded, msg), _u(std::move(u)),
          _w(std::move(w)), _overhang(overhang) {}

    word_type const& left() const noexcept {
      return _u;
    }
    word_type const& right() const noexcept {
      return _w;
    }
    std::size_t overhang() const noexcept {
      return _overhang;
    }

   private:
    word_type   _u, _w;
    std::size_t _overhang;
  };

  //! {(u, w) : (u, v) in R1 and (v, w) in R2 for some v}.  The tracks are
  //! read in step; once u and w have both ended, the remainder of v is
  //! consumed by epsilon moves.  Throws DelayExceeded if some pair is only
  //! witnessed by a v overhanging u and w by more than delay_bound letters.
  inline PaddedRelationNfa compose_relations(PaddedRelationNfa const& R1,
                                             PaddedRelationNfa const& R2,
                                             std::size_t delay_bound) {
    if (R1.right_size != R2.left_size) {
      throw error(error_kind::alphabet_mismatch,
                  "middle track alphabets differ");
    }
    PaddedRelationNfa C(R1.left_size, R2.right_size);
    std::size_t const mid_pad = R1.right_pad();

    // A track pair whose words have both ended keeps reading ($, $); the
    // extra state `done` of each factor stands for that.
    state_type const done1 = R1.nfa.num_states();
    state_type const done2 = R2.nfa.num_states();
    auto accepting = [](PaddedRelationNfa const& R, state_type p, state_type done) {
      return p == done || R.nfa.accepting(p);
    };
    // (left, right, target) moves of R from p, including ($, $) moves.
    auto moves_of = [&](PaddedRelationNfa const& R, state_type p, state_type done) {
      std::vector<std::tuple<std::size_t, std::size_t, state_type>> out;
      if (p != done) {
        for (auto [s, p2] : R.nfa.out(p)) {
          out.emplace_back(R.left_of(s), R.right_of(s), p2);
        }
      }
      if (accepting(R, p, done)) {
        out.emplace_back(R.left_pad(), R.right_pad(), done);
      }
      return out;
    };

    std::map<std::pair<state_type, state_type>, state_type>      ids;
    std::vector<std::pair<state_type, state_type>>               states;
    std::vector<std::vector<std::pair<symbol_type, state_type>>> moves;
    std::vector<std::vector<state_type>>                         eps;
    std::vector<bool>                                            acc;

    auto id_of = [&](state_type p, state_type q) {
      auto [it, fresh] = ids.emplace(std::pair(p, q), states.size());
      if (fresh) {
        states.emplace_back(p, q);
        moves.emplace_back();
        eps.emplace_back();
        acc.push_back(accepting(R1, p, done1) && accepting(R2, q, done2));
      }
      return std::pair(it->second, fresh);
    };
    std::vector<state_type> init;
    for (auto p : R1.nfa.initial()) {
      for (auto q : R2.nfa.initial()) {
        init.push_back(id_of(p, q).first);
      }
    }
    for (std::size_t k = 0; k < states.size(); ++k) {
      auto [p, q] = states[k];
      // R2 moves grouped by their left (middle) symbol.
      std::map<std::size_t, std::vector<std::pair<std::size_t, state_type>>> by_mid;
      for (auto [y, z, q2] : moves_of(R2, q, done2)) {
        by_mid[y].emplace_back(z, q2);
      }
      for (auto [x, y, p2] : moves_of(R1, p, done1)) {
        auto it = by_mid.find(y);
        if (it == by_mid.end()) {
          continue;
        }
        for (auto [z, q2] : it->second) {
          bool outer_ended = x == C.left_pad() && z == C.right_pad();
          if (outer_ended && y == mid_pad) {
            continue;  // all three tracks ended
          }
          auto t = id_of(p2, q2).first;
          if (outer_ended) {
            eps[k].push_back(t);
          } else {
            moves[k].emplace_back(C.pair(x, z), t);
          }
        }
      }
    }

    // Least number of epsilon moves needed from each state to acceptance.
    std::size_t const        inf = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> dist(states.size(), inf);
    std::deque<state_type>   queue;
    std::vector<std::vector<state_type>> rev(states.size());
    for (std::size_t k = 0; k < states.size(); ++k) {
      for (auto t : eps[k]) {
        rev[t].push_back(k);
      }
      if (acc[k]) {
        dist[k] = 0;
        queue.push_back(k);
      }
    }
    while (!queue.empty()) {
      auto t = queue.front();
      queue.pop_front();
      for (auto k : rev[t]) {
        if (dist[k] == inf) {
          dist[k] = dist[t] + 1;
          queue.push_back(k);
        }
      }
    }
    // Epsilon moves only occur after both outer tracks have ended, so the
    // overhang needed for a padded string s is the least dist over the
    // states reached by reading s.  Check every reachable subset.
    std::map<std::vector<state_type>, bool> seen;
    std::deque<std::pair<std::vector<state_type>, std::vector<symbol_type>>> todo;
    {
      auto start = init;
      std::sort(start.begin(), start.end());
      start.erase(std::unique(start.begin(), start.end()), start.end());
      seen[start] = true;
      todo.emplace_back(std::move(start), std::vector<symbol_type>{});
    }
    while (!todo.empty()) {
      auto [X, s] = std::move(todo.front());
      todo.pop_front();
      std::size_t m = inf;
      for (auto x : X) {
        m = std::min(m, dist[x]);
      }
      if (m != inf && m > delay_bound) {
        auto [u, w] = deconvolve(C, s);
        throw DelayExceeded("composition needs a middle word overhanging by "
                                + std::to_string(m) + " > "
                                + std::to_string(delay_bound) + " letters",
                            u, w, m);
      }
      std::map<symbol_type, std::vector<state_type>> next;
      for (auto x : X) {
        for (auto [a, t] : moves[x]) {
          next[a].push_back(t);
        }
      }
      for (auto& [a, Y] : next) {
        std::sort(Y.begin(), Y.end());
        Y.erase(std::unique(Y.begin(), Y.end()), Y.end());
        if (seen.emplace(Y, true).second) {
          auto s2 = s;
          s2.push_back(a);
          todo.emplace_back(Y, std::move(s2));
        }
      }
    }
    C.nfa = trim(detail::eliminate_epsilon(C.nfa.num_symbols(), moves, eps, acc, init));
    return C;
  }

}  // namespace greenidx

#endif  // GREENIDX_AUTOMATA_HPP_
