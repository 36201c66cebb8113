// Automatic structures over finite semigroups and their transfer to a
// subsemigroup of finite Green index.

#ifndef GREENIDX_AUTOMATIC_HPP_
#define GREENIDX_AUTOMATIC_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "automata.hpp"
#include "error.hpp"
#include "relgreen.hpp"
#include "semigroup.hpp"
#include "words.hpp"

namespace greenidx {

  //! (A, L) with multipliers L_a for each letter and L_eps for equality.
  struct AutomaticStructure {
    std::vector<std::string>       alphabet;
    std::vector<element_type>      values;  // letter -> element of S
    Nfa                            language;
    std::vector<PaddedRelationNfa> multipliers;  // one per letter
    PaddedRelationNfa              equality;

    element_type evaluate(FiniteSemigroup const& S, word_type const& w) const {
      return evaluate_letters(S, values, w);
    }
  };

  //! L = shortlex least words over A, one per element.
  inline AutomaticStructure structure_for_finite(FiniteSemigroup const&        S,
                                                 std::span<element_type const> A) {
    check_elements(S, A);
    if (A.empty() || closure(S, A).size() != S.size()) {
      throw error(error_kind::not_generating, "A does not generate S");
    }
    AutomaticStructure st;
    st.values.assign(A.begin(), A.end());
    for (auto a : A) {
      st.alphabet.push_back(S.name(a));
    }
    ShortlexFactorizer     fact(S, A);
    std::vector<word_type> words;
    for (element_type x = 0; x < S.size(); ++x) {
      words.push_back(fact.word(x));
    }
    std::vector<word_type> sorted = words;
    std::sort(sorted.begin(), sorted.end(), [](auto const& u, auto const& v) {
      return u.size() != v.size() ? u.size() < v.size() : u < v;
    });
    st.language = trie_nfa(A.size(), sorted);
    std::size_t const k = A.size();
    for (std::size_t a = 0; a < k; ++a) {
      std::vector<std::pair<word_type, word_type>> pairs;
      for (element_type x = 0; x < S.size(); ++x) {
        pairs.emplace_back(words[x], words[S.product(x, A[a])]);
      }
      st.multipliers.push_back(pair_trie(k, k, pairs));
    }
    std::vector<std::pair<word_type, word_type>> eq;
    for (element_type x = 0; x < S.size(); ++x) {
      eq.emplace_back(words[x], words[x]);
    }
    st.equality = pair_trie(k, k, eq);
    return st;
  }

  struct StructureCheck {
    bool        ok = false;
    std::string reason;
    //! Offending pair and multiplier (letter index, or nullopt for eps).
    std::optional<std::pair<word_type, word_type>> witness;
    std::optional<std::size_t>                     letter;
  };

  //! Checks the structure on all words of length at most max_len: L
  //! evaluates into and onto target, and each multiplier accepts exactly
  //! the pairs (u, v) of L-words with u a = v (u = v for eps).
  inline StructureCheck verify_structure(AutomaticStructure const&     st,
                                         FiniteSemigroup const&        S,
                                         std::span<element_type const> target,
                                         std::size_t                   max_len) {
    StructureCheck check;
    std::size_t const k = st.alphabet.size();
    if (st.values.size() != k || st.multipliers.size() != k
        || st.language.num_symbols() != k) {
      check.reason = "alphabet sizes disagree";
      return check;
    }
    check_elements(S, st.values);
    std::vector<bool> in_target(S.size(), false);
    for (auto t : target) {
      in_target.at(t) = true;
    }
    auto                   words = enumerate(st.language, max_len);
    std::vector<element_type> value;
    std::vector<bool>         hit(S.size(), false);
    for (auto const& w : words) {
      if (w.empty()) {
        check.reason  = "L contains the empty word";
        check.witness = std::pair(w, w);
        return check;
      }
      auto x = st.evaluate(S, w);
      if (!in_target[x]) {
        check.reason  = "a word of L evaluates outside the target";
        check.witness = std::pair(w, w);
        return check;
      }
      value.push_back(x);
      hit[x] = true;
    }
    for (auto t : target) {
      if (!hit[t]) {
        check.reason = "L is not onto: no word of length <= "
                     + std::to_string(max_len) + " represents " + S.name(t);
        return check;
      }
    }
    std::set<word_type> in_l(words.begin(), words.end());
    auto check_relation = [&](PaddedRelationNfa const& R,
                              std::optional<std::size_t> letter) {
      if (R.left_size != k || R.right_size != k) {
        check.reason = "multiplier over the wrong alphabet";
        check.letter = letter;
        return false;
      }
      for (std::size_t p = 0; p < words.size(); ++p) {
        auto expect = letter ? S.product(value[p], st.values[*letter]) : value[p];
        for (std::size_t q = 0; q < words.size(); ++q) {
          bool want = value[q] == expect;
          if (R.accepts(words[p], words[q]) != want) {
            check.reason  = want ? "multiplier misses a pair" : "multiplier accepts a wrong pair";
            check.witness = std::pair(words[p], words[q]);
            check.letter  = letter;
            return false;
          }
        }
      }
      // Pairs outside L x L must not be accepted either.
      for (auto const& [u, v] : enumerate_pairs(R, max_len)) {
        if (!in_l.count(u) || !in_l.count(v)) {
          check.reason  = "multiplier accepts a pair outside L x L";
          check.witness = std::pair(u, v);
          check.letter  = letter;
          return false;
        }
      }
      return true;
    };
    for (std::size_t a = 0; a < k; ++a) {
      if (!check_relation(st.multipliers[a], a)) {
        return check;
      }
    }
    if (!check_relation(st.equality, std::nullopt)) {
      return check;
    }
    check.ok = true;
    return check;
  }

  //! True iff L is finite.
  inline bool is_finite(Nfa const& L) {
    auto A = trim(L);
    // Three-colour depth first search for a cycle.
    std::vector<int> colour(A.num_states(), 0);
    std::vector<std::pair<state_type, std::size_t>> stack;
    for (state_type s = 0; s < A.num_states(); ++s) {
      if (colour[s] != 0) {
        continue;
      }
      stack.emplace_back(s, 0);
      colour[s] = 1;
      while (!stack.empty()) {
        auto& [q, pos] = stack.back();
        auto const& tr = A.out(q);
        if (pos == tr.size()) {
          colour[q] = 2;
          stack.pop_back();
          continue;
        }
        auto r = tr[pos++].second;
        if (colour[r] == 1) {
          return false;
        }
        if (colour[r] == 0) {
          colour[r] = 1;
          stack.emplace_back(r, 0);
        }
      }
    }
    return true;
  }

  //! One letter b_{j,a,i} of the transfer alphabet.
  struct TransferLetter {
    class_index  j = one_class;
    std::size_t  a = 0;
    class_index  i = one_class;
    element_type value = 0;  // may be the adjoined identity
  };

  struct TransferResult {
    //! The structure for T.  Letters whose value is the adjoined identity
    //! are left out and erased from the words of M and M_b.
    AutomaticStructure          structure;
    //! All letters b_{j,a,i}, indexed (j * |A| + a) * |I^1| + i.
    std::vector<TransferLetter> full_letters;
    //! structure letter -> index in full_letters.
    std::vector<std::size_t>    kept;
    //! R over A x full_letters.
    PaddedRelationNfa           rewriting;
    //! M over full_letters (before erasure).
    Nfa                         m_full;
  };

  //! R: pairs (a_1...a_n, b_{j_1,a_1,i_1}...b_{j_n,a_n,i_n}) with i_n = 1,
  //! i_{k-1} = rho(a_k, i_k), j_1 = rho(a_1, i_1),
  //! j_{l+1} = lambda(j_l, sigma(a_l, i_l)) and lambda(j_n, sigma(a_n, i_n)) = 1.
  inline PaddedRelationNfa
  rewriting_relation(AutomaticStructure const&          st,
                     ConnectorTables const&             conn,
                     std::vector<TransferLetter> const& letters) {
    std::size_t const na = st.alphabet.size();
    PaddedRelationNfa R(na, letters.size());
    auto const start = R.nfa.add_state(false);
    R.nfa.add_initial(start);
    // State 1 + b: the last B-letter read was b.
    for (auto const& b : letters) {
      auto last = conn.lambda(b.j, conn.sigma(st.values[b.a], b.i));
      R.nfa.add_state(b.i == one_class && last == one_class);
    }
    for (std::size_t b = 0; b < letters.size(); ++b) {
      auto const& L = letters[b];
      auto const  s = st.values[L.a];
      if (L.j == conn.rho(s, L.i)) {
        R.nfa.add_transition(start, R.pair(L.a, b), 1 + b);
      }
      for (std::size_t p = 0; p < letters.size(); ++p) {
        auto const& P = letters[p];
        if (P.i == conn.rho(s, L.i)
            && L.j == conn.lambda(P.j, conn.sigma(st.values[P.a], P.i))) {
          R.nfa.add_transition(1 + p, R.pair(L.a, b), 1 + b);
        }
      }
    }
    return R;
  }

  inline TransferResult transfer(AutomaticStructure const& st,
                                 FiniteSemigroup const&    S,
                                 GreenData const&          G,
                                 ConnectorTables const&    conn,
                                 std::optional<std::size_t> delay_bound = std::nullopt) {
    std::size_t const delay = delay_bound.value_or(S.size() + 1);
    std::size_t const na    = st.alphabet.size();
    std::size_t const k     = G.num_indices();
    check_elements(S, st.values);
    TransferResult out;
    for (class_index j = 0; j < k; ++j) {
      for (std::size_t a = 0; a < na; ++a) {
        for (class_index i = 0; i < k; ++i) {
          out.full_letters.push_back(
              {j, a, i, conn.tau(j, conn.sigma(st.values[a], i))});
        }
      }
    }
    std::size_t const nb = out.full_letters.size();
    out.rewriting        = rewriting_relation(st, conn, out.full_letters);
    out.m_full = project(compose_relations(identity_relation(st.language),
                                           out.rewriting, delay),
                         1);

    auto R_inv = invert(out.rewriting);
    // M_w for w a word over A: R^{-1} o L_w o R.
    auto conjugate = [&](word_type const& w) {
      PaddedRelationNfa Lw = w.empty() ? st.equality : st.multipliers[w[0]];
      for (std::size_t p = 1; p < w.size(); ++p) {
        Lw = compose_relations(Lw, st.multipliers[w[p]], delay);
      }
      return compose_relations(R_inv, compose_relations(Lw, out.rewriting, delay),
                               delay);
    };
    // Shortlex least L-word for each value.
    std::map<element_type, word_type> l_word;
    if (is_finite(st.language)) {
      for (auto const& w : enumerate(st.language, std::numeric_limits<std::size_t>::max())) {
        l_word.emplace(st.evaluate(S, w), w);
      }
    } else {
      for (std::size_t len = 1; len <= 4 * S.size() + 8; ++len) {
        for (auto const& w : enumerate(st.language, len)) {
          l_word.emplace(st.evaluate(S, w), w);
        }
        if (l_word.size() == S.size()) {
          break;
        }
      }
    }
    std::map<element_type, PaddedRelationNfa> by_value;
    std::vector<PaddedRelationNfa const*>      m_b(nb, nullptr);
    for (std::size_t b = 0; b < nb; ++b) {
      auto v = out.full_letters[b].value;
      if (v == S.one()) {
        continue;
      }
      auto it = by_value.find(v);
      if (it == by_value.end()) {
        auto w = l_word.find(v);
        if (w == l_word.end()) {
          throw error(error_kind::internal_inconsistency,
                      "no L-word found for " + S.name(v));
        }
        it = by_value.emplace(v, conjugate(w->second)).first;
      }
      m_b[b] = &it->second;
    }
    auto m_eq = conjugate({});

    AutomaticStructure& T_st = out.structure;
    std::vector<std::size_t> new_index(nb, nb);
    for (std::size_t b = 0; b < nb; ++b) {
      auto const& L = out.full_letters[b];
      if (L.value == S.one()) {
        continue;
      }
      new_index[b] = out.kept.size();
      out.kept.push_back(b);
      T_st.values.push_back(L.value);
      T_st.alphabet.push_back("b(" + std::to_string(L.j + 1) + "," + st.alphabet[L.a]
                              + "," + std::to_string(L.i + 1) + ")");
    }
    std::size_t const nk = out.kept.size();
    if (nk == nb) {
      // Nothing to erase: relabelling is the identity.
      T_st.language = out.m_full;
      for (auto b : out.kept) {
        T_st.multipliers.push_back(*m_b[b]);
      }
      T_st.equality = m_eq;
      return out;
    }
    // Some letters evaluate to the adjoined identity.  M is finite here
    // (it is the image of the finite L), so erase them word by word.
    if (!is_finite(out.m_full)) {
      throw error(error_kind::input_error,
                  "identity-valued transfer letters need a finite language");
    }
    auto erase = [&](word_type const& w) {
      word_type e;
      for (auto b : w) {
        if (new_index[b] != nb) {
          e.push_back(new_index[b]);
        }
      }
      return e;
    };
    auto erase_pairs = [&](PaddedRelationNfa const& R) {
      std::set<std::pair<word_type, word_type>> pairs;
      for (auto const& [u, v] : enumerate_pairs(R, std::numeric_limits<std::size_t>::max())) {
        pairs.emplace(erase(u), erase(v));
      }
      return pair_trie(nk, nk, {pairs.begin(), pairs.end()});
    };
    std::set<word_type> words;
    for (auto const& w : enumerate(out.m_full, std::numeric_limits<std::size_t>::max())) {
      words.insert(erase(w));
    }
    T_st.language = trie_nfa(nk, {words.begin(), words.end()});
    std::map<element_type, PaddedRelationNfa> erased;
    for (auto b : out.kept) {
      auto v  = out.full_letters[b].value;
      auto it = erased.find(v);
      if (it == erased.end()) {
        it = erased.emplace(v, erase_pairs(*m_b[b])).first;
      }
      T_st.multipliers.push_back(it->second);
    }
    T_st.equality = erase_pairs(m_eq);
    return out;
  }

}  // namespace greenidx

#endif  // GREENIDX_AUTOMATIC_HPP_
