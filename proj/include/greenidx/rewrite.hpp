// Pushing complement representatives through products from either side,
// Schreier-type generators for T, and generators for S built from
// generators of T.

#ifndef GREENIDX_REWRITE_HPP_
#define GREENIDX_REWRITE_HPP_

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "error.hpp"
#include "relgreen.hpp"
#include "semigroup.hpp"
#include "words.hpp"

namespace greenidx {

  //! Result of pushing h_i through s_1 ... s_n.
  //!
  //! Left to right:  h_i s_1 ... s_n = t_1 ... t_n h_j
  //! Right to left:  s_1 ... s_n h_i = h_j t_1 ... t_n
  //!
  //! indices holds i_1, ..., i_{n+1} for the former and i_0, ..., i_n for
  //! the latter, so that indices.front()/back() are the end points.
  struct RewriteTrace {
    class_index               input_class = one_class;
    word_type                 input_word;
    word_type                 output_word;  // letters in T^1
    class_index               output_class = one_class;
    std::vector<class_index>  indices;
  };

  inline void check_word(ConnectorTables const&        conn,
                         std::span<element_type const> w,
                         class_index                   i) {
    if (i >= conn.num_indices()) {
      throw error(error_kind::out_of_range,
                  "class index " + std::to_string(i) + " not in I^1");
    }
    for (auto s : w) {
      if (s + 1 >= conn.num_elements()) {
        throw error(error_kind::out_of_range,
                    std::to_string(s) + " is not an element of S");
      }
    }
  }

  //! h_i s_1 ... s_n = t_1 ... t_n h_j with i_{k+1} = lambda(i_k, s_k) and
  //! t_k = tau(i_k, s_k).
  inline RewriteTrace push_right(class_index                   i,
                                 std::span<element_type const> w,
                                 ConnectorTables const&        conn) {
    check_word(conn, w, i);
    RewriteTrace tr;
    tr.input_class = i;
    tr.input_word.assign(w.begin(), w.end());
    tr.indices.push_back(i);
    class_index cur = i;
    for (auto s : w) {
      tr.output_word.push_back(conn.tau(cur, s));
      cur = conn.lambda(cur, s);
      tr.indices.push_back(cur);
    }
    tr.output_class = cur;
    return tr;
  }

  //! s_1 ... s_n h_i = h_j t_1 ... t_n with i_{k-1} = rho(s_k, i_k) and
  //! t_k = sigma(s_k, i_k), working from the right.
  inline RewriteTrace push_left(class_index                   i,
                                std::span<element_type const> w,
                                ConnectorTables const&        conn) {
    check_word(conn, w, i);
    RewriteTrace tr;
    tr.input_class = i;
    tr.input_word.assign(w.begin(), w.end());
    tr.output_word.resize(w.size());
    tr.indices.resize(w.size() + 1);
    class_index cur         = i;
    tr.indices[w.size()]    = i;
    for (std::size_t k = w.size(); k-- > 0;) {
      tr.output_word[k] = conn.sigma(w[k], cur);
      cur               = conn.rho(w[k], cur);
      tr.indices[k]     = cur;
    }
    tr.output_class = cur;
    return tr;
  }

  //! The generating set B = {tau(i, sigma(a, j))} \ {1} of T together with
  //! the two-pass factorization from the proof that B generates T.
  class SchreierGenerators {
   public:
    SchreierGenerators(FiniteSemigroup const&        S,
                       std::span<element_type const> A,
                       SubSemigroup const&           T,
                       GreenData const&              G,
                       ConnectorTables const&        conn)
        : _S(S), _conn(conn), _a(A.begin(), A.end()),
          _a_words(S, A), _t(T) {
      if (closure(S, A).size() != S.size()) {
        throw error(error_kind::not_generating, "A does not generate S");
      }
      std::vector<bool> in_b(S.size(), false);
      for (class_index i = 0; i < G.num_indices(); ++i) {
        for (auto a : _a) {
          for (class_index j = 0; j < G.num_indices(); ++j) {
            auto b = conn.tau(i, conn.sigma(a, j));
            if (b != S.one()) {
              in_b[b] = true;
            }
          }
        }
      }
      for (std::size_t x = 0; x < S.size(); ++x) {
        if (in_b[x]) {
          _b.push_back(x);
        }
      }
    }

    //! B, sorted.
    std::vector<element_type> const& generators() const noexcept {
      return _b;
    }

    //! Rewrites t (a product a_1 ... a_n of generators from A) into a
    //! product of elements of B.  Factors equal to the adjoined identity are
    //! dropped, so the result has length at most n.
    word_type factorize(element_type t) const {
      if (!_t.contains(t)) {
        throw error(error_kind::not_in_subsemigroup,
                    std::to_string(t) + " is not in T");
      }
      auto const& conn = _conn;
      word_type   a;
      for (auto pos : _a_words.word(t)) {
        a.push_back(_a[pos]);
      }
      // Right to left from h_1 = 1.
      auto pass1 = push_left(one_class, a, conn);
      // Left to right from h_{i_0}; ends at index 1 since the product is in T.
      auto pass2 = push_right(pass1.output_class, pass1.output_word, conn);
      if (pass2.output_class != one_class) {
        throw error(error_kind::internal_inconsistency,
                    "second pass did not return to 1");
      }
      word_type out;
      for (auto b : pass2.output_word) {
        if (b != _S.one()) {
          out.push_back(b);
        }
      }
      return out;
    }

   private:
    FiniteSemigroup           _S;
    ConnectorTables           _conn;
    std::vector<element_type> _a;
    ShortlexFactorizer        _a_words;
    SubSemigroup              _t;
    std::vector<element_type> _b;
  };

  inline SchreierGenerators schreier_generators(FiniteSemigroup const&        S,
                                                std::span<element_type const> A,
                                                SubSemigroup const&           T,
                                                GreenData const&              G,
                                                ConnectorTables const& conn) {
    return SchreierGenerators(S, A, T, G, conn);
  }

  //! B u {h_i : i in I}, sorted; generates S whenever B generates T.
  inline std::vector<element_type>
  extended_generators(FiniteSemigroup const&        S,
                      std::span<element_type const> B,
                      GreenData const&              G) {
    auto Tgen = closure(S, B);
    if (!(Tgen == G.sub())) {
      throw error(error_kind::not_generating, "B does not generate T");
    }
    std::vector<element_type> out(B.begin(), B.end());
    for (class_index i = 1; i < G.num_indices(); ++i) {
      out.push_back(G.representative(i));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

}  // namespace greenidx

#endif  // GREENIDX_REWRITE_HPP_
