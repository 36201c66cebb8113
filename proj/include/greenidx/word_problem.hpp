// Deciding equality of words over B u {d_i} by rewriting to normal shapes
// and deferring to word problems for T and the Schutzenberger groups.

#ifndef GREENIDX_WORD_PROBLEM_HPP_
#define GREENIDX_WORD_PROBLEM_HPP_

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "present.hpp"
#include "relgreen.hpp"
#include "schutz.hpp"
#include "semigroup.hpp"

namespace greenidx {

  //! Equality of two words over B (empty word = 1) in T^1.
  using t_word_problem = std::function<bool(word_type const&, word_type const&)>;
  //! Given i in I and words u, v over B with h_i u, h_i v in H_i, decides
  //! whether u and v represent the same element of Gamma_i.
  using gamma_word_problem
      = std::function<bool(class_index, word_type const&, word_type const&)>;

  struct WordProblemContext {
    SynthesisResult    synthesis;
    t_word_problem     t_equal;
    gamma_word_problem gamma_equal;
  };

  //! Both callbacks answer by evaluating in S.
  inline WordProblemContext finite_word_problem_context(FiniteSemigroup const& S,
                                                        GreenData const&       G,
                                                        SynthesisResult        syn) {
    WordProblemContext ctx;
    std::vector<element_type> b_values(syn.alpha.images.begin(),
                                       syn.alpha.images.begin() + syn.num_b);
    ctx.t_equal = [S, b_values](word_type const& u, word_type const& v) {
      return evaluate_letters(S, b_values, u) == evaluate_letters(S, b_values, v);
    };
    std::vector<SchutzGroup> gammas;
    for (class_index i = 1; i < G.num_indices(); ++i) {
      gammas.push_back(complement_schutz_group(S, G, i));
    }
    ctx.gamma_equal = [S, b_values, gammas](class_index i, word_type const& u,
                                            word_type const& v) {
      auto const& Gamma = gammas.at(i - 1);
      return Gamma.quotient(evaluate_letters(S, b_values, u))
             == Gamma.quotient(evaluate_letters(S, b_values, v));
    };
    ctx.synthesis = std::move(syn);
    return ctx;
  }

  struct WordProblemTrace {
    //! d_j w'' after the first two passes; j = 1 means the word is in T.
    word_type   t_word;
    class_index suffix_class = one_class;
    //! d_r w''' after the third pass (complement case only).
    class_index prefix_class = one_class;
    word_type   gamma_word;
  };

  struct WordProblemVerdict {
    bool             equal = false;
    char             branch = 'a';  // 'a', 'b' or 'c'
    WordProblemTrace first, second;
  };

  namespace detail {
    // w d_i = d_r w' using a d_i = d_rho sigma, right to left.
    inline std::pair<class_index, word_type>
    push_d_left(SynthesisResult const& syn, word_type const& w, class_index i) {
      class_index cur = i;
      std::vector<word_type const*> parts;
      for (std::size_t k = w.size(); k-- > 0;) {
        parts.push_back(&syn.sigma_word[w[k]][cur]);
        cur = syn.rho[w[k]][cur];
      }
      word_type out;
      for (std::size_t k = parts.size(); k-- > 0;) {
        out.insert(out.end(), parts[k]->begin(), parts[k]->end());
      }
      return {cur, std::move(out)};
    }

    // d_j w = w' d_l using d_j b = tau lambda, left to right; w over B.
    inline std::pair<word_type, class_index>
    push_d_right(SynthesisResult const& syn, class_index j, word_type const& w) {
      word_type out;
      for (auto b : w) {
        auto const& t = syn.tau_word[j][b];
        out.insert(out.end(), t.begin(), t.end());
        j = syn.lambda[j][b];
      }
      return {std::move(out), j};
    }

    inline WordProblemTrace normal_shape(SynthesisResult const& syn,
                                         word_type const&       w) {
      std::size_t const na = syn.presentation.alphabet.size();
      for (auto a : w) {
        if (a >= na) {
          throw error(error_kind::invalid_letter,
                      "letter " + std::to_string(a) + " not in alphabet");
        }
      }
      WordProblemTrace tr;
      auto [i0, w1]   = push_d_left(syn, w, one_class);
      auto [w2, j]    = push_d_right(syn, i0, w1);
      tr.t_word       = std::move(w2);
      tr.suffix_class = j;
      if (j != one_class) {
        word_type tail = tr.t_word;
        auto [r, w3]    = push_d_left(syn, tail, j);
        tr.prefix_class = r;
        tr.gamma_word   = std::move(w3);
      }
      return tr;
    }
  }  // namespace detail

  //! Decides whether w1 and w2 represent the same element of S.
  inline WordProblemVerdict decide_word_equality(word_type const&          w1,
                                                 word_type const&          w2,
                                                 WordProblemContext const& ctx) {
    WordProblemVerdict v;
    v.first  = detail::normal_shape(ctx.synthesis, w1);
    v.second = detail::normal_shape(ctx.synthesis, w2);
    bool in_t1 = v.first.suffix_class == one_class;
    bool in_t2 = v.second.suffix_class == one_class;
    if (in_t1 && in_t2) {
      v.branch = 'a';
      v.equal  = ctx.t_equal(v.first.t_word, v.second.t_word);
    } else if (in_t1 != in_t2) {
      v.branch = 'b';
      v.equal  = false;
    } else {
      v.branch = 'c';
      v.equal  = v.first.prefix_class == v.second.prefix_class
                && ctx.gamma_equal(v.first.prefix_class, v.first.gamma_word,
                                   v.second.gamma_word);
    }
    return v;
  }

}  // namespace greenidx

#endif  // GREENIDX_WORD_PROBLEM_HPP_
