#ifndef GREENIDX_WORDS_HPP_
#define GREENIDX_WORDS_HPP_

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"
#include "semigroup.hpp"

namespace greenidx {

  //! Evaluates a word whose letters are indices into letter_values.
  inline element_type evaluate_letters(FiniteSemigroup const&        S,
                                       std::span<element_type const> values,
                                       std::span<std::size_t const>  w) {
    element_type r = S.one();
    for (auto a : w) {
      r = S.product1(r, values[a]);
    }
    return r;
  }

  //! Shortlex-least words over B, one for every element of closure(B).
  //! Entry x is empty when x is not reachable.  Letters are positions in B.
  class ShortlexFactorizer {
   public:
    ShortlexFactorizer(FiniteSemigroup const&        S,
                       std::span<element_type const> B)
        : _words(S.size()), _found(S.size(), false) {
      check_elements(S, B);
      // Shortlex-least words are prefix closed, so breadth first search
      // visiting letters in order discovers them.
      std::vector<element_type> queue;
      for (std::size_t a = 0; a < B.size(); ++a) {
        if (!_found[B[a]]) {
          _found[B[a]] = true;
          _words[B[a]] = {a};
          queue.push_back(B[a]);
        }
      }
      for (std::size_t k = 0; k < queue.size(); ++k) {
        auto x = queue[k];
        for (std::size_t a = 0; a < B.size(); ++a) {
          auto y = S.product(x, B[a]);
          if (!_found[y]) {
            _found[y] = true;
            _words[y] = _words[x];
            _words[y].push_back(a);
            queue.push_back(y);
          }
        }
      }
    }

    bool reachable(element_type x) const {
      return x < _found.size() && _found[x];
    }

    word_type const& word(element_type x) const {
      if (!reachable(x)) {
        throw error(error_kind::not_in_subsemigroup,
                    std::to_string(x) + " is not generated");
      }
      return _words[x];
    }

    //! Shortest length, with length(1) = 0 for the adjoined identity.
    std::size_t length(element_type x) const {
      if (x == _found.size()) {
        return 0;
      }
      return word(x).size();
    }

   private:
    std::vector<word_type> _words;
    std::vector<bool>      _found;
  };

  //! Shortest-then-lexicographic word over B (letters are positions in B)
  //! evaluating to t.
  inline word_type factorize(element_type                  t,
                             std::span<element_type const> B,
                             FiniteSemigroup const&        S) {
    if (B.empty()) {
      throw error(error_kind::empty_generators, "no generators given");
    }
    return ShortlexFactorizer(S, B).word(t);
  }

}  // namespace greenidx

#endif  // GREENIDX_WORDS_HPP_
