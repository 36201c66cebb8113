// Semigroup presentations: enumeration of the defined semigroup, checking
// that a presentation defines a given finite semigroup, and building a
// presentation for S from one for T and ones for the Schutzenberger groups
// of the complement.

#ifndef GREENIDX_PRESENT_HPP_
#define GREENIDX_PRESENT_HPP_

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "relgreen.hpp"
#include "schutz.hpp"
#include "semigroup.hpp"
#include "words.hpp"

namespace greenidx {

  using relation_type = std::pair<word_type, word_type>;

  //! <A | R> with letters 0..|A|-1; alphabet holds their names.
  struct Presentation {
    std::vector<std::string>   alphabet;
    std::vector<relation_type> relations;

    void validate() const {
      for (auto const& [u, v] : relations) {
        if (u.empty() || v.empty()) {
          throw error(error_kind::invalid_letter,
                      "relation words must be nonempty");
        }
        for (auto const* w : {&u, &v}) {
          for (auto a : *w) {
            if (a >= alphabet.size()) {
              throw error(error_kind::invalid_letter,
                          "letter " + std::to_string(a) + " not in alphabet");
            }
          }
        }
      }
    }

    std::string word_string(word_type const& w) const {
      std::string out;
      for (auto a : w) {
        out += alphabet[a];
      }
      return out;
    }
  };

  //! Letter -> element of a target semigroup.
  struct Assignment {
    std::vector<element_type> images;

    element_type evaluate(FiniteSemigroup const& S, word_type const& w) const {
      return evaluate_letters(S, images, w);
    }
  };

  //! One letter per element and one relation xy = z per table cell.
  inline std::pair<Presentation, Assignment>
  presentation_from_table(FiniteSemigroup const& S,
                          std::string const&     prefix = "") {
    Presentation P;
    Assignment   alpha;
    for (std::size_t x = 0; x < S.size(); ++x) {
      P.alphabet.push_back(prefix + S.name(x));
      alpha.images.push_back(x);
    }
    for (std::size_t x = 0; x < S.size(); ++x) {
      for (std::size_t y = 0; y < S.size(); ++y) {
        P.relations.push_back({{x, y}, {S.product(x, y)}});
      }
    }
    return {std::move(P), std::move(alpha)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  //! Outcome of enumerate_presentation.  When complete, classes are
  //! numbered in shortlex order of their least representative.
  struct EnumerationResult {
    bool                                  complete = false;
    std::string                           reason;  // set when !complete
    std::vector<word_type>                representatives;
    std::vector<std::vector<std::size_t>> right_action;  // class x letter
    std::vector<std::vector<std::size_t>> table;         // class x class

    std::size_t size() const noexcept {
      return representatives.size();
    }

    //! Class of a nonempty word.
    std::size_t class_of(word_type const& w) const {
      if (w.empty()) {
        throw error(error_kind::invalid_letter, "empty word");
      }
      std::size_t c = _first[w.front()];
      for (std::size_t k = 1; k < w.size(); ++k) {
        c = right_action[c][w[k]];
      }
      return c;
    }

    //! Cayley table as a semigroup (names are representative words).
    FiniteSemigroup as_semigroup() const {
      return FiniteSemigroup::from_table(table);
    }

    std::vector<std::size_t> _first;  // letter -> class
  };

  namespace detail {
    // Coset enumeration for the right regular representation of the monoid
    // A* / eta, using the HLT strategy: every relation is traced (defining
    // nodes as needed) from every node, in order of definition.  Node 0 is
    // the empty word.
    class ToddCoxeter {
     public:
      static constexpr std::size_t undef = std::numeric_limits<std::size_t>::max();

      ToddCoxeter(Presentation const& P, std::size_t max_classes, std::size_t max_len)
          : _p(P), _k(P.alphabet.size()), _max_classes(max_classes),
            _max_len(max_len) {
        new_node(undef);
      }

      // Returns false if a bound was exceeded.
      bool run() {
        for (std::size_t cur = 0; cur < _parent.size(); ++cur) {
          for (auto const& [u, v] : _p.relations) {
            if (!alive(cur)) {
              break;
            }
            auto x = trace_define(cur, u);
            if (x == undef) {
              return false;
            }
            auto y = trace_define(find(cur), v);
            if (y == undef) {
              return false;
            }
            coincide(x, y);
          }
          if (!alive(cur)) {
            continue;
          }
          for (std::size_t a = 0; a < _k; ++a) {
            if (edge(cur, a) == undef && define(cur, a) == undef) {
              return false;
            }
          }
        }
        return true;
      }

      std::string const& reason() const {
        return _reason;
      }

      EnumerationResult result() const {
        EnumerationResult res;
        res.complete = true;
        // Breadth-first search gives shortlex least representatives.
        std::vector<std::size_t> number(_parent.size(), undef);
        std::vector<std::size_t> order{0};
        number[0] = 0;
        std::vector<word_type> words{{}};
        for (std::size_t q = 0; q < order.size(); ++q) {
          for (std::size_t a = 0; a < _k; ++a) {
            auto y = edge(order[q], a);
            if (y == undef) {
              throw error(error_kind::internal_inconsistency,
                          "incomplete coset table");
            }
            if (number[y] == undef) {
              number[y] = order.size();
              order.push_back(y);
              words.push_back(words[q]);
              words.back().push_back(a);
            }
          }
        }
        // Certificate: every relation holds at every node.
        for (auto x : order) {
          for (auto const& [u, v] : _p.relations) {
            if (trace(x, u) != trace(x, v)) {
              throw error(error_kind::internal_inconsistency,
                          "enumeration certificate failed");
            }
          }
        }
        std::size_t const m = order.size() - 1;  // drop the empty word
        res.representatives.assign(words.begin() + 1, words.end());
        res.right_action.assign(m, std::vector<std::size_t>(_k));
        for (std::size_t c = 0; c < m; ++c) {
          for (std::size_t a = 0; a < _k; ++a) {
            res.right_action[c][a] = number[edge(order[c + 1], a)] - 1;
          }
        }
        res._first.resize(_k);
        for (std::size_t a = 0; a < _k; ++a) {
          res._first[a] = number[edge(0, a)] - 1;
        }
        res.table.assign(m, std::vector<std::size_t>(m));
        for (std::size_t c = 0; c < m; ++c) {
          for (std::size_t d = 0; d < m; ++d) {
            std::size_t x = c;
            for (auto a : res.representatives[d]) {
              x = res.right_action[x][a];
            }
            res.table[c][d] = x;
          }
        }
        return res;
      }

     private:
      bool alive(std::size_t x) const {
        return _parent[x] == x;
      }

      std::size_t find(std::size_t x) const {
        while (_parent[x] != x) {
          x = _parent[x];
        }
        return x;
      }

      std::size_t edge(std::size_t x, std::size_t a) const {
        auto y = _next[x * _k + a];
        return y == undef ? undef : find(y);
      }

      std::size_t new_node(std::size_t from) {
        std::size_t y = _parent.size();
        _parent.push_back(y);
        _depth.push_back(from == undef ? 0 : _depth[from] + 1);
        _next.resize(_next.size() + _k, undef);
        return y;
      }

      std::size_t define(std::size_t x, std::size_t a) {
        if (_live >= _max_classes) {
          _reason = "more than " + std::to_string(_max_classes) + " live classes";
          return undef;
        }
        if (_depth[x] + 1 > _max_len) {
          _reason = "definition deeper than " + std::to_string(_max_len);
          return undef;
        }
        auto y           = new_node(x);
        _next[x * _k + a] = y;
        ++_live;
        return y;
      }

      std::size_t trace(std::size_t x, word_type const& w) const {
        for (auto a : w) {
          x = edge(x, a);
          if (x == undef) {
            return undef;
          }
        }
        return x;
      }

      std::size_t trace_define(std::size_t x, word_type const& w) {
        for (auto a : w) {
          auto y = edge(x, a);
          if (y == undef) {
            y = define(x, a);
            if (y == undef) {
              return undef;
            }
          }
          x = y;
        }
        return x;
      }

      void coincide(std::size_t x, std::size_t y) {
        std::vector<std::pair<std::size_t, std::size_t>> queue{{x, y}};
        while (!queue.empty()) {
          auto [a, b] = queue.back();
          queue.pop_back();
          a = find(a);
          b = find(b);
          if (a == b) {
            continue;
          }
          if (b < a) {
            std::swap(a, b);
          }
          _parent[b] = a;
          --_live;
          for (std::size_t c = 0; c < _k; ++c) {
            auto eb = _next[b * _k + c];
            if (eb == undef) {
              continue;
            }
            auto ea = _next[a * _k + c];
            if (ea == undef) {
              _next[a * _k + c] = eb;
            } else {
              queue.emplace_back(ea, eb);
            }
          }
        }
      }

      Presentation const&      _p;
      std::size_t              _k;
      std::size_t              _max_classes, _max_len;
      std::size_t              _live = 0;
      std::vector<std::size_t> _parent, _depth, _next;
      std::string              _reason;
    };
  }  // namespace detail

  //! Enumerates the semigroup defined by P.  Gives up (complete == false)
  //! when more than max_classes classes are live at once or a class would be
  //! defined by a word longer than max_len.
  inline EnumerationResult enumerate_presentation(Presentation const& P,
                                                  std::size_t max_classes,
                                                  std::size_t max_len) {
    if (max_classes == 0 || max_len == 0) {
      throw error(error_kind::input_error, "bounds must be positive");
    }
    P.validate();
    if (P.alphabet.empty()) {
      throw error(error_kind::invalid_letter, "empty alphabet");
    }
    detail::ToddCoxeter tc(P, max_classes, max_len);
    if (!tc.run()) {
      EnumerationResult res;
      res.complete = false;
      res.reason   = tc.reason();
      return res;
    }
    return tc.result();
  }

  struct PresentationCheck {
    bool        ok = false;
    std::string reason;
    //! Index of a violated relation, when that is the reason.
    std::optional<std::size_t> violated;
  };

  inline constexpr std::size_t default_max_classes = 1000;
  inline constexpr std::size_t default_max_len     = 14;

  //! True iff every relation holds under alpha, alpha is onto S and P
  //! defines a semigroup mapped bijectively onto S.  Throws bound_exceeded
  //! when enumeration does not finish within the bounds.
  inline PresentationCheck
  verify_presentation(Presentation const&    P,
                      FiniteSemigroup const& S,
                      Assignment const&      alpha,
                      std::size_t            max_classes = default_max_classes,
                      std::size_t            max_len     = default_max_len) {
    P.validate();
    PresentationCheck check;
    if (alpha.images.size() != P.alphabet.size()) {
      throw error(error_kind::alphabet_mismatch,
                  "assignment has " + std::to_string(alpha.images.size())
                      + " images for " + std::to_string(P.alphabet.size())
                      + " letters");
    }
    check_elements(S, alpha.images);
    for (std::size_t r = 0; r < P.relations.size(); ++r) {
      auto const& [u, v] = P.relations[r];
      if (alpha.evaluate(S, u) != alpha.evaluate(S, v)) {
        check.reason   = "relation " + P.word_string(u) + " = "
                       + P.word_string(v) + " fails under the assignment";
        check.violated = r;
        return check;
      }
    }
    if (alpha.images.empty() || closure(S, alpha.images).size() != S.size()) {
      check.reason = "assignment is not onto";
      return check;
    }
    auto E = enumerate_presentation(P, max_classes, max_len);
    if (!E.complete) {
      throw error(error_kind::bound_exceeded, E.reason);
    }
    if (E.size() != S.size()) {
      check.reason = "presentation defines " + std::to_string(E.size())
                   + " elements, expected " + std::to_string(S.size());
      return check;
    }
    std::vector<bool> hit(S.size(), false);
    for (auto const& w : E.representatives) {
      auto x = alpha.evaluate(S, w);
      if (hit[x]) {
        check.reason = "induced map is not injective";
        return check;
      }
      hit[x] = true;
    }
    check.ok = true;
    return check;
  }

  ////////////////////////////////////////////////////////////////////////
  // Presentations for the Schutzenberger groups
  ////////////////////////////////////////////////////////////////////////

  //! <C | W> for one Schutzenberger group, shared by all complement classes
  //! in one L^T-class.  Letter c stands for the gamma-class of
  //! stabilizer_rep[c]; xi_bar[c] is a word over the letters of the
  //! presentation for T with value in that gamma-class.
  struct SchutzPack {
    std::vector<std::string>   alphabet;
    std::vector<relation_type> relations;
    std::vector<element_type>  stabilizer_rep;
    std::vector<word_type>     xi_bar;
  };

  struct SchutzPresentationPack {
    std::vector<SchutzPack> packs;
    //! pack_of[i - 1] is the pack used by complement class i.
    std::vector<std::size_t> pack_of;

    SchutzPack const& for_class(class_index i) const {
      return packs[pack_of[i - 1]];
    }
  };

  //! One table presentation per L^T-class of complement classes.  b_values
  //! lists the values in T of the letters of the presentation for T.
  inline SchutzPresentationPack
  make_schutz_packs(FiniteSemigroup const&        S,
                    GreenData const&              G,
                    std::span<element_type const> b_values) {
    SchutzPresentationPack out;
    ShortlexFactorizer     fact(S, b_values);
    std::vector<std::size_t> pack_of_l(G.num_l_classes(), LambdaData::sink);
    for (class_index i = 1; i < G.num_indices(); ++i) {
      auto l = G.l_class(G.representative(i));
      if (pack_of_l[l] == LambdaData::sink) {
        pack_of_l[l] = out.packs.size();
        auto       Gamma = complement_schutz_group(S, G, i);
        SchutzPack pack;
        std::vector<std::optional<element_type>> rep(Gamma.order());
        for (std::size_t g = 0; g < Gamma.order(); ++g) {
          for (auto t : Gamma.gamma_classes()[g]) {
            if (t != S.one()) {
              rep[g] = t;
              break;
            }
          }
        }
        // With no stabilizer element in T, Gamma is trivial and no word
        // over B ever stabilizes H_i: the pack is empty.
        if (std::all_of(rep.begin(), rep.end(), [](auto const& r) { return r.has_value(); })) {
          auto group = FiniteSemigroup::from_table(Gamma.group().table);
          auto [P, alpha] = presentation_from_table(group);
          std::string const prefix = "c" + std::to_string(out.packs.size() + 1) + "_";
          for (std::size_t g = 0; g < Gamma.order(); ++g) {
            pack.alphabet.push_back(prefix + std::to_string(g));
            pack.stabilizer_rep.push_back(*rep[g]);
            pack.xi_bar.push_back(fact.word(*rep[g]));
          }
          pack.relations = P.relations;
        }
        out.packs.push_back(std::move(pack));
      }
      out.pack_of.push_back(pack_of_l[l]);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Synthesis
  ////////////////////////////////////////////////////////////////////////

  //! The presentation for S over A = B u {d_i : i in I}.  Letters 0..|B|-1
  //! are those of the presentation for T; letter |B| + i - 1 is d_i.  The
  //! word-level connectors used for the relations are kept so that the
  //! word problem procedure can replay the same rewriting.
  struct SynthesisResult {
    Presentation presentation;
    Assignment   alpha;
    std::size_t  num_b = 0;
    //! Indexed [letter][i] for sigma/rho (letters of A) and [i][b] for
    //! tau/lambda (letters of B).  Words are over B.
    std::vector<std::vector<word_type>>   sigma_word;
    std::vector<std::vector<class_index>> rho;
    std::vector<std::vector<word_type>>   tau_word;
    std::vector<std::vector<class_index>> lambda;

    std::size_t d_letter(class_index i) const {
      return num_b + i - 1;
    }
    bool is_d(std::size_t letter) const {
      return letter >= num_b;
    }
  };

  //! Words over B for elements of T^1 (the empty word for the adjoined 1).
  inline word_type lift_to_b(ShortlexFactorizer const& fact,
                             FiniteSemigroup const&    S,
                             element_type              t) {
    if (t == S.one()) {
      return {};
    }
    return fact.word(t);
  }

  inline SynthesisResult
  synthesize_presentation(Presentation const&           Q,
                          Assignment const&             beta,
                          SchutzPresentationPack const& packs,
                          FiniteSemigroup const&        S,
                          GreenData const&              G,
                          ConnectorTables const&        conn,
                          std::size_t max_classes = default_max_classes,
                          std::size_t max_len     = default_max_len) {
    auto const& T = G.sub();
    // Q must present T.
    {
      auto              Tsem = restrict_to(S, T);
      Assignment        local;
      for (auto x : beta.images) {
        if (!T.contains(x)) {
          throw error(error_kind::bad_input_presentation,
                      "a letter of the presentation for T lies outside T");
        }
        local.images.push_back(static_cast<element_type>(
            std::lower_bound(T.members().begin(), T.members().end(), x)
            - T.members().begin()));
      }
      auto check = verify_presentation(Q, Tsem, local, max_classes, max_len);
      if (!check.ok) {
        throw error(error_kind::bad_input_presentation,
                    "presentation for T: " + check.reason);
      }
    }
    if (packs.pack_of.size() != G.num_complement_classes()) {
      throw error(error_kind::bad_input_presentation,
                  "one Schutzenberger presentation is needed per class");
    }
    // Dagger: L-related representatives share a pack, others do not.
    for (class_index i = 1; i < G.num_indices(); ++i) {
      for (class_index j = 1; j < G.num_indices(); ++j) {
        bool same_l = G.l_class(G.representative(i)) == G.l_class(G.representative(j));
        bool same_pack = packs.pack_of[i - 1] == packs.pack_of[j - 1];
        if (same_l != same_pack) {
          throw error(error_kind::dagger_violation,
                      "classes " + std::to_string(i) + " and " + std::to_string(j)
                          + (same_l ? " are L-related but use different packs"
                                    : " share a pack but are not L-related"));
        }
      }
    }
    for (class_index i = 1; i < G.num_indices(); ++i) {
      auto const& pack  = packs.for_class(i);
      auto        Gamma = complement_schutz_group(S, G, i);
      if (pack.alphabet.empty()) {
        for (auto t : Gamma.stabilizer()) {
          if (t != S.one()) {
            throw error(error_kind::bad_input_presentation,
                        "empty Schutzenberger presentation for a nontrivial "
                        "stabilizer");
          }
        }
        continue;
      }
      Assignment xi;
      for (std::size_t c = 0; c < pack.alphabet.size(); ++c) {
        auto v = beta.evaluate(S, pack.xi_bar[c]);
        if (!Gamma.in_stabilizer(v) || !Gamma.in_stabilizer(pack.stabilizer_rep[c])
            || Gamma.quotient(v) != Gamma.quotient(pack.stabilizer_rep[c])) {
          throw error(error_kind::bad_input_presentation,
                      "xi_bar does not lift xi for class " + std::to_string(i));
        }
        xi.images.push_back(Gamma.quotient(pack.stabilizer_rep[c]));
      }
      Presentation Wi{pack.alphabet, pack.relations};
      auto group = FiniteSemigroup::from_table(Gamma.group().table);
      auto check = verify_presentation(Wi, group, xi, max_classes, max_len);
      if (!check.ok) {
        throw error(error_kind::bad_input_presentation,
                    "presentation for Gamma_" + std::to_string(i) + ": "
                        + check.reason);
      }
    }

    SynthesisResult out;
    out.num_b                  = Q.alphabet.size();
    out.presentation.alphabet  = Q.alphabet;
    out.presentation.relations = Q.relations;
    out.alpha                  = beta;
    for (class_index i = 1; i < G.num_indices(); ++i) {
      out.presentation.alphabet.push_back("d" + std::to_string(i));
      out.alpha.images.push_back(G.representative(i));
    }
    ShortlexFactorizer fact(S, beta.images);
    std::size_t const  na = out.presentation.alphabet.size();
    std::size_t const  k  = G.num_indices();
    auto d_prefix = [&out](class_index i) -> word_type {
      if (i == one_class) {
        return {};
      }
      return {out.d_letter(i)};
    };
    auto emit = [&out](word_type lhs, word_type rhs) {
      if (lhs.empty() || rhs.empty()) {
        throw error(error_kind::internal_inconsistency, "empty relation side");
      }
      if (lhs != rhs) {
        out.presentation.relations.emplace_back(std::move(lhs), std::move(rhs));
      }
    };

    out.sigma_word.assign(na, std::vector<word_type>(k));
    out.rho.assign(na, std::vector<class_index>(k));
    // a d_i = d_{rho(a,i)} sigma(a,i)
    for (std::size_t a = 0; a < na; ++a) {
      for (class_index i = 0; i < k; ++i) {
        auto const s     = out.alpha.images[a];
        out.rho[a][i]    = conn.rho(s, i);
        out.sigma_word[a][i] = lift_to_b(fact, S, conn.sigma(s, i));
        word_type lhs{a};
        auto      di = d_prefix(i);
        lhs.insert(lhs.end(), di.begin(), di.end());
        auto rhs = d_prefix(out.rho[a][i]);
        rhs.insert(rhs.end(), out.sigma_word[a][i].begin(), out.sigma_word[a][i].end());
        emit(std::move(lhs), std::move(rhs));
      }
    }
    out.tau_word.assign(k, std::vector<word_type>(out.num_b));
    out.lambda.assign(k, std::vector<class_index>(out.num_b));
    // d_j b = tau(j,b) d_{lambda(j,b)}
    for (class_index j = 0; j < k; ++j) {
      for (std::size_t b = 0; b < out.num_b; ++b) {
        auto const s       = out.alpha.images[b];
        out.lambda[j][b]   = conn.lambda(j, s);
        out.tau_word[j][b] = lift_to_b(fact, S, conn.tau(j, s));
        auto lhs           = d_prefix(j);
        lhs.push_back(b);
        auto rhs = out.tau_word[j][b];
        auto dl  = d_prefix(out.lambda[j][b]);
        rhs.insert(rhs.end(), dl.begin(), dl.end());
        emit(std::move(lhs), std::move(rhs));
      }
    }
    // d_i xi_bar(u) = d_i xi_bar(v)
    for (class_index i = 1; i < k; ++i) {
      auto const& pack = packs.for_class(i);
      for (auto const& [u, v] : pack.relations) {
        word_type lhs{out.d_letter(i)}, rhs{out.d_letter(i)};
        for (auto c : u) {
          lhs.insert(lhs.end(), pack.xi_bar[c].begin(), pack.xi_bar[c].end());
        }
        for (auto c : v) {
          rhs.insert(rhs.end(), pack.xi_bar[c].begin(), pack.xi_bar[c].end());
        }
        emit(std::move(lhs), std::move(rhs));
      }
    }
    for (auto const& [u, v] : out.presentation.relations) {
      if (out.alpha.evaluate(S, u) != out.alpha.evaluate(S, v)) {
        throw error(error_kind::internal_inconsistency,
                    "synthesized relation " + out.presentation.word_string(u)
                        + " = " + out.presentation.word_string(v)
                        + " does not hold");
      }
    }
    return out;
  }

}  // namespace greenidx

#endif  // GREENIDX_PRESENT_HPP_
