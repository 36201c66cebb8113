// JSON formats for semigroups, subsemigroups, presentations and automata.
//
//   semigroup     {"order": n, "table": [[...], ...], "names": [...]}
//   subsemigroup  {"members": [...]}
//   presentation  {"alphabet": [...], "relations": [[u, v], ...],
//                  "assignment": [...]}            (assignment optional)
//   automaton     {"alphabet": [...], "states": n,
//                  "transitions": [[q, symbol, r], ...],
//                  "initial": [...], "accepting": [...]}
//
// Relation words are strings (split greedily into the longest letter
// names) or arrays of letter names.  Pair symbols are two-element arrays
// with "$" for padding.

#ifndef GREENIDX_IO_HPP_
#define GREENIDX_IO_HPP_

#include <cstddef>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "automata.hpp"
#include "automatic.hpp"
#include "error.hpp"
#include "present.hpp"
#include "semigroup.hpp"

namespace greenidx::io {

  using json = nlohmann::json;

  inline json read_json_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw error(error_kind::input_error, "cannot read " + path);
    }
    try {
      return json::parse(in);
    } catch (json::exception const& e) {
      throw error(error_kind::input_error, path + ": " + e.what());
    }
  }

  namespace detail {
    template <typename T>
    T get(json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key)) {
        throw error(error_kind::input_error,
                    std::string("missing field \"") + key + "\"");
      }
      try {
        return j.at(key).get<T>();
      } catch (json::exception const& e) {
        throw error(error_kind::input_error,
                    std::string("field \"") + key + "\": " + e.what());
      }
    }
  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // Semigroups
  ////////////////////////////////////////////////////////////////////////

  inline FiniteSemigroup semigroup_from_json(json const& j) {
    auto table = detail::get<std::vector<std::vector<std::size_t>>>(j, "table");
    if (j.contains("order") && detail::get<std::size_t>(j, "order") != table.size()) {
      throw error(error_kind::input_error, "order does not match the table");
    }
    std::vector<std::string> names;
    if (j.contains("names")) {
      names = detail::get<std::vector<std::string>>(j, "names");
    }
    return FiniteSemigroup::from_table(table, names);
  }

  inline json to_json(FiniteSemigroup const& S) {
    json j;
    j["order"] = S.size();
    j["table"] = S.rows();
    if (!S.names().empty()) {
      j["names"] = S.names();
    }
    return j;
  }

  inline SubSemigroup sub_from_json(FiniteSemigroup const& S, json const& j) {
    return SubSemigroup::from_members(
        S, detail::get<std::vector<element_type>>(j, "members"));
  }

  inline json to_json(SubSemigroup const& T) {
    return json{{"members", T.members()}};
  }

  ////////////////////////////////////////////////////////////////////////
  // Presentations
  ////////////////////////////////////////////////////////////////////////

  //! Splits s into letter names, longest match first.
  inline word_type parse_word(std::vector<std::string> const& alphabet,
                              std::string const&              s) {
    word_type   w;
    std::size_t pos = 0;
    while (pos < s.size()) {
      std::size_t best = alphabet.size(), best_len = 0;
      for (std::size_t a = 0; a < alphabet.size(); ++a) {
        auto const& name = alphabet[a];
        if (name.size() > best_len && s.compare(pos, name.size(), name) == 0) {
          best     = a;
          best_len = name.size();
        }
      }
      if (best == alphabet.size()) {
        throw error(error_kind::invalid_letter,
                    "cannot read a letter at \"" + s.substr(pos) + "\"");
      }
      w.push_back(best);
      pos += best_len;
    }
    return w;
  }

  inline word_type word_from_json(std::vector<std::string> const& alphabet,
                                  json const&                     j) {
    if (j.is_string()) {
      return parse_word(alphabet, j.get<std::string>());
    }
    if (!j.is_array()) {
      throw error(error_kind::input_error, "a word is a string or an array");
    }
    word_type w;
    for (auto const& x : j) {
      if (!x.is_string()) {
        throw error(error_kind::input_error, "letters are strings");
      }
      auto it = std::find(alphabet.begin(), alphabet.end(), x.get<std::string>());
      if (it == alphabet.end()) {
        throw error(error_kind::invalid_letter,
                    "unknown letter \"" + x.get<std::string>() + "\"");
      }
      w.push_back(static_cast<std::size_t>(it - alphabet.begin()));
    }
    return w;
  }

  inline json word_to_json(std::vector<std::string> const& alphabet,
                           word_type const&                w) {
    json j = json::array();
    for (auto a : w) {
      j.push_back(alphabet[a]);
    }
    return j;
  }

  inline Presentation presentation_from_json(json const& j) {
    Presentation P;
    P.alphabet = detail::get<std::vector<std::string>>(j, "alphabet");
    for (std::size_t a = 0; a < P.alphabet.size(); ++a) {
      if (P.alphabet[a].empty()) {
        throw error(error_kind::input_error, "empty letter name");
      }
      for (std::size_t b = 0; b < a; ++b) {
        if (P.alphabet[a] == P.alphabet[b]) {
          throw error(error_kind::input_error, "repeated letter " + P.alphabet[a]);
        }
      }
    }
    auto rels = detail::get<json>(j, "relations");
    if (!rels.is_array()) {
      throw error(error_kind::input_error, "relations must be an array");
    }
    for (auto const& r : rels) {
      if (!r.is_array() || r.size() != 2) {
        throw error(error_kind::input_error, "a relation is a pair of words");
      }
      P.relations.emplace_back(word_from_json(P.alphabet, r[0]),
                               word_from_json(P.alphabet, r[1]));
    }
    P.validate();
    return P;
  }

  inline std::optional<Assignment> assignment_from_json(json const& j) {
    if (!j.contains("assignment")) {
      return std::nullopt;
    }
    return Assignment{detail::get<std::vector<element_type>>(j, "assignment")};
  }

  inline json to_json(Presentation const& P) {
    json j;
    j["alphabet"]  = P.alphabet;
    json rels      = json::array();
    for (auto const& [u, v] : P.relations) {
      rels.push_back(json::array({word_to_json(P.alphabet, u), word_to_json(P.alphabet, v)}));
    }
    j["relations"] = rels;
    return j;
  }

  inline json to_json(Presentation const& P, Assignment const& alpha) {
    auto j          = to_json(P);
    j["assignment"] = alpha.images;
    return j;
  }

  ////////////////////////////////////////////////////////////////////////
  // Automata
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline json nfa_body(Nfa const& A, std::vector<json> const& symbols) {
      json j;
      j["states"] = A.num_states();
      json tr     = json::array();
      json acc    = json::array();
      for (state_type q = 0; q < A.num_states(); ++q) {
        for (auto [a, r] : A.out(q)) {
          tr.push_back(json::array({q, symbols[a], r}));
        }
        if (A.accepting(q)) {
          acc.push_back(q);
        }
      }
      j["transitions"] = tr;
      j["initial"]     = A.initial();
      j["accepting"]   = acc;
      return j;
    }

    inline Nfa nfa_body_from_json(json const&                          j,
                                  std::size_t                          num_symbols,
                                  std::map<json, symbol_type> const&   lookup) {
      Nfa  A(num_symbols);
      auto n = get<std::size_t>(j, "states");
      for (std::size_t q = 0; q < n; ++q) {
        A.add_state(false);
      }
      auto check_state = [n](std::size_t q) {
        if (q >= n) {
          throw error(error_kind::input_error, "state " + std::to_string(q) + " out of range");
        }
        return q;
      };
      for (auto const& t : get<json>(j, "transitions")) {
        if (!t.is_array() || t.size() != 3) {
          throw error(error_kind::input_error, "a transition is [from, symbol, to]");
        }
        auto it = lookup.find(t[1]);
        if (it == lookup.end()) {
          throw error(error_kind::invalid_letter, "unknown symbol " + t[1].dump());
        }
        A.add_transition(check_state(t[0].get<std::size_t>()), it->second,
                         check_state(t[2].get<std::size_t>()));
      }
      for (auto q : get<std::vector<std::size_t>>(j, "initial")) {
        A.add_initial(check_state(q));
      }
      for (auto q : get<std::vector<std::size_t>>(j, "accepting")) {
        A.set_accepting(check_state(q));
      }
      return A;
    }
  }  // namespace detail

  inline json to_json(Nfa const& A, std::vector<std::string> const& alphabet) {
    std::vector<json> symbols(alphabet.begin(), alphabet.end());
    auto              j = detail::nfa_body(A, symbols);
    j["alphabet"]        = alphabet;
    return j;
  }

  inline Nfa nfa_from_json(json const& j, std::vector<std::string> const& alphabet) {
    std::map<json, symbol_type> lookup;
    for (std::size_t a = 0; a < alphabet.size(); ++a) {
      lookup[json(alphabet[a])] = a;
    }
    return detail::nfa_body_from_json(j, alphabet.size(), lookup);
  }

  inline std::vector<json> pair_symbols(PaddedRelationNfa const&        R,
                                        std::vector<std::string> const& left,
                                        std::vector<std::string> const& right) {
    std::vector<json> symbols(R.nfa.num_symbols());
    for (std::size_t a = 0; a <= R.left_size; ++a) {
      for (std::size_t b = 0; b <= R.right_size; ++b) {
        if (a == R.left_size && b == R.right_size) {
          continue;
        }
        symbols[R.pair(a, b)] = json::array(
            {a == R.left_size ? std::string("$") : left[a],
             b == R.right_size ? std::string("$") : right[b]});
      }
    }
    return symbols;
  }

  inline json to_json(PaddedRelationNfa const&        R,
                      std::vector<std::string> const& left,
                      std::vector<std::string> const& right) {
    auto symbols = pair_symbols(R, left, right);
    auto j       = detail::nfa_body(R.nfa, symbols);
    // Only the pairs that are used, to keep files small.
    std::vector<bool> used(R.nfa.num_symbols(), false);
    for (state_type q = 0; q < R.nfa.num_states(); ++q) {
      for (auto [a, r] : R.nfa.out(q)) {
        used[a] = true;
      }
    }
    json alphabet = json::array();
    for (std::size_t s = 0; s < symbols.size(); ++s) {
      if (used[s]) {
        alphabet.push_back(symbols[s]);
      }
    }
    j["alphabet"] = alphabet;
    return j;
  }

  inline PaddedRelationNfa relation_from_json(json const&                     j,
                                              std::vector<std::string> const& left,
                                              std::vector<std::string> const& right) {
    PaddedRelationNfa R(left.size(), right.size());
    auto              symbols = pair_symbols(R, left, right);
    std::map<json, symbol_type> lookup;
    for (std::size_t s = 0; s < symbols.size(); ++s) {
      if (!symbols[s].is_null()) {
        lookup[symbols[s]] = s;
      }
    }
    R.nfa = detail::nfa_body_from_json(j, R.nfa.num_symbols(), lookup);
    return R;
  }

  //! {"alphabet", "values", "language", "multipliers": [...], "equality"}.
  inline json to_json(AutomaticStructure const& st) {
    json j;
    j["alphabet"] = st.alphabet;
    j["values"]   = st.values;
    j["language"] = to_json(st.language, st.alphabet);
    json m        = json::array();
    for (auto const& R : st.multipliers) {
      m.push_back(to_json(R, st.alphabet, st.alphabet));
    }
    j["multipliers"] = m;
    j["equality"]    = to_json(st.equality, st.alphabet, st.alphabet);
    return j;
  }

  inline AutomaticStructure structure_from_json(json const& j) {
    AutomaticStructure st;
    st.alphabet = detail::get<std::vector<std::string>>(j, "alphabet");
    st.values   = detail::get<std::vector<element_type>>(j, "values");
    if (st.values.size() != st.alphabet.size()) {
      throw error(error_kind::input_error, "one value per letter is needed");
    }
    st.language = nfa_from_json(detail::get<json>(j, "language"), st.alphabet);
    auto m      = detail::get<json>(j, "multipliers");
    if (!m.is_array() || m.size() != st.alphabet.size()) {
      throw error(error_kind::input_error, "one multiplier per letter is needed");
    }
    for (auto const& r : m) {
      st.multipliers.push_back(relation_from_json(r, st.alphabet, st.alphabet));
    }
    st.equality = relation_from_json(detail::get<json>(j, "equality"), st.alphabet,
                                     st.alphabet);
    return st;
  }

}  // namespace greenidx::io

#endif  // GREENIDX_IO_HPP_
