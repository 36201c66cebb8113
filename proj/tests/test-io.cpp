#include "catch_amalgamated.hpp"

#include "greenidx/io.hpp"
#include "greenidx/relgreen.hpp"

#include "instances.hpp"
#include "pipeline.hpp"

using namespace greenidx;
using namespace greenidx::testing;
using greenidx::io::json;

TEST_CASE("semigroups and subsemigroups round trip", "[io][quick]") {
  for (auto const& inst : fixed_instances()) {
    auto j  = io::to_json(inst.S);
    auto S2 = io::semigroup_from_json(json::parse(j.dump()));
    REQUIRE(S2.rows() == inst.S.rows());
    REQUIRE(S2.names() == inst.S.names());
    auto T2 = io::sub_from_json(S2, json::parse(io::to_json(inst.T).dump()));
    REQUIRE(T2.members() == inst.T.members());
  }
}

TEST_CASE("malformed semigroups are input errors", "[io][quick]") {
  auto kind_of = [](json const& j) {
    try {
      io::semigroup_from_json(j);
    } catch (error const& e) {
      return e.kind();
    }
    return error_kind::internal_inconsistency;
  };
  REQUIRE(kind_of(json::object()) == error_kind::input_error);
  REQUIRE(kind_of(json{{"table", "x"}}) == error_kind::input_error);
  REQUIRE(kind_of(json{{"order", 3}, {"table", {{0}}}}) == error_kind::input_error);
  REQUIRE(kind_of(json{{"table", {{0, 1}, {1, 0}, {0, 0}}}}) != error_kind::internal_inconsistency);
  // left zero band
  REQUIRE_NOTHROW(io::semigroup_from_json(json{{"table", {{0, 0}, {1, 1}}}}));
  REQUIRE(kind_of(json{{"table", {{0, 2}, {1, 1}}}}) == error_kind::out_of_range);
}

TEST_CASE("words are read greedily", "[io][quick]") {
  std::vector<std::string> alphabet{"a", "ab", "b", "c1", "c10"};
  REQUIRE(io::parse_word(alphabet, "abab") == word_type{1, 1});
  REQUIRE(io::parse_word(alphabet, "aab") == word_type{0, 1});
  REQUIRE(io::parse_word(alphabet, "c10c1") == word_type{4, 3});
  REQUIRE(io::parse_word(alphabet, "") == word_type{});
  REQUIRE_THROWS_AS(io::parse_word(alphabet, "ax"), error);
  REQUIRE(io::word_from_json(alphabet, json::array({"a", "b"})) == word_type{0, 2});
  REQUIRE_THROWS_AS(io::word_from_json(alphabet, json::array({"z"})), error);
  REQUIRE(io::word_to_json(alphabet, {1, 4}) == json::array({"ab", "c10"}));
}

TEST_CASE("presentations round trip", "[io][quick]") {
  auto p  = pipeline(z6_instance());
  auto j  = io::to_json(p.synthesis.presentation, p.synthesis.alpha);
  auto j2 = json::parse(j.dump());
  auto P  = io::presentation_from_json(j2);
  REQUIRE(P.alphabet == p.synthesis.presentation.alphabet);
  REQUIRE(P.relations == p.synthesis.presentation.relations);
  auto alpha = io::assignment_from_json(j2);
  REQUIRE(alpha.has_value());
  REQUIRE(alpha->images == p.synthesis.alpha.images);
  REQUIRE(!io::assignment_from_json(io::to_json(P)).has_value());
  REQUIRE_THROWS_AS(
      io::presentation_from_json(json{{"alphabet", {"a", "a"}}, {"relations", json::array()}}),
      error);
  REQUIRE_THROWS_AS(
      io::presentation_from_json(json{{"alphabet", {"a"}}, {"relations", {{"a"}}}}), error);
  auto Q = io::presentation_from_json(
      json{{"alphabet", {"x", "y"}},
           {"relations", json::array({json::array({"xx", "x"}), json::array({"xy", "yx"})})}});
  REQUIRE(Q.relations.size() == 2);
  REQUIRE(Q.relations[1].first == word_type{0, 1});
}

TEST_CASE("automatic structures round trip", "[io][quick]") {
  for (auto const& inst : fixed_instances()) {
    INFO(inst.name);
    auto G   = relative_green(inst.S, inst.T);
    auto C   = connectors(inst.S, G);
    auto st  = structure_for_finite(inst.S, inst.A);
    auto out = transfer(st, inst.S, G, C);
    for (auto const* s : {&st, &out.structure}) {
      auto j   = io::to_json(*s);
      auto st2 = io::structure_from_json(json::parse(j.dump()));
      REQUIRE(st2.alphabet == s->alphabet);
      REQUIRE(st2.values == s->values);
      REQUIRE(enumerate(st2.language, 6) == enumerate(s->language, 6));
      for (std::size_t a = 0; a < s->multipliers.size(); ++a) {
        REQUIRE(enumerate_pairs(st2.multipliers[a], 6)
                == enumerate_pairs(s->multipliers[a], 6));
      }
      REQUIRE(enumerate_pairs(st2.equality, 6) == enumerate_pairs(s->equality, 6));
      REQUIRE(io::to_json(st2) == j);
    }
  }
}

TEST_CASE("pair symbols use $ for padding", "[io][quick]") {
  auto R = pair_trie(1, 1, {{{0}, {0, 0}}});
  auto j = io::to_json(R, {"a"}, {"a"});
  REQUIRE(j["alphabet"] == json::array({json::array({"a", "a"}), json::array({"$", "a"})}));
  auto R2 = io::relation_from_json(j, {"a"}, {"a"});
  REQUIRE(R2.accepts({0}, {0, 0}));
  j["transitions"][0][1] = json::array({"$", "$"});
  REQUIRE_THROWS_AS(io::relation_from_json(j, {"a"}, {"a"}), error);
  j["transitions"][0][1] = json::array({"a", "a"});
  j["transitions"][0][2] = 99;
  REQUIRE_THROWS_AS(io::relation_from_json(j, {"a"}, {"a"}), error);
}
