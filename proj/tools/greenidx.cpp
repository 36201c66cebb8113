// greenidx: command line front end.
//
// Exit status: 0 success, 1 a verification failed (or a bound was hit
// before it could be certified), 2 malformed input.

#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "greenidx/greenidx.hpp"
#include "greenidx/io.hpp"

using namespace greenidx;
using greenidx::io::json;

namespace {

  constexpr int exit_ok       = 0;
  constexpr int exit_failed   = 1;
  constexpr int exit_bad_input = 2;

  struct Options {
    std::string semigroup, sub, structure, presentation, out;
    std::string gens, reps, word, word1, word2;
    std::size_t max_classes = default_max_classes;
    std::size_t max_len     = default_max_len;
    std::size_t verify_len  = 6;
    std::size_t radius      = 20;
    std::size_t class_index = 1;
    std::optional<std::size_t> delay;
    std::optional<std::size_t> element;
    bool        as_json = false, relative = false, left = false, naturals = false;
  };

  ////////////////////////////////////////////////////////////////////////
  // Input helpers
  ////////////////////////////////////////////////////////////////////////

  FiniteSemigroup load_semigroup(Options const& o) {
    if (o.semigroup.empty()) {
      throw error(error_kind::input_error, "--semigroup is required");
    }
    return io::semigroup_from_json(io::read_json_file(o.semigroup));
  }

  SubSemigroup load_sub(Options const& o, FiniteSemigroup const& S) {
    if (o.sub.empty()) {
      throw error(error_kind::input_error, "--sub is required");
    }
    return io::sub_from_json(S, io::read_json_file(o.sub));
  }

  // Splits on commas outside brackets, so names like [0,1,2] survive.
  std::vector<std::string> split_list(std::string const& s) {
    std::vector<std::string> out;
    std::string              cur;
    int                      depth = 0;
    for (char c : s) {
      if (c == '[' || c == '(') {
        ++depth;
      } else if (c == ']' || c == ')') {
        --depth;
      }
      if (c == ',' && depth == 0) {
        out.push_back(cur);
        cur.clear();
      } else if (c != ' ') {
        cur.push_back(c);
      }
    }
    if (!cur.empty()) {
      out.push_back(cur);
    }
    return out;
  }

  // An element by name, or by index if no name matches.  "id" is the
  // adjoined identity when allowed.
  element_type parse_element(FiniteSemigroup const& S, std::string const& tok,
                             bool allow_one = false) {
    if (allow_one && tok == "id") {
      return S.one();
    }
    for (element_type x = 0; x < S.size(); ++x) {
      if (S.name(x) == tok) {
        return x;
      }
    }
    try {
      std::size_t pos = 0;
      auto        x   = std::stoull(tok, &pos);
      if (pos == tok.size() && x < S.size()) {
        return x;
      }
    } catch (std::exception const&) {
    }
    throw error(error_kind::input_error, "unknown element \"" + tok + "\"");
  }

  std::vector<element_type> parse_elements(FiniteSemigroup const& S, std::string const& s,
                                           bool allow_one = false) {
    std::vector<element_type> out;
    for (auto const& tok : split_list(s)) {
      out.push_back(parse_element(S, tok, allow_one));
    }
    return out;
  }

  // Greedy generating set of T, in index order.
  std::vector<element_type> default_gens(FiniteSemigroup const& S, SubSemigroup const& T) {
    std::vector<element_type> B;
    for (auto t : T.members()) {
      if (B.empty() || !closure(S, B).contains(t)) {
        B.push_back(t);
      }
    }
    return B;
  }

  std::vector<element_type> gens_or_default(Options const& o, FiniteSemigroup const& S,
                                            SubSemigroup const& T) {
    return o.gens.empty() ? default_gens(S, T) : parse_elements(S, o.gens);
  }

  std::string name1(FiniteSemigroup const& S, element_type x) {
    return x == S.one() ? std::string("id") : S.name(x);
  }

  json names_of(FiniteSemigroup const& S, std::span<element_type const> xs) {
    json j = json::array();
    for (auto x : xs) {
      j.push_back(name1(S, x));
    }
    return j;
  }

  ////////////////////////////////////////////////////////////////////////
  // Output
  ////////////////////////////////////////////////////////////////////////

  void emit_text(Options const& o, std::string const& text) {
    if (o.out.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(o.out);
    if (!f) {
      throw error(error_kind::input_error, "cannot write " + o.out);
    }
    f << text;
  }

  std::string human(json const& j) {
    std::ostringstream os;
    for (auto const& [k, v] : j.items()) {
      os << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    }
    return os.str();
  }

  // Reports go to stdout, as JSON with --json.  Keys come out sorted.
  void report(Options const& o, json const& j) {
    emit_text(o, o.as_json ? j.dump(2) + "\n" : human(j));
  }

  // Artifacts (presentations, structures) are always JSON.
  void artifact(Options const& o, json const& j) {
    emit_text(o, j.dump(2) + "\n");
  }

  ////////////////////////////////////////////////////////////////////////
  // Commands
  ////////////////////////////////////////////////////////////////////////

  int cmd_validate(Options const& o) {
    if (o.semigroup.empty()) {
      throw error(error_kind::input_error, "--semigroup is required");
    }
    auto raw = io::read_json_file(o.semigroup);
    json r;
    try {
      auto S          = io::semigroup_from_json(raw);
      r["order"]      = S.size();
      r["associative"] = true;
      r["identity"]   = S.identity() ? json(S.name(*S.identity())) : json(nullptr);
      r["group"]      = is_group(S);
      r["cancellative"] = is_cancellative(S);
      if (!o.sub.empty()) {
        auto T       = load_sub(o, S);
        r["sub_order"] = T.size();
      }
    } catch (not_associative_error const& e) {
      r["associative"] = false;
      r["witness"]     = e.witness();
      report(o, r);
      return exit_failed;
    }
    report(o, r);
    return exit_ok;
  }

  int cmd_green_index(Options const& o) {
    auto S = load_semigroup(o);
    auto T = load_sub(o, S);
    auto G = relative_green(S, T);
    json r;
    r["green_index"] = G.green_index();
    json classes     = json::array();
    for (class_index i = 1; i < G.num_indices(); ++i) {
      auto H = G.complement_class(i);
      classes.push_back({{"index", i},
                         {"representative", S.name(G.representative(i))},
                         {"members", names_of(S, H)}});
    }
    r["complement_classes"] = classes;
    r["r_classes"]          = G.num_r_classes();
    r["l_classes"]          = G.num_l_classes();
    r["h_classes"]          = G.num_h_classes();
    report(o, r);
    return exit_ok;
  }

  std::string dot_escape(std::string s) {
    std::string out;
    for (char c : s) {
      if (c == '"' || c == '\\') {
        out.push_back('\\');
      }
      out.push_back(c);
    }
    return out;
  }

  // One cluster per R-class; H-classes are nodes, complement ones filled.
  int cmd_eggbox(Options const& o) {
    auto S = load_semigroup(o);
    auto T = o.relative ? load_sub(o, S) : whole(S);
    auto G = relative_green(S, T);
    std::ostringstream os;
    os << "digraph eggbox {\n  node [shape=box];\n";
    std::vector<std::vector<std::size_t>> by_r(G.num_r_classes());
    for (std::size_t h = 0; h < G.num_h_classes(); ++h) {
      by_r[G.r_class(G.h_class_members(h).front())].push_back(h);
    }
    for (std::size_t r = 0; r < by_r.size(); ++r) {
      if (by_r[r].empty()) {
        continue;
      }
      os << "  subgraph cluster_r" << r << " {\n    label=\"R" << r << "\";\n";
      for (auto h : by_r[r]) {
        auto const& m = G.h_class_members(h);
        std::string label;
        for (auto x : m) {
          label += (label.empty() ? "" : " ") + S.name(x);
        }
        bool outside = !T.contains(m.front());
        os << "    h" << h << " [label=\"" << dot_escape(label) << "\\nL"
           << G.l_class(m.front()) << "\"";
        if (outside) {
          os << ", style=filled, fillcolor=lightgrey";
        }
        os << "];\n";
      }
      os << "  }\n";
    }
    os << "}\n";
    emit_text(o, os.str());
    return exit_ok;
  }

  int cmd_connectors(Options const& o) {
    auto S = load_semigroup(o);
    auto T = load_sub(o, S);
    auto G = relative_green(S, T);
    auto C = connectors(S, G);
    json rho = json::array(), lambda = json::array(), sigma = json::array(),
         tau = json::array();
    for (element_type s = 0; s <= S.size(); ++s) {
      json r1 = json::array(), l1 = json::array(), s1 = json::array(), t1 = json::array();
      for (class_index i = 0; i < G.num_indices(); ++i) {
        r1.push_back(C.rho(s, i));
        l1.push_back(C.lambda(i, s));
        s1.push_back(name1(S, C.sigma(s, i)));
        t1.push_back(name1(S, C.tau(i, s)));
      }
      rho.push_back(r1);
      lambda.push_back(l1);
      sigma.push_back(s1);
      tau.push_back(t1);
    }
    json r;
    r["elements"] = names_of(S, [&] {
      std::vector<element_type> v(S.size() + 1);
      std::iota(v.begin(), v.end(), 0);
      return v;
    }());
    r["representatives"] = names_of(S, G.representatives());
    r["rho"]             = rho;
    r["lambda"]          = lambda;
    r["sigma"]           = sigma;
    r["tau"]             = tau;
    report(o, r);
    return exit_ok;
  }

  int cmd_rewrite(Options const& o) {
    auto S  = load_semigroup(o);
    auto T  = load_sub(o, S);
    auto G  = relative_green(S, T);
    auto C  = connectors(S, G);
    auto w  = parse_elements(S, o.word);
    auto tr = o.left ? push_left(o.class_index, w, C) : push_right(o.class_index, w, C);
    json r;
    r["direction"]    = o.left ? "left" : "right";
    r["input_class"]  = tr.input_class;
    r["input_word"]   = names_of(S, tr.input_word);
    r["output_word"]  = names_of(S, tr.output_word);
    r["output_class"] = tr.output_class;
    r["indices"]      = tr.indices;
    report(o, r);
    return exit_ok;
  }

  int cmd_schreier(Options const& o) {
    auto S = load_semigroup(o);
    auto T = load_sub(o, S);
    auto G = relative_green(S, T);
    auto C = connectors(S, G);
    std::vector<element_type> A;
    if (o.gens.empty()) {
      A = default_gens(S, whole(S));
    } else {
      A = parse_elements(S, o.gens);
    }
    auto sg = schreier_generators(S, A, T, G, C);
    auto B  = sg.generators();
    json r;
    r["generators"]       = names_of(S, B);
    r["closure_equals_t"] = closure(S, B) == T;
    json fac              = json::object();
    for (auto t : T.members()) {
      fac[S.name(t)] = names_of(S, sg.factorize(t));
    }
    r["factorizations"] = fac;
    report(o, r);
    return exit_ok;
  }

  int cmd_schutz(Options const& o) {
    auto S = load_semigroup(o);
    auto T = load_sub(o, S);
    auto G = relative_green(S, T);
    element_type base;
    if (o.element) {
      if (*o.element >= S.size()) {
        throw error(error_kind::input_error, "--element is not an element");
      }
      base = *o.element;
    } else {
      if (o.class_index == one_class || o.class_index >= G.num_indices()) {
        throw error(error_kind::input_error,
                    "--class-of must be in 1.." + std::to_string(G.green_index() - 1));
      }
      base = G.representative(o.class_index);
    }
    auto const& H     = G.h_class_members(G.h_class(base));
    auto        Gamma = schutz_group(S, G, H, base);
    auto        B     = gens_or_default(o, S, T);
    auto        L     = lambda_data(S, G, H, base);
    auto        X     = schutz_generators(S, T, B, L, Gamma);
    json        gamma = json::array();
    for (auto const& cls : Gamma.gamma_classes()) {
      gamma.push_back(names_of(S, cls));
    }
    json r;
    r["h_class"]       = names_of(S, H);
    r["basepoint"]     = S.name(base);
    r["stabilizer"]    = names_of(S, Gamma.stabilizer());
    r["gamma_classes"] = gamma;
    r["group_table"]   = Gamma.group().table;
    r["order"]         = Gamma.order();
    r["generators"]    = X;
    r["generated"]     = subgroup_closure(Gamma.group(), X).size() == Gamma.order();
    report(o, r);
    return exit_ok;
  }

  struct Synth {
    GreenData       G;
    ConnectorTables C;
    SynthesisResult result;
  };

  // Presentation for S from the table presentation of T (letters t0, t1,
  // ...) or from --presentation when that carries an assignment into S.
  Synth synthesize(Options const& o, FiniteSemigroup const& S, SubSemigroup const& T) {
    Synth s;
    s.G = relative_green(S, T);
    s.C = connectors(S, s.G);
    Presentation Q;
    Assignment   beta;
    if (!o.presentation.empty()) {
      auto j = io::read_json_file(o.presentation);
      Q      = io::presentation_from_json(j);
      auto a = io::assignment_from_json(j);
      if (!a) {
        throw error(error_kind::input_error, "the presentation for T needs an assignment");
      }
      beta = *a;
    } else {
      auto Tsem       = restrict_to(S, T);
      auto [P, local] = presentation_from_table(Tsem, "t");
      Q               = P;
      for (auto k : local.images) {
        beta.images.push_back(T.members()[k]);
      }
    }
    auto packs = make_schutz_packs(S, s.G, beta.images);
    s.result   = synthesize_presentation(Q, beta, packs, S, s.G, s.C, o.max_classes,
                                         o.max_len);
    return s;
  }

  int cmd_present_synth(Options const& o) {
    auto S = load_semigroup(o);
    auto T = load_sub(o, S);
    auto s = synthesize(o, S, T);
    artifact(o, io::to_json(s.result.presentation, s.result.alpha));
    return exit_ok;
  }

  int cmd_present_enumerate(Options const& o) {
    if (o.presentation.empty()) {
      throw error(error_kind::input_error, "--presentation is required");
    }
    auto P = io::presentation_from_json(io::read_json_file(o.presentation));
    auto E = enumerate_presentation(P, o.max_classes, o.max_len);
    json r;
    r["complete"] = E.complete;
    if (!E.complete) {
      r["reason"] = E.reason;
      report(o, r);
      return exit_failed;
    }
    r["size"]   = E.size();
    json reps   = json::array();
    for (auto const& w : E.representatives) {
      reps.push_back(P.word_string(w));
    }
    r["representatives"] = reps;
    r["table"]           = E.table;
    report(o, r);
    return exit_ok;
  }

  int cmd_present_verify(Options const& o) {
    if (o.presentation.empty()) {
      throw error(error_kind::input_error, "--presentation is required");
    }
    auto S     = load_semigroup(o);
    auto j     = io::read_json_file(o.presentation);
    auto P     = io::presentation_from_json(j);
    auto alpha = io::assignment_from_json(j);
    if (!alpha) {
      throw error(error_kind::input_error, "the presentation has no assignment");
    }
    auto c = verify_presentation(P, S, *alpha, o.max_classes, o.max_len);
    json r;
    r["ok"] = c.ok;
    if (!c.ok) {
      r["reason"] = c.reason;
      if (c.violated) {
        auto const& [u, v] = P.relations[*c.violated];
        r["violated"]      = json::array({P.word_string(u), P.word_string(v)});
      }
    }
    report(o, r);
    return c.ok ? exit_ok : exit_failed;
  }

  json trace_json(SynthesisResult const& syn, WordProblemTrace const& t) {
    auto const& P = syn.presentation;
    json        j;
    j["t_word"]       = P.word_string(t.t_word);
    j["suffix_class"] = t.suffix_class;
    if (t.suffix_class != one_class) {
      j["prefix_class"] = t.prefix_class;
      j["gamma_word"]   = P.word_string(t.gamma_word);
    }
    return j;
  }

  int cmd_wp(Options const& o) {
    auto S   = load_semigroup(o);
    auto T   = load_sub(o, S);
    auto s   = synthesize(o, S, T);
    auto ctx = finite_word_problem_context(S, s.G, s.result);
    auto const& P = ctx.synthesis.presentation;
    auto w1  = io::parse_word(P.alphabet, o.word1);
    auto w2  = io::parse_word(P.alphabet, o.word2);
    auto v   = decide_word_equality(w1, w2, ctx);
    json r;
    r["equal"]  = v.equal;
    r["branch"] = std::string(1, v.branch);
    r["first"]  = trace_json(ctx.synthesis, v.first);
    r["second"] = trace_json(ctx.synthesis, v.second);
    report(o, r);
    return exit_ok;
  }

  int cmd_growth_series(Options const& o) {
    json r;
    if (o.naturals) {
      std::vector<unsigned long long> X;
      for (auto const& tok : split_list(o.gens.empty() ? "1" : o.gens)) {
        X.push_back(std::stoull(tok));
      }
      r["series"] = growth_function(natural_numbers_under_addition(), std::span<unsigned long long const>(X), o.radius);
      r["note"]   = "black-box semigroup: associativity is assumed, not checked";
      report(o, r);
      return exit_ok;
    }
    auto S = load_semigroup(o);
    auto A = o.gens.empty() ? default_gens(S, whole(S)) : parse_elements(S, o.gens);
    r["generators"] = names_of(S, A);
    r["series"]     = growth_function(S, A, o.radius);
    report(o, r);
    return exit_ok;
  }

  int cmd_growth_dominate(Options const& o) {
    auto S = load_semigroup(o);
    auto T = load_sub(o, S);
    auto B = gens_or_default(o, S, T);
    std::vector<element_type> R;
    if (o.reps.empty()) {
      auto G = relative_green(S, T);
      R      = G.representatives();
    } else {
      R = parse_elements(S, o.reps, true);
    }
    auto rep = domination_check(S, T, R, B, o.radius);
    json rows = json::array();
    for (auto const& row : rep.rows) {
      rows.push_back({{"n", row.n},
                      {"g_s", row.g_s},
                      {"g_t", row.g_t},
                      {"bound", row.bound},
                      {"holds", row.holds}});
    }
    json r;
    r["k1"]    = rep.k1;
    r["k2"]    = rep.k2;
    r["a"]     = names_of(S, rep.a);
    r["rows"]  = rows;
    r["holds"] = rep.holds();
    report(o, r);
    return rep.holds() ? exit_ok : exit_failed;
  }

  AutomaticStructure load_structure(Options const& o) {
    if (o.structure.empty()) {
      throw error(error_kind::input_error, "--structure is required");
    }
    return io::structure_from_json(io::read_json_file(o.structure));
  }

  int cmd_auto_build(Options const& o) {
    auto S = load_semigroup(o);
    auto A = o.gens.empty() ? default_gens(S, whole(S)) : parse_elements(S, o.gens);
    artifact(o, io::to_json(structure_for_finite(S, A)));
    return exit_ok;
  }

  int cmd_auto_verify(Options const& o) {
    auto S  = load_semigroup(o);
    auto st = load_structure(o);
    std::vector<element_type> target;
    if (o.sub.empty()) {
      target.resize(S.size());
      std::iota(target.begin(), target.end(), 0);
    } else {
      auto T = load_sub(o, S);
      target.assign(T.members().begin(), T.members().end());
    }
    auto c = verify_structure(st, S, target, o.verify_len);
    json r;
    r["ok"] = c.ok;
    if (!c.ok) {
      r["reason"] = c.reason;
      if (c.witness) {
        r["witness"] = json::array({io::word_to_json(st.alphabet, c.witness->first),
                                    io::word_to_json(st.alphabet, c.witness->second)});
      }
      if (c.letter) {
        r["letter"] = st.alphabet[*c.letter];
      }
    }
    report(o, r);
    return c.ok ? exit_ok : exit_failed;
  }

  int cmd_auto_transfer(Options const& o) {
    auto S   = load_semigroup(o);
    auto T   = load_sub(o, S);
    auto st  = load_structure(o);
    auto G   = relative_green(S, T);
    auto C   = connectors(S, G);
    auto out = transfer(st, S, G, C, o.delay);
    artifact(o, io::to_json(out.structure));
    return exit_ok;
  }

  int exit_code_for(error_kind k) {
    switch (k) {
      case error_kind::bound_exceeded:
      case error_kind::delay_exceeded:
      case error_kind::budget_exceeded:
      case error_kind::dagger_violation:
      case error_kind::internal_inconsistency: return exit_failed;
      default: return exit_bad_input;
    }
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Green index tools for finite semigroups"};
  app.require_subcommand(1);
  Options o;
  int     status = exit_ok;

  auto common = [&](CLI::App* c, bool sub = true) {
    c->add_option("--semigroup", o.semigroup, "semigroup JSON file");
    if (sub) {
      c->add_option("--sub", o.sub, "subsemigroup JSON file");
    }
    c->add_flag("--json", o.as_json, "print the report as JSON");
    c->add_option("-o,--out", o.out, "write output to a file");
  };
  auto bounds = [&](CLI::App* c) {
    c->add_option("--max-classes", o.max_classes, "coset enumeration: live class cap")
        ->check(CLI::PositiveNumber);
    c->add_option("--max-len", o.max_len, "coset enumeration: definition depth cap")
        ->check(CLI::PositiveNumber);
  };
  auto run = [&](CLI::App* c, int (*f)(Options const&)) {
    c->callback([&status, &o, f] { status = f(o); });
  };

  auto validate = app.add_subcommand("validate", "check a table and optional subsemigroup");
  common(validate);
  run(validate, cmd_validate);

  auto gi = app.add_subcommand("green-index", "Green index and complement classes");
  common(gi);
  run(gi, cmd_green_index);

  auto egg = app.add_subcommand("eggbox", "DOT diagram of R/L/H classes");
  common(egg);
  egg->add_flag("--relative", o.relative, "classes relative to --sub");
  run(egg, cmd_eggbox);

  auto con = app.add_subcommand("connectors", "rho, lambda, sigma, tau tables");
  common(con);
  run(con, cmd_connectors);

  auto rw = app.add_subcommand("rewrite", "push h_i through a word");
  common(rw);
  rw->add_option("--class", o.class_index, "index i (0 is the adjoined identity)");
  rw->add_option("--word", o.word, "comma separated elements")->required();
  rw->add_flag("--left", o.left, "rewrite s_1...s_n h_i instead of h_i s_1...s_n");
  run(rw, cmd_rewrite);

  auto sch = app.add_subcommand("schreier", "generators of T from generators of S");
  common(sch);
  sch->add_option("--gens", o.gens, "generators of S (default: greedy)");
  run(sch, cmd_schreier);

  auto sz = app.add_subcommand("schutz", "relative Schutzenberger group");
  common(sz);
  sz->add_option("--class-of", o.class_index, "complement class index");
  sz->add_option("--element", o.element, "any element of the H-class instead");
  sz->add_option("--gens", o.gens, "generators of T (default: greedy)");
  run(sz, cmd_schutz);

  auto pr = app.add_subcommand("present", "presentations");
  pr->require_subcommand(1);
  auto synth = pr->add_subcommand("synth", "presentation for S from one for T");
  common(synth);
  bounds(synth);
  synth->add_option("--presentation", o.presentation,
                    "presentation for T with assignment (default: its table)");
  run(synth, cmd_present_synth);
  auto en = pr->add_subcommand("enumerate", "coset enumeration");
  common(en, false);
  bounds(en);
  en->add_option("--presentation", o.presentation, "presentation JSON")->required();
  run(en, cmd_present_enumerate);
  auto ver = pr->add_subcommand("verify", "check a presentation with assignment");
  common(ver, false);
  bounds(ver);
  ver->add_option("--presentation", o.presentation, "presentation JSON")->required();
  run(ver, cmd_present_verify);

  auto wp = app.add_subcommand("wp", "word problem through the synthesized presentation");
  common(wp);
  bounds(wp);
  wp->add_option("--presentation", o.presentation, "presentation for T (optional)");
  wp->add_option("--word1", o.word1, "word over the synthesized alphabet")->required();
  wp->add_option("--word2", o.word2, "word over the synthesized alphabet")->required();
  run(wp, cmd_wp);

  auto gr = app.add_subcommand("growth", "growth series and domination");
  gr->require_subcommand(0, 1);
  auto series_opts = [&](CLI::App* c) {
    common(c, false);
    c->add_option("--gens", o.gens, "generators (default: greedy)");
    c->add_option("--max", o.radius, "largest radius");
    c->add_flag("--naturals", o.naturals, "use (N, +) as a black box");
  };
  series_opts(gr);
  auto series = gr->add_subcommand("series", "g(m) for m = 0..max");
  series_opts(series);
  run(series, cmd_growth_series);
  auto dom = gr->add_subcommand("dominate", "check g_S(n) <= k1 g_T(k2 n)");
  common(dom);
  dom->add_option("--gens", o.gens, "generators of T (default: greedy)");
  dom->add_option("--reps", o.reps, "R, with id for the identity (default: 1 and class reps)");
  dom->add_option("--max", o.radius, "largest n")->default_val(12);
  run(dom, cmd_growth_dominate);
  gr->callback([&] {
    if (gr->get_subcommands().empty()) {
      status = cmd_growth_series(o);
    }
  });

  auto au = app.add_subcommand("auto", "automatic structures");
  au->require_subcommand(1);
  auto build = au->add_subcommand("build", "shortlex structure for a finite semigroup");
  common(build, false);
  build->add_option("--gens", o.gens, "generators (default: greedy)");
  run(build, cmd_auto_build);
  auto av = au->add_subcommand("verify", "check a structure by enumeration");
  common(av);
  av->add_option("--structure", o.structure, "structure JSON")->required();
  av->add_option("--max-len", o.verify_len, "longest word checked")->check(CLI::PositiveNumber);
  run(av, cmd_auto_verify);
  auto at = au->add_subcommand("transfer", "structure for T from one for S");
  common(at);
  at->add_option("--structure", o.structure, "structure JSON for S")->required();
  at->add_option("--delay", o.delay, "composition delay bound (default |S| + 1)");
  run(at, cmd_auto_transfer);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_bad_input;
  } catch (not_associative_error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_bad_input;
  } catch (error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_bad_input;
  }
  return status;
}
