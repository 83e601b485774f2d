#include "freeknots/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "freeknots/bracket.hpp"
#include "freeknots/cover.hpp"
#include "freeknots/delta.hpp"
#include "freeknots/parity.hpp"

namespace freeknots {

using nlohmann::json;

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_words(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

std::vector<CorpusEntry> parse_corpus(std::string_view text) {
  std::vector<CorpusEntry> out;
  std::set<std::string> names;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    const auto t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto colon = t.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::MalformedToken, t, "corpus line without ':'");
    auto head = split_words(std::string_view(t).substr(0, colon));
    if (head.empty()) throw Error(ErrorCode::MalformedToken, t, "corpus line without a name");
    CorpusEntry entry;
    entry.name = head[0];
    entry.tags.assign(head.begin() + 1, head.end());
    entry.code = trim(std::string_view(t).substr(colon + 1));
    if (!names.insert(entry.name).second) throw Error(ErrorCode::DuplicateName, entry.name);
    out.push_back(std::move(entry));
  }
  return out;
}

std::vector<CorpusEntry> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, path, "cannot read corpus file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_corpus(buffer.str());
}

std::optional<MoveApplication> random_move(const Diagram& d, std::mt19937_64& rng, const MoveCaps& caps) {
  std::map<std::pair<int, int>, std::vector<MoveApplication>> groups;
  for (auto& m : enumerate_moves(d, caps)) {
    groups[{static_cast<int>(m.kind), static_cast<int>(m.direction)}].push_back(std::move(m));
  }
  if (groups.empty()) return std::nullopt;
  auto it = groups.begin();
  std::advance(it, static_cast<long>(rng() % groups.size()));
  return it->second[rng() % it->second.size()];
}

const std::vector<std::string>& orbit_invariant_names() {
  static const std::vector<std::string> names{"gaussian-parity-axioms", "pL-axioms",  "bracket",
                                              "bracket-full",           "delta",      "odd-crossing-existence",
                                              "mixed-parity",           "component-count"};
  return names;
}

namespace {

bool is_axiom_check(const std::string& name) { return name == "gaussian-parity-axioms" || name == "pL-axioms"; }

std::string terms_text(const Z2Set& terms) { return "{" + join(terms.sorted(), ", ") + "}"; }

Symmetry delta_symmetry(const Diagram& d) { return d.component_count() == 1 ? Symmetry{0, false} : Symmetry{1, false}; }

DeltaValue orbit_delta(const Diagram& d, const OrbitOptions& options) {
  if (d.component_count() == 1) {
    return turaev_delta(d, {FilterMode::no_trivial_component, false, options.budget});
  }
  return delta_L(d, {FilterMode::nonsplit, false, options.budget});
}

std::string state_value(const std::string& name, const Diagram& d) {
  if (name == "bracket") {
    return terms_text(d.component_count() == 1 ? bracket_knot(d).terms : bracket_full(d).terms);
  }
  if (name == "bracket-full") return terms_text(bracket_full(d).terms);
  if (name == "component-count") return std::to_string(d.component_count());
  if (name == "mixed-parity") {
    std::string out;
    for (int a = 0; a < d.component_count(); ++a) {
      for (int b = a + 1; b < d.component_count(); ++b) out += static_cast<char>('0' + d.mixed_count(a, b) % 2);
    }
    return out;
  }
  if (name == "odd-crossing-existence") {
    const auto parities = d.component_count() == 1 ? gaussian_parities(d) : p_L_parities(d, 0);
    const bool any = std::any_of(parities.begin(), parities.end(), [](const auto& p) { return p.second == 1; });
    return any ? "yes" : "no";
  }
  throw Error(ErrorCode::InvalidArgument, name, "unknown invariant");
}

std::string axiom_value(const std::string& name, const Diagram& before, const MoveApplication& m) {
  const auto rule = name == "pL-axioms" ? ParityRule::p_L : ParityRule::gaussian;
  const auto report = check_parity_axioms(rule, before, m, 0);
  return report.pass ? "pass" : join(report.violations, "; ");
}

}  // namespace

OrbitReport run_orbit(const Diagram& start, std::uint64_t seed, int length, const std::vector<std::string>& invariants,
                      const OrbitOptions& options) {
  for (const auto& name : invariants) {
    const auto& known = orbit_invariant_names();
    if (std::find(known.begin(), known.end(), name) == known.end()) {
      throw Error(ErrorCode::InvalidArgument, name, "unknown invariant");
    }
  }
  OrbitReport report;
  report.seed = seed;
  report.start = serialize(start);
  report.invariants = invariants;
  std::optional<Z2Set> initial_delta;
  for (const auto& name : invariants) {
    if (is_axiom_check(name)) {
      report.initial.emplace_back(name, "pass");
    } else if (name == "delta") {
      initial_delta = orbit_delta(start, options).terms;
      report.initial.emplace_back(name, terms_text(*initial_delta));
    } else {
      report.initial.emplace_back(name, state_value(name, start));
    }
  }

  std::mt19937_64 rng(seed);
  const MoveCaps caps{true, options.max_crossings, SIZE_MAX};
  Diagram current = start;
  for (int step = 1; step <= length; ++step) {
    const auto m = random_move(current, rng, caps);
    if (!m) break;
    const Diagram next = apply_move(current, *m);
    OrbitStep s{*m, serialize(next), {}};
    for (std::size_t i = 0; i < invariants.size() && report.all_equal(); ++i) {
      const auto& name = invariants[i];
      std::string value;
      bool same = true;
      if (is_axiom_check(name)) {
        value = axiom_value(name, current, *m);
        same = value == "pass";
      } else if (name == "delta") {
        const auto delta = orbit_delta(next, options);
        value = terms_text(delta.terms);
        const auto verdict = values_equivalent(*initial_delta, delta.terms, delta_symmetry(next), options.budget);
        if (verdict == Verdict::unknown || delta.undecided() > 0) ++report.undecided;
        same = verdict != Verdict::distinct;
      } else {
        value = state_value(name, next);
        same = value == report.initial[i].second;
      }
      if (!same) {
        report.violation_step = step;
        report.violation_invariant = name;
      }
      s.values.emplace_back(name, std::move(value));
    }
    report.steps.push_back(std::move(s));
    current = next;
    if (!report.all_equal()) break;
  }
  return report;
}

std::vector<Diagram> knot_diagrams(int chords) {
  if (chords < 0) throw Error(ErrorCode::InvalidArgument, std::to_string(chords));
  if (chords == 0) return {parse_gauss("()")};
  const int n = 2 * chords;
  std::vector<std::string> labels;
  for (int i = 0; i < chords; ++i) labels.push_back(std::to_string(i + 1));
  std::map<std::string, Diagram> found;
  Word w(static_cast<std::size_t>(n), -1);
  auto rec = [&](auto&& self, int next) -> void {
    int i = 0;
    while (i < n && w[i] >= 0) ++i;
    if (i == n) {
      Diagram d({w}, labels);
      auto key = canonical_text(d);
      if (!found.count(key)) found.emplace(std::move(key), canonical_diagram(d));
      return;
    }
    w[i] = next;
    for (int j = i + 1; j < n; ++j) {
      if (w[j] >= 0) continue;
      w[j] = next;
      self(self, next + 1);
      w[j] = -1;
    }
    w[i] = -1;
  };
  rec(rec, 0);
  std::vector<Diagram> out;
  for (auto& [key, d] : found) out.push_back(std::move(d));
  return out;
}

std::vector<KnotRecord> enumerate_knots(int max_chords, bool with_delta) {
  if (max_chords < 1 || max_chords > 8) {
    throw Error(ErrorCode::InvalidArgument, std::to_string(max_chords), "max chords must be between 1 and 8");
  }
  std::vector<KnotRecord> out;
  for (int n = 1; n <= max_chords; ++n) {
    for (const auto& d : knot_diagrams(n)) {
      KnotRecord r;
      r.code = canonical_text(d);
      r.chords = n;
      const auto parities = gaussian_parities(d);
      r.all_odd = std::all_of(parities.begin(), parities.end(), [](const auto& p) { return p.second == 1; });
      r.r2_irreducible = decreasing_r2_moves(d).empty();
      r.bracket = bracket_knot(d).terms;
      if (with_delta) r.delta = turaev_delta(d, {FilterMode::no_trivial_component, false, {10, 3, 20000}}).terms;
      out.push_back(std::move(r));
    }
  }
  return out;
}

namespace {

json error_json(const Error& e) {
  return {{"error", {{"code", std::string(to_string(e.code()))}, {"detail", e.detail()}, {"message", e.what()}}}};
}

json moves_json(const std::vector<MoveApplication>& path) {
  json out = json::array();
  for (const auto& m : path) out.push_back(describe(m));
  return out;
}

json pairs_json(const std::vector<std::pair<std::string, std::string>>& values) {
  json out = json::object();
  for (const auto& [k, v] : values) out[k] = v;
  return out;
}

json orbit_json(const OrbitReport& r) {
  json steps = json::array();
  for (std::size_t i = 0; i < r.steps.size(); ++i) {
    steps.push_back({{"step", i + 1},
                     {"move", describe(r.steps[i].move)},
                     {"diagram", r.steps[i].diagram},
                     {"values", pairs_json(r.steps[i].values)}});
  }
  json verdict = "all-equal";
  if (!r.all_equal()) verdict = {{"violation", {{"step", r.violation_step}, {"invariant", r.violation_invariant}}}};
  return {{"prng", "mt19937_64"}, {"seed", r.seed},         {"start", r.start},     {"initial", pairs_json(r.initial)},
          {"steps", steps},      {"undecided", r.undecided}, {"verdict", verdict}};
}

json delta_json(const DeltaValue& v) {
  json kept = json::array();
  json dropped = json::array();
  json summands = json::array();
  for (const auto& s : v.summands) {
    summands.push_back({{"site", s.site}, {"status", s.status}, {"certificate", s.certificate}, {"term", s.term}});
    if (s.status != "kept" && s.status != "undecided") {
      dropped.push_back({{"site", s.site}, {"reason", s.status}, {"term", canonical_text(s.raw)}});
    }
  }
  for (const auto& t : v.terms.sorted()) kept.push_back(t);
  return {{"mode", std::string(to_string(v.mode))},
          {"terms", kept},
          {"dropped", dropped},
          {"undecided", v.undecided()},
          {"summands", summands}};
}

json cover_json(const Diagram& d, const std::string& emit, std::optional<std::uint64_t> seed) {
  const auto c = covering_K2(d, seed);
  json out = json::object();
  if (emit == "k2" || emit == "both") {
    json edges = json::array();
    for (const auto& e : c.classification.edges) {
      edges.push_back({{"edge", e.edge},
                       {"tree", e.tree},
                       {"good", e.good},
                       {"rotating", e.rotating},
                       {"transversal", e.transversal}});
    }
    json involution = json::object();
    for (int v = 0; v < c.graph.vertex_count; ++v) involution[c.graph.labels[v]] = c.graph.labels[c.involution_vertex(v)];
    out["k2"] = {{"code", serialize(c.diagram)},
                 {"canonical", canonical_text(c.diagram)},
                 {"involution", involution},
                 {"component_dual", c.component_dual},
                 {"tree", c.classification.tree},
                 {"edges", edges}};
  }
  if (emit == "kprime" || emit == "both") {
    const auto k = kprime_from_k2(c);
    out["kprime"] = {{"code", serialize(k)}, {"canonical", canonical_text(k)}};
  }
  return out;
}

struct Settings {
  int budget_depth = 3;
  std::size_t budget_states = 20000;
  int max_crossings = 10;
  std::string mode;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string corpus;
  bool pretty = false;

  SearchBudget budget() const { return {max_crossings, budget_depth, budget_states}; }
};

int emit(std::ostream& out, const json& j, bool pretty) {
  out << (pretty ? j.dump(2) : j.dump()) << "\n";
  return j.contains("error") ? 1 : 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Parity machinery for free knots and links", "freeknots"};
  app.require_subcommand(1);
  Settings s;
  auto add_globals = [&](CLI::App* sub) {
    sub->add_option("--budget-depth", s.budget_depth, "Search depth")->check(CLI::NonNegativeNumber);
    sub->add_option("--budget-states", s.budget_states, "Search state limit");
    sub->add_option("--max-crossings", s.max_crossings, "Crossing cap for increasing moves");
    sub->add_option("--seed", s.seed, "64-bit seed")->each([&](const std::string&) { s.seed_given = true; });
    sub->add_option("--corpus", s.corpus, "Corpus file; runs on every entry");
    sub->add_flag("--pretty", s.pretty, "Indented JSON");
  };

  std::string code;
  bool code_given = false;
  std::string code_b;
  bool ordered = false;
  std::string rule = "gaussian";
  int component = 0;
  std::string space = "G1";
  std::string pattern;
  std::string vertex;
  bool lax = false;
  std::string emit_what = "both";
  int length = 10;
  std::string invariant_list = "bracket";
  int max_chords = 6;
  bool with_delta = false;

  auto* parse = app.add_subcommand("parse", "Parse a Gauss code");
  auto* canon = app.add_subcommand("canon", "Canonical form");
  auto* parity = app.add_subcommand("parity", "Parity of crossings");
  auto* bracket_cmd = app.add_subcommand("bracket", "Parity bracket");
  auto* delta = app.add_subcommand("delta", "Turaev cobracket, delta_L and the pattern projection");
  auto* cover = app.add_subcommand("cover", "Two-fold covering and projection");
  auto* equiv = app.add_subcommand("equiv", "Bounded equivalence search");
  auto* orbit = app.add_subcommand("orbit", "Seeded random move orbit");
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate knot diagrams");
  for (auto* sub : {parse, canon, parity, bracket_cmd, delta, cover, orbit}) {
    add_globals(sub);
    sub->add_option("code", code, "Gauss code")->each([&](const std::string&) { code_given = true; });
  }
  add_globals(equiv);
  add_globals(enumerate);
  canon->add_flag("--ordered", ordered, "Keep the component order");
  parity->add_option("--rule", rule, "gaussian or pL")->check(CLI::IsMember({"gaussian", "pL"}));
  parity->add_option("--component", component, "Component K for pL");
  bracket_cmd->add_option("--space", space, "G, G1 or G2rel")->check(CLI::IsMember({"G", "G1", "G2rel"}));
  delta->add_option("--mode", s.mode, "nonsplit or no-trivial-component")
      ->check(CLI::IsMember({"nonsplit", "no-trivial-component"}));
  delta->add_option("--pattern", pattern, "Two-component pattern link P / Q");
  delta->add_option("--vertex", vertex, "Crossing of K for the pattern parity");
  delta->add_flag("--lax", lax, "Record undecided summands instead of failing");
  cover->add_option("--emit", emit_what, "k2, kprime or both")->check(CLI::IsMember({"k2", "kprime", "both"}));
  equiv->add_option("a", code, "First Gauss code")->required();
  equiv->add_option("b", code_b, "Second Gauss code")->required();
  equiv->add_flag("--ordered", ordered, "Keep the component order");
  orbit->add_option("--length", length, "Number of moves")->check(CLI::NonNegativeNumber);
  orbit->add_option("--invariants", invariant_list, "Comma-separated invariant names");
  enumerate->add_option("--max-chords", max_chords, "Largest chord count");
  enumerate->add_flag("--with-delta", with_delta, "Also compute the cobracket");

  std::vector<const char*> argv{"freeknots"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code_out = app.exit(e, err, err);
    return code_out == 0 ? 0 : 2;
  }

  auto single = [&](const std::string& text) -> json {
    const Diagram d = parse_gauss(text);
    if (parse->parsed()) {
      json comps = json::array();
      for (const auto& w : d.components()) {
        json word = json::array();
        for (int x : w) word.push_back(d.label(x));
        comps.push_back(word);
      }
      json kinds = json::object();
      for (const auto& [label, kind] : classify_crossings(d)) kinds[label] = std::string(to_string(kind));
      return {{"code", serialize(d)}, {"components", comps}, {"crossings", kinds}, {"canonical", canonical_text(d)}};
    }
    if (canon->parsed()) {
      return {{"canonical", canonicalize(d, ordered).text}};
    }
    if (parity->parsed()) {
      json j = json::object();
      const auto bits = rule == "gaussian" ? gaussian_parities(d) : p_L_parities(d, component);
      for (auto [x, p] : bits) j[d.label(x)] = p;
      return j;
    }
    if (bracket_cmd->parsed()) {
      const auto v = bracket(d, parse_space(space));
      return {{"space", std::string(to_string(v.space))}, {"terms", v.terms.sorted()}, {"zero", v.zero()}};
    }
    if (delta->parsed()) {
      const bool knot = d.component_count() == 1;
      DeltaOptions options;
      options.mode = s.mode.empty() ? (knot ? FilterMode::no_trivial_component : FilterMode::nonsplit)
                                    : parse_filter_mode(s.mode);
      options.strict = !lax;
      options.budget = s.budget();
      if (!pattern.empty()) {
        const auto p = make_pattern(parse_gauss(pattern), s.budget());
        json j = delta_json(f_PQ(d, p, options));
        j["kind"] = "f_PQ";
        if (!vertex.empty()) j["p_PQ"] = p_PQ(d, vertex, p, options);
        return j;
      }
      json j = delta_json(knot ? turaev_delta(d, options) : delta_L(d, options));
      j["kind"] = knot ? "turaev" : "delta_L";
      return j;
    }
    if (cover->parsed()) {
      return cover_json(d, emit_what, s.seed_given ? std::optional<std::uint64_t>(s.seed) : std::nullopt);
    }
    if (orbit->parsed()) {
      std::vector<std::string> names;
      std::stringstream list(invariant_list);
      for (std::string name; std::getline(list, name, ',');) {
        if (!trim(name).empty()) names.push_back(trim(name));
      }
      return orbit_json(run_orbit(d, s.seed, length, names, {s.max_crossings, s.budget()}));
    }
    throw Error(ErrorCode::InvalidArgument, "", "no subcommand");
  };

  try {
    if (equiv->parsed()) {
      const Symmetry symmetry = ordered ? Symmetry::ordered() : Symmetry::unordered();
      const auto v = bounded_equiv(parse_gauss(code), parse_gauss(code_b), s.budget(), symmetry);
      json j = {{"verdict", std::string(to_string(v.outcome))},
                {"source", serialize(v.source)},
                {"target", v.target},
                {"path", moves_json(v.path)},
                {"states", v.states}};
      if (!v.invariant.empty()) j["invariant"] = v.invariant;
      return emit(out, j, s.pretty);
    }
    if (enumerate->parsed()) {
      const auto records = enumerate_knots(max_chords, with_delta);
      json knots = json::array();
      int count = 0;
      std::optional<int> min_chords;
      for (const auto& r : records) {
        json k = {{"code", r.code},
                  {"chords", r.chords},
                  {"all_odd", r.all_odd},
                  {"r2_irreducible", r.r2_irreducible},
                  {"bracket", r.bracket.sorted()}};
        if (r.delta) k["delta"] = r.delta->sorted();
        knots.push_back(k);
        if (r.all_odd && r.r2_irreducible) {
          ++count;
          if (!min_chords) min_chords = r.chords;
        }
      }
      json summary = {{"count", count}, {"min_chords", min_chords ? json(*min_chords) : json(nullptr)}};
      return emit(out, {{"max_chords", max_chords}, {"knots", knots}, {"all_odd_irreducible", summary}}, s.pretty);
    }
    if (!s.corpus.empty()) {
      auto entries = load_corpus(s.corpus);
      std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
      json results = json::array();
      bool failed = false;
      for (const auto& e : entries) {
        json r = {{"name", e.name}, {"tags", e.tags}, {"code", e.code}};
        try {
          r["result"] = single(e.code);
        } catch (const Error& ex) {
          r["result"] = error_json(ex);
          failed = true;
        }
        results.push_back(r);
      }
      emit(out, {{"entries", results}}, s.pretty);
      return failed ? 1 : 0;
    }
    if (!code_given) {
      err << "a Gauss code or --corpus is required\n";
      return 2;
    }
    return emit(out, single(code), s.pretty);
  } catch (const Error& e) {
    emit(out, error_json(e), s.pretty);
    return 1;
  }
}

}  // namespace freeknots
