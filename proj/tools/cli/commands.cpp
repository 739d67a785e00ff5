#include "commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <functional>
#include <limits>
#include <optional>

#include "config.hpp"
#include "coxeter/cosets.hpp"
#include "coxeter/error.hpp"
#include "coxeter/finite_type.hpp"
#include "coxeter/oracle.hpp"
#include "coxeter/ray.hpp"
#include "coxeter/suite.hpp"
#include "coxeter/system.hpp"

namespace coxwb {
namespace {

using nlohmann::json;
using namespace coxeter;

struct SystemOptions {
  std::vector<std::string> presets;
  std::vector<std::string> config_files;
  std::size_t closure_budget = ReduceOptions{}.closure_budget;

  std::vector<SystemConfig> resolve() const {
    std::vector<SystemConfig> out;
    for (const auto& p : presets) out.push_back(preset(p));
    for (const auto& f : config_files)
      for (auto& s : load_config_file(f)) out.push_back(std::move(s));
    return out;
  }

  SystemConfig single() const {
    auto all = resolve();
    if (all.size() != 1)
      throw ConfigError("this command needs exactly one system (--system NAME or --config PATH)");
    return std::move(all.front());
  }

  CoxeterSystem system(const SystemConfig& c) const {
    ReduceOptions opts;
    opts.closure_budget = closure_budget;
    return CoxeterSystem(c.matrix, opts);
  }
};

void add_system_options(CLI::App* sub, SystemOptions& o) {
  sub->add_option("--system", o.presets,
                  "Preset system: A<n>, B<n>, D<n>, F4, H3, H4, I2(<m>|inf), tilde-A2, G1");
  sub->add_option("--config", o.config_files,
                  "JSON file {\"generators\": [...], \"orders\": [[1,\"inf\",3],...]}")
      ->check(CLI::ExistingFile);
  sub->add_option("--closure-budget", o.closure_budget,
                  "Maximum braid-closure size per reduction step")
      ->capture_default_str();
}

json order_json(const std::optional<GroupOrder>& order) {
  if (!order) return nullptr;
  if (*order <= std::numeric_limits<std::uint64_t>::max())
    return order->convert_to<std::uint64_t>();
  return order->str();
}

json verdict_json(const SystemConfig& c, const SphericalVerdict& v) {
  auto components = json::array();
  for (const auto& comp : v.components)
    components.push_back({{"generators", c.names(comp.members)}, {"type", to_string(comp.type)}});
  return {{"spherical", v.spherical}, {"components", components}, {"order", order_json(v.order)}};
}

json lemma_json(const LemmaResult& r, bool timing) {
  json j = {{"name", r.name},
            {"radius", r.radius},
            {"instances", r.instances},
            {"failure_count", r.failure_count},
            {"failures", r.failures},
            {"passed", r.passed()}};
  if (timing) j["wall_time_ms"] = r.wall_ms;
  return j;
}

// Subcommand handlers. Each returns an exit code.

int cmd_validate(const SystemOptions& o, std::ostream& out) {
  const SystemConfig c = o.single();
  json j = to_json(c);
  j["valid"] = true;
  j["rank"] = c.matrix.rank();
  out << j.dump() << '\n';
  return kExitOk;
}

int cmd_reduce(const SystemOptions& o, const std::string& word, std::ostream& out) {
  const SystemConfig c = o.single();
  const Element e = o.system(c).reduce(c.parse_word(word));
  out << json{{"canonical", c.names(e.canonical)}, {"length", e.length()}}.dump() << '\n';
  return kExitOk;
}

int cmd_descents(const SystemOptions& o, const std::string& word, std::ostream& out) {
  const SystemConfig c = o.single();
  const CoxeterSystem sys = o.system(c);
  const Element e = sys.reduce(c.parse_word(word));
  out << json{{"element", c.names(e.canonical)},
              {"length", e.length()},
              {"left", c.names(sys.left_descents(e))},
              {"right", c.names(sys.right_descents(e))}}
             .dump()
      << '\n';
  return kExitOk;
}

int cmd_spherical(const SystemOptions& o, const std::string& subset, std::ostream& out) {
  const SystemConfig c = o.single();
  out << verdict_json(c, classify(c.matrix, c.parse_subset(subset))).dump() << '\n';
  return kExitOk;
}

int cmd_maximal(const SystemOptions& o, std::ostream& out) {
  const SystemConfig c = o.single();
  auto sets = json::array();
  for (GenSet t : maximal_spherical_subsets(c.matrix)) sets.push_back(c.names(t));
  out << json{{"maximal_spherical_subsets", sets}}.dump() << '\n';
  return kExitOk;
}

int cmd_enumerate(const SystemOptions& o, std::size_t radius, const std::string& dot_path,
                  std::ostream& out) {
  const SystemConfig c = o.single();
  const CoxeterSystem sys = o.system(c);
  const Ball ball = enumerate_ball(c.matrix, radius);
  for (const Element& e : ball.elements())
    out << json{{"element", c.names(e.canonical)},
                {"length", e.length()},
                {"descents", c.names(sys.right_descents(e))}}
               .dump()
        << '\n';
  if (!dot_path.empty()) {
    std::ofstream dot(dot_path);
    if (!dot) throw ConfigError("cannot write DOT file '" + dot_path + "'");
    dot << "graph cayley {\n";
    for (std::size_t v = 0; v < ball.size(); ++v)
      dot << "  v" << v << " [label=\"" << format_word(ball.element(v).canonical, c.generators)
          << "\"];\n";
    for (std::size_t v = 0; v < ball.size(); ++v)
      for (Generator s = 0; s < c.matrix.rank(); ++s) {
        const std::size_t u = ball.neighbour(v, s);
        if (u != Ball::npos && v < u)
          dot << "  v" << v << " -- v" << u << " [label=\"" << c.generators[s] << "\"];\n";
      }
    dot << "}\n";
  }
  return kExitOk;
}

int cmd_longest_coset(const SystemOptions& o, const std::string& subset, const std::string& word,
                      std::ostream& out) {
  const SystemConfig c = o.single();
  const CoxeterSystem sys = o.system(c);
  const GenSet t = c.parse_subset(subset);
  const Element w = sys.reduce(c.parse_word(word));
  const CosetLongest greedy = longest_in_coset(sys, t, w);
  const Element oracle = longest_in_coset_oracle(sys, t, w);
  auto coset = json::array();
  bool characterisation = true;
  for (const Element& u : coset_elements(sys, t, w)) {
    const bool top = t.subset_of(sys.left_descents(u));
    characterisation = characterisation && top == (u == oracle);
    coset.push_back({{"element", c.names(u.canonical)}, {"length", u.length()}, {"longest", top}});
  }
  const bool agrees = greedy.v == oracle && characterisation &&
                      greedy.v.length() == greedy.x.length() + w.length();
  out << json{{"base", c.names(w.canonical)},
              {"x", c.names(greedy.x.canonical)},
              {"longest", c.names(greedy.v.canonical)},
              {"coset", coset},
              {"oracle_agrees", agrees}}
             .dump()
      << '\n';
  return agrees ? kExitOk : kExitCheckFailed;
}

int cmd_lemma_suite(const SystemOptions& o, std::size_t radius, bool timing, std::ostream& out) {
  auto systems = json::array();
  bool passed = true;
  for (const SystemConfig& c : o.resolve()) {
    const LemmaChecker checker(o.system(c), c.generators);
    const SystemReport report = checker.run_all(c.name, radius);
    auto lemmas = json::array();
    for (const auto& l : report.lemmas) lemmas.push_back(lemma_json(l, timing));
    systems.push_back({{"system", report.system},
                       {"ball_size", report.ball_size},
                       {"lemmas", lemmas},
                       {"passed", report.passed()}});
    passed = passed && report.passed();
  }
  out << json{{"radius", radius}, {"systems", systems}, {"passed", passed}}.dump() << '\n';
  return passed ? kExitOk : kExitCheckFailed;
}

struct TraceArgs {
  std::string subset, prefix, period, s0, t0, csv;
  std::size_t horizon = 50;
};

int cmd_trace(const SystemOptions& o, const TraceArgs& a, std::ostream& out) {
  const SystemConfig c = o.single();
  const CoxeterSystem sys = o.system(c);
  const GenSet t = c.parse_subset(a.subset);
  const RaySpec ray = make_ray(sys, c.parse_word(a.prefix), c.parse_word(a.period), a.horizon);
  if (a.s0.empty() != a.t0.empty()) throw ConfigError("--s0 and --t0 must be given together");
  const bool theorem = !a.s0.empty();
  const TraceReport report =
      theorem ? theorem_trace(sys, ray, t, c.generator(a.s0), c.generator(a.t0), a.horizon)
              : stabilize(sys, t, ray, a.horizon);

  auto steps = json::array();
  for (const auto& s : report.steps)
    steps.push_back({{"i", s.index},
                     {"w", c.names(s.w.canonical)},
                     {"x", c.names(s.x.canonical)},
                     {"len_w", s.w.length()},
                     {"len_x", s.x.length()}});
  auto memberships = json::array();
  for (const auto& m : report.memberships)
    memberships.push_back({{"i", m.index}, {"s0_check", m.s0_check}, {"t0_check", m.t0_check}});
  out << json{{"steps", steps},
              {"candidate_n", report.candidate_n},
              {"certification", to_string(report.certification)},
              {"certified", report.certified()},
              {"x_limit", c.names(report.x_limit.canonical)},
              {"memberships", memberships},
              {"memberships_pass", report.all_memberships_pass()}}
             .dump()
      << '\n';

  if (!a.csv.empty()) {
    std::ofstream csv(a.csv);
    if (!csv) throw ConfigError("cannot write CSV file '" + a.csv + "'");
    csv << "i,len_w,len_x\n";
    for (const auto& s : report.steps)
      csv << s.index << ',' << s.w.length() << ',' << s.x.length() << '\n';
  }
  return report.all_memberships_pass() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"coxwb: exact word-level computations in Coxeter systems", "coxwb"};
  app.require_subcommand(1);

  SystemOptions opts;
  std::string word, subset, dot;
  std::size_t radius = 3;
  bool timing = false;
  TraceArgs trace;

  auto* validate = app.add_subcommand("validate", "Check a Coxeter matrix and echo it");
  add_system_options(validate, opts);

  auto* reduce = app.add_subcommand("reduce", "ShortLex-least reduced word of a word");
  add_system_options(reduce, opts);
  reduce->add_option("--word", word, "Comma-separated generator names")->required();

  auto* descents = app.add_subcommand("descents", "Left and right descent sets of an element");
  add_system_options(descents, opts);
  descents->add_option("--word", word, "Comma-separated generator names")->required();

  auto* spherical = app.add_subcommand("spherical", "Decide whether W_T is finite");
  add_system_options(spherical, opts);
  spherical->add_option("--subset", subset, "Comma-separated generator names")->required();

  auto* maximal = app.add_subcommand("maximal-spherical", "List maximal spherical subsets");
  add_system_options(maximal, opts);

  auto* enumerate = app.add_subcommand("enumerate", "Oracle ball as JSON lines");
  add_system_options(enumerate, opts);
  enumerate->add_option("--radius", radius, "Word-length bound")->capture_default_str();
  enumerate->add_option("--dot", dot, "Also write the Cayley graph of the ball as DOT");

  auto* coset = app.add_subcommand("longest-coset", "Longest element of W_T.w");
  add_system_options(coset, opts);
  coset->add_option("--subset", subset, "Spherical subset T")->required();
  coset->add_option("--word", word, "The element w")->required();

  auto* suite = app.add_subcommand("lemma-suite", "Exhaustively verify every lemma over a ball");
  add_system_options(suite, opts);
  suite->add_option("--radius", radius, "Ball radius")->capture_default_str();
  suite->add_flag("--timing", timing, "Include wall times (output no longer byte-stable)");

  auto* tr = app.add_subcommand("trace", "Follow the coset correction along a periodic ray");
  add_system_options(tr, opts);
  tr->add_option("--subset", trace.subset, "Spherical subset T")->required();
  tr->add_option("--prefix", trace.prefix, "Ray prefix");
  tr->add_option("--period", trace.period, "Ray period (non-empty)")->required();
  tr->add_option("--horizon", trace.horizon, "Number of letters to follow")->capture_default_str();
  tr->add_option("--s0", trace.s0, "Generator s0 for the membership checks");
  tr->add_option("--t0", trace.t0, "Generator t0 with m(s0,t0) = inf");
  tr->add_option("--csv", trace.csv, "Also write i,len_w,len_x as CSV");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(opts, out);
    if (reduce->parsed()) return cmd_reduce(opts, word, out);
    if (descents->parsed()) return cmd_descents(opts, word, out);
    if (spherical->parsed()) return cmd_spherical(opts, subset, out);
    if (maximal->parsed()) return cmd_maximal(opts, out);
    if (enumerate->parsed()) return cmd_enumerate(opts, radius, dot, out);
    if (coset->parsed()) return cmd_longest_coset(opts, subset, word, out);
    if (suite->parsed()) return cmd_lemma_suite(opts, radius, timing, out);
    if (tr->parsed()) return cmd_trace(opts, trace, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const coxeter::Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace coxwb
