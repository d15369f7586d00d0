#include "hapdisc/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hapdisc/classify.hpp"
#include "hapdisc/realizability.hpp"
#include "hapdisc/reduction.hpp"
#include "hapdisc/rules.hpp"
#include "hapdisc/search.hpp"
#include "hapdisc/serialize.hpp"
#include "hapdisc/skipgraph.hpp"

namespace hapdisc {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::int64_t period_cap(const std::optional<std::int64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("HAPDISC_MAX_PERIOD")) {
    std::int64_t v = 0;
    const std::string_view text(env);
    const auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || p != text.data() + text.size() || v <= 0)
      throw UsageError("HAPDISC_MAX_PERIOD must be a positive integer");
    return v;
  }
  return kDefaultMaxPeriod;
}

std::string labeling_text(const Classification& c) {
  std::string out;
  for (const auto& [name, value] : c.labeling) {
    if (!out.empty()) out += ' ';
    out += name + "=" + std::to_string(value);
  }
  return out;
}

std::string signs_text(const std::vector<std::int8_t>& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ' ';
    out += seq[i] > 0 ? "+1" : "-1";
  }
  return out;
}

std::string terms_text(const std::vector<std::int64_t>& terms) {
  std::ostringstream os;
  for (std::size_t i = 0; i < terms.size(); ++i) os << (i ? " " : "") << terms[i];
  return os.str();
}

// ---- commands --------------------------------------------------------------

int cmd_classify(const SkipSet& s, bool json, std::ostream& out) {
  const Classification c = classify(s);
  if (json) {
    out << to_json(c).dump() << '\n';
  } else if (c.forces) {
    out << s.to_string() << " forces discrepancy two (" << to_string(c.rule) << ": " << labeling_text(c)
        << ")\n";
    out << "odd cycle " << format_pattern(*c.predicted_cycle);
    if (c.cycle_start) out << " at " << c.cycle_start->str();
    out << '\n';
  } else {
    out << s.to_string() << " does not force discrepancy two\n";
  }
  return c.forces ? 1 : 0;
}

int cmd_color(const SkipSet& s, std::int64_t cap, bool erdos, bool json, std::ostream& out) {
  const SkipGraph g = build_graph(s, cap);
  if (auto c = two_color(g)) {
    const std::string text = erdos ? signs_text(c->erdos_sequence()) : c->to_text();
    if (json)
      out << Json{{"bipartite", true}, {"period", g.period()}, {"erdos_indexing", erdos}, {"coloring", text}}.dump()
          << '\n';
    else
      out << text << '\n';
    return 0;
  }
  const auto cert = find_odd_cycle(g);
  if (json)
    out << Json{{"bipartite", false}, {"period", g.period()}, {"cycle", to_json(*cert)}}.dump() << '\n';
  else
    out << s.to_string() << " forces discrepancy two; odd cycle " << format_pattern(cert->pattern) << " at "
        << cert->start << " (length " << cert->pattern.size() << ")\n";
  return 1;
}

int cmd_cycle(const SkipSet& s, std::int64_t cap, bool json, std::ostream& out) {
  const SkipGraph g = build_graph(s, cap);
  const auto cert = find_odd_cycle(g);
  if (json) {
    Json j{{"period", g.period()}, {"cycle", nullptr}};
    if (cert) j["cycle"] = to_json(*cert);
    out << j.dump() << '\n';
  } else if (cert) {
    out << format_pattern(cert->pattern) << " at " << cert->start << " (length " << cert->pattern.size() << ")\n";
  } else {
    out << "no odd cycle; G(S) is bipartite\n";
  }
  return 0;
}

WalkKind parse_kind(const std::string& kind) { return kind == "cycle" ? WalkKind::cycle : WalkKind::path; }

int cmd_check(const std::string& text, const std::string& kind, bool json, std::ostream& out) {
  const AnyPattern any = parse_pattern(text);
  const WalkKind wk = parse_kind(kind);
  Json j;
  std::string human;
  if (const auto* sp = std::get_if<SignedPattern>(&any)) {
    const RuleVerdict rules = rule_scan(*sp);
    if (wk == WalkKind::cycle) {
      const CycleVerdict cv = valid_odd_cycle(*sp);
      j = to_json(cv);
      human = cv.valid ? "valid odd cycle" : "not a valid odd cycle";
      if (cv.failure) human += std::string(" (") + std::string(to_string(cv.failure->reason)) + ")";
      if (cv.witness_start) human += " start " + cv.witness_start->str();
    } else {
      const RealizabilityVerdict v = strict_realizability(*sp, wk);
      j = to_json(v);
      human = std::string(to_string(v.status));
      if (v.failure)
        human += " (" + std::string(to_string(v.failure->reason)) + " at " + std::to_string(v.failure->i) + ".." +
                 std::to_string(v.failure->j) + ")";
      if (v.witness_start) human += " start " + v.witness_start->str();
    }
    j["rules"] = to_json(rules);
  } else {
    const Pattern& p = std::get<Pattern>(any);
    const UnsignedVerdict uv = strict_realizability(p, wk);
    j = to_json(uv.verdict);
    if (uv.signing) j["signed"] = format_pattern(*uv.signing);
    j["rules"] = to_json(rule_scan(p));
    human = std::string(to_string(uv.verdict.status));
    if (uv.verdict.failure)
      human += " (" + std::string(to_string(uv.verdict.failure->reason)) + " at " +
               std::to_string(uv.verdict.failure->i) + ".." + std::to_string(uv.verdict.failure->j) + ")";
    if (uv.signing) human += " as " + format_pattern(*uv.signing);
    if (uv.verdict.witness_start) human += " start " + uv.verdict.witness_start->str();
  }
  if (json) {
    out << j.dump() << '\n';
  } else {
    out << human << '\n';
    if (j["rules"]["forbidden"].get<bool>())
      out << "rule " << j["rules"]["rule"].get<std::string>() << " at " << j["rules"]["location"][0] << ".."
          << j["rules"]["location"][1] << '\n';
  }
  return 0;
}

int cmd_realize(const std::string& text, std::int64_t start, bool json, std::ostream& out) {
  const AnyPattern any = parse_pattern(text);
  const SignedPattern sp = std::holds_alternative<SignedPattern>(any)
                               ? std::get<SignedPattern>(any)
                               : infer_signs(std::get<Pattern>(any), start);
  const Realization r = realize(sp, start);
  if (json) {
    Json j = to_json(r);
    j["valid_walk"] = r.valid_walk();
    j["simple_path"] = r.shape.simple_path();
    j["simple_cycle"] = r.shape.simple_cycle();
    out << j.dump() << '\n';
    return 0;
  }
  out << format_pattern(sp) << " from " << start << '\n';
  out << "terms " << terms_text(r.terms) << '\n';
  if (r.parity_violation)
    out << "step " << *r.parity_violation << " leaves from the wrong kind of multiple\n";
  else if (r.shape.simple_cycle())
    out << "closed walk without repeated terms or arcs\n";
  else if (r.shape.simple_path())
    out << "path without repeated terms or arcs\n";
  else
    out << "walk repeats a " << (r.shape.repeated_arc ? "arc" : "term") << '\n';
  return 0;
}

int cmd_longest(const SkipSet& s, const std::string& kind, std::size_t max_len, std::uint64_t node_limit, bool json,
                std::ostream& out) {
  SearchOptions opts;
  opts.max_len = max_len;
  opts.node_limit = node_limit;
  const bool cycle = kind == "cycle";
  const SearchOutcome res = cycle ? search_odd_cycles(s, opts) : search_paths(s, opts);
  if (json) {
    Json j{{"size", s.size()}, {"exhaustive", res.exhaustive}, {"nodes", res.nodes}, {"result", nullptr}};
    if (res.best) j["result"] = to_json(*res.best);
    out << j.dump() << '\n';
    return 0;
  }
  if (!res.best) {
    out << s.size() << ' ' << kind << " none\n";
  } else {
    out << s.size() << ' ' << kind << ' ' << res.best->length << ' ' << res.best->start << ' '
        << format_pattern(res.best->pattern) << '\n';
  }
  if (!res.exhaustive) out << "(lower bound: search cut off)\n";
  return 0;
}

std::vector<Integer> parse_integers(const std::string& text) {
  std::vector<Integer> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
               item.end());
    if (item.empty() || !std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw UsageError("expected comma-separated positive integers, got '" + text + "'");
    out.emplace_back(item);
  }
  return out;
}

int cmd_reduce(const std::string& list, bool json, std::ostream& out) {
  const EssInstance inst(parse_integers(list));
  const ReductionInstance ri = build_d1_instance(inst);
  const auto w = ess_solve(inst);
  std::optional<SignedPattern> cycle;
  if (w) {
    try {
      cycle = witness_cycle(ri, *w);
    } catch (const std::overflow_error&) {
      // skips beyond 64 bits: the pattern is still described by the witness
    }
  }
  if (json) {
    out << to_json(ri, w, cycle).dump() << '\n';
    return 0;
  }
  out << "M = " << ri.M.str() << "\nr = " << ri.r.str() << "\nt = " << ri.t.str() << '\n';
  for (std::size_t i = 0; i < ri.s.size(); ++i) out << "s" << i + 1 << " = " << ri.s[i].str() << '\n';
  if (!w) {
    out << "ESS: no solution\n";
    return 0;
  }
  out << "ESS: X = {";
  for (std::size_t k = 0; k < w->x.size(); ++k) out << (k ? "," : "") << inst.values()[w->x[k]].str();
  out << "} Y = {";
  for (std::size_t k = 0; k < w->y.size(); ++k) out << (k ? "," : "") << inst.values()[w->y[k]].str();
  out << "}\n";
  if (cycle) out << "cycle " << format_pattern(*cycle) << '\n';
  return 0;
}

int cmd_verify(const std::string& file, const SkipSet& s, std::int64_t horizon, bool erdos, bool json,
               std::ostream& out) {
  std::ifstream in(file);
  if (!in) throw UsageError("cannot read colouring file '" + file + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  Coloring c = Coloring::parse(buf.str());
  if (erdos) {
    // file holds x_1 .. x_P; the block colour of v is x_(P - v)
    const auto& x = c.colors();
    const std::size_t p = x.size();
    std::vector<std::int8_t> block(p);
    for (std::size_t v = 0; v < p; ++v) block[v] = x[(v == 0 ? p : p - v) - 1];
    c = Coloring(std::move(block));
  }
  const std::int64_t d = verify_discrepancy(c, s, horizon);
  if (json)
    out << Json{{"max_discrepancy", d}, {"horizon", horizon}, {"period", c.period()}}.dump() << '\n';
  else
    out << "max discrepancy " << d << " up to " << horizon << '\n';
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Skip sets that force discrepancy two"};
  app.name("hapdisc");
  app.require_subcommand(1);

  bool json = false;
  app.add_flag("--json", json, "machine-readable output");

  std::string set_text, pattern_text, kind = "path", list, coloring_file;
  std::optional<std::int64_t> max_period;
  bool erdos = false;
  std::size_t max_len = 64;
  std::uint64_t node_limit = 0;
  std::int64_t start = 0, horizon = 0;

  auto add_set = [&](CLI::App* sub) { sub->add_option("-s,--set", set_text, "skip set, e.g. 1,2,3")->required(); };
  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", json, "machine-readable output"); };
  auto add_cap = [&](CLI::App* sub) {
    sub->add_option("--max-period", max_period, "largest period 2*lcm(S) to build")->check(CLI::PositiveNumber);
  };

  auto* classify_cmd = app.add_subcommand("classify", "closed-form classification for |S| <= 4");
  add_set(classify_cmd);
  add_json(classify_cmd);

  auto* color_cmd = app.add_subcommand("color", "discrepancy-1 colouring or odd-cycle certificate");
  add_set(color_cmd);
  add_json(color_cmd);
  add_cap(color_cmd);
  color_cmd->add_flag("--erdos-indexing", erdos, "print x_1 .. x_P instead of the graph block");

  auto* cycle_cmd = app.add_subcommand("cycle", "odd cycle in the skip graph, if any");
  add_set(cycle_cmd);
  add_json(cycle_cmd);
  add_cap(cycle_cmd);

  auto* check_cmd = app.add_subcommand("check", "realizability verdict for a pattern");
  check_cmd->add_option("-p,--pattern", pattern_text, "pattern such as \"[+4 +3 -1 +2]\"")->required();
  check_cmd->add_option("--kind", kind, "path or cycle")->check(CLI::IsMember({"path", "cycle"}));
  add_json(check_cmd);

  auto* realize_cmd = app.add_subcommand("realize", "walk a pattern from a start term");
  realize_cmd->add_option("-p,--pattern", pattern_text, "pattern; unsigned patterns get inferred signs")->required();
  realize_cmd->add_option("--start", start, "start term")->required()->check(CLI::NonNegativeNumber);
  add_json(realize_cmd);

  auto* longest_cmd = app.add_subcommand("longest", "longest realizable path or odd cycle");
  add_set(longest_cmd);
  longest_cmd->add_option("--kind", kind, "path or cycle")->check(CLI::IsMember({"path", "cycle"}));
  longest_cmd->add_option("--max-len", max_len, "depth cap")->check(CLI::PositiveNumber);
  longest_cmd->add_option("--node-limit", node_limit, "stop after this many search nodes (0: no limit)");
  add_json(longest_cmd);

  auto* reduce_cmd = app.add_subcommand("reduce", "build the discrepancy-one instance for an ESS input");
  reduce_cmd->add_option("-a,--values", list, "ESS values, e.g. 1,2,3")->required();
  add_json(reduce_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "largest discrepancy of a colouring");
  verify_cmd->add_option("--coloring", coloring_file, "file of +1/-1 tokens, one period")->required();
  add_set(verify_cmd);
  verify_cmd->add_option("--horizon", horizon, "check d(s, k) for ks up to this bound")->required();
  verify_cmd->add_flag("--erdos-indexing", erdos, "file lists x_1 .. x_P rather than the graph block");
  add_json(verify_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const auto skip_set = [&] { return SkipSet::parse(set_text); };
    if (classify_cmd->parsed()) return cmd_classify(skip_set(), json, out);
    if (color_cmd->parsed()) return cmd_color(skip_set(), period_cap(max_period), erdos, json, out);
    if (cycle_cmd->parsed()) return cmd_cycle(skip_set(), period_cap(max_period), json, out);
    if (check_cmd->parsed()) return cmd_check(pattern_text, kind, json, out);
    if (realize_cmd->parsed()) return cmd_realize(pattern_text, start, json, out);
    if (longest_cmd->parsed()) return cmd_longest(skip_set(), kind, max_len, node_limit, json, out);
    if (reduce_cmd->parsed()) return cmd_reduce(list, json, out);
    if (verify_cmd->parsed()) return cmd_verify(coloring_file, skip_set(), horizon, erdos, json, out);
  } catch (const PeriodCapError& e) {
    err << "error: " << e.what() << " (raise it with --max-period or HAPDISC_MAX_PERIOD)\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace hapdisc
