#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "jenga/cli.hpp"
#include "jenga/deform.hpp"
#include "jenga/game.hpp"
#include "jenga/topology.hpp"

namespace jenga::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::optional<int> n;
  std::optional<int> k;
  std::string in;
  std::string out;
  bool exclude_topmost = false;
  std::optional<int> expect_genus;
  std::size_t max_states = 5'000'000;
  bool no_symmetry = false;
  bool allow_top_removal = false;
  std::string format = "obj";
  bool json = false;
  int threads = 1;
};

// Keys in insertion order; text mode prints one "key value" line each.
class Report {
 public:
  template <typename T>
  void add(const std::string& key, const T& value) {
    doc_[key] = value;
  }
  void add_lines(const std::string& key, const std::vector<std::string>& lines) {
    doc_[key] = lines;
    raw_.push_back(key);
  }
  void push(const std::string& key, const Json& item) { doc_[key].push_back(item); }

  std::string render(bool json) const {
    if (json) return doc_.dump(2) + "\n";
    std::ostringstream out;
    for (const auto& [key, value] : doc_.items()) {
      if (std::find(raw_.begin(), raw_.end(), key) != raw_.end()) {
        for (const auto& line : value) out << line.get<std::string>() << '\n';
      } else if (value.is_array()) {
        for (const auto& item : value) out << key << ' ' << scalar(item) << '\n';
      } else {
        out << key << ' ' << scalar(value) << '\n';
      }
    }
    return out.str();
  }

 private:
  static std::string scalar(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_object()) {
      std::string s;
      for (const auto& [k, x] : v.items()) {
        if (!s.empty()) s += ' ';
        s += k + ' ' + scalar(x);
      }
      return s;
    }
    return v.dump();
  }

  Json doc_ = Json::object();
  std::vector<std::string> raw_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw UsageError("cannot write " + o.out);
  file << text;
}

struct Input {
  Configuration config;
  std::optional<GameParams> params;  // set when the input is Q(n,k)
  std::string source;
};

Input load_input(const Options& o) {
  Input input;
  if (!o.in.empty()) {
    input.config = parse_box_description(read_file(o.in));
    input.source = o.in;
    const int blocks = block_count(input.config);
    const int n = input.config.n;
    if (blocks % n == 0 && blocks / n >= 3) {
      const GameParams p{n, blocks / n};
      if (make_nk_configuration(p) == input.config) input.params = p;
    }
    return input;
  }
  if (!o.n || !o.k) throw UsageError("give --in <path> or both --n and --k");
  const GameParams p{*o.n, *o.k};
  check_params(p, 3);
  input.config = make_nk_configuration(p);
  input.params = p;
  input.source = "Q(" + std::to_string(p.n) + "," + std::to_string(p.k) + ")";
  return input;
}

GameParams require_params(const Options& o) {
  if (!o.n || !o.k) throw UsageError("--n and --k are required");
  return {*o.n, *o.k};
}

std::string point_string(const Point3& p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + "," + std::to_string(p.z) + ")";
}

void add_decomposition(Report& r, const GameParams& p) {
  if (p.n % 2 == 0) return;
  const NkDecomposition d = solve_nk_decomposition(p);
  r.add("x", d.x);
  r.add("l", d.l);
  r.add("l_beyond_half_down", d.l > (p.n - 1) / 2);
}

void add_counts(Report& r, const std::string& prefix, long t1, long t2, long t3) {
  r.add(prefix + "_type1", t1);
  r.add(prefix + "_type2", t2);
  r.add(prefix + "_type3", t3);
}

int cmd_gen(const Options& o, std::ostream& out) {
  const GameParams p = require_params(o);
  check_params(p, 3);
  const Configuration c = make_nk_configuration(p);
  if (o.json) {
    Report r;
    r.add("n", p.n);
    r.add("k", p.k);
    r.add("levels", levels_count(c));
    std::vector<std::string> rows;
    for (const Level& level : c.levels) rows.push_back(level.row());
    r.add("rows", rows);
    emit(o, out, r.render(true));
  } else {
    emit(o, out, serialize_box_description(c));
  }
  return kSuccess;
}

int cmd_genus(const Options& o, std::ostream& out) {
  const Input input = load_input(o);
  const GenusResult g = analyze(input.config);
  Report r;
  r.add("source", input.source);
  r.add("n", input.config.n);
  r.add("levels", levels_count(input.config));
  r.add("blocks", block_count(input.config));
  r.add("chi", g.chi);
  r.add("genus_euler", g.genus_euler);
  r.add("genus_descartes", g.genus_descartes);
  r.add("defect_quarter_turns", g.census.defect_total);
  if (input.params) {
    const long closed = closed_form_genus(*input.params);
    r.add("k", input.params->k);
    add_decomposition(r, *input.params);
    r.add("closed_form_genus", closed);
    r.add("matches_closed_form", closed == g.genus_euler && closed == g.genus_descartes);
  }
  out << r.render(o.json);
  return kSuccess;
}

void add_census(Report& r, const DefectCensus& c) {
  r.add("excluded_topmost", c.excluded_topmost);
  r.add("type1", c.type1);
  r.add("type2", c.type2);
  r.add("type3", c.type3);
  for (const auto& [tag, count] : c.other_counts) r.add("other_" + to_string(tag), count);
  r.add("other_defect_bearing", c.other_defect_bearing);
  r.add("defect_quarter_turns", c.defect_total);
  for (std::size_t i = 0; i < c.per_floor.size(); ++i) {
    Json row = Json::object();
    row["floor"] = i;
    row["type2"] = c.per_floor[i].type2;
    row["type3"] = c.per_floor[i].type3;
    r.push("per_floor", row);
  }
}

int cmd_census(const Options& o, std::ostream& out) {
  const Input input = load_input(o);
  const SurfaceComplex s = extract_boundary(voxelize(input.config));
  const int genus = genus_euler(s);
  const DefectCensus census = vertex_census(s, input.config, o.exclude_topmost);
  Report r;
  r.add("source", input.source);
  add_census(r, census);
  r.add("genus_euler", genus);
  if (census.other_defect_bearing == 0) {
    r.add("lemma_genus", lemma_genus_from_census(census));
  }

  if (input.params) {
    const GameParams p = *input.params;
    r.add("k", p.k);
    add_decomposition(r, p);
    std::optional<ClosedFormCounts> closed;
    try {
      closed = closed_form_counts(p);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::UnsupportedCensus) throw;
      r.add("closed_form", std::string("unsupported"));
    }
    if (closed) {
      const DefectCensus geo = o.exclude_topmost ? census : vertex_census(s, input.config, true);
      const TypeCounts measured{geo.type1, geo.type2, geo.type3};
      add_counts(r, "printed", closed->printed.type1, closed->printed.type2,
                 closed->printed.type3);
      if (closed->corrected_candidate) {
        const TypeCounts& c = *closed->corrected_candidate;
        add_counts(r, "candidate", c.type1, c.type2, c.type3);
      }
      add_counts(r, "geometric", measured.type1, measured.type2, measured.type3);
      r.add("printed_matches", closed->printed == measured);
      if (closed->corrected_candidate) {
        r.add("candidate_matches", *closed->corrected_candidate == measured);
      }
      if (!closed->per_floor.empty()) {
        bool same = geo.per_floor.size() == closed->per_floor.size();
        for (std::size_t i = 0; same && i < geo.per_floor.size(); ++i) {
          same = geo.per_floor[i] == closed->per_floor[i];
        }
        r.add("per_floor_matches", same);
      }
    }
  }
  out << r.render(o.json);
  return kSuccess;
}

int cmd_check(const Options& o, std::ostream& out) {
  const Input input = load_input(o);
  const SurfaceComplex s = extract_boundary(voxelize(input.config));
  const ValidationReport v = validate_closed_surface(s);
  Report r;
  r.add("source", input.source);
  r.add("closed_surface", v.is_closed_surface);
  r.add("violation_count", v.violations.size());
  for (const Violation& x : v.violations) {
    r.push("violation", to_string(x.kind) + " " + point_string(x.a) + " " + point_string(x.b));
  }
  bool pass = v.is_closed_surface;
  if (v.is_closed_surface) {
    const int pieces = count_components(s);
    r.add("components", pieces);
    if (pieces == 1) {
      const int ge = genus_euler(s);
      const int gd = genus_descartes(s);
      r.add("genus_euler", ge);
      r.add("genus_descartes", gd);
      if (o.expect_genus) pass = ge == *o.expect_genus && gd == *o.expect_genus;
    } else if (o.expect_genus) {
      pass = false;
    }
  }
  if (o.expect_genus) r.add("expect_genus", *o.expect_genus);
  r.add("result", std::string(pass ? "pass" : "fail"));
  out << r.render(o.json);
  return pass ? kSuccess : kDomainError;
}

int cmd_search(const Options& o, std::ostream& out) {
  const GameParams p = require_params(o);
  SearchOptions options;
  options.max_states = o.max_states;
  options.use_symmetry = !o.no_symmetry;
  options.threads = o.threads;
  options.rules.allow_top_removal = o.allow_top_removal;
  const SearchReport rep = max_genus_search(p, options);
  const long closed = closed_form_genus(p);
  Report r;
  r.add("n", p.n);
  r.add("k", p.k);
  r.add("states_visited", rep.states_visited);
  r.add("hit_budget", rep.hit_budget);
  r.add("depth", rep.depth);
  r.add("dead_ends", rep.dead_ends);
  r.add("max_genus", rep.max_genus);
  r.add("closed_form_genus", closed);
  r.add("matches_closed_form", closed == rep.max_genus);
  r.add("nk_configuration_visited", rep.nk_configuration_visited);
  r.add("witness_length", rep.witness.size());
  for (const Move& m : rep.witness) r.push("move", to_string(m));
  out << r.render(o.json);
  if (!o.out.empty()) emit(o, out, serialize_box_description(rep.witness_state));
  return kSuccess;
}

int cmd_deform(const Options& o, std::ostream& out) {
  if (o.in.empty()) throw UsageError("deform needs --in <target>");
  const Configuration target = parse_box_description(read_file(o.in));
  const int n = target.n;
  if (o.n && *o.n != n) throw Error(ErrorCode::Incompatible, "--n disagrees with the file");
  const int blocks = block_count(target);
  if (blocks % n != 0) throw Error(ErrorCode::Incompatible, "block count is not a multiple of n");
  const GameParams p{n, o.k.value_or(blocks / n)};
  const PipelineReport rep = deform_pipeline(p, target);

  Report r;
  r.add("n", p.n);
  r.add("k", p.k);
  r.add("applicable", rep.applicable);
  r.add("g_nk", rep.g_nk);
  r.add("g_target", rep.g_target);
  r.add("target_within_bound", rep.target_within_bound);
  bool ok = rep.target_within_bound;
  if (rep.applicable) {
    r.add("preprocessed", rep.preprocessed);
    if (rep.prep) {
      r.add("g_q2", rep.prep->genus_q2);
      r.add("g_q3", rep.prep->genus_q3);
      r.add("prep_strictly_below", rep.prep_strictly_below);
    }
    r.add("trace_steps", rep.trace.steps.size());
    r.add("trace_max_genus", rep.trace_max_genus);
    r.add("trace_within_bound", rep.trace_within_bound);
    r.add("trace_reaches_target", rep.trace_reaches_target);
    r.add("reserve_left", rep.trace.final_state.reserve);
    r.add("conserved", rep.conserved);
    r.add("g_hat", rep.g_hat);
    r.add("hat_within_bound", rep.hat_within_bound);
    ok = ok && rep.trace_within_bound && rep.trace_reaches_target && rep.conserved &&
         rep.hat_within_bound && rep.prep_strictly_below;

    std::string text;
    if (rep.prep) text += format_trace(rep.prep->steps);
    text += format_trace(rep.trace.steps);
    std::vector<std::string> lines;
    std::istringstream split(text);
    for (std::string line; std::getline(split, line);) lines.push_back(line);
    if (o.out.empty()) {
      r.add_lines("trace", lines);
    } else {
      emit(o, out, text);
    }
  }
  r.add("result", std::string(ok ? "pass" : "fail"));
  out << r.render(o.json);
  return ok ? kSuccess : kDomainError;
}

int cmd_export(const Options& o, std::ostream& out) {
  const Input input = load_input(o);
  const SurfaceComplex s = extract_boundary(voxelize(input.config));
  emit(o, out, export_mesh(s, o.format == "off" ? MeshFormat::Off : MeshFormat::Obj));
  return kSuccess;
}

int cmd_render(const Options& o, std::ostream& out) {
  const Input input = load_input(o);
  if (o.json) {
    Report r;
    r.add("source", input.source);
    std::vector<std::string> rows;
    std::istringstream split(render_ascii(input.config));
    for (std::string line; std::getline(split, line);) rows.push_back(line);
    r.add("rows", rows);
    emit(o, out, r.render(true));
  } else {
    emit(o, out, render_ascii(input.config));
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Genus of generalized Jenga towers", "jenga"};
  app.require_subcommand(1, 1);
  Options o;

  auto size_flags = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "Blocks per level");
    sub->add_option("--k", o.k, "Initial number of levels");
  };
  auto input_flags = [&](CLI::App* sub) {
    size_flags(sub);
    sub->add_option("--in", o.in, "Box description file")->check(CLI::ExistingFile);
  };
  auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "Print one JSON object"); };
  auto out_flag = [&](CLI::App* sub) { sub->add_option("--out", o.out, "Write output here"); };

  CLI::App* gen = app.add_subcommand("gen", "Print the (n,k)-configuration");
  size_flags(gen);
  json_flag(gen);
  out_flag(gen);

  CLI::App* genus = app.add_subcommand("genus", "Genus by Euler characteristic and defects");
  input_flags(genus);
  json_flag(genus);

  CLI::App* census = app.add_subcommand("census", "Vertex classes and closed-form comparison");
  input_flags(census);
  json_flag(census);
  census->add_flag("--exclude-topmost", o.exclude_topmost, "Leave out the topmost level");

  CLI::App* check = app.add_subcommand("check", "Validate the boundary surface");
  input_flags(check);
  json_flag(check);
  check->add_option("--expect-genus", o.expect_genus, "Fail unless both genera equal this");

  CLI::App* search = app.add_subcommand("search", "Exhaustive maximum-genus search");
  size_flags(search);
  json_flag(search);
  out_flag(search);
  search->add_option("--max-states", o.max_states, "State budget")->check(CLI::PositiveNumber);
  search->add_flag("--no-symmetry", o.no_symmetry, "Do not merge mirror images");
  search->add_flag("--allow-top-removal", o.allow_top_removal, "Allow taking from the top");
  search->add_option("--threads", o.threads, "Worker threads")->check(CLI::Range(1, 256));

  CLI::App* deform = app.add_subcommand("deform", "Deform Q(n,k) into a target tower");
  input_flags(deform);
  json_flag(deform);
  out_flag(deform);

  CLI::App* exp = app.add_subcommand("export", "Write the boundary mesh");
  input_flags(exp);
  out_flag(exp);
  exp->add_option("--format", o.format, "obj or off")->check(CLI::IsMember({"obj", "off"}));

  CLI::App* render = app.add_subcommand("render", "Draw the box description");
  input_flags(render);
  json_flag(render);
  out_flag(render);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (gen->parsed()) return cmd_gen(o, out);
    if (genus->parsed()) return cmd_genus(o, out);
    if (census->parsed()) return cmd_census(o, out);
    if (check->parsed()) return cmd_check(o, out);
    if (search->parsed()) return cmd_search(o, out);
    if (deform->parsed()) return cmd_deform(o, out);
    if (exp->parsed()) return cmd_export(o, out);
    if (render->parsed()) return cmd_render(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return kDomainError;
  }
  return kUsageError;
}

}  // namespace jenga::cli
