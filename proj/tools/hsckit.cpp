// hsckit: command-line front end. Every successful run prints one JSON
// envelope {command, version, payload, warnings} or the TSV equivalent.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hsckit/hsckit.hpp"
#include "hsckit/io.hpp"

using namespace hsckit;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Row = std::vector<std::string>;

struct Output {
  json payload;
  std::vector<Row> table; // first row is the column header
  std::vector<std::string> warnings;
};

struct Globals {
  std::string format = "json";
  std::uint64_t seed = 42;
  std::optional<double> tolerance;
  std::string output;
};

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string num(std::int64_t x) { return std::to_string(x); }

std::string opt_num(const std::optional<std::int64_t>& x) { return x ? num(*x) : ""; }

std::string coeffs_text(const Root& r) {
  std::string s;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i)
    s += (i ? "," : "") + std::to_string(r.coeffs[i]);
  return s;
}

std::string complex_text(cplx z) { return num(z.real()) + "," + num(z.imag()); }

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i)
    s += (i ? sep : "") + parts[i];
  return s;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw FormatError("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw FormatError(path + ": " + e.what());
  }
}

KahlerCurvatureTensor read_tensor(const std::string& path, double sym_tol,
                                  std::vector<std::string>& warnings) {
  KahlerCurvatureTensor t = [&] {
    try {
      return io::tensor_from_json(read_json_file(path));
    } catch (const json::exception& e) {
      throw FormatError(path + ": " + e.what());
    }
  }();
  if (t.asymmetry() > sym_tol)
    warnings.push_back("input violates Kahler symmetries by " + num(t.asymmetry()) +
                       "; using its symmetrized projection");
  return t;
}

std::vector<SurfaceRecord> read_surfaces(const std::string& path) {
  try {
    std::vector<SurfaceRecord> records;
    for (auto& r : io::surfaces_from_json(read_json_file(path)))
      records.push_back(with_consistency_flags(std::move(r)));
    return records;
  } catch (const json::exception& e) {
    throw FormatError(path + ": " + e.what());
  }
}

LieType parse_type(const std::string& family, int rank) {
  if (family.size() != 1)
    throw InadmissibleRank("family must be one of A, B, C, D, E, F, G");
  LieType t{family_from_char(family[0]), rank};
  require_admissible(t);
  return t;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const auto v = std::stoll(text, &used);
      if (used != text.size())
        throw UsageError("");
      return {v, v};
    }
    const std::string lo = text.substr(0, dots), hi = text.substr(dots + 2);
    const auto a = std::stoll(lo, &used);
    if (used != lo.size())
      throw UsageError("");
    const auto b = std::stoll(hi, &used);
    if (used != hi.size())
      throw UsageError("");
    if (a > b)
      throw UsageError("");
    return {a, b};
  } catch (const std::logic_error&) {
    throw UsageError("--pg expects N or LO..HI, got '" + text + "'");
  } catch (const UsageError&) {
    throw UsageError("--pg expects N or LO..HI, got '" + text + "'");
  }
}

// -- cspace -----------------------------------------------------------------

Output cspace_roots(const std::string& family, int rank, int max_rank) {
  const LieType t = parse_type(family, rank);
  if (is_classical(t.family) && rank > max_rank)
    throw InadmissibleRank(t.name() + " exceeds --max-rank " + std::to_string(max_rank));
  const auto rs = positive_roots(t);
  Output out;
  out.payload = io::to_json(rs);
  out.table.push_back({"height", "coeffs"});
  for (const auto& r : rs.positive_roots())
    out.table.push_back({std::to_string(r.height()), coeffs_text(r)});
  return out;
}

Output cspace_classify(const std::string& family, int rank, std::optional<int> node,
                       bool with_audit) {
  const LieType t = parse_type(family, rank);
  const auto rs = positive_roots(t);
  std::vector<CSpaceVerdict> verdicts;
  if (node) {
    require_node(rs, *node);
    verdicts.push_back(itoh_positive(rs, *node));
  } else {
    verdicts = classify_all(rs);
  }

  Output out;
  json list = json::array();
  Row header{"family", "rank", "node", "max_level", "positive", "census", "evidence"};
  if (with_audit)
    header.insert(header.end(), {"category", "published_positive", "source"});
  out.table.push_back(header);
  for (auto& v : verdicts) {
    std::vector<std::string> census, evidence;
    for (const auto& [k, count] : v.level_census)
      census.push_back(std::to_string(k) + ":" + std::to_string(count));
    for (const auto& r : v.evidence)
      evidence.push_back(coeffs_text(r));
    Row row{std::string(1, to_char(t.family)), std::to_string(t.rank),
            std::to_string(v.descriptor.node), std::to_string(v.max_level),
            v.itoh_positive ? "true" : "false", join(census, " "), join(evidence, " ")};
    if (with_audit) {
      const auto e = audit_verdict(v);
      row.insert(row.end(), {to_string(e.category), e.published_positive ? "true" : "false",
                             e.source});
      if (e.category == AuditCategory::Disagree) {
        std::string w = v.descriptor.name() + ": disagrees with published list (" + e.source +
                        "); computed " + (v.itoh_positive ? "positive" : "negative");
        if (!v.evidence.empty())
          w += ", witness (" + coeffs_text(v.evidence.front()) + ")";
        out.warnings.push_back(w);
      }
      list.push_back(io::to_json(e));
    } else {
      list.push_back(io::to_json(v));
    }
    out.table.push_back(row);
  }
  out.payload = {{"family", std::string(1, to_char(t.family))},
                 {"rank", t.rank},
                 {"audit", with_audit},
                 {"verdicts", list}};
  return out;
}

// -- surface ----------------------------------------------------------------

Output surface_point_report(const EinsteinFramePoint& p, const json& frame_json) {
  Output out;
  const auto ext = max_hsc_surface(p);
  const auto cw = chern_weil(p);
  json sufficiency = nullptr;
  if (cw.gamma1 < 0) {
    sufficiency = sufficient_negativity(p);
  } else {
    out.warnings.push_back("gamma1 = " + num(cw.gamma1) +
                           " >= 0: sufficiency test is outside its negative-Einstein regime");
  }
  out.payload = {{"point", io::to_json(p)},
                 {"lambda", p.lambda()},
                 {"extremes", {{"min", ext.min}, {"max", ext.max}, {"negative", ext.negative}}},
                 {"gamma", {{"gamma1", cw.gamma1}, {"gamma2", cw.gamma2}}},
                 {"sufficient_negativity", sufficiency},
                 {"frame", frame_json}};
  out.table = {{"key", "value"},
               {"H", num(p.H)},
               {"A", num(p.A)},
               {"B", complex_text(p.B)},
               {"lambda", num(p.lambda())},
               {"min", num(ext.min)},
               {"max", num(ext.max)},
               {"negative", ext.negative ? "true" : "false"},
               {"gamma1", num(cw.gamma1)},
               {"gamma2", num(cw.gamma2)},
               {"sufficient_negativity",
                sufficiency.is_null() ? "null" : (sufficiency.get<bool>() ? "true" : "false")}};
  if (!frame_json.is_null())
    out.table.push_back({"residual", num(frame_json.at("residual").get<double>())});
  return out;
}

// -- geography --------------------------------------------------------------

// --builtin only names the table; there is one.
std::vector<SurfaceRecord> geography_records(const std::string& input) {
  if (!input.empty())
    return read_surfaces(input);
  return builtin_published_table();
}

void add_flag_warnings(const SurfaceRecord& r, std::vector<std::string>& warnings) {
  for (const auto& f : r.flags)
    warnings.push_back(r.name + ": " + f);
}

Row verdict_header() {
  return {"name", "c1sq", "c2", "pg", "q", "K2", "passes", "margin", "source", "flags"};
}

Row verdict_row(const GeographyVerdict& v) {
  const auto& r = v.record;
  return {r.name,           opt_num(r.c1sq), opt_num(r.c2),
          opt_num(r.pg),    opt_num(r.q),    opt_num(r.K2),
          v.passes ? "true" : "false", num(v.margin), r.source, join(r.flags, " | ")};
}

Output geography_check(const std::vector<SurfaceRecord>& records) {
  Output out;
  json list = json::array();
  out.table.push_back(verdict_header());
  for (const auto& r : records) {
    const auto v = check_inequality(r);
    list.push_back(io::to_json(v));
    out.table.push_back(verdict_row(v));
    add_flag_warnings(r, out.warnings);
  }
  out.payload = {{"verdicts", list}};
  return out;
}

Output geography_blowup(std::int64_t c1sq, std::int64_t c2, std::int64_t k) {
  const ChernPair before{c1sq, c2};
  const ChernPair after = blowup_transform(before, k);
  const auto margin = [](ChernPair c) { return 3 * c.c1sq - c.c2; };
  Output out;
  out.payload = {{"input", {{"c1sq", before.c1sq}, {"c2", before.c2}}},
                 {"k", k},
                 {"result", {{"c1sq", after.c1sq}, {"c2", after.c2}}},
                 {"passes_before", passes(before)},
                 {"passes_after", passes(after)},
                 {"margin_before", margin(before)},
                 {"margin_after", margin(after)}};
  out.table = {{"stage", "c1sq", "c2", "passes", "margin"},
               {"input", num(before.c1sq), num(before.c2), passes(before) ? "true" : "false",
                num(margin(before))},
               {"blowup", num(after.c1sq), num(after.c2), passes(after) ? "true" : "false",
                num(margin(after))}};
  return out;
}

Output geography_scan(const std::string& range) {
  const auto [lo, hi] = parse_range(range);
  const auto scan = horikawa_scan(lo, hi);
  Output out;
  json list = json::array();
  std::size_t failing = 0;
  out.table.push_back(verdict_header());
  for (const auto& v : scan) {
    list.push_back(io::to_json(v));
    out.table.push_back(verdict_row(v));
    failing += !v.passes;
  }
  out.payload = {{"pg_min", lo}, {"pg_max", hi}, {"failing", failing}, {"verdicts", list}};
  if (failing != scan.size())
    out.warnings.push_back(std::to_string(scan.size() - failing) + " Horikawa records pass");
  return out;
}

Output geography_plotdata(const std::vector<SurfaceRecord>& records) {
  Output out;
  json points = json::array();
  out.table.push_back({"name", "c1sq", "c2", "line_c2", "passes"});
  for (const auto& r : records) {
    const auto v = check_inequality(r);
    const auto line = 3 * *r.c1sq;
    points.push_back({{"name", r.name},
                      {"c1sq", *r.c1sq},
                      {"c2", *r.c2},
                      {"line_c2", line},
                      {"passes", v.passes}});
    out.table.push_back({r.name, num(*r.c1sq), num(*r.c2), num(line), v.passes ? "true" : "false"});
    add_flag_warnings(r, out.warnings);
  }
  out.payload = {{"line", "c2 = 3 c1sq"}, {"points", points}};
  return out;
}

// -- output -----------------------------------------------------------------

std::string render(const std::string& command, const Output& out, const std::string& format) {
  if (format == "tsv") {
    std::ostringstream s;
    s << "# command=" << command << "\tversion=" << kVersion << '\n';
    for (const auto& w : out.warnings)
      s << "# warning: " << w << '\n';
    for (const auto& row : out.table)
      s << join(row, "\t") << '\n';
    return s.str();
  }
  const json envelope = {{"command", command},
                         {"version", kVersion},
                         {"payload", out.payload},
                         {"warnings", out.warnings}};
  return envelope.dump(2) + "\n";
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f)
    throw FormatError("cannot write " + path);
  f << text;
}

int domain_error(const std::string& name, const std::string& message,
                 std::optional<double> anisotropy = std::nullopt) {
  json j = {{"error", name}, {"message", message}};
  if (anisotropy)
    j["anisotropy"] = *anisotropy;
  std::cerr << j.dump() << '\n';
  return 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"hsckit: root systems, C-space positivity, holomorphic sectional curvature and "
               "surface geography"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  Globals g;
  auto add_globals = [&g](CLI::App* cmd) {
    cmd->add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"json", "tsv"}))
        ->capture_default_str();
    cmd->add_option("--seed", g.seed, "Random seed")->capture_default_str();
    cmd->add_option("--tolerance", g.tolerance, "Tolerance override")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--output", g.output, "Write output to this path instead of stdout");
  };
  add_globals(&app);

  std::string command;
  std::function<Output()> action;

  // cspace
  auto* cspace = app.add_subcommand("cspace", "Root systems and C-space classification");
  cspace->require_subcommand(1);

  std::string family;
  int rank = 0;
  int max_rank = 12;
  auto* roots = cspace->add_subcommand("roots", "List positive roots in graded order");
  roots->add_option("--family", family, "Lie family A..G")->required();
  roots->add_option("--rank", rank, "Rank")->required();
  roots->add_option("--max-rank", max_rank, "Upper rank bound for classical families")
      ->capture_default_str();
  add_globals(roots);
  roots->callback([&] {
    command = "cspace roots";
    action = [&] { return cspace_roots(family, rank, max_rank); };
  });

  std::optional<int> node;
  bool with_audit = false;
  auto* classify = cspace->add_subcommand("classify", "Itoh positivity verdicts");
  classify->add_option("--family", family, "Lie family A..G")->required();
  classify->add_option("--rank", rank, "Rank")->required();
  classify->add_option("--node", node, "Marked node (1-based); all nodes when omitted");
  classify->add_flag("--audit", with_audit, "Compare with the published positive list");
  add_globals(classify);
  classify->callback([&] {
    command = "cspace classify";
    action = [&] { return cspace_classify(family, rank, node, with_audit); };
  });

  // surface
  auto* surface = app.add_subcommand("surface", "Einstein surface frame analysis");
  surface->require_subcommand(1);
  double H = 0, A = 0, b_re = 0, b_im = 0;
  std::string input;
  auto* analyze = surface->add_subcommand("analyze", "Extremes, Chern-Weil numbers, sufficiency");
  auto* h_opt = analyze->add_option("--H", H, "Minimal holomorphic sectional curvature");
  auto* a_opt = analyze->add_option("--A", A, "R_{1122}");
  auto* bre_opt = analyze->add_option("--B-re", b_re, "Re R_{1212}");
  auto* bim_opt = analyze->add_option("--B-im", b_im, "Im R_{1212}");
  auto* in_opt = analyze->add_option("--input", input, "Tensor JSON (n = 2)");
  in_opt->excludes(h_opt)->excludes(a_opt)->excludes(bre_opt)->excludes(bim_opt);
  add_globals(analyze);
  analyze->callback([&] {
    command = "surface analyze";
    if (input.empty() && (!*h_opt || !*a_opt))
      throw CLI::ValidationError("surface analyze", "needs --H and --A, or --input");
    action = [&]() -> Output {
      if (input.empty()) {
        const EinsteinFramePoint p{H, A, cplx(b_re, b_im)};
        require_frame(p);
        return surface_point_report(p, nullptr);
      }
      std::vector<std::string> warnings;
      const auto t = read_tensor(input, kSymmetryTolerance, warnings);
      ExtremizeConfig cfg;
      cfg.seed = g.seed;
      const auto f = distinguished_frame(t, g.tolerance.value_or(1e-6), cfg);
      auto out = surface_point_report(f.point, io::to_json(f));
      warnings.insert(warnings.end(), out.warnings.begin(), out.warnings.end());
      out.warnings = warnings;
      return out;
    };
  });

  // tensor
  auto* tensor = app.add_subcommand("tensor", "Curvature tensor operations");
  tensor->require_subcommand(1);
  int starts = ExtremizeConfig{}.starts;
  std::int64_t oracle_samples = 0;
  int threads = 1;
  auto* extremize = tensor->add_subcommand("extremize", "Minimum and maximum of HSC");
  extremize->add_option("--input", input, "Tensor JSON")->required();
  extremize->add_option("--starts", starts, "Number of local searches")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  extremize->add_option("--oracle-samples", oracle_samples, "Uniform samples for the oracle")
      ->check(CLI::NonNegativeNumber);
  extremize->add_option("--threads", threads, "Worker threads (output does not depend on it)")
      ->check(CLI::PositiveNumber);
  add_globals(extremize);
  extremize->callback([&] {
    command = "tensor extremize";
    action = [&] {
      Output out;
      const auto t = read_tensor(input, kSymmetryTolerance, out.warnings);
      ExtremizeConfig cfg;
      cfg.starts = starts;
      cfg.seed = g.seed;
      cfg.oracle_samples = oracle_samples;
      cfg.threads = threads;
      if (g.tolerance)
        cfg.step_tolerance = *g.tolerance;
      const auto r = extremize_hsc(t, cfg);
      if (!r.converged)
        out.warnings.push_back("NonConvergence: best-so-far values reported");
      out.payload = io::to_json(r);
      out.payload["n"] = t.dim();
      out.table = {{"key", "value"},
                   {"n", std::to_string(t.dim())},
                   {"min_value", num(r.min_value)},
                   {"max_value", num(r.max_value)},
                   {"iterations_used", std::to_string(r.iterations_used)},
                   {"converged", r.converged ? "true" : "false"},
                   {"oracle_min", r.oracle_min ? num(*r.oracle_min) : std::string("null")},
                   {"oracle_max", r.oracle_max ? num(*r.oracle_max) : std::string("null")}};
      return out;
    };
  });

  auto* validate_cmd = tensor->add_subcommand("validate", "Report Kahler symmetry violations");
  validate_cmd->add_option("--input", input, "Tensor JSON")->required();
  add_globals(validate_cmd);
  validate_cmd->callback([&] {
    command = "tensor validate";
    action = [&] {
      const json j = read_json_file(input);
      CurvatureArray a = [&] {
        try {
          return io::array_from_json(j);
        } catch (const json::exception& e) {
          throw FormatError(input + ": " + e.what());
        }
      }();
      const auto report = validate(a, g.tolerance.value_or(kSymmetryTolerance));
      Output out;
      out.payload = io::to_json(report);
      out.payload["n"] = a.dim();
      out.table.push_back({"i", "j", "k", "l", "magnitude"});
      for (const auto& v : report.violations)
        out.table.push_back({std::to_string(v.orbit.i), std::to_string(v.orbit.j),
                             std::to_string(v.orbit.k), std::to_string(v.orbit.l),
                             num(v.magnitude)});
      if (!report.ok())
        out.warnings.push_back(std::to_string(report.violations.size()) +
                               " symmetry orbits violated");
      return out;
    };
  });

  // geography
  auto* geography = app.add_subcommand("geography", "Chern-number geography");
  geography->require_subcommand(1);
  std::string builtin;
  auto* check = geography->add_subcommand("check", "Test c2 <= 3 c1^2 on surface records");
  auto* check_builtin = check->add_option("--builtin", builtin, "Builtin table")
                            ->check(CLI::IsMember({"paper", "published"}));
  auto* check_input = check->add_option("--input", input, "Surface JSON");
  check_builtin->excludes(check_input);
  add_globals(check);
  check->callback([&] {
    command = "geography check";
    if (!*check_builtin && !*check_input)
      throw CLI::ValidationError("geography check", "needs --builtin or --input");
    action = [&] { return geography_check(geography_records(input)); };
  });

  std::int64_t c1sq = 0, c2 = 0, k = 0;
  auto* blowup = geography->add_subcommand("blowup", "Blow up k points");
  blowup->add_option("--c1sq", c1sq)->required();
  blowup->add_option("--c2", c2)->required();
  blowup->add_option("--k", k)->required()->check(CLI::NonNegativeNumber);
  add_globals(blowup);
  blowup->callback([&] {
    command = "geography blowup";
    action = [&] { return geography_blowup(c1sq, c2, k); };
  });

  std::string pg_range = "3..20";
  auto* scan = geography->add_subcommand("scan-horikawa", "Both Horikawa lines over a pg range");
  scan->add_option("--pg", pg_range, "N or LO..HI")->capture_default_str();
  add_globals(scan);
  scan->callback([&] {
    command = "geography scan-horikawa";
    action = [&] { return geography_scan(pg_range); };
  });

  auto* plot = geography->add_subcommand("plotdata", "(c1^2, c2) points and the line c2 = 3 c1^2");
  auto* plot_builtin = plot->add_option("--builtin", builtin, "Builtin table")
                           ->check(CLI::IsMember({"paper", "published"}));
  auto* plot_input = plot->add_option("--input", input, "Surface JSON");
  plot_builtin->excludes(plot_input);
  add_globals(plot);
  plot->callback([&] {
    command = "geography plotdata";
    action = [&] { return geography_plotdata(geography_records(input)); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const Output out = action();
    emit(render(command, out, g.format), g.output);
  } catch (const UsageError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const NotEinstein& e) {
    return domain_error(e.name(), e.what(), e.anisotropy());
  } catch (const Error& e) {
    return domain_error(e.name(), e.what());
  } catch (const std::invalid_argument& e) {
    return domain_error("InvalidArgument", e.what());
  }
  return 0;
}
