#include "cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <sstream>

#include "satmat/report_json.hpp"
#include "satmat/satmat.hpp"

namespace satmat::cli {
namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::string tok;
  std::istringstream in(text);
  auto flush = [&] {
    if (tok.empty()) return;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw InputError(std::string("bad ") + what + " '" + text + "'");
    out.push_back(v);
    tok.clear();
  };
  for (char ch; in.get(ch);) {
    if (ch == ',' || ch == 'x' || ch == ' ') {
      flush();
    } else {
      tok.push_back(ch);
    }
  }
  flush();
  if (out.empty()) throw InputError(std::string("empty ") + what);
  return out;
}

struct Globals {
  std::optional<std::size_t> budget_cells;
  double budget_seconds = 600.0;
  std::optional<std::uint64_t> node_limit;
  std::optional<std::uint64_t> seed;
  std::size_t max_cells = kDefaultMaxCells;
  bool json = false;

  SearchBudget budget() const { return SearchBudget{budget_cells, budget_seconds, node_limit}; }
};

Matrix01 load(const std::string& path, const Globals& g) { return read_01m(path, g.max_cells); }

Shape parse_shape(const std::string& text, const Globals& g) {
  try {
    return Shape(parse_list(text, "shape"), g.max_cells);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pattern containment, saturation and semisaturation of d-dimensional 0-1 matrices"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--budget-cells", g.budget_cells, "cell cap for exact searches");
  app.add_option("--budget-seconds", g.budget_seconds, "wall-clock limit for exact searches");
  app.add_option("--budget-nodes", g.node_limit, "node limit for exact searches");
  app.add_option("--seed", g.seed, "seed for pseudo-random greedy cell orders");
  app.add_option("--max-cells", g.max_cells, "largest matrix accepted on input");
  app.add_flag("--json", g.json, "JSON output where text is the default");

  std::string host_path, pattern_path, mode;

  auto* contains_cmd = app.add_subcommand("contains", "does HOST contain PATTERN");
  contains_cmd->add_option("host", host_path)->required();
  contains_cmd->add_option("pattern", pattern_path)->required();

  auto* verify_cmd = app.add_subcommand("verify", "saturation (sat) or semisaturation (ssat) verdict");
  verify_cmd->add_option("mode", mode)->required()->check(CLI::IsMember({"sat", "ssat"}));
  verify_cmd->add_option("host", host_path)->required();
  verify_cmd->add_option("pattern", pattern_path)->required();

  std::string kind, shape_text, anchor_text, output_path;
  int k = 1, n = 0;
  auto* construct_cmd = app.add_subcommand("construct", "build a matrix");
  construct_cmd->add_option("--kind", kind)
      ->required()
      ->check(CLI::IsMember({"identity-layers", "greedy", "offset-block", "corner-block"}));
  construct_cmd->add_option("--pattern", pattern_path);
  construct_cmd->add_option("--shape", shape_text, "extents, e.g. 4,4");
  construct_cmd->add_option("--k", k, "layer count for identity-layers");
  construct_cmd->add_option("--n", n, "cube extent for offset-block and corner-block");
  construct_cmd->add_option("--anchor", anchor_text, "1-entry of the pattern for offset-block");
  construct_cmd->add_option("-o,--output", output_path);

  auto* classify_cmd = app.add_subcommand("classify", "bounded-ssat conditions of a pattern");
  classify_cmd->add_option("pattern", pattern_path)->required();

  auto* exact_cmd = app.add_subcommand("exact", "exact ex, sat or ssat");
  exact_cmd->add_option("mode", mode)->required()->check(CLI::IsMember({"ex", "sat", "ssat"}));
  exact_cmd->add_option("--shape", shape_text)->required();
  exact_cmd->add_option("--pattern", pattern_path)->required();

  auto* recurrence_cmd = app.add_subcommand("recurrence", "check the shell recurrence for P' and P' + unit");
  recurrence_cmd->add_option("--shape", shape_text)->required();
  recurrence_cmd->add_option("--pattern", pattern_path, "P'")->required();

  std::string matrix_path;
  auto* stair_cmd = app.add_subcommand("staircases", "extract or decompose staircases");
  stair_cmd->add_option("mode", mode)->required()->check(CLI::IsMember({"extract", "decompose"}));
  stair_cmd->add_option("matrix", matrix_path)->required();
  stair_cmd->add_option("--k", k, "layer count for decompose");

  int n_lo = 1, n_hi = 1, identity_k = 0, identity_d = 2;
  bool no_oracle = false;
  auto* table_cmd = app.add_subcommand("table", "CSV sweep of weights over cube sizes");
  table_cmd->add_option("--pattern", pattern_path);
  table_cmd->add_option("--identity", identity_k, "use the (k+1)-extent identity pattern");
  table_cmd->add_option("--d", identity_d, "dimension count for --identity");
  table_cmd->add_option("--n-lo", n_lo)->required();
  table_cmd->add_option("--n-hi", n_hi)->required();
  table_cmd->add_flag("--no-oracle", no_oracle, "skip the exact columns");

  std::vector<std::string> argv_store = args;
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*contains_cmd) {
      const Matrix01 m = load(host_path, g), p = load(pattern_path, g);
      if (m.dims() != p.dims()) throw InputError("host and pattern differ in dimension count");
      const auto e = contains(m, p);
      emit(out, witness_json(e));
      return e ? kOk : kNegative;
    }

    if (*verify_cmd) {
      const Matrix01 m = load(host_path, g), p = load(pattern_path, g);
      if (m.dims() != p.dims()) throw InputError("host and pattern differ in dimension count");
      const SaturationReport r = mode == "sat" ? is_saturating(m, p) : is_semisaturating(m, p);
      json j = to_json_value(r);
      j["mode"] = mode;
      emit(out, j);
      return r.verdict ? kOk : kNegative;
    }

    if (*construct_cmd) {
      std::optional<Matrix01> p;
      if (!pattern_path.empty()) p = load(pattern_path, g);
      auto need_pattern = [&]() -> const Matrix01& {
        if (!p) throw InputError("--kind " + kind + " needs --pattern");
        return *p;
      };
      Matrix01 m;
      if (kind == "identity-layers") {
        if (shape_text.empty()) throw InputError("identity-layers needs --shape");
        m = identity_layers(parse_shape(shape_text, g), k);
      } else if (kind == "greedy") {
        const Matrix01& pat = need_pattern();
        if (shape_text.empty()) throw InputError("greedy needs --shape");
        const Shape shape = parse_shape(shape_text, g);
        if (shape.dims() != pat.dims()) throw InputError("pattern and shape differ in dimension count");
        const auto order = g.seed ? random_order(shape, *g.seed) : row_major_order(shape);
        GreedyResult r = greedy_saturate(pat, shape, order);
        if (r.status == GreedyStatus::pattern_does_not_fit) {
          err << "pattern does not fit the shape; the result is all-one\n";
        }
        m = std::move(r.matrix);
      } else if (kind == "offset-block") {
        const Matrix01& pat = need_pattern();
        if (n < 1) throw InputError("offset-block needs --n");
        m = anchor_text.empty() ? offset_block(pat, n)
                                : offset_block(pat, Coord(parse_list(anchor_text, "anchor")), n);
      } else {
        const Matrix01& pat = need_pattern();
        if (n < 1) throw InputError("corner-block needs --n");
        m = corner_block(pat, n);
      }
      const std::string text = g.json ? to_json_value(m).dump(2) + "\n" : format_01m(m);
      if (output_path.empty())
        out << text;
      else
        write_01m(output_path, m);
      return kOk;
    }

    if (*classify_cmd) {
      const Matrix01 p = load(pattern_path, g);
      const SsatVerdict v = classify_ssat(p);
      emit(out, to_json_value(v));
      return v.bounded ? kOk : kNegative;
    }

    if (*exact_cmd) {
      const Matrix01 p = load(pattern_path, g);
      const Shape shape = parse_shape(shape_text, g);
      if (shape.dims() != p.dims()) throw InputError("pattern and shape differ in dimension count");
      const ExactResult r = mode == "ex" ? exact_ex(shape, p, g.budget())
                            : mode == "sat" ? exact_sat(shape, p, g.budget())
                                            : exact_ssat(shape, p, g.budget());
      json j = to_json_value(r);
      j["mode"] = mode;
      emit(out, j);
      return r.status == SearchStatus::ok ? kOk : kBudgetExceeded;
    }

    if (*recurrence_cmd) {
      const Matrix01 p = load(pattern_path, g);
      const Shape shape = parse_shape(shape_text, g);
      if (shape.dims() != p.dims()) throw InputError("pattern and shape differ in dimension count");
      const RecurrenceReport r = verify_recurrence(p, shape, g.budget());
      emit(out, to_json_value(r));
      if (r.status != SearchStatus::ok) return kBudgetExceeded;
      return r.holds() ? kOk : kNegative;
    }

    if (*stair_cmd) {
      const Matrix01 m = load(matrix_path, g);
      json j{{"format_version", kFormatVersion}, {"mode", mode}};
      if (mode == "extract") {
        const auto s = bottom_staircase(m);
        j["found"] = s.has_value();
        j["staircase"] = s ? to_json_value(*s) : json(nullptr);
        j["complete"] = s ? is_complete_staircase(*s, m.shape()) : false;
        j["all_ones"] = s ? s->weight(m) == s->size() : false;
        emit(out, j);
        return s ? kOk : kNegative;
      }
      const auto layers = staircase_decompose(m, k);
      j["found"] = layers.has_value();
      json arr = json::array();
      if (layers)
        for (const Staircase& s : *layers) arr.push_back(json{{"weight", s.size()}, {"coords", to_json_value(s)}});
      j["layers"] = arr;
      emit(out, j);
      return layers ? kOk : kNegative;
    }

    if (*table_cmd) {
      SweepSpec spec;
      if (!pattern_path.empty()) {
        spec.pattern = load(pattern_path, g);
      } else if (identity_k >= 1) {
        if (identity_d < 1) throw InputError("--d must be positive");
        spec.pattern = identity_pattern(static_cast<std::size_t>(identity_d), identity_k + 1);
      } else {
        throw InputError("table needs --pattern or --identity");
      }
      spec.n_lo = n_lo;
      spec.n_hi = n_hi;
      spec.oracle = !no_oracle;
      spec.budget = g.budget();
      spec.seed = g.seed;
      const auto rows = run_sweep(spec);
      if (g.json) {
        json arr = json::array();
        for (const SweepRow& r : rows) {
          auto opt = [](const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); };
          arr.push_back(json{{"n", r.n},
                             {"closed_form", opt(r.closed_form)},
                             {"greedy_weight", r.greedy_weight},
                             {"layers_weight", opt(r.layers_weight)},
                             {"oracle_sat", opt(r.oracle_sat)},
                             {"oracle_ex", opt(r.oracle_ex)}});
        }
        emit(out, json{{"format_version", kFormatVersion}, {"rows", arr}});
      } else {
        write_sweep_csv(out, rows);
      }
      return kOk;
    }
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::out_of_range& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace satmat::cli
