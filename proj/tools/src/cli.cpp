#include "wedgecrys_cli/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "wedgecrys_cli/campaigns.hpp"

namespace wedgecrys::cli {

long default_prime() {
  const char* env = std::getenv("WEDGECRYS_DEFAULT_P");
  if (env == nullptr || *env == '\0') return 3;
  char* end = nullptr;
  const long p = std::strtol(env, &end, 10);
  if (*end != '\0' || p < 2) throw BadDescriptor(std::string("WEDGECRYS_DEFAULT_P is not a prime: '") + env + "'");
  return p;
}

namespace {

struct Io {
  std::string in_path;
  std::string inline_json;
  std::string out_path;

  json read() const {
    if (!inline_json.empty() && !in_path.empty()) throw SchemaError("give either --in or --json, not both");
    if (!inline_json.empty()) return parse(inline_json, "--json");
    if (in_path.empty()) throw SchemaError("missing input: use --in FILE or --json TEXT");
    if (in_path == "-") {
      std::stringstream ss;
      ss << std::cin.rdbuf();
      return parse(ss.str(), "stdin");
    }
    std::ifstream f(in_path);
    if (!f) throw SchemaError("cannot open " + in_path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse(ss.str(), in_path);
  }

  void write(const json& j, std::ostream& out) const {
    const std::string text = dump_canonical(j);
    if (out_path.empty() || out_path == "-") {
      out << text;
      return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw Error("cannot write " + out_path);
    f << text;
  }

  static json parse(const std::string& text, const std::string& where) {
    try {
      return json::parse(text);
    } catch (const json::parse_error& e) {
      throw SchemaError(where + ": " + e.what());
    }
  }
};

void add_io(CLI::App* sub, Io& io, bool with_input) {
  if (with_input) {
    sub->add_option("--in", io.in_path, "Input JSON file ('-' reads stdin)");
    sub->add_option("--json", io.inline_json, "Inline input JSON");
  }
  sub->add_option("--out", io.out_path, "Write the JSON result here instead of stdout");
}

int cmd_compound(const Io& io, std::size_t d, std::ostream& out) {
  const auto a = matrix_from_json(io.read());
  io.write(std::visit([&](const auto& m) { return matrix_to_json(compound(m, d)); }, a), out);
  return kOk;
}

int cmd_rank(const Io& io, std::ostream& out) {
  const auto a = matrix_from_json(io.read());
  json j = std::visit(
      [](const auto& m) {
        json r = rank_to_json(rank(m));
        r["ring"] = m.ring().descriptor();
        r["rows"] = m.rows();
        r["cols"] = m.cols();
        return r;
      },
      a);
  j["schema"] = kSchemaVersion;
  io.write(j, out);
  return kOk;
}

int cmd_slopes(const Io& io, std::ostream& out) {
  const json in = io.read();
  const Isocrystal c = in.is_object() && in.contains("mf") ? Isocrystal::from_dieudonne(dieudonne_from_json(in))
                                                           : isocrystal_from_json(in);
  json j{{"schema", kSchemaVersion}, {"p", c.ring().prime()}, {"a", c.ring().degree()}, {"m", c.ring().precision()},
         {"rank", c.rank()},         {"shift", c.shift()},     {"slopes", polygon_to_json(slopes(c))}};
  io.write(j, out);
  return kOk;
}

struct WedgeArgs {
  int h = 0, dim = 0, r = 0, a = 1, m = 0;
  long p = 0;
};

int cmd_wedge(const Io& io, WedgeArgs w, std::ostream& out) {
  if (!io.in_path.empty() || !io.inline_json.empty()) {
    const json in = io.read();
    if (!in.is_object()) throw SchemaError("wedge input must be a JSON object");
    detail::check_schema_tag(in, "wedge");
    auto get = [&](const char* key, auto& slot, bool required) {
      if (!in.contains(key)) {
        if (required) throw SchemaError(std::string("wedge: missing '") + key + "'");
        return;
      }
      if (!in[key].is_number_integer()) throw SchemaError(std::string("wedge: '") + key + "' must be an integer");
      slot = in[key].get<std::remove_reference_t<decltype(slot)>>();
    };
    get("h", w.h, true);
    get("dim", w.dim, true);
    get("r", w.r, true);
    get("p", w.p, false);
    get("a", w.a, false);
    get("m", w.m, false);
  }
  if (w.p == 0) w.p = default_prime();
  if (w.h < 1) throw BadDescriptor("h must be positive");
  if (w.r < 1 || w.r > w.h) throw DimensionMismatch("r must lie in 1..h");
  if (w.a < 1) throw BadDescriptor("a must be positive");
  if (w.m < 0) throw BadDescriptor("m must be non-negative");
  const auto desc = GroupDescriptor::make(w.h, w.dim);
  io.write(wedge_report_to_json(wedge_report(desc, static_cast<std::size_t>(w.r), w.p, w.a, w.m)), out);
  return kOk;
}

struct CheckArgs {
  std::string campaign;
  std::uint64_t seed = 0;
  std::size_t trials = 100;
  bool exhaustive_f2 = false;
  bool wrong_shift = false;
};

int cmd_check(const Io& io, const CheckArgs& c, std::ostream& out, std::ostream& err) {
  if (c.exhaustive_f2 && c.campaign != "rank-lemma") throw SchemaError("--exhaustive-f2 only applies to rank-lemma");
  if (c.wrong_shift && c.campaign != "compat") throw SchemaError("--wrong-shift only applies to compat");
  CampaignReport rep;
  if (c.campaign == "rank-lemma")
    rep = c.exhaustive_f2 ? rank_lemma_exhaustive_f2() : rank_lemma_random(c.seed, c.trials);
  else if (c.campaign == "cauchy-binet")
    rep = cauchy_binet(c.seed, c.trials);
  else if (c.campaign == "axioms")
    rep = axioms(c.seed, c.trials);
  else if (c.campaign == "compat")
    rep = compat(c.seed, c.trials, c.wrong_shift);
  else
    rep = adjunction(c.seed, c.trials);
  io.write(rep.to_json(), out);
  if (rep.ok()) return kOk;
  err << "check " << rep.campaign << ": " << rep.failures << " failure(s); first counterexample: "
      << (rep.counterexample ? rep.counterexample->dump() : std::string("none")) << "\n";
  return kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exterior powers, Dieudonne modules and graded multilinear maps in exact arithmetic", "wedgecrys"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  Io io;
  std::size_t d = 0;
  WedgeArgs w;
  CheckArgs chk;

  auto* compound_cmd = app.add_subcommand("compound", "d-th compound matrix of a square matrix");
  add_io(compound_cmd, io, true);
  compound_cmd->add_option("--d", d, "Order of the minors")->required();

  auto* rank_cmd = app.add_subcommand("rank", "Rank and determinantal ideal statuses");
  add_io(rank_cmd, io, true);

  auto* slopes_cmd = app.add_subcommand("slopes", "Newton slopes of an isocrystal or Dieudonne module");
  add_io(slopes_cmd, io, true);

  auto* wedge_cmd = app.add_subcommand("wedge", "Exterior power of a standard p-divisible group");
  add_io(wedge_cmd, io, true);
  wedge_cmd->add_option("--h", w.h, "Height");
  wedge_cmd->add_option("--dim", w.dim, "Dimension (0 or 1)");
  wedge_cmd->add_option("--r", w.r, "Exterior power");
  wedge_cmd->add_option("--p", w.p, "Prime (default $WEDGECRYS_DEFAULT_P or 3)");
  wedge_cmd->add_option("--a", w.a, "Residue field degree")->default_val(1);
  wedge_cmd->add_option("--m", w.m, "Witt precision (default: the least sufficient one)");

  auto* check_cmd = app.add_subcommand("check", "Run a property campaign");
  add_io(check_cmd, io, false);
  check_cmd->add_option("campaign", chk.campaign, "Campaign name")
      ->required()
      ->check(CLI::IsMember(campaign_names()));
  check_cmd->add_option("--seed", chk.seed, "Seed")->default_val(0);
  check_cmd->add_option("--trials", chk.trials, "Number of trials")->default_val(100);
  check_cmd->add_flag("--exhaustive-f2", chk.exhaustive_f2, "All 3x3 matrices over F_2 (rank-lemma)");
  check_cmd->add_flag("--wrong-shift", chk.wrong_shift)->group("");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*compound_cmd) return cmd_compound(io, d, out);
    if (*rank_cmd) return cmd_rank(io, out);
    if (*slopes_cmd) return cmd_slopes(io, out);
    if (*wedge_cmd) {
      if (io.in_path.empty() && io.inline_json.empty())
        for (const char* opt : {"--h", "--dim", "--r"})
          if (wedge_cmd->count(opt) == 0) throw SchemaError(std::string("wedge: missing ") + opt);
      return cmd_wedge(io, w, out);
    }
    return cmd_check(io, chk, out, err);
  } catch (const PrecisionExhausted& e) {
    err << "error: " << e.what() << "\n";
    if (e.required_precision() > 0) err << "required minimum m = " << e.required_precision() << "\n";
    return kPrecision;
  } catch (const DimensionMismatch& e) {
    err << "dimension error: " << e.what() << "\n";
    return kDimension;
  } catch (const ArityMismatch& e) {
    err << "dimension error: " << e.what() << "\n";
    return kDimension;
  } catch (const ParseError& e) {
    err << "schema error: " << e.what() << "\n";
    return kSchema;
  } catch (const BadDescriptor& e) {
    err << "schema error: " << e.what() << "\n";
    return kSchema;
  } catch (const NonPrime& e) {
    err << "schema error: " << e.what() << "\n";
    return kSchema;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace wedgecrys::cli
