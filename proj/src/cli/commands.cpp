#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "metallic/cli.hpp"
#include "metallic/errors.hpp"
#include "metallic/estimate.hpp"
#include "metallic/render.hpp"

namespace metallic::cli {

namespace {

struct RunConfig {
  int p = 1;
  int q = 1;
  int n = 3;
  int remove_long = 0;
  int remove_short = 0;
  std::string policy = "keep-first";
  std::vector<int> indices;
  int depth = -1;  // per-command default when unset
  int box_depth = 8;
  std::string format;
  std::string figure = "construction";
  std::string out_path;
  int bits = 128;
  std::uint64_t cap = kDefaultCap;
  std::uint64_t max_letters = 200;
  long copies = 0;
  double scale = 0.0;
  bool general_row = false;
};

FractalSpec make_spec(const RunConfig& c) {
  FractalSpec spec{MetallicParams(c.p, c.q), c.n, c.remove_long, c.remove_short,
                   parse_policy(c.policy), c.indices};
  spec.validate();
  return spec;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorCode::kInvalidArgument, message);
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed,
                    const char* command) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  std::string list;
  for (const char* a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
  throw Error(ErrorCode::kInvalidArgument,
              "--format " + format + " is not supported by '" + command + "' (use " + list + ")");
}

std::string cmd_word(const RunConfig& c) {
  MetallicParams params(c.p, c.q);
  require(c.n >= 0, "--n must be non-negative");
  const mpz_class length = tile_counts(params, c.n).total();
  const bool truncated = length > mpz_class(std::to_string(c.max_letters));
  std::string prefix;
  WordStream stream(params, c.n);
  while (prefix.size() < c.max_letters) {
    auto letter = stream.next();
    if (!letter) break;
    prefix += *letter;
  }
  if (c.format == "json") {
    nlohmann::json j = {{"p", c.p}, {"q", c.q}, {"n", c.n}, {"word", prefix},
                        {"length", length.get_str()}, {"truncated", truncated}};
    return j.dump(2) + "\n";
  }
  require_format(c.format, {"text", "json"}, "word");
  if (!truncated) return prefix + "\n";
  return prefix + "...\nlength " + length.get_str() + "\n";
}

std::string cmd_tiling(const RunConfig& c) {
  MetallicParams params(c.p, c.q);
  require(c.n >= 0, "--n must be non-negative");
  const Tiling tiling = tiling_at_step(params, c.n, c.cap);
  if (c.format == "csv") return tiling_csv(tiling, c.bits);
  if (c.format == "json") return tiling_json(tiling, c.bits).dump(2) + "\n";
  require_format(c.format, {"text", "csv", "json"}, "tiling");
  std::ostringstream os;
  os << tiling.word() << "\n";
  for (const Tile& t : tiling.tiles) {
    os << letter(t.kind) << " start " << float17(to_float(t.start, c.bits).to_double())
       << " length 1/" << params.symbol() << "^" << t.length_exponent << "\n";
  }
  os << "total " << float17(to_float(total_length(tiling), c.bits).to_double()) << "\n";
  return os.str();
}

std::string cmd_dim(const RunConfig& c) {
  require_format(c.format, {"json"}, "dim");
  if (c.copies != 0 || c.scale != 0.0) {
    const double d = cantor_similarity(c.copies, c.scale);
    const double h = cantor_hausdorff(c.copies, 1.0 / c.scale);
    nlohmann::json j = {{"m", c.copies}, {"r", c.scale}, {"dim", d},
                        {"similarity_dim", d}, {"hausdorff_dim", h}};
    return j.dump(2) + "\n";
  }
  return dimension_json(dimension(make_spec(c), c.bits)).dump(2) + "\n";
}

std::string cmd_cover(const RunConfig& c) {
  const FractalSpec spec = make_spec(c);
  const int depth = c.depth < 0 ? 1 : c.depth;
  const IntervalCover cover = cover_at_depth(spec, depth, c.cap);
  if (c.format == "json") return cover_json(cover, c.bits).dump(2) + "\n";
  require_format(c.format, {"csv", "json"}, "cover");
  return cover_csv(cover, c.bits);
}

std::string cmd_estimate(const RunConfig& c) {
  require_format(c.format, {"json"}, "estimate");
  const FractalSpec spec = make_spec(c);
  const int depth = c.depth < 0 ? 4 : c.depth;
  require(depth >= 1, "--depth must be at least 1 for estimate");
  const double analytic = dimension(spec, c.bits).dim;
  const double empirical = empirical_dimension(cover_histogram(spec, depth));
  nlohmann::json j = {{"p", c.p},
                      {"q", c.q},
                      {"n", c.n},
                      {"l", c.remove_long},
                      {"s", c.remove_short},
                      {"k", depth},
                      {"analytic_dim", analytic},
                      {"empirical_dim", empirical},
                      {"abs_error_empirical", std::abs(empirical - analytic)}};
  try {
    const BoxFit fit = box_dimension(spec, c.box_depth, c.cap);
    j["box_dim"] = fit.slope;
    j["abs_error_box"] = std::abs(fit.slope - analytic);
    j["box_k_max"] = c.box_depth;
    j["box_residual"] = fit.residual;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kCapExceeded) throw;
    j["box_dim"] = nullptr;
    j["abs_error_box"] = nullptr;
    j["box_error"] = e.what();
  }
  return j.dump(2) + "\n";
}

std::string cmd_render(const RunConfig& c) {
  RenderPlan plan;
  if (c.format == "tikz") {
    plan.format = RenderFormat::kTikz;
  } else {
    require_format(c.format, {"svg", "tikz"}, "render");
  }
  if (c.figure == "tiling") {
    return render_tiling_stack(MetallicParams(c.p, c.q), c.depth < 0 ? c.n : c.depth, plan);
  }
  require(c.figure == "construction", "--figure must be 'tiling' or 'construction'");
  return render_construction(make_spec(c), c.depth < 0 ? 3 : c.depth, plan);
}

std::string cmd_table(const RunConfig& c) {
  require_format(c.format, {"text"}, "table");
  std::vector<std::pair<int, int>> extra;
  if (c.general_row) extra.emplace_back(c.p, c.q);
  return metallic_table(extra);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Metallic-means tilings, removal fractals and their dimensions", "metallic"};
  app.set_config("--config", "", "key=value file of option defaults; flags override it");
  app.require_subcommand(1, 1);

  app.add_option("--p", c.p, "first metallic parameter (a -> a^p b^q)");
  auto* q_opt = app.add_option("--q", c.q, "second metallic parameter");
  app.add_option("--n", c.n, "substitution step");
  app.add_option("--remove-long", c.remove_long, "long tiles removed per level (l)");
  app.add_option("--remove-short", c.remove_short, "short tiles removed per level (s)");
  app.add_option("--policy", c.policy, "keep-first, keep-last or explicit");
  app.add_option("--indices", c.indices, "0-based word positions removed (explicit policy)")
      ->delimiter(',');
  app.add_option("--depth", c.depth, "construction depth k (render: rows)");
  app.add_option("--box-depth", c.box_depth, "k_max for the box-counting fit");
  app.add_option("--format", c.format, "json, csv, svg, tikz or text");
  app.add_option("--figure", c.figure, "render: tiling or construction");
  app.add_option("--out", c.out_path, "write data here instead of standard output");
  app.add_option("--bits", c.bits, "float conversion precision")->check(CLI::Range(53, 4096));
  app.add_option("--cap", c.cap, "enumeration cap")->envname("METALLIC_CAP");
  app.add_option("--max-letters", c.max_letters, "word: longest prefix printed");
  app.add_option("--copies", c.copies, "dim: Cantor-type copy count m");
  app.add_option("--scale", c.scale, "dim: Cantor-type scale factor r (copies are scaled by 1/r)");

  struct Sub {
    const char* name;
    const char* help;
    const char* default_format;
    std::string (*fn)(const RunConfig&);
  };
  const Sub subs[] = {
      {"word", "print the step-n substitution word", "text", cmd_word},
      {"tiling", "step-n tiling with exact endpoints", "text", cmd_tiling},
      {"dim", "analytic dimension report", "json", cmd_dim},
      {"cover", "depth-k interval cover", "csv", cmd_cover},
      {"estimate", "numerical dimension estimates", "json", cmd_estimate},
      {"render", "SVG or TikZ figure", "svg", cmd_render},
      {"table", "table of metallic means", "text", cmd_table},
  };
  for (const Sub& s : subs) app.add_subcommand(s.name, s.help)->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    for (const Sub& s : subs) {
      if (!app.got_subcommand(s.name)) continue;
      if (c.format.empty()) c.format = s.default_format;
      c.general_row = app.count("--p") > 0 || q_opt->count() > 0;
      std::string data = s.fn(c);
      if (c.out_path.empty()) {
        out << data;
      } else {
        std::ofstream file(c.out_path, std::ios::binary);
        if (!file) throw Error(ErrorCode::kInvalidArgument, "cannot write " + c.out_path);
        file << data;
      }
    }
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return e.code() == ErrorCode::kCapExceeded ? kExitCap : kExitValidation;
  }
  return kExitOk;
}

}  // namespace metallic::cli
