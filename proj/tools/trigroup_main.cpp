#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "trigroup/campaign.hpp"
#include "trigroup/constructions.hpp"
#include "trigroup/expr.hpp"
#include "trigroup/json_io.hpp"
#include "trigroup/svg.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGeneratorHealth = 3;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw trigroup::ParseError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw trigroup::ParseError("cannot write '" + path + "'");
  out << content;
}

std::uint64_t effective_seed(std::uint64_t cli_seed) {
  if (const char* env = std::getenv("TG_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw trigroup::ParseError("TG_SEED must be an unsigned integer");
    }
  }
  return cli_seed;
}

std::string join_names(const std::vector<std::string>& names) {
  std::string out;
  for (const std::string& n : names) {
    if (!out.empty()) out += ", ";
    out += n;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace trigroup;

  CLI::App app{"Exact projective configuration theorems and the additive group of triangles"};
  app.require_subcommand(1);

  // verify
  std::string theorem_arg;
  int trials = 100;
  std::uint64_t seed = 0;
  int jobs = 1;
  bool as_json = false;
  bool fault_inject = false;
  std::string out_path;
  auto* verify = app.add_subcommand("verify", "Run a seeded verification campaign");
  verify->add_option("theorem", theorem_arg, "One of: " + join_names(theorem_names()))
      ->required();
  verify->add_option("--trials", trials, "Number of trials")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "Base seed (TG_SEED overrides)");
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--json", as_json, "Emit the report as JSON");
  verify->add_option("--out", out_path, "Write the report to a file");
  verify->add_flag("--fault-inject", fault_inject, "Corrupt one trial (exit-status test hook)")
      ->group("");

  // eval
  std::string expr_text, inputs_path = "-";
  bool geometric = false;
  auto* eval = app.add_subcommand("eval", "Evaluate a triangle-arithmetic expression");
  eval->add_option("expr", expr_text, "Expression, e.g. \"A # (B + C)\"")->required();
  eval->add_option("--inputs", inputs_path, "JSON file of named elements ('-' for stdin)");
  eval->add_flag("--geometric", geometric, "Route '#' through the geometric construction");
  eval->add_option("--out", out_path, "Write the result to a file");

  // figure
  std::string figure_arg, scene_path;
  auto* figure = app.add_subcommand("figure", "Emit an SVG figure");
  figure->add_option("name", figure_arg, "One of: " + join_names(figure_names()))->required();
  figure->add_option("--scene", scene_path, "Scene JSON overriding the demo data");
  figure->add_option("--out", out_path, "Write the SVG to a file");

  // show
  std::string show_path = "-";
  auto* show = app.add_subcommand("show", "Pretty-print an element or scene JSON");
  show->add_option("--in", show_path, "JSON input ('-' for stdin)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*verify) {
      const auto th = theorem_from_name(theorem_arg);
      if (!th) throw ParseError("unknown theorem '" + theorem_arg + "'");
      CampaignSpec spec;
      spec.theorem = *th;
      spec.trials = trials;
      spec.seed = effective_seed(seed);
      spec.jobs = jobs;
      spec.fault_inject = fault_inject;
      const VerificationReport report = run_campaign(spec);
      const std::string body = as_json ? report.to_json().dump(2) + "\n" : report.text();
      write_output(out_path, body);
      if (!out_path.empty() && out_path != "-") std::cout << report.text();
      return report.ok() ? kExitPass : kExitFailure;
    }

    if (*eval) {
      const Json inputs_json = Json::parse(slurp(inputs_path));
      const auto inputs = elements_from_json(inputs_json);
      EvalOptions opts;
      opts.geometric = geometric;
      const TriangleElement result = eval_expression(expr_text, inputs, opts);
      write_output(out_path, to_json(result).dump(2) + "\n");
      return kExitPass;
    }

    if (*figure) {
      const auto fig = figure_from_name(figure_arg);
      if (!fig) throw ParseError("unknown figure '" + figure_arg + "'");
      std::optional<Json> scene;
      if (!scene_path.empty()) scene = Json::parse(slurp(scene_path));
      const FigureResult res = emit_figure(*fig, scene);
      write_output(out_path, res.svg);
      if (res.degraded) {
        std::cerr << "warning: " << res.warning << "\n";
        return kExitFailure;
      }
      return kExitPass;
    }

    if (*show) {
      const Json j = Json::parse(slurp(show_path));
      if (j.is_object() && j.contains("delta")) {
        const TriangleElement t = element_from_json(j);
        std::cout << "element " << t.str() << "\n";
        if (t.is_geometric()) {
          const auto tri = triangle_from_bary(t, ReferenceFrame::standard());
          for (int i = 0; i < 3; ++i)
            std::cout << "  D" << i + 1 << " = " << tri.v[i].str() << "\n";
        }
        return kExitPass;
      }
      const std::string model = j.is_object() ? j.value("model", "") : "";
      if (model == "central") {
        const CentralScene s = central_scene_from_json(j);
        std::cout << "central scene\n  S = " << s.S.str() << "\n";
        for (int i = 0; i < 3; ++i)
          std::cout << "  l" << i + 1 << " = " << s.l[i].str() << "  A" << i + 1 << " = "
                    << s.A[i].str() << "  B" << i + 1 << " = " << s.B[i].str() << "\n";
        return kExitPass;
      }
      if (model == "axis") {
        const AxisScene s = axis_scene_from_json(j);
        std::cout << "axis scene\n  s = " << s.s.str() << "\n";
        for (int i = 0; i < 3; ++i)
          std::cout << "  L" << i + 1 << " = " << s.L[i].str() << "  A" << i + 1 << " = "
                    << s.A[i].str() << "  B" << i + 1 << " = " << s.B[i].str() << "\n";
        return kExitPass;
      }
      throw ParseError("cannot show this JSON: expected an element or a scene");
    }
  } catch (const Json::parse_error& e) {
    std::cerr << "error: invalid JSON: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const GeneratorHealth& e) {
    std::cerr << "generator health: " << e.what() << "\n";
    return kExitGeneratorHealth;
  } catch (const GeneralPositionExhausted& e) {
    std::cerr << "generator health: " << e.what() << "\n";
    return kExitGeneratorHealth;
  } catch (const Unsupported& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const GeometryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
