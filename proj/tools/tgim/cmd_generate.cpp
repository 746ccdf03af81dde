#include <fstream>
#include <iostream>
#include <memory>

#include "common.hpp"
#include "tg/reductions.hpp"

namespace {

struct GenerateArgs {
  std::string reduction;
  std::string input;
  std::string out_prefix;
  int delta = 1;
  int t_max = 0;
  std::string regime = "fixed";
  std::string variant;  // viral | tstep; per-reduction default when empty
};

void run_generate(const GenerateArgs& args) {
  std::ifstream in(args.input);
  if (!in) throw tg::Error("cannot open input file: " + args.input);

  auto pick = [&](tg::Objective fallback) {
    if (args.variant.empty()) return fallback;
    if (args.variant == "viral") return tg::Objective::MaxViral;
    if (args.variant == "tstep") return tg::Objective::MaxViralTstep;
    throw tg::ValidationError("unknown variant: " + args.variant);
  };

  tg::GeneratedInstance gi;
  if (args.reduction == "spread-tree") {
    gi = tg::gen_spread_tree(tg::parse_setcover(in), args.delta);
  } else if (args.reduction == "viral-tree") {
    gi = tg::gen_viral_tree(tg::parse_setcover(in), args.delta,
                            pick(tg::Objective::MaxViral));
  } else if (args.reduction == "minnonviral-tree") {
    gi = tg::gen_minnonviral_tree(tg::parse_setcover(in), args.delta);
  } else if (args.reduction == "window-star") {
    tg::WindowRegime regime;
    if (args.regime == "fixed") {
      regime = tg::WindowRegime::Fixed;
    } else if (args.regime == "shifting") {
      regime = tg::WindowRegime::Shifting;
    } else {
      throw tg::ValidationError("unknown regime: " + args.regime);
    }
    gi = tg::gen_window_star(tg::parse_vertexcover(in), args.delta, regime);
  } else if (args.reduction == "periodic-path") {
    if (args.t_max < 2)
      throw tg::ValidationError("periodic-path needs --tmax >= 2");
    gi = tg::gen_periodic_path(tg::parse_setcover(in), args.delta, args.t_max,
                               pick(tg::Objective::MaxViralTstep));
  } else {
    throw tg::ValidationError("unknown reduction: " + args.reduction);
  }

  const std::string graph_path = args.out_prefix + ".tgft";
  const std::string cert_path = args.out_prefix + ".cert.json";
  tg::save_tgft(gi.problem.graph, graph_path);
  std::ofstream cert(cert_path);
  if (!cert) throw tg::Error("cannot open output file: " + cert_path);
  cert << tg::certificate_json(gi);
  std::cout << "wrote " << graph_path << " and " << cert_path << " (answer: "
            << (gi.cert.answer ? "yes" : "no") << ", k=" << gi.cert.k << ")\n";
}

}  // namespace

void setup_generate(CLI::App& app) {
  auto args = std::make_shared<GenerateArgs>();
  CLI::App* cmd = app.add_subcommand(
      "generate", "Generate a hardness-construction instance with a certificate");
  cmd->add_option("--reduction", args->reduction,
                  "spread-tree|viral-tree|minnonviral-tree|window-star|periodic-path")
      ->required();
  cmd->add_option("--input", args->input, "SetCover (sc) or VertexCover (vc) file")
      ->required();
  cmd->add_option("--delta", args->delta, "counter value")->required();
  cmd->add_option("--tmax", args->t_max, "period (periodic-path only)");
  cmd->add_option("--regime", args->regime, "window-star: fixed|shifting");
  cmd->add_option("--variant", args->variant,
                  "viral|tstep objective variant (viral-tree, periodic-path)");
  cmd->add_option("--out", args->out_prefix, "output prefix")->required();
  cmd->callback([args]() { run_generate(*args); });
}
