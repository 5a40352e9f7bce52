// Command-line front end. See README.md for the term grammar.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "strictify/commands.hpp"
#include "strictify/syntax.hpp"

using namespace strictify;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write '" + path + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strictification of free monoidal categories"};
  app.require_subcommand(1);

  std::string sig_path;
  std::string model_path;
  std::string out_path;
  bool json_mode = false;
  std::size_t max_steps = 0;
  app.add_option("--sig", sig_path, "Signature file (default: one object W, no generators)");
  app.add_flag("--json", json_mode, "Emit one JSON document per command");
  app.add_option("--model", model_path, "Finite model config (seed=, default_size=, size.<Obj>=)");
  app.add_option("--max-steps", max_steps, "Rewrite budget for normalize (0 = unbounded)");
  app.add_option("--out", out_path, "Write the output (or rendered document) to this file");

  std::string term;
  std::string term2;
  std::string mode = "shallow";
  std::string format = "dot";
  std::string demo_name;
  std::size_t demo_n = 3;

  auto* typecheck = app.add_subcommand("typecheck", "Print the type of a C- or D-term");
  typecheck->add_option("term", term)->required();
  auto* strictify = app.add_subcommand("strictify", "Apply F to a C-term");
  strictify->add_option("term", term)->required();
  strictify->add_option("--mode", mode, "shallow | expand")->check(CLI::IsMember({"shallow", "expand"}));
  auto* nonstrictify = app.add_subcommand("nonstrictify", "Apply G to a D-term");
  nonstrictify->add_option("dterm", term)->required();
  auto* normalize = app.add_subcommand("normalize", "Normalise adapters in a D-term");
  normalize->add_option("dterm", term)->required();
  auto* canonical = app.add_subcommand("canonical", "Canonical adapter arrow between D-objects");
  canonical->add_option("from", term)->required();
  canonical->add_option("to", term2)->required();
  auto* equal = app.add_subcommand("equal", "Decide equality of two parallel C-terms");
  equal->add_option("f", term)->required();
  equal->add_option("g", term2)->required();
  auto* render = app.add_subcommand("render", "Draw a D-term as a string diagram");
  render->add_option("dterm", term)->required();
  render->add_option("--format", format, "dot | svg")->check(CLI::IsMember({"dot", "svg"}));
  auto* demo = app.add_subcommand("demo", "Built-in examples");
  demo->add_option("name", demo_name)->required();
  demo->add_option("n", demo_n, "Size parameter");
  demo->add_option("--format", format, "dot | svg")->check(CLI::IsMember({"dot", "svg"}));

  CLI11_PARSE(app, argc, argv);

  CLI::App* chosen = app.get_subcommands().front();
  const std::string command = chosen->get_name();
  std::vector<std::string> inputs{term};
  if (!term2.empty()) inputs.push_back(term2);
  if (chosen == demo) inputs = {demo_name, std::to_string(demo_n)};

  try {
    Signature sig = sig_path.empty() ? Signature::single_object() : parse_signature(read_file(sig_path));
    RenderFormat fmt = format == "svg" ? RenderFormat::Svg : RenderFormat::Dot;
    CommandResult r;
    if (chosen == typecheck) {
      r = cmd_typecheck(sig, term);
    } else if (chosen == strictify) {
      r = cmd_strictify(sig, term, mode == "expand");
    } else if (chosen == nonstrictify) {
      r = cmd_nonstrictify(sig, term);
    } else if (chosen == normalize) {
      r = cmd_normalize(sig, term, max_steps);
    } else if (chosen == canonical) {
      r = cmd_canonical(sig, term, term2);
    } else if (chosen == equal) {
      std::optional<ModelConfig> model;
      if (!model_path.empty()) model = parse_model_config(read_file(model_path));
      r = cmd_equal(sig, term, term2, model);
    } else if (chosen == render) {
      r = cmd_render(sig, term, fmt);
    } else {
      r = cmd_demo(demo_name, demo_n, fmt);
    }

    if (!out_path.empty()) {
      // Render writes the drawing; demo writes its drawing; others write the output term.
      write_file(out_path, r.document ? *r.document : r.output + (chosen == render ? "" : "\n"));
    }
    if (json_mode) {
      std::cout << to_json(r) << "\n";
    } else if (chosen == render && !out_path.empty()) {
      std::cout << "wrote " << out_path << "\n";
    } else {
      std::cout << to_text(r);
    }
    return 0;
  } catch (const Error& e) {
    if (json_mode) {
      std::cout << error_json(command, inputs, e) << "\n";
    } else {
      std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    }
    return 2;
  }
}
