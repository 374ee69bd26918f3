// phl: build models, compute cubes, render them, run the check suite.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "phl/errors.hpp"
#include "phl/io.hpp"
#include "phl/model.hpp"
#include "phl/perverse.hpp"
#include "phl/render.hpp"
#include "phl/suite.hpp"

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitInvalid = 3;

struct Options {
  std::string spec;
  std::string out;
  std::string format;
};

struct Failure {
  int code;
  std::string message;
};

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty() || opt.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(opt.out, std::ios::binary);
  if (!f) throw Failure{kExitInvalid, "cannot write " + opt.out};
  f << text;
}

phl::Json load(const Options& opt) {
  try {
    return phl::parse_json(phl::read_text_file(opt.spec));
  } catch (const phl::ParseError& e) {
    throw Failure{kExitParse, opt.spec + ": " + e.what()};
  }
}

phl::GradedAlgebraModel model_from(const Options& opt, const phl::Json& doc) {
  phl::ModelSpec spec;
  try {
    spec = phl::model_spec_from_json(doc);
  } catch (const phl::ParseError& e) {
    throw Failure{kExitParse, opt.spec + ": " + e.what()};
  }
  try {
    return phl::build_model(spec);
  } catch (const std::exception& e) {
    throw Failure{kExitInvalid, opt.spec + ": invalid model: " + e.what()};
  }
}

phl::PerverseHodgeCube cube_from(const Options& opt, const phl::Json& doc) {
  if (phl::is_cube_document(doc)) {
    try {
      return phl::cube_from_json(doc);
    } catch (const phl::ParseError& e) {
      throw Failure{kExitParse, opt.spec + ": " + e.what()};
    }
  }
  const phl::GradedAlgebraModel model = model_from(opt, doc);
  try {
    return phl::cube(model);
  } catch (const phl::ModelError& e) {
    throw Failure{kExitInvalid, opt.spec + ": " + e.what()};
  }
}

std::string format_cube(const phl::PerverseHodgeCube& c, const std::string& format) {
  if (format == "ascii") return phl::render_ascii(c);
  if (format == "tex") return phl::render_tex(c);
  return phl::dump(phl::cube_to_json(c));
}

int cmd_model(const Options& opt) {
  if (opt.format != "json") throw Failure{kExitParse, "model: only --format json is supported"};
  emit(opt, phl::dump(phl::model_summary(model_from(opt, load(opt)))));
  return 0;
}

int cmd_cube(const Options& opt) {
  emit(opt, format_cube(cube_from(opt, load(opt)), opt.format));
  return 0;
}

int cmd_render(const Options& opt) {
  if (opt.format == "json") throw Failure{kExitParse, "render: --format must be ascii or tex"};
  emit(opt, format_cube(cube_from(opt, load(opt)), opt.format));
  return 0;
}

int cmd_check(const Options& opt) {
  if (opt.format != "json") throw Failure{kExitParse, "check: only --format json is supported"};
  const phl::Json doc = load(opt);
  phl::CheckReport report;
  if (phl::is_cube_document(doc))
    report = phl::run_cube_suite(cube_from(opt, doc));
  else
    report = phl::run_check_suite(model_from(opt, doc));
  emit(opt, phl::dump(report.to_json()));
  std::cerr << report.summary();
  return report.all_passed() ? 0 : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Perverse-Hodge cube toolkit"};
  app.require_subcommand(1);

  Options opt;
  struct Verb {
    const char* name;
    const char* help;
    const char* default_format;
    int (*run)(const Options&);
  };
  const Verb verbs[] = {
      {"model", "Build a model and print its summary", "json", cmd_model},
      {"cube", "Compute the perverse-Hodge cube", "json", cmd_cube},
      {"render", "Draw a cube (or the cube of a model) as text", "ascii", cmd_render},
      {"check", "Run the check suite on a model or a cube", "json", cmd_check},
  };
  std::vector<std::pair<CLI::App*, const Verb*>> subs;
  for (const Verb& v : verbs) {
    CLI::App* sub = app.add_subcommand(v.name, v.help);
    sub->add_option("--spec", opt.spec, "Model spec or cube JSON")->required();
    sub->add_option("--out", opt.out, "Output file (default: stdout)");
    sub->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "ascii", "tex"}))
        ->default_str(v.default_format);
    subs.emplace_back(sub, &v);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  for (const auto& [sub, verb] : subs) {
    if (!sub->parsed()) continue;
    if (opt.format.empty()) opt.format = verb->default_format;
    try {
      return verb->run(opt);
    } catch (const Failure& f) {
      std::cerr << "phl: " << f.message << '\n';
      return f.code;
    } catch (const std::exception& e) {
      std::cerr << "phl: " << e.what() << '\n';
      return kExitInvalid;
    }
  }
  return kExitParse;
}
