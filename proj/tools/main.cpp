#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tnncells/atlas_json.hpp"
#include "tnncells/errors.hpp"
#include "tnncells/selftest.hpp"
#include "tnncells/version.hpp"

namespace {

using namespace tnncells;

std::vector<int> parse_word(const std::string& text) {
  std::vector<int> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    try {
      out.push_back(std::stoi(cur));
    } catch (const std::exception&) {
      throw validation_error("unparsable word letter: " + cur);
    }
    cur.clear();
  };
  for (char ch : text) {
    if (ch == ',' || ch == ' ')
      flush();
    else
      cur += ch;
  }
  flush();
  return out;
}

DiagramType parse_type(const std::string& text) {
  if (text == "A" || text == "a") return DiagramType::A;
  if (text == "D" || text == "d") return DiagramType::D;
  if (text == "E" || text == "e") return DiagramType::E;
  throw validation_error("unknown diagram type: " + text);
}

IndexSet parse_index_set(const std::string& text, int rank) {
  IndexSet s;
  for (int i : parse_word(text)) {
    if (i < 1 || i > rank) throw validation_error("index out of range: " + std::to_string(i));
    s = s.with(i);
  }
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw validation_error("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct AtlasArgs {
  std::string type = "A";
  int rank = 0;
  std::string y_word, x_word, format = "json", golden_path, h_set;
};

void add_common(CLI::App* cmd, AtlasArgs& args, bool with_h) {
  cmd->add_option("-t,--type", args.type, "diagram type (A or D)");
  cmd->add_option("-r,--rank", args.rank, "diagram rank")->required();
  cmd->add_option("--y-word", args.y_word, "letters of the y-side piece word");
  cmd->add_option("--x-word", args.x_word, "letters of the x-side piece word");
  cmd->add_option("--format", args.format, "output format: json or table");
  if (with_h)
    cmd->add_option("--H", args.h_set, "generator indices of the parabolic subset");
  else
    cmd->add_option("--golden", args.golden_path, "stored atlas to diff against");
}

int run_atlas(const AtlasArgs& args) {
  auto g = WeylGroup::make(parse_type(args.type), args.rank);
  std::vector<int> zw = parse_word(args.y_word), zpw = parse_word(args.x_word);
  PieceLabel piece = piece_of(*g, zw, zpw);
  CellAtlas atlas = springer_atlas(*g, piece);
  if (args.format == "table") {
    std::cout << springer_atlas_table(*g, atlas);
    return 0;
  }
  if (args.format != "json") throw validation_error("unknown format: " + args.format);
  if (args.golden_path.empty()) {
    std::cout << springer_atlas_json(*g, atlas);
    return 0;
  }
  GoldenDiff diff = diff_springer_golden(atlas, *g, read_file(args.golden_path));
  std::cout << springer_atlas_json(*g, atlas, &diff);
  if (diff.regression()) {
    std::cerr << "golden regression detected\n";
    return 3;
  }
  return 0;
}

int run_flag_atlas(const AtlasArgs& args) {
  auto g = WeylGroup::make(parse_type(args.type), args.rank);
  IndexSet H = parse_index_set(args.h_set, args.rank);
  PieceLabel piece = piece_of(*g, parse_word(args.y_word), parse_word(args.x_word));
  FlagAtlas atlas = flag_atlas(*g, H, piece);
  if (args.format == "table") {
    std::cout << flag_atlas_table(*g, atlas);
    return 0;
  }
  if (args.format != "json") throw validation_error("unknown format: " + args.format);
  std::cout << flag_atlas_json(*g, atlas);
  return 0;
}

int run_verify_adjoint(bool corrupt) {
  auto print = [](const selftest::CheckResult& r) {
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
    if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
    std::cout << "\n";
  };
  return selftest::run_adjoint_checks(print, corrupt) ? 0 : 3;
}

int run_parabolic(int n, const std::string& gens) {
  TNNMatrix m = assemble_tnn(n, gens);
  ParabolicReport report;
  report.n = n;
  for (int r = 0; r < n; ++r) {
    std::vector<std::string> row;
    for (int c = 0; c < n; ++c) row.push_back(m.mat.at(r, c).get_str());
    report.matrix.push_back(std::move(row));
  }
  report.minor_class = minor_positivity(m.mat);
  report.data = parabolic_of(to_double(m.mat));
  if (report.minor_class == MinorClass::totally_positive) {
    report.has_borel_chart = true;
    report.borel = borel_chart_check(m);
  }
  std::cout << parabolic_report_json(report);
  return 0;
}

int run_selftest(const std::string& level) {
  auto print = [](const selftest::CheckResult& r) {
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
    if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
    std::cout << "\n";
  };
  bool ok;
  if (level == "quick")
    ok = selftest::run_quick(print);
  else if (level == "full")
    ok = selftest::run_full(print);
  else
    throw validation_error("unknown selftest level: " + level);
  std::cout << (ok ? "selftest passed" : "selftest FAILED") << "\n";
  return ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"totally nonnegative cell atlases"};
  app.set_version_flag("--version", tnncells::kVersion);
  app.require_subcommand(1);

  AtlasArgs atlas_args;
  CLI::App* atlas_cmd = app.add_subcommand("atlas", "cell atlas of one unipotent piece");
  add_common(atlas_cmd, atlas_args, false);

  AtlasArgs flag_args;
  CLI::App* flag_cmd =
      app.add_subcommand("flag-atlas", "cell atlas on a partial flag manifold");
  add_common(flag_cmd, flag_args, true);

  bool corrupt = false;
  CLI::App* verify_cmd =
      app.add_subcommand("verify-adjoint", "run the adjoint representation checks");
  verify_cmd->add_flag("--corrupt-support-table", corrupt)->group("");  // hidden

  int pn = 0;
  std::string gens;
  CLI::App* para_cmd =
      app.add_subcommand("parabolic", "parabolic subgroup attached to a matrix");
  para_cmd->add_option("--n", pn, "matrix size")->required();
  para_cmd->add_option("--gens", gens, "generator word, e.g. y1:1,t:2,1/2,x1:1");

  std::string level = "quick";
  CLI::App* self_cmd = app.add_subcommand("selftest", "run the built-in suites");
  self_cmd->add_option("--level", level, "quick or full");

  try {
    app.parse(argc, argv);
    if (atlas_cmd->parsed()) return run_atlas(atlas_args);
    if (flag_cmd->parsed()) return run_flag_atlas(flag_args);
    if (verify_cmd->parsed()) return run_verify_adjoint(corrupt);
    if (para_cmd->parsed()) return run_parabolic(pn, gens);
    if (self_cmd->parsed()) return run_selftest(level);
    return 2;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const tnncells::validation_error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const tnncells::numeric_domain_error& e) {
    std::cerr << "numeric domain error: " << e.what() << "\n";
    return 2;
  } catch (const tnncells::resource_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 4;
  } catch (const tnncells::verification_error& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
