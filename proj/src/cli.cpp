#include "hopfchrom/cli.hpp"

#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hopfchrom/builtins.hpp"
#include "hopfchrom/chromatic.hpp"
#include "hopfchrom/errors.hpp"
#include "hopfchrom/expr_parse.hpp"
#include "hopfchrom/io.hpp"

namespace hopfchrom {

namespace {

struct Source {
  std::string path;
  std::string builtin;
  std::string field = "Q";
};

void add_source(CLI::App* cmd, Source& src) {
  cmd->add_option("algebra", src.path, "Algebra file (JSON structure constants)");
  cmd->add_option("--builtin", src.builtin, "group:Zn, group:S3, dualgroup:Zn, dualgroup:S3, sweedler, taft:n");
  cmd->add_option("--field", src.field, "Field for --builtin: Q, GF:p or Cyc:n")->capture_default_str();
}

HopfData load_data(const Source& src) {
  if (!src.builtin.empty() && !src.path.empty()) throw ParseError("input", "give either an algebra file or --builtin");
  if (!src.builtin.empty()) {
    Field f = [&] {
      try {
        return Field::make(FieldSpec::parse(src.field));
      } catch (const FieldError& e) {
        throw ParseError("--field", e.what());
      }
    }();
    try {
      return builtin(src.builtin, f).data();
    } catch (const FieldError& e) {
      throw ParseError("--builtin", e.what());
    }
  }
  if (src.path.empty()) throw ParseError("input", "give an algebra file or --builtin");
  return load_algebra_data(src.path);
}

HopfContext load_context(const Source& src) { return HopfContext::make(HopfAlgebra::make(load_data(src))); }

std::string vec_text(const Vector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
  return s + "]";
}

std::string describe_algebra(const HopfAlgebra& h) {
  return h.name() + " over " + h.field().spec().to_string() + " (dim " + std::to_string(h.dim()) + ")";
}

int cmd_verify(const Source& src, bool as_json, std::ostream& out) {
  HopfData d = load_data(src);
  try {
    verify_hopf_axioms(d);
  } catch (const AxiomError& e) {
    if (as_json)
      out << json{{"algebra", d.name}, {"ok", false}, {"axiom", e.axiom()}, {"detail", e.what()}}.dump(2) << "\n";
    else
      out << "FAIL " << d.name << ": " << e.what() << "\n";
    return exit_verification_failed;
  }
  if (as_json)
    out << json{{"algebra", d.name}, {"ok", true}}.dump(2) << "\n";
  else
    out << "PASS " << d.name << ": all Hopf axioms hold (dim " << d.dim() << " over "
        << d.field.spec().to_string() << ")\n";
  return exit_ok;
}

int cmd_integrals(const Source& src, bool as_json, std::ostream& out) {
  const HopfContext ctx = load_context(src);
  const HopfAlgebra& h = ctx.h();
  const IntegralData& d = ctx.integrals;
  const PivotSearch search = pivot_candidates(h, d);
  const bool unimodular = is_unimodular(h, d);
  std::string spherical;
  if (!unimodular)
    spherical = "no";
  else if (!search.candidates.empty())
    spherical = "yes";
  else
    spherical = search.exhaustive ? "no" : "inconclusive";

  if (as_json) {
    json j = integrals_to_json(h, d);
    json pivots = json::array();
    for (const auto& p : search.candidates) pivots.push_back(vector_to_json(p.g));
    j["pivot_candidates"] = std::move(pivots);
    j["pivot_search_exhaustive"] = search.exhaustive;
    j["spherical"] = spherical;
    out << j.dump(2) << "\n";
    return exit_ok;
  }
  out << "algebra          " << describe_algebra(h) << "\n";
  out << "basis            " << [&] {
    std::string s;
    for (std::size_t i = 0; i < h.dim(); ++i) s += (i ? ", " : "") + h.basis_names()[i];
    return s;
  }() << "\n";
  out << "Lambda           " << vec_text(d.cointegral) << "  = " << h.format(d.cointegral) << "\n";
  out << "lambda           " << vec_text(d.integral.coeffs) << "\n";
  out << "alpha_H          " << vec_text(d.alpha.coeffs) << "\n";
  out << "distinguished_a  " << vec_text(d.distinguished) << "  = " << h.format(d.distinguished) << "\n";
  out << "unimodular       " << (unimodular ? "yes" : "no") << "\n";
  out << "pivots           ";
  if (search.candidates.empty()) out << "none";
  for (std::size_t i = 0; i < search.candidates.size(); ++i)
    out << (i ? ", " : "") << h.format(search.candidates[i].g);
  out << (search.exhaustive ? "" : " (search not exhaustive)") << "\n";
  out << "spherical        " << spherical << "\n";
  return exit_ok;
}

int cmd_chromatic(const Source& src, const std::string& side_text, const std::string& out_path, bool as_json,
                  std::ostream& out) {
  const ChromaticSide side = parse_chromatic_side(side_text);
  const HopfContext ctx = load_context(src);
  const Morphism c = chromatic_hopf(ctx, side);
  json j = morphism_to_json(c);
  j["algebra"] = ctx.h().name();
  j["side"] = to_string(side);
  if (!out_path.empty()) {
    write_text_file(out_path, j.dump(2) + "\n");
    out << "wrote " << to_string(side) << " chromatic map of " << ctx.h().name() << " (" << c.matrix.rows() << "x"
        << c.matrix.cols() << ") to " << out_path << "\n";
    return exit_ok;
  }
  if (as_json) {
    out << j.dump(2) << "\n";
    return exit_ok;
  }
  out << to_string(side) << " chromatic map of " << describe_algebra(ctx.h()) << "\n";
  out << word_label(c.source) << " -> " << word_label(c.target) << "  (" << c.matrix.rows() << "x" << c.matrix.cols()
      << ")\n";
  out << c.matrix.to_string();
  return exit_ok;
}

std::pair<std::size_t, std::size_t> parse_fault(const std::string& text) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument("comma");
    std::size_t used = 0;
    const std::string a = text.substr(0, comma), b = text.substr(comma + 1);
    const std::size_t r = std::stoul(a, &used);
    if (used != a.size()) throw std::invalid_argument("row");
    const std::size_t c = std::stoul(b, &used);
    if (used != b.size()) throw std::invalid_argument("col");
    return {r, c};
  } catch (const std::logic_error&) {
    throw ParseError("--inject-fault", "expected ROW,COL");
  }
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) items.push_back(item);
  return items;
}

struct CheckOptions {
  std::string side = "left";
  std::string modules = "all";
  std::string module_file;
  std::string fault;
  std::string expr;
  std::string equals;
};

int run_expr(const HopfContext& ctx, ExprEnvironment& env, const CheckOptions& opt, bool as_json, std::ostream& out) {
  const MorphismExpr lhs = parse_expr(opt.expr, env);
  const Morphism f = evaluate(lhs);
  if (opt.equals.empty() && !same_word(f.source, f.target))
    throw TypeMismatch("expression maps " + word_label(f.source) + " -> " + word_label(f.target) +
                       "; give --equals to compare it with another expression");
  const Morphism g = opt.equals.empty() ? identity_morphism(ctx.h().field(), f.source)
                                        : evaluate(parse_expr(opt.equals, env));
  const bool equal = morphisms_equal(f, g);
  const auto diff = first_difference(f.matrix, g.matrix);
  if (as_json) {
    json j = {{"algebra", ctx.h().name()},
              {"expr", lhs.describe()},
              {"source", word_label(f.source)},
              {"target", word_label(f.target)},
              {"equal", equal}};
    if (diff) j["mismatch"] = {{"row", diff->row}, {"col", diff->col}};
    out << j.dump(2) << "\n";
  } else {
    out << lhs.describe() << " : " << word_label(f.source) << " -> " << word_label(f.target) << "\n";
    out << (equal ? "equal" : "NOT EQUAL");
    if (diff)
      out << " at (" << diff->row << "," << diff->col << "): " << f.matrix(diff->row, diff->col) << " vs "
          << g.matrix(diff->row, diff->col);
    out << "\n";
  }
  return equal ? exit_ok : exit_verification_failed;
}

int cmd_check(const Source& src, const CheckOptions& opt, bool as_json, std::ostream& out) {
  const ChromaticSide side = parse_chromatic_side(opt.side);
  const HopfContext ctx = load_context(src);
  ExprEnvironment env(ctx);

  ModuleRef file_module;
  if (!opt.module_file.empty()) {
    try {
      file_module = load_module(ctx.algebra, opt.module_file);
    } catch (const ModuleError& e) {
      throw ParseError(opt.module_file, e.what());
    }
    env.add_module(file_module->label(), file_module);
  }

  if (!opt.fault.empty()) {
    Morphism c = env.chromatic(side);
    const auto [r, col] = parse_fault(opt.fault);
    if (r >= c.matrix.rows() || col >= c.matrix.cols())
      throw ParseError("--inject-fault", "entry outside the " + std::to_string(c.matrix.rows()) + "x" +
                                             std::to_string(c.matrix.cols()) + " chromatic matrix");
    c.matrix(r, col) += ctx.h().field().one();
    env.set_chromatic(side, std::move(c));
  }

  if (!opt.expr.empty()) return run_expr(ctx, env, opt, as_json, out);

  std::vector<ModuleRef> xs;
  auto names = split_list(opt.modules);
  if (names.size() == 1 && names[0] == "all") {
    names = {"trivial", "regular", "alpha"};
    if (file_module) names.push_back("file");
  }
  for (const auto& n : names) {
    if (n == "trivial")
      xs.push_back(ctx.trivial);
    else if (n == "regular")
      xs.push_back(ctx.regular);
    else if (n == "alpha")
      xs.push_back(ctx.alpha);
    else if (n == "file") {
      if (!file_module) throw ParseError("--modules", "'file' needs --module-file");
      xs.push_back(file_module);
    } else
      throw ParseError("--modules", "unknown module '" + n + "' (expected trivial, regular, alpha, file or all)");
  }

  std::optional<PivotData> pivot;
  if (side == ChromaticSide::spherical) pivot = env.pivot();
  const Morphism& c_h = env.chromatic(side);

  std::vector<RetractFamily> families{regular_family(ctx)};
  if (auto fam = idempotent_summand(ctx)) families.push_back(std::move(*fam));

  std::vector<IdentityReport> reports;
  for (const auto& fam : families) {
    const Morphism c_p = chromatic_retract(ctx, c_h, fam, side);
    for (const auto& x : xs) reports.push_back(verify_chromatic_identity(ctx, c_p, fam.P, x, side, pivot));
  }
  std::size_t passed = 0;
  for (const auto& r : reports) passed += r.holds();
  const bool all = passed == reports.size();

  if (as_json) {
    json results = json::array();
    for (const auto& r : reports) results.push_back(report_to_json(r));
    out << json{{"algebra", ctx.h().name()},
                {"field", ctx.h().field().spec().to_string()},
                {"side", to_string(side)},
                {"results", std::move(results)},
                {"all_equal", all}}
               .dump(2)
        << "\n";
  } else {
    out << to_string(side) << " chromatic identity for " << describe_algebra(ctx.h()) << "\n";
    for (const auto& r : reports) {
      out << "  P=" << std::left << std::setw(6) << r.P << " X=" << std::setw(8) << r.X;
      if (r.holds())
        out << "equal";
      else if (r.equal)
        out << "NOT H-LINEAR: the chromatic map is not a morphism of H-mod";
      else
        out << "NOT EQUAL at (" << r.mismatch->row << "," << r.mismatch->col << "): expected " << r.expected
            << ", got " << r.actual;
      out << "  [" << std::fixed << std::setprecision(1) << r.millis << " ms]\n";
    }
    out << passed << "/" << reports.size() << " identities hold\n";
  }
  return all ? exit_ok : exit_verification_failed;
}

int cmd_export(const Source& src, const std::string& out_path, std::ostream& out) {
  const HopfAlgebra h = HopfAlgebra::make(load_data(src));
  const std::string text = algebra_to_json(h).dump(2) + "\n";
  if (out_path.empty())
    out << text;
  else
    write_text_file(out_path, text);
  return exit_ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with finite-dimensional Hopf algebras and their chromatic maps", "hopfchrom"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable output");

  Source src;
  std::string side = "left", out_path;
  CheckOptions check;

  auto* verify = app.add_subcommand("verify", "Run the Hopf axiom suite");
  add_source(verify, src);
  verify->add_flag("--json", as_json, "Machine-readable output");

  auto* integrals = app.add_subcommand("integrals", "Integrals, cointegrals, distinguished grouplikes and pivots");
  add_source(integrals, src);
  integrals->add_flag("--json", as_json, "Machine-readable output");

  auto* chromatic = app.add_subcommand("chromatic", "Write the chromatic map of H");
  add_source(chromatic, src);
  chromatic->add_option("--side", side, "left, right or spherical")->capture_default_str();
  chromatic->add_option("--out", out_path, "Write the map as JSON to this file");
  chromatic->add_flag("--json", as_json, "Machine-readable output");

  auto* checkcmd = app.add_subcommand("check", "Verify the chromatic identity over a grid of modules");
  add_source(checkcmd, src);
  checkcmd->add_option("--side", check.side, "left, right or spherical")->capture_default_str();
  checkcmd->add_option("--modules", check.modules, "Comma list of trivial, regular, alpha, file, or all")
      ->capture_default_str();
  checkcmd->add_option("--module-file", check.module_file, "Module file (JSON action matrices)");
  checkcmd->add_option("--inject-fault", check.fault, "Add 1 to entry ROW,COL of the chromatic map of H");
  checkcmd->add_option("--expr", check.expr, "Evaluate a morphism expression instead of the grid");
  checkcmd->add_option("--equals", check.equals, "Compare --expr with this expression (default: identity)");
  checkcmd->add_flag("--json", as_json, "Machine-readable output");

  auto* exportcmd = app.add_subcommand("export", "Write an algebra in the JSON file format");
  add_source(exportcmd, src);
  exportcmd->add_option("--out", out_path, "Output file (default: stdout)");

  std::vector<std::string> argv_store{"hopfchrom"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_input_error;
  }

  try {
    if (verify->parsed()) return cmd_verify(src, as_json, out);
    if (integrals->parsed()) return cmd_integrals(src, as_json, out);
    if (chromatic->parsed()) return cmd_chromatic(src, side, out_path, as_json, out);
    if (checkcmd->parsed()) return cmd_check(src, check, as_json, out);
    if (exportcmd->parsed()) return cmd_export(src, out_path, out);
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return exit_input_error;
  } catch (const FieldError& e) {
    err << "input error: " << e.what() << "\n";
    return exit_input_error;
  } catch (const TypeMismatch& e) {
    err << "input error: " << e.what() << "\n";
    return exit_input_error;
  } catch (const AxiomError& e) {
    err << "verification failed: " << e.what() << "\n";
    return exit_verification_failed;
  } catch (const Error& e) {
    err << "verification failed: " << e.what() << "\n";
    return exit_verification_failed;
  }
  return exit_input_error;
}

}  // namespace hopfchrom
