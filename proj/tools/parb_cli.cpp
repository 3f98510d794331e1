#include <fmt/format.h>

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "parb/cyclic.hpp"
#include "parb/error.hpp"
#include "parb/gt.hpp"
#include "parb/suites.hpp"
#include "parb/tangle.hpp"
#include "parb/tl.hpp"

using namespace parb;

namespace {

// "-" reads standard input.
std::string read_input(const std::string& arg) {
  if (arg != "-") return arg;
  std::string s{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

std::string_view first_word(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\n");
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_first_of(" \t\n;", b);
  return s.substr(b, e == std::string_view::npos ? std::string_view::npos : e - b);
}

// Ribbon slices in canonical form, identity slices dropped.
TangleDiagram canonical_tangle(TangleDiagram t) {
  std::vector<TangleSlice> kept;
  for (TangleSlice& s : t.slices) {
    if (s.kind == TangleSlice::Kind::ribbon) {
      s.rb = rb_canonical(s.rb);
      if (rb_equals(s.rb, RibbonBraid::identity(s.rb.strands()))) continue;
    }
    kept.push_back(std::move(s));
  }
  t.slices = std::move(kept);
  return t;
}

std::string normalize(const std::string& text) {
  std::string_view head = first_word(text);
  if (head == "braid") return to_string(canonical_word(garside_normal_form(parse_braid(text))));
  if (head == "rbraid") return to_string(rb_canonical(parse_rbraid(text)));
  if (head == "tangle") return to_string(canonical_tangle(parse_tangle(text)));
  throw ParseError("expected 'braid', 'rbraid' or 'tangle'", text.find_first_not_of(" \t\n"));
}

TLMorphism tl_value(const TLModel& model, const std::string& text) {
  std::string_view head = first_word(text);
  if (head == "braid") return model.eval(parse_braid(text));
  if (head == "rbraid") return model.eval(parse_rbraid(text));
  if (head == "tangle") return eval_tangle(model, parse_tangle(text));
  return model.eval(parse_expr(text));
}

HexagonConvention hexagon_from(const std::string& name) {
  if (name == "drinfeld") return HexagonConvention::drinfeld;
  if (name == "displayed") return HexagonConvention::displayed;
  throw MalformedInput(fmt::format("unknown hexagon convention '{}'", name));
}

bool flip_from(const std::string& name) {
  if (name == "standard") return false;
  if (name == "flip") return true;
  throw MalformedInput(fmt::format("unknown crossing convention '{}'", name));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parenthesized ribbon braids: normal forms, composition, rotation, GT action and verification"};
  app.require_subcommand(1);

  std::string input, second, gt_text, suite, out_path;
  std::optional<int> at, degree;
  int power = 1;
  std::uint64_t seed = 1;
  std::optional<long> budget;
  std::string hexagon = "drinfeld", convention = "standard";

  auto* normalize_cmd = app.add_subcommand("normalize", "Canonical text of a braid, rbraid or tangle");
  normalize_cmd->add_option("input", input, "Text, or - for standard input")->required();

  auto* compose_cmd = app.add_subcommand("compose", "Evaluate an expression, or compose two");
  compose_cmd->add_option("expr", input, "Postfix expression, or - for standard input")->required();
  compose_cmd->add_option("second", second, "Second expression: composed after the first, or inserted with --at");
  compose_cmd->add_option("--at", at, "Insert the second expression at this input label");

  auto* cyclic_cmd = app.add_subcommand("cyclic", "Rotation of an expression");
  cyclic_cmd->add_option("expr", input, "Postfix expression, or - for standard input")->required();
  cyclic_cmd->add_option("--power", power, "Number of rotation steps")->check(CLI::NonNegativeNumber);

  auto* apply_cmd = app.add_subcommand("gt-apply", "Image of an expression under a GT element");
  apply_cmd->add_option("element", gt_text, "\"gt lambda=.. f=..\"")->required();
  apply_cmd->add_option("expr", input, "Postfix expression, or - for standard input")->required();

  auto* check_cmd = app.add_subcommand("gt-check", "GT relations of an element");
  check_cmd->add_option("element", gt_text, "\"gt lambda=.. f=..\", or - for standard input")->required();
  check_cmd->add_option("--degree", degree, "Check in the truncated setting at this degree");
  check_cmd->add_option("--hexagon", hexagon, "drinfeld or displayed");

  auto* tl_cmd = app.add_subcommand("tl-eval", "Temperley-Lieb value of a braid, rbraid, tangle or expression");
  tl_cmd->add_option("input", input, "Text, or - for standard input")->required();
  tl_cmd->add_option("--convention", convention, "standard or flip");

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("suite", suite, "Suite name")->required();
  verify_cmd->add_option("--seed", seed, "Seed of the sample generator");
  verify_cmd->add_option("--budget", budget, "Cap on the samples of each sweep")->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--out", out_path, "Also write the report to this file");
  verify_cmd->add_option("--degree", degree, "Truncation degree of the GT sweeps");
  verify_cmd->add_option("--hexagon", hexagon, "drinfeld or displayed");
  verify_cmd->add_option("--convention", convention, "standard or flip");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*normalize_cmd) {
      std::cout << normalize(read_input(input)) << "\n";
      return 0;
    }
    if (*compose_cmd) {
      ParbMorphism f = eval_expr(parse_expr(read_input(input)));
      if (!second.empty()) {
        ParbMorphism g = eval_expr(parse_expr(second));
        f = at ? operadic_compose(f, g, *at) : cat_compose(f, g);
      } else if (at) {
        throw MalformedInput("--at needs a second expression");
      }
      std::cout << to_string(canonical(f)) << "\n";
      return 0;
    }
    if (*cyclic_cmd) {
      OperadExpr e = parse_expr(read_input(input));
      OperadExpr z = z_on_expr(e, power);
      std::cout << "expr: " << to_string(z) << "\n";
      std::cout << "value: " << to_string(canonical(eval_expr(z))) << "\n";
      return 0;
    }
    if (*apply_cmd) {
      GtElement e = parse_gt(gt_text);
      std::cout << to_string(canonical(gt_apply(e, parse_expr(read_input(input))))) << "\n";
      return 0;
    }
    if (*check_cmd) {
      GtElement e = parse_gt(read_input(gt_text), degree);
      HexagonConvention c = hexagon_from(hexagon);
      CheckReport r = e.is_discrete() ? gt_check_discrete(e, c) : gt_check_truncated(e, c);
      for (const CheckResult& x : r)
        std::cout << x.id << ": " << (x.pass ? "pass" : "fail") << (x.detail.empty() ? "" : " " + x.detail) << "\n";
      return all_pass(r) ? 0 : 1;
    }
    if (*tl_cmd) {
      TLModel model(flip_from(convention));
      std::cout << to_string(tl_value(model, read_input(input))) << "\n";
      return 0;
    }
    if (*verify_cmd) {
      SuiteOptions o;
      o.seed = seed;
      o.budget = budget;
      o.flip = flip_from(convention);
      o.hexagon = hexagon_from(hexagon);
      if (degree) {
        if (*degree < 0 || *degree > max_truncation_degree)
          throw MalformedInput("degree too large for configured resource bound");
        o.degree = *degree;
      }
      Report r = run_suite(suite, o);
      std::string text = report_lines(r);
      std::cout << text;
      if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw MalformedInput(fmt::format("cannot write {}", out_path));
        f << text;
      }
      return r.passed() ? 0 : 1;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const CompositionError& e) {
    std::cerr << "type error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
