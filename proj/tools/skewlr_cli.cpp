#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "skewlr_c.h"

namespace {

struct ShapeDeleter {
  void operator()(skewlr_shape* s) const { skewlr_shape_free(s); }
};
struct ExpansionDeleter {
  void operator()(skewlr_expansion* e) const { skewlr_expansion_free(e); }
};
using ShapePtr = std::unique_ptr<skewlr_shape, ShapeDeleter>;
using ExpansionPtr = std::unique_ptr<skewlr_expansion, ExpansionDeleter>;

struct CString {
  char* value = nullptr;
  ~CString() { skewlr_string_free(value); }
};

struct CliError : std::runtime_error {
  int exit_code;
  CliError(std::string message, int code)
      : std::runtime_error(std::move(message)), exit_code(code) {}
};

void require_ok(int status) {
  if (status == SKEWLR_OK) return;
  throw CliError(skewlr_last_error(), status == SKEWLR_EINVAL ? 1 : 2);
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  if (text == "-" || text.empty()) return out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string piece =
        text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(piece, &used);
    } catch (const std::exception&) {
      throw CliError("bad integer list: '" + text + "'", 1);
    }
    if (used != piece.size())
      throw CliError("bad integer list: '" + text + "'", 1);
    out.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::pair<int, int> parse_range(const std::string& text) {
  size_t dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      int k = std::stoi(text);
      return {k, k};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw CliError("bad k range: '" + text + "'", 1);
  }
}

const char* verdict_text(int verdict) {
  switch (verdict) {
    case SKEWLR_CMP_FIRST_DOMINATES:
      return "first-dominates";
    case SKEWLR_CMP_SECOND_DOMINATES:
      return "second-dominates";
    case SKEWLR_CMP_EQUAL:
      return "equal";
    default:
      return "incomparable";
  }
}

void write_output(const std::string& text, const std::string& out_file) {
  std::string body = text;
  if (body.empty() || body.back() != '\n') body += '\n';
  if (out_file.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream stream(out_file);
  if (!stream) throw CliError("cannot open output file: " + out_file, 1);
  stream << body;
}

ShapePtr parse_shape(const std::string& text) {
  skewlr_shape* raw = nullptr;
  require_ok(skewlr_shape_parse(text.c_str(), &raw));
  return ShapePtr(raw);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Skew Schur expansions and dominance checks"};
  app.require_subcommand(1);
  app.fallthrough();

  skewlr_options options{0, 1};
  std::uint64_t limit = 0;
  unsigned workers = 1;
  std::string out_file;
  bool as_json = false;
  app.add_option("--limit", limit, "Enumeration node budget (0 = unlimited)");
  app.add_option("--workers", workers, "Worker threads for enumeration");
  app.add_option("--out", out_file, "Write output to a file");
  app.add_flag("--json", as_json, "Emit JSON");

  std::string shape_text, shape2_text, outer_text, inner_text, nu_text;
  std::string alpha_text, range_text, rho_text;
  int h = 0, k = 0, width = 0, height = 0;
  int complement_height = 0, rect_height = 0;
  bool complemented = false, as_dot = false;

  CLI::App* expand = app.add_subcommand("expand", "Expand a skew diagram");
  expand->add_option("shape", shape_text, "Diagram, e.g. 3,2,1/1,1")
      ->required();

  CLI::App* lrcoef =
      app.add_subcommand("lrcoef", "One Littlewood-Richardson coefficient");
  lrcoef->add_option("outer", outer_text)->required();
  lrcoef->add_option("inner", inner_text)->required();
  lrcoef->add_option("nu", nu_text)->required();

  CLI::App* cmp = app.add_subcommand("compare", "Compare two diagrams");
  cmp->add_option("first", shape_text)->required();
  cmp->add_option("second", shape2_text)->required();

  CLI::App* hasse =
      app.add_subcommand("hasse", "Dominance order of a hook family");
  hasse->add_option("alpha", alpha_text)->required();
  hasse->add_option("size", h, "Hook size")->required();
  hasse->add_option("k", k, "Column overlap")->required();
  hasse->add_option("--complement-height", complement_height,
                    "Use hook complements in a rectangle of this height");
  hasse->add_flag("--dot", as_dot, "Emit DOT (default)");

  CLI::App* verify =
      app.add_subcommand("verify", "Verify predictions for a hook family");
  verify->add_option("alpha", alpha_text)->required();
  verify->add_option("size", h, "Hook size")->required();
  verify->add_option("krange", range_text, "k or a..b range")->required();
  verify->add_flag("--complemented", complemented,
                   "Use hook complements as foundations");
  verify->add_option("--rect-height", rect_height,
                     "Complement rectangle height");

  CLI::App* compl_cmd =
      app.add_subcommand("complement", "Partition complement in a rectangle");
  compl_cmd->add_option("rho", rho_text)->required();
  compl_cmd->add_option("width", width)->required();
  compl_cmd->add_option("height", height)->required();

  CLI11_PARSE(app, argc, argv);
  options.node_limit = limit;
  options.workers = workers;

  try {
    if (expand->parsed()) {
      ShapePtr shape = parse_shape(shape_text);
      skewlr_expansion* raw = nullptr;
      require_ok(skewlr_expand(shape.get(), &options, &raw));
      ExpansionPtr expansion(raw);
      CString text;
      require_ok(
          skewlr_expansion_format(expansion.get(), as_json ? 1 : 0, &text.value));
      write_output(text.value, out_file);
    } else if (lrcoef->parsed()) {
      std::vector<int> outer = parse_ints(outer_text);
      std::vector<int> inner = parse_ints(inner_text);
      std::vector<int> nu = parse_ints(nu_text);
      long long coeff = 0;
      require_ok(skewlr_lr_coefficient(outer.data(), outer.size(),
                                       inner.data(), inner.size(), nu.data(),
                                       nu.size(), &options, &coeff));
      write_output(std::to_string(coeff), out_file);
    } else if (cmp->parsed()) {
      ShapePtr first = parse_shape(shape_text);
      ShapePtr second = parse_shape(shape2_text);
      int verdict = 0;
      CString w1, w2;
      require_ok(skewlr_compare(first.get(), second.get(), &options, &verdict,
                                &w1.value, &w2.value));
      if (as_json) {
        nlohmann::ordered_json out;
        out["verdict"] = verdict_text(verdict);
        out["first_excess"] =
            w1.value ? nlohmann::ordered_json(w1.value) : nullptr;
        out["second_excess"] =
            w2.value ? nlohmann::ordered_json(w2.value) : nullptr;
        write_output(out.dump(2), out_file);
      } else {
        std::string body = verdict_text(verdict);
        if (w1.value) body += std::string("\nfirst excess term: ") + w1.value;
        if (w2.value) body += std::string("\nsecond excess term: ") + w2.value;
        write_output(body, out_file);
      }
    } else if (hasse->parsed()) {
      std::vector<int> alpha = parse_ints(alpha_text);
      CString text;
      if (as_json)
        require_ok(skewlr_hasse_json(alpha.data(), alpha.size(), h, k,
                                     complement_height, &options, &text.value));
      else
        require_ok(skewlr_hasse_dot(alpha.data(), alpha.size(), h, k,
                                    complement_height, &options, &text.value));
      write_output(text.value, out_file);
    } else if (verify->parsed()) {
      std::vector<int> alpha = parse_ints(alpha_text);
      auto [k_lo, k_hi] = parse_range(range_text);
      if (k_lo > k_hi) throw CliError("empty k range", 1);
      nlohmann::ordered_json out;
      out["reports"] = nlohmann::ordered_json::array();
      int total = 0;
      for (int kk = k_lo; kk <= k_hi; ++kk) {
        CString report;
        int mismatches = 0;
        require_ok(skewlr_verify_family(alpha.data(), alpha.size(), h, kk,
                                        complemented ? 1 : 0, rect_height,
                                        &options, &report.value, &mismatches));
        out["reports"].push_back(nlohmann::ordered_json::parse(report.value));
        total += mismatches;
      }
      out["total_mismatches"] = total;
      write_output(out.dump(2), out_file);
      if (total > 0) return 3;
    } else if (compl_cmd->parsed()) {
      std::vector<int> rho = parse_ints(rho_text);
      CString text;
      require_ok(
          skewlr_complement(rho.data(), rho.size(), width, height, &text.value));
      write_output(text.value, out_file);
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
