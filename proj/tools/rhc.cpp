// rhc: compositions, ribbon tableaux, 0-Hecke modules, and the symbolic
// NSym/QSym layer behind them, with verification sweeps for the module-level
// identities (short exact sequences, ribbon complexes, skew modules,
// branching, Koszul strands).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "rhc/json_io.hpp"
#include "rhc/verify.hpp"
#include "rhc/version.hpp"

namespace {

using rhc::json;

struct OutputOptions {
  std::string format;        // "json" or "text"; empty = command default
  std::string out_path;
  std::string default_format = "json";
};

void emit(const OutputOptions& opts, const json& report, const std::string& text) {
  std::string format = opts.format.empty() ? opts.default_format : opts.format;
  std::string payload = format == "text" ? text : report.dump(2) + "\n";
  if (opts.out_path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream f(opts.out_path, std::ios::binary);
    f << payload;
  }
}

json report_header(const std::string& command) {
  return json{{"tool", "rhc"}, {"version", rhc::kVersion}, {"command", command}};
}

// --- tiny expression parser for the nsym/qsym subcommands ------------------

struct Tokenizer {
  std::string text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) { ++pos; return true; }
    return false;
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
    return text.substr(start, pos - start);
  }
  long number() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected a number");
    return std::stol(text.substr(start, pos));
  }
  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("parse error at offset " + std::to_string(pos) + " of \"" +
                                text + "\": " + why);
  }
  rhc::Composition composition() {
    skip_ws();
    size_t start = pos;
    if (!eat('(')) fail("expected '('");
    int depth = 1;
    while (pos < text.size() && depth > 0) {
      if (text[pos] == '(') ++depth;
      if (text[pos] == ')') --depth;
      ++pos;
    }
    if (depth != 0) fail("unbalanced parentheses");
    return rhc::parse_composition(text.substr(start, pos - start));
  }
};

rhc::QSymElem parse_qsym_expr(Tokenizer& tz);

rhc::QSymElem parse_qsym_primary(Tokenizer& tz) {
  char c = tz.peek();
  if (c == '(') {
    tz.eat('(');
    // re-parse a full expression up to the matching ')'
    rhc::QSymElem inner = parse_qsym_expr(tz);
    if (!tz.eat(')')) tz.fail("expected ')'");
    return inner;
  }
  if (isdigit(static_cast<unsigned char>(c))) {
    long num = tz.number();
    long den = tz.eat('/') ? tz.number() : 1;
    return rhc::qsym_scale(rhc::qsym_l(rhc::Composition()), rhc::Rational(num, den));
  }
  std::string name = tz.ident();
  if (name == "L") return rhc::qsym_l(tz.composition());
  if (name == "M") return rhc::m_to_l(rhc::qsym_m(tz.composition()));
  tz.fail("unknown qsym symbol '" + name + "'");
}

rhc::QSymElem parse_qsym_term(Tokenizer& tz) {
  rhc::QSymElem acc = parse_qsym_primary(tz);
  while (tz.peek() == '*') {
    tz.eat('*');
    acc = rhc::l_product(acc, parse_qsym_primary(tz));
  }
  return acc;
}

rhc::QSymElem parse_qsym_expr(Tokenizer& tz) {
  rhc::QSymElem acc = parse_qsym_term(tz);
  while (true) {
    if (tz.peek() == '+') {
      tz.eat('+');
      acc = rhc::qsym_add(acc, parse_qsym_term(tz));
    } else if (tz.peek() == '-') {
      tz.eat('-');
      acc = rhc::qsym_add(acc, rhc::qsym_scale(parse_qsym_term(tz), rhc::Rational(-1)));
    } else {
      return acc;
    }
  }
}

rhc::NSymElem parse_nsym_expr(Tokenizer& tz);

rhc::NSymElem parse_nsym_primary(Tokenizer& tz) {
  char c = tz.peek();
  if (c == '(') {
    tz.eat('(');
    rhc::NSymElem inner = parse_nsym_expr(tz);
    if (!tz.eat(')')) tz.fail("expected ')'");
    return inner;
  }
  if (isdigit(static_cast<unsigned char>(c))) {
    long num = tz.number();
    long den = tz.eat('/') ? tz.number() : 1;
    return rhc::nsym_scale(rhc::nsym_r(rhc::Composition()), rhc::Rational(num, den));
  }
  std::string name = tz.ident();
  if (name == "R") return rhc::nsym_r(tz.composition());
  if (name == "H") return rhc::h_to_r(rhc::nsym_h(tz.composition()));
  if (name == "perp") {
    rhc::QSymElem f = parse_qsym_primary(tz);
    rhc::NSymElem h = parse_nsym_primary(tz);
    return rhc::perp(f, h);
  }
  tz.fail("unknown nsym symbol '" + name + "'");
}

rhc::NSymElem parse_nsym_term(Tokenizer& tz) {
  rhc::NSymElem acc = parse_nsym_primary(tz);
  while (tz.peek() == '*') {
    tz.eat('*');
    acc = rhc::r_product(acc, parse_nsym_primary(tz));
  }
  return acc;
}

rhc::NSymElem parse_nsym_expr(Tokenizer& tz) {
  rhc::NSymElem acc = parse_nsym_term(tz);
  while (true) {
    if (tz.peek() == '+') {
      tz.eat('+');
      acc = rhc::nsym_add(acc, parse_nsym_term(tz));
    } else if (tz.peek() == '-') {
      tz.eat('-');
      acc = rhc::nsym_add(acc, rhc::nsym_scale(parse_nsym_term(tz), rhc::Rational(-1)));
    } else {
      return acc;
    }
  }
}

// ---------------------------------------------------------------------------

std::vector<rhc::Composition> shape_from_flags(const std::string& shape,
                                               const std::string& seq) {
  if (!shape.empty() && !seq.empty())
    throw std::invalid_argument("use either --shape or --seq, not both");
  if (!shape.empty()) return {rhc::parse_composition(shape)};
  if (!seq.empty()) return rhc::parse_composition_sequence(seq);
  throw std::invalid_argument("missing --shape or --seq");
}

int cmd_srt(const std::string& shape, const std::string& seq, OutputOptions opts) {
  opts.default_format = "text";
  auto comps = shape_from_flags(shape, seq);
  rhc::GeneralizedRibbon diagram = rhc::build_diagram(comps);
  auto tableaux = rhc::enumerate_srt(diagram);
  json report = report_header("srt");
  report["shape"] = rhc::to_json(diagram);
  report["count"] = tableaux.size();
  json list = json::array();
  std::ostringstream text;
  text << tableaux.size() << " standard ribbon tableaux of shape "
       << rhc::sequence_str(comps) << "\n\n";
  for (const auto& t : tableaux) {
    list.push_back(rhc::to_json(t));
    text << rhc::render_tableau(t) << "\n";
  }
  report["tableaux"] = list;
  emit(opts, report, text.str());
  return 0;
}

int cmd_module(const std::string& shape, const std::string& seq, const OutputOptions& opts) {
  auto comps = shape_from_flags(shape, seq);
  rhc::HeckeModule m = rhc::build_projective(comps);
  json report = report_header("module");
  report["shape"] = json::array();
  for (const auto& c : comps) report["shape"].push_back(rhc::to_json(c));
  report["module"] = rhc::module_to_json(m);
  rhc::RelationReport rel = rhc::verify_relations(m);
  report["relations_pass"] = rel.ok;
  report["decomposition"] = rhc::to_json(rhc::decompose_projective(m));
  emit(opts, report, report.dump(2) + "\n");
  return rel.ok ? 0 : 1;
}

int cmd_ses(const std::string& alpha_s, const std::string& beta_s, const OutputOptions& opts) {
  rhc::Composition alpha = rhc::parse_composition(alpha_s);
  rhc::Composition beta = rhc::parse_composition(beta_s);
  rhc::SES s = rhc::build_ses(alpha, beta);
  rhc::SESReport r = rhc::verify_ses(s);
  json report = report_header("ses");
  report["alpha"] = rhc::to_json(alpha);
  report["beta"] = rhc::to_json(beta);
  report["dims"] = json{{"left", s.left.dim}, {"middle", s.middle.dim}, {"right", s.right.dim}};
  report["pass"] = r.ok;
  report["failures"] = r.failures;
  std::ostringstream text;
  text << "0 -> P" << rhc::concat(alpha, beta).str() << " -> P(" << alpha.str() << "," << beta.str()
       << ") -> P" << rhc::near_concat(alpha, beta).str() << " -> 0\n"
       << "dims " << s.left.dim << " + " << s.right.dim << " = " << s.middle.dim << "\n"
       << (r.ok ? "PASS" : "FAIL") << "\n";
  emit(opts, report, text.str());
  return r.ok ? 0 : 1;
}

int cmd_complex(const std::string& seq_s, const OutputOptions& opts) {
  auto seq = rhc::parse_composition_sequence(seq_s);
  rhc::CochainComplex cx = rhc::build_ribbon_complex(seq);
  json report = report_header("complex");
  report["seq"] = json::array();
  for (const auto& c : seq) report["seq"].push_back(rhc::to_json(c));
  json terms = json::array();
  for (size_t d = 0; d < cx.terms.size(); ++d) {
    json summands = json::array();
    for (size_t s = 0; s < cx.terms[d].summands.size(); ++s) {
      json comps = json::array();
      for (const auto& c : cx.terms[d].summands[s].shape) comps.push_back(rhc::to_json(c));
      summands.push_back(json{{"glued_commas", cx.terms[d].index_sets[s]},
                              {"components", comps},
                              {"dim", cx.terms[d].summands[s].dim}});
    }
    terms.push_back(json{{"degree", d}, {"dim", cx.terms[d].dim}, {"summands", summands}});
  }
  report["terms"] = terms;
  std::vector<int> h = rhc::cohomology_dims(cx);
  report["cohomology_dims"] = h;
  rhc::MultiplicityVector h0 = rhc::h0_multiplicities(cx);
  report["h0_decomposition"] = rhc::to_json(h0);
  rhc::Composition full;
  for (const auto& c : seq) full = rhc::concat(full, c);
  bool acyclic = true;
  for (size_t i = 1; i < h.size(); ++i) acyclic = acyclic && h[i] == 0;
  bool h0_ok = h0 == rhc::MultiplicityVector{{full, 1}};
  bool euler_ok = rhc::euler_character_nsym(seq) == rhc::nsym_r(full);
  report["acyclic_in_positive_degrees"] = acyclic;
  report["h0_is_full_concatenation"] = h0_ok;
  report["euler_character_matches"] = euler_ok;
  bool pass = acyclic && h0_ok && euler_ok;
  report["pass"] = pass;
  emit(opts, report, report.dump(2) + "\n");
  return pass ? 0 : 1;
}

int cmd_nsym(const std::string& expr, OutputOptions opts) {
  opts.default_format = "text";
  Tokenizer tz{expr};
  rhc::NSymElem result = parse_nsym_expr(tz);
  tz.skip_ws();
  if (tz.pos != tz.text.size()) tz.fail("trailing characters");
  json report = report_header("nsym");
  report["input"] = expr;
  report["result"] = rhc::to_json(result);
  emit(opts, report, expr + " = " + rhc::nsym_str(result) + "\n");
  return 0;
}

int cmd_qsym(const std::string& expr, OutputOptions opts) {
  opts.default_format = "text";
  Tokenizer tz{expr};
  rhc::QSymElem result = parse_qsym_expr(tz);
  tz.skip_ws();
  if (tz.pos != tz.text.size()) tz.fail("trailing characters");
  json report = report_header("qsym");
  report["input"] = expr;
  report["result"] = rhc::to_json(result);
  emit(opts, report, expr + " = " + rhc::qsym_str(result) + "\n");
  return 0;
}

int cmd_skew(const std::string& alpha_s, const std::string& beta_s, const OutputOptions& opts) {
  rhc::Composition alpha = rhc::parse_composition(alpha_s);
  rhc::Composition beta = rhc::parse_composition(beta_s);
  json report = report_header("skew");
  report["alpha"] = rhc::to_json(alpha);
  report["beta"] = rhc::to_json(beta);

  // the generalized-ribbon stage exists for a single row or a single column
  bool is_row = beta.length() == 1;
  bool is_column = !beta.empty() && *std::max_element(beta.parts().begin(),
                                                      beta.parts().end()) == 1;
  if (beta.size() > 0 && beta.size() < alpha.size() && (is_row || is_column)) {
    rhc::GeneralizedMultiplicityVector stage =
        is_row ? rhc::skew_by_row(alpha, beta.size()) : rhc::skew_by_column(alpha, beta.size());
    report["generalized_ribbon_stage"] = rhc::to_json(stage);
  } else {
    report["generalized_ribbon_stage"] = nullptr;
  }

  rhc::SkewProjective s = rhc::build_skew(alpha, beta);
  report["dim"] = s.module.dim;
  report["decomposition"] = rhc::to_json(s.decomposition);
  bool ok = true;
  std::string check = "ch = perp(L_beta, R_alpha)";
  try {
    rhc::skew_character(s);
  } catch (const std::exception& e) {
    ok = false;
    check = e.what();
  }
  report["character_check"] = json{{"pass", ok}, {"detail", check}};
  emit(opts, report, report.dump(2) + "\n");
  return ok ? 0 : 1;
}

int cmd_branch(const std::string& alpha_s, const OutputOptions& opts) {
  rhc::Composition alpha = rhc::parse_composition(alpha_s);
  rhc::BranchingSES b = rhc::branching_ses(alpha);
  rhc::BranchReport r = rhc::verify_branching(b);
  json report = report_header("branch");
  report["alpha"] = rhc::to_json(alpha);
  json kernel = json::array(), cokernel = json::array();
  for (const auto& c : b.kernel_index) kernel.push_back(rhc::to_json(c));
  for (const auto& c : b.cokernel_index) cokernel.push_back(rhc::to_json(c));
  report["kernel_summands"] = kernel;
  report["cokernel_summands"] = cokernel;
  report["dims"] = json{{"kernel", b.kernel.dim},
                        {"restricted", b.restricted.dim},
                        {"cokernel", b.cokernel.dim}};
  report["pass"] = r.ok;
  report["failures"] = r.failures;
  emit(opts, report, report.dump(2) + "\n");
  return r.ok ? 0 : 1;
}

int cmd_koszul(int max_internal, int max_external, const OutputOptions& opts) {
  json report = report_header("koszul");
  report["max_internal"] = max_internal;
  report["max_external"] = max_external;
  bool all = true;
  json schur = json::array();
  for (int size = 1; size <= max_internal; ++size) {
    for (const auto& alpha : rhc::compositions_of(size)) {
      for (int n = 0; n <= max_external; ++n) {
        bool ok = true;
        std::string detail = "decomposition matches";
        try {
          rhc::ribbon_schur_module(alpha, n);
        } catch (const std::exception& e) {
          ok = false;
          detail = e.what();
          all = false;
        }
        schur.push_back(json{{"alpha", rhc::to_json(alpha)}, {"N", n}, {"pass", ok},
                             {"detail", detail}});
      }
    }
  }
  report["schur_modules"] = schur;
  json strands = json::array();
  for (int na = 1; na <= max_internal; ++na) {
    for (int nb = 1; nb <= max_internal; ++nb) {
      for (const auto& alpha : rhc::compositions_of(na)) {
        for (const auto& beta : rhc::compositions_of(nb)) {
          for (int n = 0; n <= max_external; ++n) {
            rhc::StrandReport r = rhc::verify_koszul_strand(alpha, beta, n);
            if (!r.ok) all = false;
            strands.push_back(json{{"alpha", rhc::to_json(alpha)},
                                   {"beta", rhc::to_json(beta)},
                                   {"N", n},
                                   {"pass", r.ok},
                                   {"failures", r.failures}});
          }
        }
      }
    }
  }
  report["strands"] = strands;
  report["pass"] = all;
  emit(opts, report, report.dump(2) + "\n");
  return all ? 0 : 1;
}

int cmd_verify_all(int max_n, int max_internal, int max_external, const OutputOptions& opts) {
  rhc::VerifyBounds bounds;
  if (max_n > 0) {
    bounds.relations_max_n = max_n;
    bounds.ses_max_total = max_n;
    bounds.complex_max_total = std::min(max_n, 6);
    bounds.nsym_roundtrip_max = max_n;
    bounds.nsym_transport_max = max_n;
    bounds.lprod_indep_max = std::min(max_n, 6);
    bounds.perp_adjoint_max = std::min(max_n, 6);
    bounds.skew_max_n = std::min(max_n, 6);
    bounds.branch_max_n = max_n;
    bounds.koszul_additivity_max = max_n;
    bounds.koszul_assoc_max = std::min(max_n, 6);
    bounds.generation_max_n = max_n;
  }
  if (max_internal > 0) bounds.koszul_internal_max = max_internal;
  if (max_external > 0) bounds.koszul_external_max = max_external;
  json report = rhc::run_verify_all(bounds);
  bool pass = report["all_pass"].get<bool>();
  std::ostringstream text;
  for (const auto& c : report["criteria"])
    text << (c["pass"].get<bool>() ? "[PASS] " : "[FAIL] ") << c["name"].get<std::string>()
         << "\n";
  text << (report["determinism"]["pass"].get<bool>() ? "[PASS] " : "[FAIL] ")
       << "determinism\n";
  emit(opts, report, text.str());
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ribbon tableaux, 0-Hecke modules, and NSym/QSym computations"};
  app.set_version_flag("--version", rhc::kVersion);
  app.require_subcommand(1);

  std::string shape, seq, alpha, beta, expr;
  OutputOptions opts;
  int max_n = 0, max_internal = 0, max_external = 0;

  auto add_output_flags = [&](CLI::App* cmd) {
    cmd->add_option("--format", opts.format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--out", opts.out_path, "write output to a file");
  };

  CLI::App* srt = app.add_subcommand("srt", "enumerate standard ribbon tableaux");
  srt->add_option("--shape", shape, "composition literal, e.g. \"(1,2,1)\"");
  srt->add_option("--seq", seq, "semicolon-separated components");
  add_output_flags(srt);

  CLI::App* module_cmd = app.add_subcommand("module", "emit a projective module");
  module_cmd->add_option("--shape", shape, "composition literal");
  module_cmd->add_option("--seq", seq, "semicolon-separated components");
  add_output_flags(module_cmd);

  CLI::App* ses = app.add_subcommand("ses", "build and verify a concatenation SES");
  ses->add_option("--alpha", alpha)->required();
  ses->add_option("--beta", beta)->required();
  add_output_flags(ses);

  CLI::App* complex_cmd = app.add_subcommand("complex", "build and verify a ribbon complex");
  complex_cmd->add_option("--seq", seq, "e.g. \"(2);(1,2);(2,1);(1)\"")->required();
  add_output_flags(complex_cmd);

  CLI::App* nsym = app.add_subcommand("nsym", "evaluate an NSym expression");
  nsym->add_option("expr", expr, "e.g. \"R(3,2)*R(3,1,1)\" or \"perp L(1) R(2,2,1)\"")
      ->required();
  add_output_flags(nsym);

  CLI::App* qsym = app.add_subcommand("qsym", "evaluate a QSym expression");
  qsym->add_option("expr", expr, "e.g. \"L(2)*L(1,1)\"")->required();
  add_output_flags(qsym);

  CLI::App* skew = app.add_subcommand("skew", "skew projective module");
  skew->add_option("--alpha", alpha)->required();
  skew->add_option("--beta", beta)->required();
  add_output_flags(skew);

  CLI::App* branch = app.add_subcommand("branch", "one-box branching SES");
  branch->add_option("--alpha", alpha)->required();
  add_output_flags(branch);

  CLI::App* koszul = app.add_subcommand("koszul", "Koszul strand verification matrix");
  koszul->add_option("--max-internal", max_internal)->default_val(3);
  koszul->add_option("--max-external", max_external)->default_val(6);
  add_output_flags(koszul);

  CLI::App* verify = app.add_subcommand("verify-all", "run every verification suite");
  verify->add_option("--max-n", max_n, "override the size bounds");
  verify->add_option("--max-internal", max_internal, "internal Koszul bound");
  verify->add_option("--max-external", max_external, "external Koszul bound");
  add_output_flags(verify);

  CLI11_PARSE(app, argc, argv);

  try {
    if (srt->parsed()) return cmd_srt(shape, seq, opts);
    if (module_cmd->parsed()) return cmd_module(shape, seq, opts);
    if (ses->parsed()) return cmd_ses(alpha, beta, opts);
    if (complex_cmd->parsed()) return cmd_complex(seq, opts);
    if (nsym->parsed()) return cmd_nsym(expr, opts);
    if (qsym->parsed()) return cmd_qsym(expr, opts);
    if (skew->parsed()) return cmd_skew(alpha, beta, opts);
    if (branch->parsed()) return cmd_branch(alpha, opts);
    if (koszul->parsed()) return cmd_koszul(max_internal, max_external, opts);
    if (verify->parsed()) return cmd_verify_all(max_n, max_internal, max_external, opts);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
