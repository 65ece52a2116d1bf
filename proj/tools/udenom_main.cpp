// Command-line front end: universal denominators of Hilbert series for
// invariant rings of finite groups, torus actions, and SL2 on binary forms.
//
// Exit codes: 0 success; 2 input/usage error; 3 resource bound exceeded;
// 4 consistency failure (including Galois-unstable eigenvalue data);
// 5 built-in report found a mismatch; 1 unexpected internal error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "udenom/binary_forms.hpp"
#include "udenom/cyclo.hpp"
#include "udenom/degree.hpp"
#include "udenom/errors.hpp"
#include "udenom/json_io.hpp"
#include "udenom/molien.hpp"
#include "udenom/rational.hpp"
#include "udenom/sparse_poly.hpp"
#include "udenom/torus.hpp"

namespace {

using json = nlohmann::json;
using namespace udenom;

std::string read_input(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file: " + path);
    buffer << in.rdbuf();
  }
  return buffer.str();
}

// Factored-value arguments accept inline JSON (starting with '{') or a path.
std::string read_factored_arg(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') return arg;
  return read_input(arg);
}

DegreeVector parse_degree(const std::string& text) {
  DegreeVector out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stoll(item, &pos));
      if (pos != item.size()) throw ParseError("invalid degree entry: " + item);
    } catch (const std::logic_error&) {
      throw ParseError("invalid degree entry: " + item);
    }
  }
  if (out.empty()) throw ParseError("empty degree vector");
  for (long long e : out)
    if (e < 0) throw ParseError("degree entries must be nonnegative");
  bool nonzero = false;
  for (long long e : out) nonzero |= e > 0;
  if (!nonzero) throw ParseError("degree vector must be nonzero");
  return out;
}

std::string dense_to_string(const std::vector<Int>& coeffs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) os << ' ';
    os << coeffs[i].get_str();
  }
  return os.str();
}

CycloFactored make_factored(const std::vector<std::pair<long long, long long>>& exps) {
  CycloFactored f;
  for (const auto& [d, e] : exps) f.multiply_by({d}, e);
  return f;
}

std::vector<std::string> evidence_lines(const Rank1Evidence& ev) {
  std::vector<std::string> lines;
  lines.push_back("m_1 = " + std::to_string(ev.m1));
  for (const auto& [d, classes] : ev.classes) {
    std::ostringstream os;
    os << "(d=" << d << ")";
    for (const auto& [lambda, modulus, count] : classes)
      os << ' ' << lambda << '+' << modulus << "Z:" << count;
    os << " => m_" << d << " = " << ev.m.at(d);
    lines.push_back(os.str());
  }
  return lines;
}

// --- finite ---------------------------------------------------------------

void run_finite(const std::string& input, long long bound, const std::string& output,
                long long order) {
  const GroupSpec spec = group_spec_from_json(read_input(input));
  const auto classes = group_classes(spec, bound);
  const CycloFactored udenom_value = udenom_finite_classes(classes);
  const RationalFn molien = molien_series_classes(classes);
  const bool equal = molien.denominator == udenom_value;
  const CycloFactored gap = factored_quotient(udenom_value, molien.denominator);

  if (output == "json") {
    json doc{{"schema", 1},
             {"udenom", json::parse(factored_to_json(udenom_value))},
             {"molien", json::parse(rational_to_json(molien))},
             {"comparison", equal ? "equal" : "proper-divisor"},
             {"gap", json::parse(factored_to_json(gap))}};
    std::cout << doc.dump() << "\n";
    return;
  }
  std::cout << "udenom = " << udenom_value.to_string() << "\n";
  std::cout << "molien = " << molien.to_string() << "\n";
  std::cout << "denom(H) = " << molien.denominator.to_string() << "\n";
  if (equal)
    std::cout << "comparison = equal\n";
  else
    std::cout << "comparison = proper divisor; gap = " << gap.to_string() << "\n";
  if (output == "coeffs")
    std::cout << "series = " << dense_to_string(series_expand(molien, order)) << "\n";
}

// --- torus ----------------------------------------------------------------

void run_torus(const std::string& input, int subset_bound, bool force_general,
               const std::string& output) {
  const WeightSystem ws = weight_system_from_json(read_input(input));
  bool rank1 = !force_general && ws.l == 1 && ws.r == 1;
  if (rank1)
    for (const auto& d : ws.degrees) rank1 &= d == DegreeVector{1};

  CycloFactored udenom_value;
  Rank1Evidence ev;
  if (rank1) {
    std::vector<long long> weights;
    weights.reserve(ws.size());
    for (const auto& w : ws.weights) weights.push_back(w.front());
    udenom_value = torus_udenom_rank1(weights, &ev);
  } else {
    udenom_value = torus_udenom_general(ws, subset_bound);
  }

  if (output == "json") {
    std::cout << factored_to_json(udenom_value) << "\n";
    return;
  }
  std::cout << "method = " << (rank1 ? "rank-1 residue classes" : "subset enumeration")
            << "\n";
  if (rank1)
    for (const auto& line : evidence_lines(ev)) std::cout << line << "\n";
  std::cout << "udenom = " << udenom_value.to_string() << "\n";
  if (output == "coeffs") {
    if (udenom_value.arity() == 1)
      std::cout << "coeffs = " << dense_to_string(udenom_value.expand().to_dense()) << "\n";
    else
      std::cout << "expanded = " << udenom_value.expand().to_string() << "\n";
  }
}

// --- binary-forms -----------------------------------------------------------

void print_factored_result(const CycloFactored& value, const std::string& output) {
  if (output == "json") {
    std::cout << factored_to_json(value) << "\n";
    return;
  }
  std::cout << "udenom = " << value.to_string() << "\n";
  if (output == "coeffs")
    std::cout << "coeffs = " << dense_to_string(value.expand().to_dense()) << "\n";
}

void run_binary_forms(long long n, const std::string& method, const std::string& output) {
  if (n < 3) throw ParseError("binary-forms: n must be >= 3");
  if (method == "torus") {
    print_factored_result(sl2_udenom_via_torus(n), output);
    return;
  }
  if (method == "closed") {
    print_factored_result(dixmier_closed(n), output);
    return;
  }
  const BinaryFormsReport report = binary_forms_report(n);
  if (output == "json") {
    json doc{{"schema", 1},
             {"via_torus", json::parse(factored_to_json(report.via_torus))},
             {"closed", json::parse(factored_to_json(report.closed))},
             {"torus_full", json::parse(factored_to_json(report.torus_full))},
             {"methods_equal", report.methods_equal},
             {"divides_torus", report.divides_torus}};
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << "via-torus = " << report.via_torus.to_string() << "\n";
    std::cout << "closed = " << report.closed.to_string() << "\n";
    std::cout << "torus-full = " << report.torus_full.to_string() << "\n";
    std::cout << "equal = " << (report.methods_equal ? "true" : "false") << "\n";
    std::cout << "divides-torus = " << (report.divides_torus ? "true" : "false") << "\n";
    if (output == "coeffs")
      std::cout << "coeffs = " << dense_to_string(report.via_torus.expand().to_dense())
                << "\n";
  }
  if (!report.methods_equal)
    throw ConsistencyError("torus pipeline and closed form disagree at n = " +
                           std::to_string(n));
  if (!report.divides_torus)
    throw ConsistencyError("result does not divide the maximal-torus value at n = " +
                           std::to_string(n));
}

// --- cyclo ------------------------------------------------------------------

void print_poly_result(const SparsePoly& poly, const std::string& output) {
  if (output == "json") {
    std::cout << rational_to_json(RationalFn{poly, {}}) << "\n";
    return;
  }
  if (output == "coeffs" && poly.arity() == 1) {
    std::cout << dense_to_string(poly.to_dense()) << "\n";
    return;
  }
  std::cout << poly.to_string() << "\n";
}

void print_factored_bare(const CycloFactored& value, const std::string& output) {
  if (output == "json") {
    std::cout << factored_to_json(value) << "\n";
    return;
  }
  if (output == "coeffs" && value.arity() == 1) {
    std::cout << dense_to_string(value.expand().to_dense()) << "\n";
    return;
  }
  std::cout << value.to_string() << "\n";
}

// --- paper-report ------------------------------------------------------------

struct ReportState {
  int passed = 0;
  int failed = 0;

  void check(bool ok, const std::string& label) {
    std::cout << (ok ? "ok: " : "MISMATCH: ") << label << "\n";
    if (ok)
      ++passed;
    else
      ++failed;
  }
  void note(const std::string& text) { std::cout << "note: " << text << "\n"; }
  void section(const std::string& title) { std::cout << "= " << title << " =\n"; }
};

// Fault injection for the self-test documented in the README: pretend the
// phi_6 data is corrupted, so exactly the phi_6-dependent report items fail.
CycloFactored drop_phi6(CycloFactored f, bool fault) {
  if (!fault) return f;
  const long long e = f.exponent_of_degree({6});
  if (e > 0) f.multiply_by({6}, -e);
  return f;
}

int run_paper_report(bool corrupt_phi6) {
  ReportState rs;

  rs.section("vector arithmetic");
  rs.check(vec_lcm({4, 2}, {6, 3}) == DegreeVector{12, 6}, "lcm((4,2),(6,3)) = (12,6)");
  rs.check(vec_lcm({4, 2}, {2, 2}) == DegreeVector{0, 0},
           "lcm((4,2),(2,2)) = (0,0), no common multiple");

  rs.section("cyclotomic expansion");
  {
    SparsePoly phi6 = cyclo_expand(6, {1});
    if (corrupt_phi6) {
      phi6 = SparsePoly::one(1);
      phi6.add_term({1}, -1);
      phi6.add_term({3}, 1);  // deliberately wrong tail
    }
    rs.check(phi6.to_string() == "1 - t + t^2", "phi_6 = 1 - t + t^2");
  }

  rs.section("rational reduction");
  {
    SparsePoly one_plus_t = SparsePoly::one(1);
    one_plus_t.add_term({1}, 1);
    rs.check(reduce_rational(one_plus_t, factor_one_minus({2})) ==
                 RationalFn{SparsePoly::one(1), make_factored({{1, 1}})},
             "(1+t)/(1-t^2) reduces to (1) / phi_1");
    const SparsePoly t = SparsePoly::monomial(1, {1});
    const RationalFn unreduced{t, factor_one_minus({2})};
    rs.check(reduce_rational(t, factor_one_minus({2})) == unreduced,
             "t/(1-t^2) is already fully reduced");
    rs.check(series_expand(RationalFn{one_plus_t, factor_one_minus({2})}, 4) ==
                 std::vector<Int>({1, 1, 1, 1, 1}),
             "series of (1+t)/(1-t^2) to order 4 = 1 1 1 1 1");
  }

  rs.section("symmetric groups");
  {
    const auto classes = group_classes(FamilySpec{Family::Symmetric, 3});
    const CycloFactored ud = udenom_finite_classes(classes);
    const RationalFn molien = molien_series_classes(classes);
    rs.check(ud == make_factored({{1, 3}, {2, 1}, {3, 1}}),
             "udenom(Sym_3) = phi_1^3 phi_2 phi_3, i.e. (1-t)(1-t^2)(1-t^3)");
    rs.check(molien == RationalFn{SparsePoly::one(1), make_factored({{1, 3}, {2, 1}, {3, 1}})},
             "molien(Sym_3) = (1) / phi_1^3 phi_2 phi_3");
    rs.check(molien.denominator == ud, "denom(H(Sym_3)) equals udenom(Sym_3)");
  }

  rs.section("alternating group on 10 points");
  {
    const CycloFactored expected_udenom = make_factored(
        {{1, 10}, {2, 4}, {3, 3}, {4, 2}, {5, 2}, {6, 1}, {7, 1}, {8, 1}, {9, 1}});
    const CycloFactored expected_denom =
        make_factored({{1, 10}, {2, 4}, {3, 3}, {4, 2}, {5, 2}, {7, 1}, {8, 1}, {9, 1}});
    const CycloFactored ud =
        drop_phi6(udenom_finite(FamilySpec{Family::Alternating, 10}), corrupt_phi6);
    const CycloFactored denom = alt_denom_closed(10);
    rs.check(ud == expected_udenom,
             "udenom(Alt_10) = phi_1^10 phi_2^4 phi_3^3 phi_4^2 phi_5^2 phi_6 phi_7 "
             "phi_8 phi_9");
    rs.check(denom == expected_denom,
             "denom(H(Alt_10)) = phi_1^10 phi_2^4 phi_3^3 phi_4^2 phi_5^2 phi_7 phi_8 "
             "phi_9 (no phi_6)");
    rs.check(factored_divides(denom, ud) && factored_quotient(ud, denom) ==
                                                make_factored({{6, 1}}),
             "udenom(Alt_10) / denom(H(Alt_10)) = phi_6 exactly");
  }
  {
    SparsePoly expected_num = SparsePoly::one(1);
    expected_num.add_term({1}, -1);
    expected_num.add_term({2}, 1);
    const RationalFn h3 = alt_hilbert_closed(3);
    rs.check(h3 == RationalFn{expected_num, make_factored({{1, 3}, {3, 1}})},
             "hilbert(Alt_3): (1+t^3)/((1-t)(1-t^2)(1-t^3)) reduces to "
             "(1 - t + t^2) / phi_1^3 phi_3");
    rs.check(molien_series_classes(group_classes(FamilySpec{Family::Alternating, 3})) == h3,
             "molien(Alt_3) equals the closed-form Hilbert series");
  }

  rs.section("rank-1 torus example: weights -3 -2 2 5 6");
  {
    const std::vector<long long> weights{-3, -2, 2, 5, 6};
    Rank1Evidence ev;
    const CycloFactored fast = torus_udenom_rank1(weights, &ev);
    for (const auto& line : evidence_lines(ev)) std::cout << line << "\n";
    const CycloFactored expected =
        make_factored({{1, 4}, {2, 2}, {3, 1}, {4, 1}, {5, 1}, {7, 1}, {8, 1}});
    rs.check(fast == expected,
             "udenom = phi_1^4 phi_2^2 phi_3 phi_4 phi_5 phi_7 phi_8 (residue classes)");
    WeightSystem ws;
    ws.l = 1;
    ws.r = 1;
    for (long long w : weights) {
      ws.weights.push_back({w});
      ws.degrees.push_back({1});
    }
    rs.check(torus_udenom_general(ws) == expected,
             "general subset enumeration gives the same value");
    const std::vector<std::tuple<long long, long long, long long>> expected_d2{
        {1, 2, 2}, {2, 4, 3}};
    rs.check(ev.classes.count(2) == 1 && ev.classes.at(2) == expected_d2 &&
                 ev.m.at(2) == 2,
             "d=2 qualifying classes are 1+2Z:2 and 2+4Z:3, so m_2 = 2");
    rs.check(ev.classes.count(6) == 0, "d=6 has no qualifying class");
    rs.note(
        "3+6Z is not a qualifying d=2 class: it meets the weights only in {-3} "
        "(size 1, no positive member), so the sign rule excludes it.");
    rs.note(
        "at d=4 the qualifying modulus-8 class is 6+8Z = {-2, 6}; 2+8Z meets "
        "only {2}, which has no negative member, so it does not qualify.");
  }

  rs.section("binary torus closed forms");
  {
    const CycloFactored d3 =
        factored_mul(factored_mul(factor_one_minus({2}), factor_one_minus({2})),
                     factor_one_minus({4}));
    rs.check(binary_torus_udenom_closed(3) == d3 && binary_forms_torus_udenom(3) == d3,
             "n=3: (1-t^2)^2(1-t^4), matching the residue-class enumeration");
    CycloFactored d5 = factored_mul(factor_one_minus({2}), factor_one_minus({2}));
    for (long long k : {4, 6, 8}) d5 = factored_mul(d5, factor_one_minus({k}));
    rs.check(binary_torus_udenom_closed(5) == d5 && binary_forms_torus_udenom(5) == d5,
             "n=5: (1-t^2)^2(1-t^4)(1-t^6)(1-t^8), matching the enumeration");
    CycloFactored d6 = factor_one_minus({2});
    for (long long k : {1, 2, 3, 4, 5}) d6 = factored_mul(d6, factor_one_minus({k}));
    rs.check(binary_torus_udenom_closed(6) == d6 && binary_forms_torus_udenom(6) == d6,
             "n=6: (1-t)(1-t^2)^2(1-t^3)(1-t^4)(1-t^5), matching the enumeration");
  }

  rs.section("binary forms under SL2");
  {
    rs.check(sl2_udenom_via_torus(3) == make_factored({{1, 1}, {2, 1}, {4, 1}}) &&
                 dixmier_closed(3) == make_factored({{1, 1}, {2, 1}, {4, 1}}),
             "n=3: via-torus = closed = phi_1 phi_2 phi_4, i.e. (1-t^4)");
    CycloFactored d5;
    for (long long k : {4, 6, 8}) d5 = factored_mul(d5, factor_one_minus({k}));
    rs.check(dixmier_closed(5) == d5, "n=5: closed = (1-t^4)(1-t^6)(1-t^8)");
    CycloFactored d6 = CycloFactored::power({2}, 1);
    for (long long k : {2, 3, 4, 5}) d6 = factored_mul(d6, factor_one_minus({k}));
    rs.check(sl2_udenom_via_torus(6) == d6 && dixmier_closed(6) == d6,
             "n=6: via-torus = closed = (1+t)(1-t^2)(1-t^3)(1-t^4)(1-t^5)");
    CycloFactored d8 = CycloFactored::power({2}, 1);
    for (long long k : {2, 3, 4, 5, 3, 7}) d8 = factored_mul(d8, factor_one_minus({k}));
    rs.check(sl2_udenom_via_torus(8) == d8 && dixmier_closed(8) == d8,
             "n=8: via-torus = closed = (1+t)(1-t^2)(1-t^3)(1-t^4)(1-t^5)(1-t^3)(1-t^7)");
    CycloFactored d10 = CycloFactored::power({2}, 1);
    for (long long k = 2; k <= 9; ++k) d10 = factored_mul(d10, factor_one_minus({k}));
    rs.check(dixmier_closed(10) == d10, "n=10: closed = (1+t)(1-t^2)(1-t^3)...(1-t^9)");
    bool all_equal = true;
    bool all_divide = true;
    for (long long n = 3; n <= 16; ++n) {
      const BinaryFormsReport rep = binary_forms_report(n);
      all_equal &= rep.methods_equal;
      all_divide &= rep.divides_torus;
    }
    rs.check(all_equal, "n=3..16: torus pipeline equals the closed form");
    rs.check(all_divide, "n=3..16: result divides the maximal-torus value");
  }

  rs.section("summary");
  std::cout << rs.passed << " checks passed, " << rs.failed << " failed\n";
  return rs.failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Universal denominators of Hilbert series for invariant rings "
      "(finite groups, torus actions, binary forms)"};
  app.require_subcommand(1);

  const std::vector<std::string> output_modes{"factored", "json", "coeffs"};

  // finite
  auto* finite = app.add_subcommand(
      "finite", "Universal denominator and exact Molien series of a finite group");
  std::string finite_input = "-";
  long long finite_bound = kDefaultElementBound;
  std::string finite_output = "factored";
  long long finite_order = 12;
  finite->add_option("input", finite_input, "group description JSON (path or - for stdin)");
  finite->add_option("--bound", finite_bound, "element enumeration limit");
  finite->add_option("--output", finite_output, "output form")
      ->check(CLI::IsMember(output_modes));
  finite->add_option("--order", finite_order, "series truncation order for --output coeffs")
      ->check(CLI::NonNegativeNumber);

  // torus
  auto* torus = app.add_subcommand(
      "torus", "Universal denominator of a diagonal torus action");
  std::string torus_input = "-";
  int torus_bound = kDefaultSubsetBound;
  bool torus_general = false;
  std::string torus_output = "factored";
  torus->add_option("input", torus_input, "weight system JSON (path or - for stdin)");
  torus->add_option("--bound", torus_bound, "subset enumeration limit on n");
  torus->add_flag("--general", torus_general,
                  "force the subset algorithm even when the rank-1 path applies");
  torus->add_option("--output", torus_output, "output form")
      ->check(CLI::IsMember(output_modes));

  // binary-forms
  auto* binary = app.add_subcommand(
      "binary-forms", "Universal denominator for SL2 acting on binary forms of degree n");
  long long binary_n = 0;
  std::string binary_method = "both";
  std::string binary_output = "factored";
  binary->add_option("n", binary_n, "degree of the binary forms")->required();
  binary->add_option("--method", binary_method, "computation method")
      ->check(CLI::IsMember({"torus", "closed", "both"}));
  binary->add_option("--output", binary_output, "output form")
      ->check(CLI::IsMember(output_modes));

  // cyclo
  auto* cyclo = app.add_subcommand("cyclo", "Cyclotomic-factored arithmetic for scripting");
  cyclo->require_subcommand(1);
  auto* cyclo_expand_cmd = cyclo->add_subcommand("expand", "expand phi_k(t^p)");
  long long expand_k = 0;
  std::string expand_direction = "1";
  std::string expand_output = "factored";
  cyclo_expand_cmd->add_option("k", expand_k, "cyclotomic order")->required();
  cyclo_expand_cmd->add_option("--direction", expand_direction,
                               "primitive direction p as comma-separated entries");
  cyclo_expand_cmd->add_option("--output", expand_output, "output form")
      ->check(CLI::IsMember(output_modes));
  auto* cyclo_factor_cmd =
      cyclo->add_subcommand("factor", "factor 1 - t^d into cyclotomics");
  std::string factor_degree;
  std::string factor_output = "factored";
  cyclo_factor_cmd->add_option("degree", factor_degree, "degree vector, e.g. 6 or 4,2")
      ->required();
  cyclo_factor_cmd->add_option("--output", factor_output, "output form")
      ->check(CLI::IsMember(output_modes));
  auto* cyclo_lcm_cmd = cyclo->add_subcommand("lcm", "exponentwise max of two factored values");
  auto* cyclo_gcd_cmd = cyclo->add_subcommand("gcd", "exponentwise min of two factored values");
  std::string lcm_a, lcm_b, gcd_a, gcd_b;
  std::string lcm_output = "factored", gcd_output = "factored";
  cyclo_lcm_cmd->add_option("a", lcm_a, "factored JSON (inline or path)")->required();
  cyclo_lcm_cmd->add_option("b", lcm_b, "factored JSON (inline or path)")->required();
  cyclo_lcm_cmd->add_option("--output", lcm_output, "output form")
      ->check(CLI::IsMember(output_modes));
  cyclo_gcd_cmd->add_option("a", gcd_a, "factored JSON (inline or path)")->required();
  cyclo_gcd_cmd->add_option("b", gcd_b, "factored JSON (inline or path)")->required();
  cyclo_gcd_cmd->add_option("--output", gcd_output, "output form")
      ->check(CLI::IsMember(output_modes));

  // paper-report
  auto* report = app.add_subcommand(
      "paper-report", "Recompute the bundled worked examples and verify each one");
  bool corrupt_phi6 = false;
  report
      ->add_flag("--corrupt-phi6", corrupt_phi6,
                 "fault-injection self-test: corrupt the phi_6 data so dependent "
                 "items fail")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*finite) {
      run_finite(finite_input, finite_bound, finite_output, finite_order);
    } else if (*torus) {
      run_torus(torus_input, torus_bound, torus_general, torus_output);
    } else if (*binary) {
      run_binary_forms(binary_n, binary_method, binary_output);
    } else if (*cyclo) {
      if (*cyclo_expand_cmd)
        print_poly_result(cyclo_expand(expand_k, parse_degree(expand_direction)),
                          expand_output);
      else if (*cyclo_factor_cmd)
        print_factored_bare(factor_one_minus(parse_degree(factor_degree)), factor_output);
      else if (*cyclo_lcm_cmd)
        print_factored_bare(factored_lcm(factored_from_json(read_factored_arg(lcm_a)),
                                         factored_from_json(read_factored_arg(lcm_b))),
                            lcm_output);
      else if (*cyclo_gcd_cmd)
        print_factored_bare(factored_gcd(factored_from_json(read_factored_arg(gcd_a)),
                                         factored_from_json(read_factored_arg(gcd_b))),
                            gcd_output);
    } else if (*report) {
      return run_paper_report(corrupt_phi6) == 0 ? 0 : 5;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BoundError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const GaloisUnstableError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const ConsistencyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
