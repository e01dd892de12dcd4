#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "nilfix/free_lie.hpp"
#include "nilfix/hall_basis.hpp"
#include "nilfix/induced.hpp"
#include "nilfix/reidemeister.hpp"
#include "nilfix/roots.hpp"
#include "nilfix/spectrum.hpp"

namespace nilfix::cli {

namespace {

using json = nlohmann::json; // map-backed: keys sorted, output byte-stable

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos)
    return "";
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

BigInt parse_bigint(const std::string& token) {
  const std::string t = trim(token);
  if (t.empty())
    throw std::invalid_argument("empty integer token");
  std::size_t start = (t[0] == '+' || t[0] == '-') ? 1 : 0;
  if (start == t.size())
    throw std::invalid_argument("bad integer '" + t + "'");
  for (std::size_t i = start; i < t.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(t[i])))
      throw std::invalid_argument("bad integer '" + t + "'");
  return BigInt(t);
}

std::string method_name(DetMethod m) {
  return m == DetMethod::structural ? "structural" : "trace";
}

json report_json(const ReidemeisterReport& report, const std::string& method_label) {
  json j;
  j["input"] = report.input;
  j["r"] = report.r;
  j["c"] = report.c;
  j["layer_dims"] = report.layers.dims;
  json dets = json::array();
  for (const BigInt& d : report.layers.dets)
    dets.push_back(d.str());
  j["layer_dets"] = std::move(dets);
  j["value"] = report.value.to_string();
  j["method"] = method_label;
  if (report.oracle_value)
    j["oracle_value"] = *report.oracle_value;
  return j;
}

void print_report(std::ostream& out, const ReidemeisterReport& report,
                  const std::string& method_label) {
  out << "input: " << report.input << "\n";
  out << "r: " << report.r << "  c: " << report.c << "  mode: "
      << (report.mode == Mode::automorphism ? "automorphism" : "endomorphism")
      << "  method: " << method_label << "\n";
  out << "layer dims:";
  for (auto d : report.layers.dims)
    out << " " << d;
  out << "\nlayer dets:";
  for (const auto& d : report.layers.dets)
    out << " " << d.str();
  out << "\nvalue: " << report.value.to_string() << "\n";
  if (report.oracle_value)
    out << "oracle: " << *report.oracle_value << "\n";
}

// ---------------------------------------------------------------- hall ----

int cmd_hall(std::ostream& out, int r, int c, bool as_json) {
  const HallBasis basis(r, c);
  if (as_json) {
    json layers = json::array();
    for (int i = 1; i <= c; ++i) {
      json layer = json::array();
      for (const HallElement& el : basis.layer(i)) {
        json e;
        e["index"] = el.order_index;
        e["expr"] = basis.expr(el.order_index);
        e["degree"] = el.degree;
        e["multidegree"] = el.multidegree;
        layer.push_back(std::move(e));
      }
      layers.push_back(std::move(layer));
    }
    json j;
    j["r"] = r;
    j["c"] = c;
    j["layers"] = std::move(layers);
    json witt = json::array();
    for (int i = 1; i <= c; ++i)
      witt.push_back(witt_dimension(r, i));
    j["witt"] = std::move(witt);
    out << j.dump() << "\n";
    return 0;
  }
  out << "Hall basis, r=" << r << ", c=" << c << "\n";
  for (int i = 1; i <= c; ++i) {
    out << "layer " << i << " (dim " << basis.layer_size(i) << ", witt " << witt_dimension(r, i)
        << "):\n";
    for (const HallElement& el : basis.layer(i)) {
      out << "  " << el.order_index << "  " << basis.expr(el.order_index) << "  multidegree (";
      for (int g = 0; g < r; ++g)
        out << (g ? "," : "") << el.multidegree[static_cast<std::size_t>(g)];
      out << ")\n";
    }
  }
  out << "total " << basis.size() << " elements\n";
  return 0;
}

// -------------------------------------------------------------- layers ----

int cmd_layers(std::ostream& out, std::ostream& err, const std::string& path, int c,
               const std::string& method) {
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("cannot open matrix file '" + path + "'");
  const IntegerMatrix a = read_matrix(in);
  const int r = static_cast<int>(a.rows());
  if (r < 2)
    throw std::domain_error("layer computation requires rank >= 2");

  FreeLieAlgebra alg{HallBasis(r, c)};
  std::optional<LayerDeterminants> structural, trace;
  if (method == "structural" || method == "both")
    structural = layer_dets_structural(alg, a);
  if (method == "trace" || method == "both")
    trace = layer_dets_trace(alg, a);

  if (structural && trace && structural->dets != trace->dets) {
    err << "error: structural and trace determinants disagree\n";
    return 1;
  }
  const LayerDeterminants& dets = structural ? *structural : *trace;
  out << "r: " << r << "  c: " << c << "  method: " << method << "\n";
  for (int i = 1; i <= c; ++i)
    out << "layer " << i << ": dim " << dets.dims[static_cast<std::size_t>(i - 1)]
        << ", det(1 - M_" << i << ") = " << dets.dets[static_cast<std::size_t>(i - 1)].str()
        << "\n";
  if (structural && trace)
    out << "methods agree\n";
  return 0;
}

// ------------------------------------------------------------- compute ----

int cmd_compute(std::ostream& out, std::ostream& err, const std::string& poly_text,
                const std::string& matrix_path, int c, const std::string& mode_name,
                const std::string& method, bool with_oracle, bool as_json) {
  if (poly_text.empty() == matrix_path.empty())
    throw std::invalid_argument("provide exactly one of --poly and --matrix");
  const Mode mode = mode_name == "auto" ? Mode::automorphism : Mode::endomorphism;

  std::optional<IntPolynomial> poly;
  std::optional<IntegerMatrix> matrix;
  std::string input;
  if (!poly_text.empty()) {
    poly = parse_polynomial(poly_text);
    input = poly->to_string();
  } else {
    std::ifstream in(matrix_path);
    if (!in)
      throw std::invalid_argument("cannot open matrix file '" + matrix_path + "'");
    matrix = read_matrix(in);
    input = "matrix " + matrix_path;
  }
  const int r = poly ? poly->degree() : static_cast<int>(matrix->rows());

  const ReidemeisterEngine engine(r, c);
  auto run_method = [&](DetMethod m) {
    return poly ? engine.compute(*poly, mode, m) : engine.compute(*matrix, mode, m);
  };

  ReidemeisterReport report = run_method(DetMethod::structural);
  std::string method_label = method;
  if (method == "trace") {
    report = run_method(DetMethod::trace);
  } else if (method == "both") {
    const ReidemeisterReport trace = run_method(DetMethod::trace);
    if (trace.layers.dets != report.layers.dets) {
      err << "error: structural and trace determinants disagree\n";
      return 1;
    }
  } else {
    method_label = "structural";
  }
  report.input = input;

  if (with_oracle) {
    const IntPolynomial p = poly ? *poly : characteristic_polynomial(*matrix);
    report.oracle_value = float_oracle(p, c);
  }

  if (as_json)
    out << report_json(report, method_label).dump() << "\n";
  else
    print_report(out, report, method_label);
  return 0;
}

// -------------------------------------------------------------- family ----

int cmd_family(std::ostream& out, const std::string& kind, int m, long long n, int c) {
  IntPolynomial p({0, 1});
  std::optional<BigInt> predicted;
  std::string scope_note;

  if (kind == "even") {
    if (c != 2)
      throw std::domain_error("the even family prediction is stated at c = 2");
    p = family_even(m, n);
    predicted = n; // p(1) = n and the degree-2 layer contributes 1
  } else if (kind == "odd") {
    if (c != 2)
      throw std::domain_error("the odd family prediction is stated at c = 2");
    p = family_odd(m, n);
    if (n >= 1)
      predicted = BigInt(n) + c_offset(m);
    else
      scope_note = "theorem covers n >= 1";
  } else if (kind == "q2") {
    p = family_q2(n);
    if (c == 2) {
      if (n >= 1)
        predicted = BigInt(2) * n;
      else
        scope_note = "theorem covers n >= 1";
    } else if (c == 3) {
      if (n >= 1)
        predicted = BigInt(2) * n * n;
      else
        scope_note = "theorem covers n >= 1";
    } else {
      throw std::domain_error("q2 predictions are stated at c = 2 and c = 3");
    }
  } else if (kind == "q3") {
    if (c != 2)
      throw std::domain_error("the q3 prediction is stated at c = 2");
    p = family_q3(n);
    if (n >= 0)
      predicted = BigInt(2) * n + 1;
    else
      scope_note = "theorem covers n >= 0";
  } else { // r3
    if (c != 2)
      throw std::domain_error("the r3 prediction is stated at c = 2");
    p = family_r3(n);
    if (n >= 1)
      predicted = BigInt(4) * n;
    else
      scope_note = "theorem covers n >= 1";
  }

  const ReidemeisterValue computed = reidemeister_number(p, c, Mode::automorphism).value;

  out << "polynomial: " << p.to_string() << "\n";
  out << "kind: " << kind << " (m=" << m << ", n=" << n << "), c=" << c << "\n";
  if (predicted)
    out << "predicted: " << predicted->str() << "\n";
  else
    out << "predicted: n/a (" << scope_note << ")\n";
  out << "computed: " << computed.to_string() << "\n";
  if (!predicted) {
    out << "verdict: OUT-OF-THEOREM-SCOPE\n";
    return 0;
  }
  const bool match = !computed.is_infinite() && computed.value() == *predicted;
  out << "verdict: " << (match ? "MATCH" : "MISMATCH") << "\n";
  return match ? 0 : 1;
}

// ---------------------------------------------------------------- scan ----

void write_scan_csv(const SpectrumScan& scan, const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out)
    throw std::invalid_argument("cannot open output file '" + path + "'");
  out << "value";
  for (int i = 0; i <= scan.params.r; ++i)
    out << ",witness_a" << i;
  out << "\n";
  for (const auto& [value, witness] : scan.values) {
    out << value.str();
    for (const auto& coeff : witness)
      out << "," << coeff.str();
    out << "\n";
  }
}

void write_scan_json(const SpectrumScan& scan, const std::string& path) {
  json j;
  j["r"] = scan.params.r;
  j["c"] = scan.params.c;
  j["bound"] = scan.params.bound;
  j["max_value"] = scan.params.max_value ? json(scan.params.max_value->str()) : json(nullptr);
  j["source"] = scan.params.source == ScanSource::engine ? "engine" : "closed_form";
  j["checkpoint"] = scan.checkpoint;
  j["total_tuples"] = scan.total_tuples;
  j["complete"] = scan.complete();
  json values = json::array();
  for (const auto& [value, witness] : scan.values) {
    json v;
    v["value"] = value.str();
    json w = json::array();
    for (const auto& coeff : witness)
      w.push_back(coeff.str());
    v["witness"] = std::move(w);
    values.push_back(std::move(v));
  }
  j["values"] = std::move(values);
  std::ofstream out(path, std::ios::trunc);
  if (!out)
    throw std::invalid_argument("cannot open output file '" + path + "'");
  out << j.dump() << "\n";
}

int cmd_scan(std::ostream& out, const ScanParams& params, const ScanOptions& options,
             const std::string& out_path) {
  const SpectrumScan scan = scan_box(params, options);

  out << "scan r=" << params.r << " c=" << params.c << " bound=" << params.bound
      << " source=" << (params.source == ScanSource::engine ? "engine" : "closed-form") << "\n";
  if (params.r == 3 && params.c == 3) {
    out << "box: (a,b) = (1+a1, 1+a2) with |a|,|b| <= " << params.bound << ", a0 = +1\n";
    out << "completeness: R >= 4(|a|+|b|) when a != +-b, so finite values below 4*(B+1) = "
        << n33_completeness_cutoff(params.bound).str() << " are complete\n";
  } else if (params.source == ScanSource::closed_form && params.r == 2) {
    out << "box: |a_i| <= " << params.bound << ", a0 = -1 (closed-form domain)\n";
  } else {
    out << "box: |a_i| <= " << params.bound << ", a0 in {-1, +1}\n";
  }
  out << "tuples: " << scan.checkpoint << " / " << scan.total_tuples
      << (scan.complete() ? "" : " (paused)") << "\n";
  out << "finite values found: " << scan.values.size() << "\n";
  if (!scan.values.empty() && scan.values.size() <= 200) {
    out << "values:";
    for (const auto& [value, witness] : scan.values)
      out << " " << value.str();
    out << "\n";
  }

  if (!out_path.empty()) {
    if (out_path.ends_with(".csv"))
      write_scan_csv(scan, out_path);
    else if (out_path.ends_with(".json"))
      write_scan_json(scan, out_path);
    else
      throw std::invalid_argument("--out must end in .csv or .json");
    out << "wrote " << out_path << "\n";
  }
  return 0;
}

// --------------------------------------------------------------- audit ----

int cmd_audit(std::ostream& out, int r, int c, std::size_t samples, std::uint64_t seed,
              long long coeff_bound) {
  // a0 = -1 only yields infinity at (3,3); sample the informative branch.
  std::optional<int> fixed_a0;
  if (r == 3 && c == 3)
    fixed_a0 = 1;
  const auto polys = random_polynomials(r, samples, coeff_bound, seed, fixed_a0);
  const AuditReport report = parity_audit(r, c, polys);

  out << "audit r=" << r << " c=" << c << " samples=" << samples << " seed=" << seed
      << " coeff-bound=" << coeff_bound << "\n";
  out << "finite: " << report.finite_count << "  infinite: " << report.infinite_count << "\n";
  out << "expectations: ";
  if (report.expect_all_infinite)
    out << "all values infinite (c >= 2r)";
  else
    out << "finite values even" << (report.check_n33_classes ? "; classes 32N u 4(2N-1)" : "");
  out << "\n";
  if (report.ok()) {
    out << "violations: none\n";
    return 0;
  }
  out << "violations: " << report.violations.size() << "\n";
  for (const auto& v : report.violations)
    out << "  " << v << "\n";
  return 1;
}

// -------------------------------------------------------------- verify ----

struct VerifyContext {
  std::ostream& out;
  int failures = 0;

  void check(const std::string& name, bool ok, const std::string& detail = "") {
    out << (ok ? "[ok]   " : "[FAIL] ") << name;
    if (!ok && !detail.empty())
      out << " (" << detail << ")";
    out << "\n";
    if (!ok)
      ++failures;
  }
};

BigInt finite_or_minus_one(const ReidemeisterValue& v) {
  return v.is_infinite() ? BigInt(-1) : v.value();
}

int cmd_verify(std::ostream& out) {
  VerifyContext v{out};

  {
    bool ok = true;
    for (int r = 2; r <= 4 && ok; ++r) {
      const HallBasis basis(r, 5);
      for (int i = 1; i <= 5 && ok; ++i)
        ok = basis.layer_size(i) == static_cast<std::size_t>(witt_dimension(r, i));
    }
    v.check("hall layer sizes match the Witt formula (r <= 4, c <= 5)", ok);
  }
  {
    FreeLieAlgebra alg{HallBasis(3, 4)};
    const int total = static_cast<int>(alg.basis().size());
    bool ok = true;
    for (int a = 0; a < total && ok; ++a)
      for (int b = 0; b < total && ok; ++b) {
        if (alg.basis().element(a).degree + alg.basis().element(b).degree > 4)
          continue;
        ok = alg.bracket(a, b) == -alg.bracket(b, a);
      }
    for (int a = 0; a < total && ok; ++a)
      for (int b = 0; b < total && ok; ++b)
        for (int cc = 0; cc < total && ok; ++cc) {
          const int deg = alg.basis().element(a).degree + alg.basis().element(b).degree +
                          alg.basis().element(cc).degree;
          if (deg > 4)
            continue;
          LieCombination sum = alg.bracket(alg.unit(a), alg.bracket(b, cc));
          sum += alg.bracket(alg.unit(b), alg.bracket(cc, a));
          sum += alg.bracket(alg.unit(cc), alg.bracket(a, b));
          ok = sum.is_zero();
        }
    v.check("antisymmetry and Jacobi hold in the rank-3 class-4 algebra", ok);
  }
  {
    bool ok = true;
    std::string detail;
    const std::vector<std::pair<int, int>> combos = {{2, 2}, {3, 2}, {2, 3}, {3, 3}};
    for (const auto& [r, c] : combos) {
      const ReidemeisterEngine engine(r, c);
      for (long long a1 = -3; a1 <= 3 && ok; ++a1)
        for (long long a2 = -3; a2 <= (r == 3 ? 3 : -3) && ok; ++a2)
          for (int sign = -1; sign <= 1 && ok; sign += 2) {
            std::vector<BigInt> coeffs;
            if (r == 2)
              coeffs = {BigInt(sign), BigInt(a1), BigInt(1)};
            else
              coeffs = {BigInt(sign), BigInt(a1), BigInt(a2), BigInt(1)};
            const IntPolynomial p(coeffs);
            const auto formula = closed_form(r, c, p);
            if (!formula)
              continue;
            const auto engine_value = engine.compute(p, Mode::automorphism).value;
            ok = *formula == engine_value;
            if (!ok)
              detail = "r=" + std::to_string(r) + " c=" + std::to_string(c) + " p=" +
                       p.to_string();
          }
    }
    v.check("closed forms match the engine on |a_i| <= 3", ok, detail);
  }
  {
    bool ok = true;
    std::string detail;
    for (int m = 2; m <= 3 && ok; ++m) {
      const ReidemeisterEngine engine(2 * m, 2);
      for (long long n = 1; n <= 8 && ok; ++n) {
        const auto value = engine.compute(family_even(m, n), Mode::automorphism).value;
        ok = finite_or_minus_one(value) == n;
        if (!ok)
          detail = "m=" + std::to_string(m) + " n=" + std::to_string(n);
      }
    }
    v.check("even family gives R = n (m = 2,3; n = 1..8)", ok, detail);
  }
  {
    bool ok = true;
    std::string detail;
    for (int m = 2; m <= 3 && ok; ++m) {
      const ReidemeisterEngine engine(2 * m + 1, 2);
      for (long long n = 1; n <= 8 && ok; ++n) {
        const auto value = engine.compute(family_odd(m, n), Mode::automorphism).value;
        ok = finite_or_minus_one(value) == BigInt(n) + c_offset(m);
        if (!ok)
          detail = "m=" + std::to_string(m) + " n=" + std::to_string(n);
      }
    }
    v.check("odd family gives R = n + c(m) (m = 2,3; n = 1..8)", ok, detail);
  }
  {
    bool ok = true;
    for (long long n = 1; n <= 10 && ok; ++n) {
      ok = finite_or_minus_one(reidemeister_number(family_q2(n), 2, Mode::automorphism).value) ==
               BigInt(2) * n &&
           finite_or_minus_one(reidemeister_number(family_q2(n), 3, Mode::automorphism).value) ==
               BigInt(2) * n * n &&
           finite_or_minus_one(reidemeister_number(family_q3(n), 2, Mode::automorphism).value) ==
               BigInt(2) * n + 1 &&
           finite_or_minus_one(reidemeister_number(family_r3(n), 2, Mode::automorphism).value) ==
               BigInt(4) * n;
    }
    v.check("witness families give 2n, 2n^2, 2n+1, 4n (n = 1..10)", ok);
  }
  {
    bool ok = true;
    for (int r = 2; r <= 3 && ok; ++r)
      for (int c = 1; c <= 3 && ok; ++c) {
        const ReidemeisterEngine engine(r, c);
        for (long long n = 2; n <= 6 && ok; ++n) {
          IntegerMatrix a(static_cast<std::size_t>(r), static_cast<std::size_t>(r));
          a.at(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(r - 1)) = n;
          const auto value = engine.compute(a, Mode::endomorphism).value;
          ok = finite_or_minus_one(value) == n - 1;
        }
      }
    v.check("rank-one endomorphisms give R = n - 1", ok);
  }
  {
    bool ok = true;
    const auto polys = random_polynomials(3, 20, 4, 20240901);
    const ReidemeisterEngine engine(3, 3);
    for (const auto& p : polys) {
      const auto a = companion_matrix(p);
      if (layer_dets_structural(engine.algebra(), a).dets !=
          layer_dets_trace(engine.algebra(), a).dets) {
        ok = false;
        break;
      }
    }
    v.check("structural and trace determinants agree (20 seeded samples)", ok);
  }
  {
    bool ok = true;
    const std::vector<std::pair<IntPolynomial, int>> cases = {
        {family_q2(3), 2}, {family_q2(3), 3}, {family_q3(3), 2}, {family_even(2, 5), 2}};
    for (const auto& [p, c] : cases) {
      const auto exact = reidemeister_number(p, c, Mode::automorphism).value;
      const double numeric = float_oracle(p, c);
      const double target = static_cast<double>(exact.value());
      if (!(std::abs(numeric - target) <= 1e-6 * std::max(1.0, target))) {
        ok = false;
        break;
      }
    }
    v.check("float oracle agrees within 1e-6 (fixed sample)", ok);
  }

  out << (v.failures == 0 ? "verify: all checks passed\n"
                          : "verify: " + std::to_string(v.failures) + " check(s) failed\n");
  return v.failures == 0 ? 0 : 1;
}

} // namespace

IntPolynomial parse_polynomial(const std::string& text) {
  if (trim(text).empty())
    throw std::invalid_argument("empty polynomial");
  std::vector<BigInt> coeffs;
  std::string token;
  std::istringstream stream(text);
  while (std::getline(stream, token, ','))
    coeffs.push_back(parse_bigint(token));
  if (!text.empty() && text.back() == ',')
    throw std::invalid_argument("trailing comma in polynomial");
  if (coeffs.size() < 2)
    throw std::invalid_argument("polynomial needs degree >= 1 (at least two coefficients)");
  if (coeffs.back() != 1)
    throw std::invalid_argument("polynomial must be monic: last coefficient must be 1");
  return IntPolynomial(std::move(coeffs));
}

IntegerMatrix read_matrix(std::istream& in) {
  long long r = 0;
  if (!(in >> r) || r < 1)
    throw std::invalid_argument("matrix file must start with the rank r >= 1");
  IntegerMatrix a(static_cast<std::size_t>(r), static_cast<std::size_t>(r));
  for (long long i = 0; i < r; ++i)
    for (long long j = 0; j < r; ++j) {
      std::string token;
      if (!(in >> token))
        throw std::invalid_argument("matrix file ended before r*r entries were read");
      a.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = parse_bigint(token);
    }
  return a;
}

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"nilfix - exact Reidemeister/Nielsen numbers on free nilpotent groups"};
  app.require_subcommand(1);

  // hall
  int hall_r = 2, hall_c = 2;
  bool hall_json = false;
  auto* hall = app.add_subcommand("hall", "Print the Hall basis with multidegrees and Witt counts");
  hall->add_option("--r", hall_r, "Number of generators (>= 2)")->required();
  hall->add_option("--c", hall_c, "Maximal degree (>= 1)")->required();
  hall->add_flag("--json", hall_json, "Emit the array-of-layers JSON form");

  // layers
  std::string layers_matrix, layers_method = "structural";
  int layers_c = 2;
  auto* layers = app.add_subcommand("layers", "Per-layer dimensions and det(1 - M_i) for a matrix");
  layers->add_option("--matrix", layers_matrix, "Matrix file: first r, then r rows of integers")
      ->required();
  layers->add_option("--c", layers_c, "Nilpotency class (>= 1)")->required();
  layers->add_option("--method", layers_method, "structural | trace | both")
      ->check(CLI::IsMember({"structural", "trace", "both"}));

  // compute
  std::string compute_poly, compute_matrix, compute_mode = "auto", compute_method = "structural";
  int compute_c = 2;
  bool compute_oracle = false, compute_json = false;
  auto* compute = app.add_subcommand("compute", "Reidemeister number of a polynomial or matrix");
  compute->add_option("--poly", compute_poly, "Coefficients a0,a1,...,1 (low degree first)");
  compute->add_option("--matrix", compute_matrix, "Matrix file (alternative to --poly)");
  compute->add_option("--c", compute_c, "Nilpotency class (>= 1)")->required();
  compute->add_option("--mode", compute_mode, "auto | endo")
      ->check(CLI::IsMember({"auto", "endo"}));
  compute->add_option("--method", compute_method, "structural | trace | both")
      ->check(CLI::IsMember({"structural", "trace", "both"}));
  compute->add_flag("--oracle", compute_oracle, "Also run the floating-point root-product oracle");
  compute->add_flag("--json", compute_json, "Emit the JSON report");

  // family
  std::string family_kind;
  int family_m = 2, family_c = 2;
  long long family_n = 1;
  auto* family = app.add_subcommand("family", "Check a family polynomial against its predicted value");
  family->add_option("--kind", family_kind, "even | odd | q2 | q3 | r3")
      ->required()
      ->check(CLI::IsMember({"even", "odd", "q2", "q3", "r3"}));
  family->add_option("--m", family_m, "Half-degree parameter (even/odd kinds)");
  family->add_option("--n", family_n, "Family parameter n")->required();
  family->add_option("--c", family_c, "Nilpotency class (default 2)");

  // scan
  int scan_r = 2, scan_c = 2, scan_workers = 1;
  long long scan_bound = 1;
  std::string scan_max, scan_source = "engine", scan_out, scan_checkpoint;
  std::uint64_t scan_batch = 8192;
  auto* scan = app.add_subcommand("scan", "Enumerate a coefficient box and collect the spectrum");
  scan->add_option("--r", scan_r, "Rank (>= 2)")->required();
  scan->add_option("--c", scan_c, "Nilpotency class (>= 1)")->required();
  scan->add_option("--bound", scan_bound, "Coefficient box half-width B (>= 1)")->required();
  scan->add_option("--max", scan_max, "Keep only values <= this bound");
  scan->add_option("--source", scan_source, "engine | closed-form")
      ->check(CLI::IsMember({"engine", "closed-form"}));
  scan->add_option("--out", scan_out, "Write results to FILE.csv or FILE.json");
  scan->add_option("--checkpoint", scan_checkpoint,
                   "Append-only NDJSON checkpoint; resumes if the file exists");
  scan->add_option("--workers", scan_workers, "Parallel workers (default 1)")
      ->envname("NILFIX_WORKERS");
  scan->add_option("--batch-size", scan_batch, "Tuples per checkpoint batch");

  // audit
  int audit_r = 2, audit_c = 2;
  std::size_t audit_samples = 100;
  std::uint64_t audit_seed = 42;
  long long audit_bound = 20;
  auto* audit = app.add_subcommand("audit", "Divisibility audit over random automorphism polynomials");
  audit->add_option("--r", audit_r, "Rank (>= 2)")->required();
  audit->add_option("--c", audit_c, "Nilpotency class (>= r)")->required();
  audit->add_option("--samples", audit_samples, "Sample count");
  audit->add_option("--seed", audit_seed, "RNG seed");
  audit->add_option("--coeff-bound", audit_bound, "Coefficient bound for samples");

  // verify
  auto* verify = app.add_subcommand("verify", "Run the built-in cross-check battery");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (hall->parsed())
      return cmd_hall(out, hall_r, hall_c, hall_json);
    if (layers->parsed())
      return cmd_layers(out, err, layers_matrix, layers_c, layers_method);
    if (compute->parsed())
      return cmd_compute(out, err, compute_poly, compute_matrix, compute_c, compute_mode,
                         compute_method, compute_oracle, compute_json);
    if (family->parsed())
      return cmd_family(out, family_kind, family_m, family_n, family_c);
    if (scan->parsed()) {
      ScanParams params;
      params.r = scan_r;
      params.c = scan_c;
      params.bound = scan_bound;
      if (!scan_max.empty())
        params.max_value = parse_bigint(scan_max);
      params.source = scan_source == "engine" ? ScanSource::engine : ScanSource::closed_form;
      ScanOptions options;
      options.workers = scan_workers;
      options.batch_size = scan_batch;
      if (!scan_checkpoint.empty())
        options.checkpoint_path = scan_checkpoint;
      return cmd_scan(out, params, options, scan_out);
    }
    if (audit->parsed())
      return cmd_audit(out, audit_r, audit_c, audit_samples, audit_seed, audit_bound);
    if (verify->parsed())
      return cmd_verify(out);
  } catch (const RootFindingError& e) {
    err << "numeric failure: " << e.what() << "\n";
    return 1;
  } catch (const CheckpointMissing& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const CheckpointCorrupt& e) {
    err << "error: corrupt checkpoint: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

} // namespace nilfix::cli
