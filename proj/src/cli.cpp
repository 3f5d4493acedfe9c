#include "bicomm/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include "bicomm/commalg.hpp"
#include "bicomm/deriv.hpp"
#include "bicomm/json_io.hpp"
#include "bicomm/modstruct.hpp"

namespace bicomm::cli {

namespace {

struct Options {
  std::string field = "q";
  std::uint64_t prime = 0;
  std::string input;
  std::string out;
  std::string witness;
  bool verify = false;
  std::uint64_t seed = 0;
  std::size_t random_suite = 0;
};

class VerificationFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void check(bool ok, const std::string& what) {
  if (!ok) throw VerificationFailed(what);
}

FieldSpec field_of(const Options& o) {
  if (o.field == "q") return FieldSpec::rationals();
  if (o.field == "fp") {
    if (o.prime == 0) throw Error(Errc::InvalidPrime, "--field fp requires --prime");
    return FieldSpec::prime_field(o.prime);
  }
  throw Error(Errc::Parse, "--field must be 'q' or 'fp'");
}

json read_json(const std::string& path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file) throw Error(Errc::Parse, "cannot open " + path);
    in = &file;
  }
  try {
    return json::parse(*in);
  } catch (const json::exception& e) {
    throw Error(Errc::Parse, std::string("invalid JSON: ") + e.what());
  }
}

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(Errc::Parse, std::string("input needs a '") + key + "' member");
  return j[key];
}

Mat square_matrix(const json& j, FieldSpec spec) {
  Mat m = mat_from_json(j, spec);
  if (!m.is_square()) throw Error(Errc::NotSquare, "operator must be square");
  return m;
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return os.str();
}

std::vector<std::string> poly_strings(const std::vector<Poly>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

std::size_t expected_commutant_dim(const std::vector<Poly>& factors) {
  std::size_t dim = 0;
  for (const auto& f : factors) {
    for (const auto& g : factors) dim += std::min(*f.degree(), *g.degree());
  }
  return dim;
}

void verify_decomposition(const ModuleStructure& ms) {
  const Mat& a = ms.a;
  const std::size_t n = a.rows();
  Mat sum(a.spec(), n, n);
  for (std::size_t i = 0; i < ms.primary_components.size(); ++i) {
    const auto& ci = ms.primary_components[i];
    check(ci.projection * ci.projection == ci.projection, "projection not idempotent");
    check(a * ci.projection == ci.projection * a, "projection does not commute with a");
    for (std::size_t j = 0; j < ms.primary_components.size(); ++j) {
      if (i != j) check((ci.projection * ms.primary_components[j].projection).is_zero(), "projections not orthogonal");
    }
    check(column_space(ci.projection) == ci.component_basis, "projection range differs from component");
    check(ci.component_basis.dim() == primary_dimension(ms.invariant_factors, ci.prime),
          "component dimension disagrees with invariant factors");
    sum += ci.projection;
  }
  check(sum == Mat::identity(a.spec(), n), "projections do not sum to I");
}

json analyze_matrix(const Mat& a, bool verify) {
  ModuleStructure ms = primary_decomposition(a);
  AlgebraBasis comm = commutant_basis(a);
  AlgebraBasis bicomm = bicommutant_basis(a);
  json comps = json::array();
  for (const auto& c : ms.primary_components) {
    comps.push_back({{"prime", c.prime.to_string()},
                     {"multiplicity", c.multiplicity},
                     {"dimension", c.component_basis.dim()}});
  }
  json canonical = {{"field", a.spec().to_string()}, {"matrix", mat_to_json(a)}};
  json report = {{"input_hash", sha256_hex(canonical.dump())},
                 {"field", a.spec().to_string()},
                 {"min_poly", ms.min_poly.to_string()},
                 {"char_poly", ms.char_poly.to_string()},
                 {"invariant_factors", poly_strings(ms.invariant_factors)},
                 {"primary_components", std::move(comps)},
                 {"commutant_dim", comm.dim()},
                 {"bicommutant_dim", bicomm.dim()},
                 {"bicommutant_polynomial_basis", bicomm == polynomial_algebra_basis(a)},
                 {"transpose_condition_A", transpose_bicommutant_check(a)}};
  if (verify) {
    // Re-derive the claims from the serialized strings.
    const FieldSpec spec = a.spec();
    Poly min_poly = Poly::parse(report["min_poly"].get<std::string>(), spec);
    Poly char_poly = Poly::parse(report["char_poly"].get<std::string>(), spec);
    std::vector<Poly> factors;
    Poly product = Poly::one(spec);
    for (const auto& s : report["invariant_factors"]) {
      factors.push_back(Poly::parse(s.get<std::string>(), spec));
      product *= factors.back();
    }
    check(poly_eval_matrix(min_poly, a).is_zero(), "min_poly does not annihilate a");
    check(product == char_poly, "invariant factors do not multiply to char_poly");
    check(factors.empty() ? min_poly.is_one() : factors.back() == min_poly, "last invariant factor is not min_poly");
    check(report["commutant_dim"].get<std::size_t>() == expected_commutant_dim(factors), "commutant dimension");
    check(report["bicommutant_dim"].get<std::size_t>() == *min_poly.degree(), "bicommutant dimension");
    for (const auto& c : comm.matrices()) check(a * c == c * a, "commutant element does not commute");
    verify_decomposition(ms);
    report["verified"] = true;
  }
  return report;
}

Mat random_matrix(std::mt19937_64& rng, FieldSpec spec, std::size_t n) {
  Mat m(spec, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = FieldElement::from_int(static_cast<long long>(rng() % 7) - 3, spec);
    }
  }
  return m;
}

json cmd_analyze(const Options& o) {
  const FieldSpec spec = field_of(o);
  if (o.random_suite > 0) {
    std::mt19937_64 rng(o.seed);
    std::vector<Mat> inputs;
    for (std::size_t k = 0; k < o.random_suite; ++k) {
      std::size_t n = 1 + rng() % 5;
      inputs.push_back(random_matrix(rng, spec, n));
    }
    json reports = json::array();
    for (const auto& a : inputs) {
      json r = analyze_matrix(a, o.verify);
      r["matrix"] = mat_to_json(a);
      reports.push_back(std::move(r));
    }
    return {{"seed", o.seed}, {"count", o.random_suite}, {"reports", std::move(reports)}};
  }
  if (o.input.empty()) throw Error(Errc::Parse, "analyze needs an input file or --random-suite");
  json in = read_json(o.input);
  return analyze_matrix(square_matrix(in.contains("a") ? in["a"] : in, spec), o.verify);
}

json cmd_check_pair(const Options& o) {
  const FieldSpec spec = field_of(o);
  json in = read_json(o.input);
  Mat a = square_matrix(member(in, "a"), spec);
  Mat b = square_matrix(member(in, "b"), spec);
  if (a.rows() != b.rows()) throw Error(Errc::SizeMismatch, "a and b differ in size");
  RangeKernelReport r = range_kernel_report(a, b);
  json report = range_kernel_to_json(r);
  std::optional<Mat> x, z;
  if (!o.witness.empty()) {
    z = mat_from_json(read_json(o.witness), spec);
    x = preimage_witness(a, b, *z);
    report["preimage_witness"] = mat_to_json(*x);
  }
  if (o.verify) {
    check(r.all_agree(), "range/kernel booleans disagree");
    if (r.witness) check(poly_eval_matrix(*r.witness, a) == b, "witness polynomial does not reproduce b");
    if (x) check(derive(a, *x) == derive(b, *z), "d_a(x) != d_b(z)");
    report["verified"] = true;
  }
  return report;
}

json cmd_solve_sylvester(const Options& o) {
  const FieldSpec spec = field_of(o);
  json in = read_json(o.input);
  Mat c = square_matrix(member(in, "c"), spec);
  Mat e = square_matrix(member(in, "e"), spec);
  Mat y = mat_from_json(member(in, "y"), spec);
  if (y.rows() != c.rows() || y.cols() != e.rows()) throw Error(Errc::SizeMismatch, "y must be rows(c) x rows(e)");
  SylvesterSolution s = sylvester_solve_detailed(c, e, y);
  bool residual_zero = (c * s.x - s.x * e - y).is_zero();
  json report = {{"x", mat_to_json(s.x)},
                 {"v", s.v.to_string()},
                 {"route", s.transposed ? "transposed" : "direct"},
                 {"residual_zero", residual_zero},
                 {"unique", s.unique}};
  if (o.verify) {
    Mat dense = unvec(mat_solve(sylvester_operator_matrix(c, e), vec(y)), y.rows(), y.cols());
    check(residual_zero, "nonzero residual");
    check(s.unique, "Sylvester operator is singular");
    check(dense == s.x, "dense vectorized solve disagrees");
    report["verified"] = true;
  }
  return report;
}

json cmd_decompose(const Options& o) {
  const FieldSpec spec = field_of(o);
  json in = read_json(o.input);
  ModuleStructure ms = primary_decomposition(square_matrix(in.contains("a") ? in["a"] : in, spec));
  json report = module_structure_to_json(ms);
  if (o.verify) {
    verify_decomposition(ms);
    report["verified"] = true;
  }
  return report;
}

int error_exit(std::ostream& out, const std::string& code, const std::string& message, int exit_code,
               json extra = json::object()) {
  json j = {{"error", code}, {"message", message}};
  j.update(extra);
  out << j.dump(2) << "\n";
  return exit_code;
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::DegreeTooLarge: return kCapability;
    case Errc::NotCoprime:
    case Errc::NotInBicommutant:
    case Errc::NotInPolynomialAlgebra:
    case Errc::Infeasible:
    case Errc::DenominatorSingular:
    case Errc::NotPrimary:
      return kPrecondition;
    default: return kBadInput;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact commutant, bicommutant and derivation analysis of matrices"};
  app.require_subcommand(1);
  auto add_common = [&o](CLI::App* sub, bool needs_input) {
    sub->add_option("--field", o.field, "q (rationals) or fp (prime field)")
        ->check(CLI::IsMember({"q", "fp"}));
    sub->add_option("--prime", o.prime, "prime modulus for --field fp");
    sub->add_option("--out", o.out, "write the report to this file");
    sub->add_flag("--verify", o.verify, "re-check every claim in the report");
    auto* in = sub->add_option("input", o.input, "input JSON file ('-' for stdin)");
    if (needs_input) in->required();
  };
  auto* analyze = app.add_subcommand("analyze", "module structure, commutant and bicommutant report");
  add_common(analyze, false);
  analyze->add_option("--seed", o.seed, "seed for --random-suite");
  analyze->add_option("--random-suite", o.random_suite, "analyze N seeded random matrices instead of an input");
  auto* pair = app.add_subcommand("check-pair", "range/kernel inclusion report for {a, b}");
  add_common(pair, true);
  pair->add_option("--witness", o.witness, "matrix z: also emit x with d_a(x) = d_b(z)");
  auto* sylv = app.add_subcommand("solve-sylvester", "solve c x - x e = y for {c, e, y}");
  add_common(sylv, true);
  auto* decompose = app.add_subcommand("decompose", "primary decomposition with projections");
  add_common(decompose, true);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    return error_exit(out, "Usage", e.what(), kBadInput);
  }

  try {
    json report;
    if (*analyze) report = cmd_analyze(o);
    else if (*pair) report = cmd_check_pair(o);
    else if (*sylv) report = cmd_solve_sylvester(o);
    else report = cmd_decompose(o);
    std::string text = report.dump(2) + "\n";
    if (o.out.empty()) {
      out << text;
    } else {
      std::ofstream file(o.out, std::ios::binary);
      if (!file) return error_exit(out, "Parse", "cannot write " + o.out, kBadInput);
      file << text;
    }
    return kOk;
  } catch (const NotCoprimeError& e) {
    return error_exit(out, "NotCoprime", e.what(), kPrecondition, {{"gcd", e.gcd().to_string()}});
  } catch (const Error& e) {
    return error_exit(out, std::string(errc_name(e.code())), e.what(), exit_code_for(e.code()));
  } catch (const VerificationFailed& e) {
    err << "verification failed: " << e.what() << "\n";
    return error_exit(out, "VerificationFailed", e.what(), kInternal);
  }
}

}  // namespace bicomm::cli
