#include "bicomm/json_io.hpp"

namespace bicomm {

json mat_to_json(const Mat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

namespace {

FieldElement scalar_from_json(const json& j, FieldSpec spec) {
  if (j.is_string()) return FieldElement::parse(j.get<std::string>(), spec);
  if (j.is_number_integer()) return FieldElement::from_int(j.get<long long>(), spec);
  throw Error(Errc::Parse, "matrix entries must be strings or integers");
}

std::size_t size_field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_unsigned()) {
    throw Error(Errc::Parse, std::string("matrix object needs a non-negative integer '") + key + "'");
  }
  return j[key].get<std::size_t>();
}

}  // namespace

Mat mat_from_json(const json& j, FieldSpec spec) {
  if (!j.is_object()) throw Error(Errc::Parse, "matrix must be a JSON object");
  const std::size_t rows = size_field(j, "rows");
  const std::size_t cols = size_field(j, "cols");
  if (!j.contains("entries") || !j["entries"].is_array() || j["entries"].size() != rows) {
    throw Error(Errc::Parse, "'entries' must be an array of " + std::to_string(rows) + " rows");
  }
  std::vector<FieldElement> e;
  for (const auto& row : j["entries"]) {
    if (!row.is_array() || row.size() != cols) {
      throw Error(Errc::Parse, "every row must have " + std::to_string(cols) + " entries");
    }
    for (const auto& x : row) e.push_back(scalar_from_json(x, spec));
  }
  return Mat(spec, rows, cols, std::move(e));
}

json algebra_to_json(const AlgebraBasis& b) {
  json out = json::array();
  for (const auto& m : b.matrices()) out.push_back(mat_to_json(m));
  return out;
}

json padic_to_json(const TruncatedPAdic& x) {
  json digits = json::array();
  for (const auto& d : x.digits()) digits.push_back(d.to_string());
  return {{"p", x.prime().to_string()}, {"N", x.level()}, {"digits", std::move(digits)}};
}

TruncatedPAdic padic_from_json(const json& j, FieldSpec spec) {
  if (!j.is_object() || !j.contains("p") || !j.contains("digits") || !j["digits"].is_array()) {
    throw Error(Errc::Parse, "p-adic object needs 'p' and 'digits'");
  }
  std::vector<Poly> digits;
  for (const auto& d : j["digits"]) digits.push_back(Poly::parse(d.get<std::string>(), spec));
  if (j.contains("N") && j["N"].get<std::size_t>() != digits.size()) {
    throw Error(Errc::Parse, "'N' disagrees with the number of digits");
  }
  return TruncatedPAdic(Poly::parse(j["p"].get<std::string>(), spec), std::move(digits));
}

json module_structure_to_json(const ModuleStructure& ms) {
  json factors = json::array();
  for (const auto& f : ms.invariant_factors) factors.push_back(f.to_string());
  json comps = json::array();
  for (const auto& c : ms.primary_components) {
    comps.push_back({{"prime", c.prime.to_string()},
                     {"multiplicity", c.multiplicity},
                     {"dimension", c.component_basis.dim()},
                     {"projection", mat_to_json(c.projection)},
                     {"basis", mat_to_json(c.component_basis.basis())}});
  }
  return {{"min_poly", ms.min_poly.to_string()},
          {"char_poly", ms.char_poly.to_string()},
          {"invariant_factors", std::move(factors)},
          {"components", std::move(comps)}};
}

json range_kernel_to_json(const RangeKernelReport& r) {
  json out = {{"b_in_bicommutant", r.b_in_bicommutant},
              {"kernel_included", r.kernel_included},
              {"range_included", r.range_included},
              {"transpose_range_included", r.transpose_range_included}};
  if (r.witness) out["witness"] = r.witness->to_string();
  return out;
}

}  // namespace bicomm
