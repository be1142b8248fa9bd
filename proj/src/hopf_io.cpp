#include "nakayama/hopf_io.hpp"

#include <fstream>
#include <sstream>

namespace nakayama {

namespace {

Json vec_json(const HopfElement& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(s.to_string());
  return out;
}

[[noreturn]] void malformed(const std::string& what) {
  throw InvalidArgument("malformed structure constants: " + what);
}

Scalar scalar_of(const Json& j, const Field& f, const std::string& where) {
  try {
    if (j.is_string()) return Scalar::parse(j.get<std::string>(), f);
    if (j.is_number_integer()) return Scalar::integer(f, j.get<long>());
  } catch (const AlgebraError& e) {
    malformed(where + ": " + e.what());
  }
  malformed(where + ": expected a scalar string or integer");
}

HopfElement vec_of(const Json& j, std::size_t n, const Field& f, const std::string& where) {
  if (!j.is_array()) malformed(where + ": expected an array");
  if (j.size() != n)
    malformed(where + ": length " + std::to_string(j.size()) + ", expected " + std::to_string(n));
  HopfElement v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(scalar_of(j[i], f, where + "[" + std::to_string(i) + "]"));
  return v;
}

const Json& member(const Json& j, const char* key) {
  if (!j.contains(key)) malformed(std::string("missing key '") + key + "'");
  return j.at(key);
}

}  // namespace

Json hopf_to_json(const HopfAlgebra& K) {
  Json j;
  j["field"] = K.field().name();
  j["dim"] = K.dim();
  j["basis"] = K.labels();
  Json mult = Json::array();
  for (std::size_t i = 0; i < K.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < K.dim(); ++k) row.push_back(vec_json(K.product_of_basis(i, k)));
    mult.push_back(std::move(row));
  }
  j["mult"] = std::move(mult);
  j["unit"] = vec_json(K.unit());
  Json comult = Json::array();
  for (std::size_t k = 0; k < K.dim(); ++k) {
    Json terms = Json::array();
    for (const auto& t : K.comult(k)) terms.push_back(Json::array({t.left, t.right, t.coef.to_string()}));
    comult.push_back(std::move(terms));
  }
  j["comult"] = std::move(comult);
  j["counit"] = vec_json(K.counit_vector());
  Json anti = Json::array();
  for (std::size_t k = 0; k < K.dim(); ++k) anti.push_back(vec_json(K.antipode_image(k)));
  j["antipode"] = std::move(anti);
  Json flags = Json::array();
  for (bool b : K.grouplike_flags()) flags.push_back(b);
  j["grouplike_flags"] = std::move(flags);
  return j;
}

HopfAlgebra hopf_from_json(const Json& j, const Field& f) {
  if (!j.is_object()) malformed("top level must be an object");
  if (j.contains("field") && j.at("field") != f.name())
    malformed("file is over " + j.at("field").dump() + " but the session field is " + f.name());
  const Json& jdim = member(j, "dim");
  if (!jdim.is_number_unsigned() || jdim.get<std::size_t>() == 0) malformed("dim must be a positive integer");
  const auto n = jdim.get<std::size_t>();
  const Json& jbasis = member(j, "basis");
  if (!jbasis.is_array() || jbasis.size() != n) malformed("basis must list dim labels");
  std::vector<std::string> labels;
  for (const auto& b : jbasis) {
    if (!b.is_string()) malformed("basis labels must be strings");
    labels.push_back(b.get<std::string>());
  }
  const Json& jmult = member(j, "mult");
  if (!jmult.is_array() || jmult.size() != n) malformed("mult must have dim rows");
  std::vector<std::vector<HopfElement>> mult(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!jmult[i].is_array() || jmult[i].size() != n) malformed("mult row " + std::to_string(i) + " must have dim entries");
    for (std::size_t k = 0; k < n; ++k)
      mult[i].push_back(vec_of(jmult[i][k], n, f, "mult[" + std::to_string(i) + "][" + std::to_string(k) + "]"));
  }
  HopfElement unit = vec_of(member(j, "unit"), n, f, "unit");
  const Json& jco = member(j, "comult");
  if (!jco.is_array() || jco.size() != n) malformed("comult must have dim entries");
  std::vector<std::vector<CoTerm>> comult(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (!jco[k].is_array()) malformed("comult[" + std::to_string(k) + "] must be an array");
    for (const auto& t : jco[k]) {
      if (!t.is_array() || t.size() != 3 || !t[0].is_number_unsigned() || !t[1].is_number_unsigned())
        malformed("comult[" + std::to_string(k) + "] terms must be [i, j, scalar]");
      auto a = t[0].get<std::size_t>(), b = t[1].get<std::size_t>();
      if (a >= n || b >= n) malformed("comult[" + std::to_string(k) + "] index out of range");
      comult[k].push_back(CoTerm{a, b, scalar_of(t[2], f, "comult[" + std::to_string(k) + "]")});
    }
  }
  HopfElement counit = vec_of(member(j, "counit"), n, f, "counit");
  const Json& janti = member(j, "antipode");
  if (!janti.is_array() || janti.size() != n) malformed("antipode must have dim entries");
  std::vector<HopfElement> antipode;
  for (std::size_t k = 0; k < n; ++k) antipode.push_back(vec_of(janti[k], n, f, "antipode[" + std::to_string(k) + "]"));
  std::vector<bool> flags;
  if (j.contains("grouplike_flags")) {
    const Json& jf = j.at("grouplike_flags");
    if (!jf.is_array() || jf.size() != n) malformed("grouplike_flags must have dim entries");
    for (const auto& b : jf) {
      if (!b.is_boolean()) malformed("grouplike_flags entries must be booleans");
      flags.push_back(b.get<bool>());
    }
  }
  try {
    return HopfAlgebra(f, std::move(labels), std::move(mult), std::move(unit), std::move(comult), std::move(counit),
                       std::move(antipode), std::move(flags));
  } catch (const InvalidArgument& e) {
    malformed(e.what());
  }
}

void save_hopf(const HopfAlgebra& K, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path.string());
  out << hopf_to_json(K).dump(2) << "\n";
}

HopfAlgebra load_hopf(const std::filesystem::path& path, const Field& f) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    malformed(path.string() + ": " + e.what());
  }
  return hopf_from_json(j, f);
}

}  // namespace nakayama
