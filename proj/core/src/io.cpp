#include "nalg/io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

#include <json.hpp>

namespace nalg::io {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

template <class T>
T field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw ParseError(std::string("field '") + key + "' has the wrong type");
  }
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  throw ParseError("scalar must be a string or an integer");
}

template <Field S>
StructureTensor<S> parse_tensor(const std::string& text, bool allow_qt) {
  const json doc = parse_json(text);
  const auto n = field<std::int64_t>(doc, "dim");
  if (n <= 0) throw ParseError("dim must be positive");
  const std::string field_name = doc.contains("field") ? field<std::string>(doc, "field") : "Q";
  if (field_name != "Q" && field_name != "Qt") throw ParseError("field must be \"Q\" or \"Qt\"");
  if (field_name == "Qt" && !allow_qt) throw FieldMismatch("expected an algebra over Q, got field \"Qt\"");
  const std::string closure = doc.contains("closure") ? field<std::string>(doc, "closure") : "none";
  if (closure != "none" && closure != "antisymmetric") throw ParseError("closure must be \"none\" or \"antisymmetric\"");
  const std::string name = doc.contains("name") ? field<std::string>(doc, "name") : "";
  const json products = doc.contains("products") ? doc.at("products") : json::array();
  if (!products.is_array()) throw ParseError("products must be an array");

  const auto dim = static_cast<std::size_t>(n);
  StructureTensor<S> a(dim, name);
  std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t>> seen;
  std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t>> implied;
  for (const auto& p : products) {
    const auto i = field<std::int64_t>(p, "i");
    const auto j = field<std::int64_t>(p, "j");
    const auto k = field<std::int64_t>(p, "k");
    if (!p.contains("c")) throw ParseError("product is missing field 'c'");
    for (auto idx : {i, j, k}) {
      if (idx < 1 || idx > n) {
        throw ParseError("index " + std::to_string(idx) + " out of range 1.." + std::to_string(n));
      }
    }
    if (!seen.insert({i, j, k}).second) {
      throw ParseError("duplicate product (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")");
    }
    S c = [&] {
      try {
        return FieldTraits<S>::parse(scalar_text(p.at("c")));
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        throw ParseError(e.what());
      }
    }();
    const auto key = std::make_tuple(i, j, k);
    if (implied.count(key) && a(i - 1, j - 1, k - 1) != c) {
      throw ParseError("product (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) +
                       ") contradicts its antisymmetric partner");
    }
    if (closure == "antisymmetric" && i == j && !c.is_zero()) {
      throw ParseError("antisymmetric closure forbids nonzero square e" + std::to_string(i) + "e" + std::to_string(i));
    }
    a.set(i - 1, j - 1, k - 1, c);
    if (closure == "antisymmetric" && i != j) {
      const auto partner = std::make_tuple(j, i, k);
      if (seen.count(partner) && a(j - 1, i - 1, k - 1) != -c) {
        throw ParseError("product (" + std::to_string(j) + "," + std::to_string(i) + "," + std::to_string(k) +
                         ") contradicts its antisymmetric partner");
      }
      a.set(j - 1, i - 1, k - 1, -c);
      implied.insert(partner);
    }
  }
  return a;
}

template <Field S>
std::string write_tensor(const StructureTensor<S>& a) {
  ordered_json doc;
  doc["name"] = a.name();
  doc["dim"] = a.dim();
  doc["field"] = to_string(FieldTraits<S>::tag);
  doc["closure"] = "none";
  ordered_json products = ordered_json::array();
  for (const auto& e : a.nonzeros()) {
    ordered_json p;
    p["i"] = e.i + 1;
    p["j"] = e.j + 1;
    p["k"] = e.k + 1;
    p["c"] = e.c.to_string();
    products.push_back(std::move(p));
  }
  doc["products"] = std::move(products);
  return doc.dump(2);
}

}  // namespace

AlgebraQ parse_algebra(const std::string& text) { return parse_tensor<Rational>(text, false); }

AlgebraQt parse_algebra_qt(const std::string& text) { return parse_tensor<RatFunc>(text, true); }

std::string write_algebra(const AlgebraQ& a) { return write_tensor(a); }

std::string write_algebra(const AlgebraQt& a) { return write_tensor(a); }

DegenerationFamily parse_family(const std::string& text) {
  const json doc = parse_json(text);
  const auto n = field<std::int64_t>(doc, "dim");
  if (n <= 0) throw ParseError("dim must be positive");
  const auto given = field<std::string>(doc, "given");
  if (given != "g" && given != "g_inverse") throw ParseError("given must be \"g\" or \"g_inverse\"");
  if (!doc.contains("matrix") || !doc.at("matrix").is_array()) throw ParseError("missing field 'matrix'");
  const json& rows = doc.at("matrix");
  const auto dim = static_cast<std::size_t>(n);
  if (rows.size() != dim) throw ParseError("matrix must have " + std::to_string(n) + " rows");
  Matrix<RatFunc> m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (!rows[i].is_array() || rows[i].size() != dim) {
      throw ParseError("matrix row " + std::to_string(i + 1) + " must have " + std::to_string(n) + " entries");
    }
    for (std::size_t j = 0; j < dim; ++j) {
      try {
        m(i, j) = RatFunc::parse(scalar_text(rows[i][j]));
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        throw ParseError(e.what());
      }
    }
  }
  return {given == "g" ? DegenerationFamily::Given::Direct : DegenerationFamily::Given::Inverse, std::move(m)};
}

std::string write_family(const DegenerationFamily& fam) {
  ordered_json doc;
  doc["dim"] = fam.dim();
  doc["given"] = fam.given == DegenerationFamily::Given::Direct ? "g" : "g_inverse";
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < fam.dim(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < fam.dim(); ++j) row.push_back(fam.matrix(i, j).to_string());
    rows.push_back(std::move(row));
  }
  doc["matrix"] = std::move(rows);
  return doc.dump(2);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace nalg::io
