#include "uqkit/io.hpp"

#include "uqkit/errors.hpp"

namespace uqkit {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw ParseError(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

QScalar scalar_of(const Json& v) {
  if (v.is_string()) return QScalar::parse(v.get<std::string>());
  if (v.is_number_integer()) return QScalar(v.get<long>());
  throw ParseError("scalar must be a string or an integer, got " + v.dump());
}

const Json& terms_of(const Json& j) {
  const Json& t = field(j, "terms");
  if (!t.is_array()) throw ParseError("\"terms\" must be an array");
  return t;
}

QVector vector_of(const Json& v) {
  if (!v.is_array()) throw ParseError("vector must be an array");
  QVector out;
  for (const auto& x : v) out.push_back(scalar_of(x));
  return out;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

Json to_json(const UqElement& u) {
  Json terms = Json::array();
  for (const auto& [m, c] : u.terms()) terms.push_back({{"l", m.l}, {"i", m.i}, {"j", m.j}, {"coeff", c.str()}});
  return {{"terms", terms}};
}

UqElement uq_element_from_json(const Json& j) {
  UqElement out;
  for (const auto& t : terms_of(j)) {
    const int i = int_field(t, "i");
    const int jj = int_field(t, "j");
    if (i < 0 || jj < 0) throw ParseError("PBW exponents must be non-negative");
    out.add(Monomial{int_field(t, "l"), i, jj}, scalar_of(field(t, "coeff")));
  }
  return out;
}

Json to_json(const PathVector& x) {
  Json terms = Json::array();
  for (const auto& [p, c] : x.terms()) terms.push_back({{"path", to_string(p)}, {"coeff", c.str()}});
  return {{"terms", terms}};
}

PathVector path_vector_from_json(const Json& j) {
  PathVector out;
  for (const auto& t : terms_of(j)) {
    const Json& p = field(t, "path");
    if (!p.is_string()) throw ParseError("\"path\" must be a string");
    out.add(parse_path(p.get<std::string>()), scalar_of(field(t, "coeff")));
  }
  return out;
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const QuiverRep& rep) {
  Json upper = Json::array();
  Json lower = Json::array();
  const int top = rep.start() + static_cast<int>(rep.dims().size()) - 1;
  for (int l = rep.start() + 1; l <= top; ++l) {
    upper.push_back(to_json(rep.upper(l)));
    lower.push_back(to_json(rep.lower(l)));
  }
  return {{"start", rep.start()}, {"dims", rep.dims()}, {"upper", upper}, {"lower", lower}};
}

namespace {

// A matrix with zero rows or columns may be written as [] or as rows of [].
Matrix matrix_of(const Json& j, int rows, int cols) {
  if (!j.is_array()) throw ParseError("matrix must be an array of rows");
  Matrix m(rows, cols);
  if (rows == 0 || cols == 0) {
    for (const auto& row : j)
      if (!row.is_array() || !row.empty()) throw ShapeMismatch("matrix between a zero space must be empty");
    return m;
  }
  if (static_cast<int>(j.size()) != rows) throw ShapeMismatch("matrix has " + std::to_string(j.size()) + " rows, expected " + std::to_string(rows));
  for (int r = 0; r < rows; ++r) {
    const Json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array()) throw ParseError("matrix row must be an array");
    if (static_cast<int>(row.size()) != cols)
      throw ShapeMismatch("matrix row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(cols));
    for (int c = 0; c < cols; ++c) m(r, c) = scalar_of(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

}  // namespace

QuiverRep rep_from_json(const Json& j) {
  const int start = int_field(j, "start");
  const Json& dj = field(j, "dims");
  if (!dj.is_array()) throw ParseError("\"dims\" must be an array");
  std::vector<int> dims;
  for (const auto& d : dj) {
    if (!d.is_number_integer()) throw ParseError("dimensions must be integers");
    dims.push_back(d.get<int>());
  }
  const Json& uj = field(j, "upper");
  const Json& lj = field(j, "lower");
  if (!uj.is_array() || !lj.is_array()) throw ParseError("\"upper\" and \"lower\" must be arrays");
  const std::size_t arrows = dims.empty() ? 0 : dims.size() - 1;
  if (uj.size() != arrows || lj.size() != arrows)
    throw ShapeMismatch("expected " + std::to_string(arrows) + " upper and lower matrices");
  std::vector<Matrix> upper;
  std::vector<Matrix> lower;
  for (std::size_t k = 0; k < arrows; ++k) {
    if (dims[k] < 0 || dims[k + 1] < 0) throw ShapeMismatch("negative vertex dimension");
    upper.push_back(matrix_of(uj[k], dims[k], dims[k + 1]));
    lower.push_back(matrix_of(lj[k], dims[k], dims[k + 1]));
  }
  return QuiverRep(start, std::move(dims), std::move(upper), std::move(lower));
}

Json to_json(const RepElement& e) {
  Json comps = Json::array();
  for (const auto& [l, v] : e.components()) {
    Json vj = Json::array();
    for (const auto& x : v) vj.push_back(x.str());
    comps.push_back({{"l", l}, {"v", vj}});
  }
  return {{"components", comps}};
}

RepElement rep_element_from_json(const Json& j) {
  RepElement out;
  if (j.is_object() && j.contains("components")) {
    const Json& cs = j.at("components");
    if (!cs.is_array()) throw ParseError("\"components\" must be an array");
    for (const auto& c : cs) out.add(int_field(c, "l"), vector_of(field(c, "v")));
    return out;
  }
  out.add(int_field(j, "l"), vector_of(field(j, "v")));
  return out;
}

Json to_json(const SchurianData& s) { return {{"l", s.l}, {"n", s.n}, {"lambda", to_string(s.lambda)}}; }

SchurianData schurian_from_json(const Json& j) {
  SchurianData s;
  s.l = int_field(j, "l");
  s.n = int_field(j, "n");
  if (s.n < 0) throw ParseError("\"n\" must be non-negative");
  const Json& lam = field(j, "lambda");
  if (lam.is_string()) s.lambda = parse_lambda(lam.get<std::string>());
  else s.lambda = scalar_of(lam);
  return s;
}

}  // namespace uqkit
