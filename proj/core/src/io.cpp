#include "affalg/io.hpp"

#include <json.hpp>

namespace affalg {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void schema_error(const std::string& path,
                               const std::string& reason) {
  throw SchemaError(path + ": " + reason);
}

Field field_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "Q") return Field::rationals();
  if (j.is_object() && j.contains("Fp")) {
    const json& p = j.at("Fp");
    if (!p.is_number_unsigned()) schema_error("/field/Fp", "expected integer");
    return Field::prime(p.get<std::uint32_t>()); // FieldError on bad p
  }
  schema_error("/field", "expected \"Q\" or {\"Fp\": p}");
}

ordered_json field_to_json(const Field& f) {
  if (f.is_rationals()) return "Q";
  return ordered_json{{"Fp", f.characteristic()}};
}

Scalar scalar_from_json(const json& j, Field f, const std::string& path) {
  if (f.is_rationals()) {
    if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
    if (j.is_number_integer()) return Scalar(f, j.get<long>());
    schema_error(path, "expected rational string or integer");
  }
  if (!j.is_number_integer()) schema_error(path, "expected residue integer");
  return Scalar(f, j.get<long>());
}

ordered_json scalar_to_json(const Scalar& s) {
  if (s.field().is_prime())
    return static_cast<std::uint64_t>(s.residue());
  // Canonical literal: "n" or "p/q".
  return s.rational().get_str();
}

Vector vector_from_json(const json& j, Field f, std::size_t dim,
                        const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected array");
  if (j.size() != dim)
    schema_error(path, "expected " + std::to_string(dim) + " entries, got " +
                           std::to_string(j.size()));
  Vector v(f, dim);
  for (std::size_t i = 0; i < dim; ++i)
    v[i] = scalar_from_json(j[i], f, path + "/" + std::to_string(i));
  return v;
}

ordered_json vector_to_json(const Vector& v) {
  ordered_json out = ordered_json::array();
  for (std::size_t i = 0; i < v.dim(); ++i) out.push_back(scalar_to_json(v[i]));
  return out;
}

Matrix matrix_from_json(const json& j, Field f, std::size_t rows,
                        std::size_t cols, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected array of rows");
  if (j.size() != rows)
    schema_error(path, "expected " + std::to_string(rows) + " rows");
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    Vector row =
        vector_from_json(j[i], f, cols, path + "/" + std::to_string(i));
    for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = row[c];
  }
  return m;
}

ordered_json matrix_to_json(const Matrix& m) {
  ordered_json out = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    out.push_back(vector_to_json(m.row(i)));
  return out;
}

std::vector<Matrix> tensor_from_json(const json& j, Field f, std::size_t n,
                                     const std::string& path) {
  if (!j.is_array() || j.size() != n)
    schema_error(path, "expected " + std::to_string(n) + " slices");
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < n; ++k)
    out.push_back(
        matrix_from_json(j[k], f, n, n, path + "/" + std::to_string(k)));
  return out;
}

ordered_json tensor_to_json(const std::vector<Matrix>& t) {
  ordered_json out = ordered_json::array();
  for (const Matrix& m : t) out.push_back(matrix_to_json(m));
  return out;
}

AffineMap affine_from_json(const json& j, Field f, std::size_t n,
                           const std::string& path) {
  if (!j.is_object() || !j.contains("M") || !j.contains("t"))
    schema_error(path, "expected {\"M\": [[..]], \"t\": [..]}");
  return AffineMap(matrix_from_json(j.at("M"), f, n, n, path + "/M"),
                   vector_from_json(j.at("t"), f, n, path + "/t"));
}

ordered_json affine_to_json(const AffineMap& m) {
  return ordered_json{{"M", matrix_to_json(m.M)}, {"t", vector_to_json(m.t)}};
}

BiAffineMap biaffine_from_json(const json& j, Field f, std::size_t n,
                               const std::string& path) {
  for (const char* key : {"B", "L1", "L2", "c"})
    if (!j.is_object() || !j.contains(key))
      schema_error(path, std::string("missing key \"") + key + "\"");
  return BiAffineMap(tensor_from_json(j.at("B"), f, n, path + "/B"),
                     matrix_from_json(j.at("L1"), f, n, n, path + "/L1"),
                     matrix_from_json(j.at("L2"), f, n, n, path + "/L2"),
                     vector_from_json(j.at("c"), f, n, path + "/c"));
}

ordered_json biaffine_to_json(const BiAffineMap& m) {
  return ordered_json{{"B", tensor_to_json(m.B)},
                      {"L1", matrix_to_json(m.L1)},
                      {"L2", matrix_to_json(m.L2)},
                      {"c", vector_to_json(m.c)}};
}

HomLieAlgebra algebra_from_json(const json& j, Field f, std::size_t n,
                                const std::string& path) {
  if (!j.is_object() || !j.contains("sc") || !j.contains("alpha"))
    schema_error(path, "expected {\"sc\": [[[..]]], \"alpha\": [[..]]}");
  return HomLieAlgebra{n, tensor_from_json(j.at("sc"), f, n, path + "/sc"),
                       matrix_from_json(j.at("alpha"), f, n, n,
                                        path + "/alpha")};
}

ordered_json algebra_to_json(const HomLieAlgebra& L) {
  return ordered_json{{"sc", tensor_to_json(L.sc)},
                      {"alpha", matrix_to_json(L.alpha)}};
}

AffgebraData data_from_json(const json& j, Field f, std::size_t n,
                            const std::string& path) {
  for (const char* key : {"L", "kappa", "lambda", "r"})
    if (!j.is_object() || !j.contains(key))
      schema_error(path, std::string("missing key \"") + key + "\"");
  return AffgebraData{
      algebra_from_json(j.at("L"), f, n, path + "/L"),
      matrix_from_json(j.at("kappa"), f, n, n, path + "/kappa"),
      matrix_from_json(j.at("lambda"), f, n, n, path + "/lambda"),
      vector_from_json(j.at("r"), f, n, path + "/r")};
}

ordered_json data_to_json(const AffgebraData& d) {
  return ordered_json{{"L", algebra_to_json(d.L)},
                      {"kappa", matrix_to_json(d.kappa)},
                      {"lambda", matrix_to_json(d.lambda)},
                      {"r", vector_to_json(d.r)}};
}

} // namespace

std::string StructureFile::kind_name(Kind k) {
  switch (k) {
    case Kind::HomAssocAffgebra: return "hom_assoc_affgebra";
    case Kind::HomLieAffgebra: return "hom_lie_affgebra";
    case Kind::HomPreLieAffgebra: return "hom_prelie_affgebra";
    case Kind::HomLieAlgebra: return "hom_lie_algebra";
    case Kind::AffgebraData: return "affgebra_data";
    case Kind::DataHom: return "data_hom";
  }
  return "?";
}

StructureFile::Kind StructureFile::kind_from_name(const std::string& name) {
  for (Kind k : {Kind::HomAssocAffgebra, Kind::HomLieAffgebra,
                 Kind::HomPreLieAffgebra, Kind::HomLieAlgebra,
                 Kind::AffgebraData, Kind::DataHom})
    if (kind_name(k) == name) return k;
  throw SchemaError("/kind: unknown kind '" + name + "'");
}

StructureFile parse_structure(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    // nlohmann reports a byte offset; recover line and column.
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw SyntaxError(line, col, e.what());
  }
  if (!j.is_object()) throw SchemaError("/: expected object");
  for (const char* key : {"field", "kind", "dim", "payload"})
    if (!j.contains(key))
      throw SchemaError(std::string("/: missing key \"") + key + "\"");

  StructureFile out;
  out.field = field_from_json(j.at("field"));
  if (!j.at("kind").is_string()) throw SchemaError("/kind: expected string");
  out.kind = StructureFile::kind_from_name(j.at("kind").get<std::string>());
  if (!j.at("dim").is_number_unsigned())
    throw SchemaError("/dim: expected nonnegative integer");
  out.dim = j.at("dim").get<std::size_t>();

  const json& p = j.at("payload");
  const Field f = out.field;
  const std::size_t n = out.dim;
  switch (out.kind) {
    case StructureFile::Kind::HomAssocAffgebra: {
      if (!p.contains("mul") || !p.contains("alpha"))
        throw SchemaError("/payload: expected mul + alpha");
      out.payload = HomAssocAffgebra{
          n, biaffine_from_json(p.at("mul"), f, n, "/payload/mul"),
          affine_from_json(p.at("alpha"), f, n, "/payload/alpha")};
      break;
    }
    case StructureFile::Kind::HomLieAffgebra: {
      if (!p.contains("bracket") || !p.contains("alpha"))
        throw SchemaError("/payload: expected bracket + alpha");
      out.payload = HomLieAffgebra{
          n, biaffine_from_json(p.at("bracket"), f, n, "/payload/bracket"),
          affine_from_json(p.at("alpha"), f, n, "/payload/alpha")};
      break;
    }
    case StructureFile::Kind::HomPreLieAffgebra: {
      if (!p.contains("prod") || !p.contains("alpha") || !p.contains("side"))
        throw SchemaError("/payload: expected prod + alpha + side");
      const std::string side = p.at("side").get<std::string>();
      if (side != "left" && side != "right")
        throw SchemaError("/payload/side: expected \"left\" or \"right\"");
      out.payload = HomPreLieAffgebra{
          n, biaffine_from_json(p.at("prod"), f, n, "/payload/prod"),
          affine_from_json(p.at("alpha"), f, n, "/payload/alpha"),
          side == "left" ? PreLieSide::Left : PreLieSide::Right};
      break;
    }
    case StructureFile::Kind::HomLieAlgebra:
      out.payload = algebra_from_json(p, f, n, "/payload");
      break;
    case StructureFile::Kind::AffgebraData:
      out.payload = data_from_json(p, f, n, "/payload");
      break;
    case StructureFile::Kind::DataHom: {
      for (const char* key : {"psi", "qprime", "source", "target"})
        if (!p.contains(key))
          throw SchemaError(std::string("/payload: missing key \"") + key +
                            "\"");
      AffgebraData src =
          data_from_json(p.at("source"), f, n, "/payload/source");
      if (!p.at("target").is_object() || !p.at("target").contains("r") ||
          !p.at("target").at("r").is_array())
        throw SchemaError("/payload/target: expected affgebra data");
      const std::size_t m = p.at("target").at("r").size();
      AffgebraData tgt =
          data_from_json(p.at("target"), f, m, "/payload/target");
      out.payload =
          DataHom{matrix_from_json(p.at("psi"), f, m, n, "/payload/psi"),
                  vector_from_json(p.at("qprime"), f, m, "/payload/qprime"),
                  std::move(src), std::move(tgt)};
      break;
    }
  }
  return out;
}

std::string serialize(const StructureFile& f) {
  ordered_json j;
  j["field"] = field_to_json(f.field);
  j["kind"] = StructureFile::kind_name(f.kind);
  j["dim"] = f.dim;
  std::visit(
      [&j](const auto& payload) {
        using T = std::decay_t<decltype(payload)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          throw SchemaError("cannot serialize an empty structure file");
        } else if constexpr (std::is_same_v<T, HomAssocAffgebra>) {
          j["payload"] = ordered_json{{"mul", biaffine_to_json(payload.mul)},
                                      {"alpha", affine_to_json(payload.alpha)}};
        } else if constexpr (std::is_same_v<T, HomLieAffgebra>) {
          j["payload"] =
              ordered_json{{"bracket", biaffine_to_json(payload.bracket)},
                           {"alpha", affine_to_json(payload.alpha)}};
        } else if constexpr (std::is_same_v<T, HomPreLieAffgebra>) {
          j["payload"] = ordered_json{
              {"prod", biaffine_to_json(payload.prod)},
              {"alpha", affine_to_json(payload.alpha)},
              {"side", payload.side == PreLieSide::Left ? "left" : "right"}};
        } else if constexpr (std::is_same_v<T, HomLieAlgebra>) {
          j["payload"] = algebra_to_json(payload);
        } else if constexpr (std::is_same_v<T, AffgebraData>) {
          j["payload"] = data_to_json(payload);
        } else if constexpr (std::is_same_v<T, DataHom>) {
          j["payload"] = ordered_json{{"psi", matrix_to_json(payload.psi)},
                                      {"qprime", vector_to_json(payload.qprime)},
                                      {"source", data_to_json(payload.source)},
                                      {"target", data_to_json(payload.target)}};
        }
      },
      f.payload);
  return j.dump(2) + "\n";
}

StructureFile wrap(const HomAssocAffgebra& s) {
  StructureFile f;
  f.field = s.field();
  f.kind = StructureFile::Kind::HomAssocAffgebra;
  f.dim = s.dim;
  f.payload = s;
  return f;
}

StructureFile wrap(const HomLieAffgebra& s) {
  StructureFile f;
  f.field = s.field();
  f.kind = StructureFile::Kind::HomLieAffgebra;
  f.dim = s.dim;
  f.payload = s;
  return f;
}

StructureFile wrap(const HomPreLieAffgebra& s) {
  StructureFile f;
  f.field = s.field();
  f.kind = StructureFile::Kind::HomPreLieAffgebra;
  f.dim = s.dim;
  f.payload = s;
  return f;
}

StructureFile wrap(const HomLieAlgebra& s) {
  StructureFile f;
  f.field = s.field();
  f.kind = StructureFile::Kind::HomLieAlgebra;
  f.dim = s.dim;
  f.payload = s;
  return f;
}

StructureFile wrap(const AffgebraData& s) {
  StructureFile f;
  f.field = s.field();
  f.kind = StructureFile::Kind::AffgebraData;
  f.dim = s.dim();
  f.payload = s;
  return f;
}

StructureFile wrap(const DataHom& s) {
  StructureFile f;
  f.field = s.source.field();
  f.kind = StructureFile::Kind::DataHom;
  f.dim = s.source.dim();
  f.payload = s;
  return f;
}

std::string serialize_affine_map(const AffineMap& m) {
  ordered_json j;
  j["field"] = field_to_json(m.field());
  j["M"] = matrix_to_json(m.M);
  j["t"] = vector_to_json(m.t);
  return j.dump(2) + "\n";
}

AffineMap parse_affine_map(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SyntaxError(1, e.byte, e.what());
  }
  if (!j.is_object() || !j.contains("field") || !j.contains("M") ||
      !j.contains("t"))
    throw SchemaError("/: expected {field, M, t}");
  Field f = field_from_json(j.at("field"));
  if (!j.at("t").is_array()) throw SchemaError("/t: expected array");
  const std::size_t n = j.at("t").size();
  return AffineMap(matrix_from_json(j.at("M"), f, n, n, "/M"),
                   vector_from_json(j.at("t"), f, n, "/t"));
}

std::string verdicts_to_json(const std::vector<Verdict>& vs) {
  ordered_json arr = ordered_json::array();
  for (const Verdict& v : vs) {
    ordered_json jv;
    jv["check"] = v.check;
    jv["pass"] = v.pass;
    if (!v.witness.empty()) {
      ordered_json w = ordered_json::array();
      for (const Vector& point : v.witness) w.push_back(vector_to_json(point));
      jv["witness"] = w;
    }
    if (!v.residual.empty()) jv["residual"] = v.residual;
    if (!v.note.empty()) jv["note"] = v.note;
    arr.push_back(jv);
  }
  return arr.dump(2) + "\n";
}

std::string solution_space_to_json(const SolutionSpace& s) {
  ordered_json j;
  j["ambient_dim"] = s.ambient_dim;
  j["dim"] = s.dim();
  if (s.particular) j["particular"] = vector_to_json(*s.particular);
  ordered_json basis = ordered_json::array();
  for (const Vector& b : s.basis) basis.push_back(vector_to_json(b));
  j["basis"] = basis;
  return j.dump(2) + "\n";
}

std::string fiber_lie_to_json(const FiberLieResult& r) {
  ordered_json j;
  j["base"] = vector_to_json(r.base);
  j["algebra"] = algebra_to_json(r.algebra);
  return j.dump(2) + "\n";
}

std::string fiber_assoc_to_json(const FiberAssocResult& r) {
  ordered_json j;
  j["base"] = vector_to_json(r.base);
  j["algebra"] = ordered_json{{"mt", tensor_to_json(r.algebra.mt)},
                              {"alpha", matrix_to_json(r.algebra.alpha)}};
  return j.dump(2) + "\n";
}

} // namespace affalg
