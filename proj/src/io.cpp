#include "hopfchrom/io.hpp"

#include <fstream>
#include <sstream>

#include "hopfchrom/errors.hpp"

namespace hopfchrom {

namespace {

const json& member(const json& j, const char* key, const std::string& ctx) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(ctx.empty() ? key : ctx + "." + key, "missing");
  return j.at(key);
}

std::size_t as_index(const json& j, std::size_t bound, const std::string& ctx) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    throw ParseError(ctx, "expected a non-negative integer index");
  const auto v = j.get<std::size_t>();
  if (v >= bound) throw ParseError(ctx, "index " + std::to_string(v) + " out of range (size " + std::to_string(bound) + ")");
  return v;
}

Scalar as_scalar(const Field& f, const json& j, const std::string& ctx) {
  try {
    if (j.is_string()) return f.parse(j.get<std::string>());
    if (j.is_number_integer()) return f.from_int(j.get<long>());
  } catch (const ParseError& e) {
    throw ParseError(ctx, e.what());
  } catch (const Error& e) {
    throw ParseError(ctx, e.what());
  }
  throw ParseError(ctx, "expected a scalar string");
}

Vector as_vector(const Field& f, const json& j, std::size_t n, const std::string& ctx) {
  if (!j.is_array() || j.size() != n) throw ParseError(ctx, "expected an array of " + std::to_string(n) + " scalars");
  Vector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(as_scalar(f, j[i], ctx + "[" + std::to_string(i) + "]"));
  return v;
}

const json& as_array(const json& j, const std::string& ctx) {
  if (!j.is_array()) throw ParseError(ctx, "expected an array");
  return j;
}

}  // namespace

json field_to_json(const FieldSpec& spec) {
  switch (spec.kind) {
    case FieldSpec::Kind::rationals:
      return {{"kind", "rationals"}};
    case FieldSpec::Kind::prime_field:
      return {{"kind", "prime-field"}, {"p", spec.p}};
    case FieldSpec::Kind::cyclotomic:
      return {{"kind", "cyclotomic"}, {"n", spec.n}};
  }
  return {};
}

FieldSpec field_from_json(const json& j) {
  const std::string kind = member(j, "kind", "field").is_string() ? j.at("kind").get<std::string>() : "";
  if (kind == "rationals") return FieldSpec::rationals();
  if (kind == "prime-field") {
    const json& p = member(j, "p", "field");
    if (!p.is_number_unsigned()) throw ParseError("field.p", "expected a positive integer");
    return FieldSpec::prime_field(p.get<std::uint64_t>());
  }
  if (kind == "cyclotomic") {
    const json& n = member(j, "n", "field");
    if (!n.is_number_unsigned()) throw ParseError("field.n", "expected a positive integer");
    return FieldSpec::cyclotomic(n.get<unsigned>());
  }
  throw ParseError("field.kind", "expected rationals, prime-field or cyclotomic");
}

json vector_to_json(const Vector& v) {
  json a = json::array();
  for (const auto& s : v) a.push_back(s.to_string());
  return a;
}

json algebra_to_json(const HopfAlgebra& h) {
  const std::size_t n = h.dim();
  json j;
  j["name"] = h.name();
  j["field"] = field_to_json(h.field().spec());
  j["dim"] = n;
  j["basis_names"] = h.basis_names();
  json mult = json::array(), comult = json::array(), antipode = json::array();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        if (!h.mult(a, b, c).is_zero()) mult.push_back({a, b, c, h.mult(a, b, c).to_string()});
        if (!h.comult(a, b, c).is_zero()) comult.push_back({a, b, c, h.comult(a, b, c).to_string()});
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (!h.antipode()(i, k).is_zero()) antipode.push_back({i, k, h.antipode()(i, k).to_string()});
  j["mult"] = std::move(mult);
  j["unit"] = vector_to_json(h.unit());
  j["comult"] = std::move(comult);
  j["counit"] = vector_to_json(h.counit());
  j["antipode"] = std::move(antipode);
  return j;
}

HopfData algebra_data_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("", "algebra file must be a JSON object");
  const Field f = [&] {
    try {
      return Field::make(field_from_json(member(j, "field", "")));
    } catch (const FieldError& e) {
      throw ParseError("field", e.what());
    }
  }();
  const json& dim = member(j, "dim", "");
  if (!dim.is_number_unsigned() || dim.get<std::size_t>() == 0) throw ParseError("dim", "expected a positive integer");
  const std::size_t n = dim.get<std::size_t>();
  const std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "H";
  HopfData d = HopfData::zeros(name, f, n);
  if (j.contains("basis_names")) {
    const json& names = as_array(j["basis_names"], "basis_names");
    if (names.size() != n) throw ParseError("basis_names", "expected " + std::to_string(n) + " names");
    for (std::size_t i = 0; i < n; ++i) {
      if (!names[i].is_string()) throw ParseError("basis_names[" + std::to_string(i) + "]", "expected a string");
      d.basis_names[i] = names[i].get<std::string>();
    }
  }
  auto triplets = [&](const char* key, auto&& store) {
    const json& list = as_array(member(j, key, ""), key);
    for (std::size_t t = 0; t < list.size(); ++t) {
      const std::string ctx = std::string(key) + "[" + std::to_string(t) + "]";
      const json& e = list[t];
      if (!e.is_array() || e.size() != 4) throw ParseError(ctx, "expected [index, index, index, scalar]");
      store(as_index(e[0], n, ctx), as_index(e[1], n, ctx), as_index(e[2], n, ctx), as_scalar(f, e[3], ctx));
    }
  };
  triplets("mult", [&](auto a, auto b, auto c, Scalar s) { d.m(a, b, c) += s; });
  triplets("comult", [&](auto a, auto b, auto c, Scalar s) { d.c(a, b, c) += s; });
  d.unit = as_vector(f, member(j, "unit", ""), n, "unit");
  d.counit = as_vector(f, member(j, "counit", ""), n, "counit");
  const json& s = as_array(member(j, "antipode", ""), "antipode");
  for (std::size_t t = 0; t < s.size(); ++t) {
    const std::string ctx = "antipode[" + std::to_string(t) + "]";
    if (!s[t].is_array() || s[t].size() != 3) throw ParseError(ctx, "expected [row, column, scalar]");
    d.antipode(as_index(s[t][0], n, ctx), as_index(s[t][1], n, ctx)) += as_scalar(f, s[t][2], ctx);
  }
  return d;
}

json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i)
      if (text[i] == '\n') ++line;
    throw ParseError(source + ":" + std::to_string(line), e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

HopfData load_algebra_data(const std::string& path) { return algebra_data_from_json(read_json_file(path)); }

HopfAlgebra load_algebra(const std::string& path) { return HopfAlgebra::make(load_algebra_data(path)); }

void save_algebra(const HopfAlgebra& h, const std::string& path) {
  write_text_file(path, algebra_to_json(h).dump(2) + "\n");
}

json matrix_to_json(const Matrix& m) {
  json entries = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k)
      if (!m(i, k).is_zero()) entries.push_back({i, k, m(i, k).to_string()});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Matrix matrix_from_json(const Field& f, const json& j) {
  const json& r = member(j, "rows", "matrix");
  const json& c = member(j, "cols", "matrix");
  if (!r.is_number_unsigned() || !c.is_number_unsigned()) throw ParseError("matrix", "rows/cols must be integers");
  Matrix m(f, r.get<std::size_t>(), c.get<std::size_t>());
  const json& entries = as_array(member(j, "entries", "matrix"), "matrix.entries");
  for (std::size_t t = 0; t < entries.size(); ++t) {
    const std::string ctx = "entries[" + std::to_string(t) + "]";
    const json& e = entries[t];
    if (!e.is_array() || e.size() != 3) throw ParseError(ctx, "expected [row, column, scalar]");
    m(as_index(e[0], m.rows(), ctx), as_index(e[1], m.cols(), ctx)) += as_scalar(f, e[2], ctx);
  }
  return m;
}

json module_to_json(const HModule& m) {
  json acts = json::array();
  for (std::size_t i = 0; i < m.algebra().dim(); ++i) acts.push_back(matrix_to_json(m.action(i))["entries"]);
  return {{"label", m.label()}, {"dim", m.dim()}, {"action", std::move(acts)}};
}

ModuleRef module_from_json(const HopfRef& h, const json& j) {
  const json& dim = member(j, "dim", "module");
  if (!dim.is_number_unsigned()) throw ParseError("module.dim", "expected a non-negative integer");
  const std::size_t d = dim.get<std::size_t>();
  const json& acts = as_array(member(j, "action", "module"), "module.action");
  if (acts.size() != h->dim())
    throw ParseError("module.action", "expected " + std::to_string(h->dim()) + " action matrices");
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < acts.size(); ++i) {
    try {
      action.push_back(matrix_from_json(h->field(), {{"rows", d}, {"cols", d}, {"entries", acts[i]}}));
    } catch (const ParseError& e) {
      throw ParseError("module.action[" + std::to_string(i) + "]", e.what());
    }
  }
  const std::string label = j.contains("label") && j["label"].is_string() ? j["label"].get<std::string>() : "P";
  return std::make_shared<const HModule>(HModule::make(h, std::move(action), label));
}

ModuleRef load_module(const HopfRef& h, const std::string& path) { return module_from_json(h, read_json_file(path)); }

namespace {

json word_to_json(const TensorWord& w) {
  json a = json::array();
  for (const auto& m : w) a.push_back(m->label());
  return a;
}

}  // namespace

json morphism_to_json(const Morphism& m) {
  json j = matrix_to_json(m.matrix);
  j["name"] = m.name;
  j["source"] = word_to_json(m.source);
  j["target"] = word_to_json(m.target);
  return j;
}

json integrals_to_json(const HopfAlgebra& h, const IntegralData& d) {
  return {{"algebra", h.name()},
          {"field", h.field().spec().to_string()},
          {"basis_names", h.basis_names()},
          {"cointegral", vector_to_json(d.cointegral)},
          {"integral", vector_to_json(d.integral.coeffs)},
          {"alpha", vector_to_json(d.alpha.coeffs)},
          {"distinguished_a", vector_to_json(d.distinguished)},
          {"unimodular", is_unimodular(h, d)}};
}

json report_to_json(const IdentityReport& r) {
  json j = {{"algebra", r.algebra}, {"side", to_string(r.side)}, {"P", r.P}, {"X", r.X},
            {"equal", r.equal},     {"h_linear", r.h_linear}, {"holds", r.holds()},
            {"millis", r.millis}};
  if (r.mismatch) {
    j["mismatch"] = {{"row", r.mismatch->row}, {"col", r.mismatch->col}, {"expected", r.expected}, {"actual", r.actual}};
  }
  return j;
}

}  // namespace hopfchrom
