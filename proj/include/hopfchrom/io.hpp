#pragma once

// JSON serialization of algebras, modules, morphisms and reports.
// See docs/algebra-format.md for the file schema.

#include <string>

#include <json.hpp>

#include "hopfchrom/chromatic.hpp"
#include "hopfchrom/hmod.hpp"
#include "hopfchrom/hopf.hpp"
#include "hopfchrom/integrals.hpp"

namespace hopfchrom {

using json = nlohmann::json;

json field_to_json(const FieldSpec& spec);
FieldSpec field_from_json(const json& j);

json algebra_to_json(const HopfAlgebra& h);
/// Structure constants only; run verify_hopf_axioms or HopfAlgebra::make next.
HopfData algebra_data_from_json(const json& j);

/// Parses JSON text; syntax errors are reported with the line number.
json parse_json_text(const std::string& text, const std::string& source);
json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

HopfData load_algebra_data(const std::string& path);
HopfAlgebra load_algebra(const std::string& path);
void save_algebra(const HopfAlgebra& h, const std::string& path);

json module_to_json(const HModule& m);
ModuleRef module_from_json(const HopfRef& h, const json& j);
ModuleRef load_module(const HopfRef& h, const std::string& path);

json vector_to_json(const Vector& v);
/// Sparse: {"rows", "cols", "entries": [[i, j, "s"], ...]}.
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Field& f, const json& j);

json morphism_to_json(const Morphism& m);
json integrals_to_json(const HopfAlgebra& h, const IntegralData& d);
json report_to_json(const IdentityReport& r);

}  // namespace hopfchrom
