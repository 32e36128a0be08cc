#ifndef AFFALG_IO_HPP
#define AFFALG_IO_HPP

#include <string>
#include <variant>

#include "affalg/morphisms.hpp"

namespace affalg {

/// A parsed structure file: field descriptor, kind tag, dimension and the
/// kind-specific payload. Scalars serialize as "p/q" strings over Q and as
/// residues over F_p; the field descriptor is "Q" or {"Fp": p} with p odd.
struct StructureFile {
  enum class Kind {
    HomAssocAffgebra,
    HomLieAffgebra,
    HomPreLieAffgebra,
    HomLieAlgebra,
    AffgebraData,
    DataHom,
  };

  Field field = Field::rationals();
  Kind kind = Kind::HomLieAlgebra;
  std::size_t dim = 0;
  std::variant<std::monostate, HomAssocAffgebra, HomLieAffgebra,
               HomPreLieAffgebra, HomLieAlgebra, AffgebraData, DataHom>
      payload;

  static std::string kind_name(Kind k);
  static Kind kind_from_name(const std::string& name);
};

/// Parses and validates a structure file. Errors: SyntaxError (malformed
/// JSON, with line:col), SchemaError (wrong shape, with a path), FieldError
/// (bad field descriptor, e.g. p = 2).
StructureFile parse_structure(const std::string& text);

/// Canonical serialization; parse(serialize(x)) == x and serialization is
/// byte-stable after one normalization pass.
std::string serialize(const StructureFile& f);

StructureFile wrap(const HomAssocAffgebra& s);
StructureFile wrap(const HomLieAffgebra& s);
StructureFile wrap(const HomPreLieAffgebra& s);
StructureFile wrap(const HomLieAlgebra& s);
StructureFile wrap(const AffgebraData& s);
StructureFile wrap(const DataHom& s);

/// Standalone affine-map file {"M": [[..]], "t": [..]} with a field tag,
/// used by the twist command.
std::string serialize_affine_map(const AffineMap& m);
AffineMap parse_affine_map(const std::string& text);

// Report fragments shared by the CLI and tests.
std::string verdicts_to_json(const std::vector<Verdict>& vs);
std::string solution_space_to_json(const SolutionSpace& s);
std::string fiber_lie_to_json(const FiberLieResult& r);
std::string fiber_assoc_to_json(const FiberAssocResult& r);

} // namespace affalg

#endif
