#pragma once

#include <json.hpp>

#include "stemlie/hypercomplex.hpp"

namespace stemlie {

using Json = nlohmann::ordered_json;

inline const char* kToolVersion = "stemlie 0.1.0";

Json kscalar_to_json(const KScalar& x);
KScalar kscalar_from_json(const Json& j);

Json element_to_json(const ReductiveAlgebra& alg, const Element& e);
Element element_from_json(const ReductiveAlgebra& alg, const Json& j);

Json matrix_to_json(const KMatrix& m);              // column-major
KMatrix matrix_from_json(const Json& j, int rows, int cols);

Json report_to_json(const Report& r);

Json roots_to_json(const RootSystem& rs);
Json stem_to_json(const RootSystem& rs, const Stem& stem);
Json constants_to_json(const RootSystem& rs, const StructureConstants& sc);
Json classification_to_json(const ClassificationRecord& rec);

// Full structure file: spec echo, version, rho, b, the three matrices and
// the verification report.
Json hyperstructure_to_json(const ReductiveAlgebra& alg, const std::string& spec,
                            const HyperStructure& hs, const Report& certificate);

struct LoadedStructure {
  AlgebraSpec spec;
  std::vector<KScalar> rho;
  KMatrix b;
  LinOp I, J, K;
};

LoadedStructure hyperstructure_from_json(const Json& j);

} // namespace stemlie
