#pragma once

#include <optional>
#include <string>

#include "bds.hpp"
#include "realforms.hpp"

namespace lie {

// Exponents of the ambient type, recovered from the height distribution of
// the positive roots.
std::vector<int> exponents(SimpleTypeId type);

// Mechanism hints name how an index is recomputed:
//   trusted                      imported table data, never recomputed
//   realform                     real form of a realified ambient, index 1
//   real(<cmech>)                complexify through the catalog, then <cmech>
//   cplx(<cmech>)                complex subalgebra of a realified ambient
// with <cmech> one of
//   bds(<Type>:del=<k>[,keep=<i,...>])    extended-diagram deletion factors
//   levi(<Type>:del=<k>[,keep=<i,...>])   plain-diagram deletion factors
//   principal                             principal sl2 from the exponents
//   block(<spec>)                         classical block embedding
//   auto                                  search registered mechanisms
struct Hint {
  enum class Kind { Trusted, RealForm, Real, Cplx };
  Kind kind = Kind::Trusted;
  std::string cmech;

  static Hint parse(const std::string& text);
  bool recomputable() const { return kind != Kind::Trusted; }
};

// Evaluate a complex mechanism inside the given ambient.
IndexResult resolve_cmech(SimpleTypeId ambient, const std::string& cmech);

// Search the registered mechanisms (Borel-de Siebenthal factor subsets and
// classical block embeddings) for the unique index of the given subalgebra.
IndexResult auto_resolve(SimpleTypeId ambient, const ComplexSemisimpleDesc& sub);

// Index of a real pair: complexifies the factors, applies the hint's complex
// mechanism, and validates factor types and doubled-pair equality.
IndexResult index_real(const RealFormCatalog& cat,
                       const std::vector<std::string>& sub_factors,
                       const std::string& ambient, const Hint& hint);

}  // namespace lie
