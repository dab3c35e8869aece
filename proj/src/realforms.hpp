#pragma once

#include <map>
#include <string>
#include <vector>

#include "types.hpp"

namespace lie {

// One real form of a simple complex Lie algebra. Realified forms (a complex
// algebra viewed as real) complexify to two copies of the base type.
struct RealFormDesc {
  std::string id;
  SimpleTypeId base;  // canonical complexification type
  bool absolutely_simple = true;
  int character = 0;
  int dim_g = 0, dim_k = 0, dim_p = 0;
  std::string isotropy;
  int real_rank = 0;

  bool compact() const { return dim_p == 0; }
  bool realified() const { return !absolutely_simple; }
};

// The symmetric space G/K generated by a non-compact real form.
struct SymmetricSpaceDesc {
  std::string isometry;
  std::string isotropy;
  int dim = 0;
  int rank = 0;
  char type = '3';  // '3' = type III (absolutely simple), '4' = type IV
};

// Complexification skeleton of a (semisimple sub, simple ambient) pair.
struct ComplexifiedPair {
  enum class Kind { General, RealFormOfComplex };
  struct Factor {
    SimpleTypeId base;
    bool doubled = false;   // realified sub inside an absolutely simple ambient
    std::string from;       // real form the factor came from
  };
  Kind kind = Kind::General;
  SimpleTypeId ambient;
  std::vector<Factor> factors;

  // complex factor types, doubled factors contributing two copies
  std::vector<SimpleTypeId> expanded() const;
};

class RealFormCatalog {
 public:
  static RealFormCatalog parse(const std::string& text);
  static const RealFormCatalog& bundled();
  static RealFormCatalog load_file(const std::string& path);

  const RealFormDesc& lookup(const std::string& id) const;
  bool contains(const std::string& id) const;
  const std::vector<RealFormDesc>& all() const { return forms_; }

  SymmetricSpaceDesc space(const std::string& id) const;

  // Sum of factor dimensions; tokens are real form ids, "R" or "R^k".
  int space_dim(const std::vector<std::string>& factors) const;
  static bool is_flat_token(const std::string& token, int* k = nullptr);

  ComplexifiedPair complexify_pair(const std::string& sub,
                                   const std::string& ambient) const;
  ComplexifiedPair complexify_factors(const std::vector<std::string>& subs,
                                      const std::string& ambient) const;

 private:
  std::vector<RealFormDesc> forms_;
  std::map<std::string, size_t> by_id_;
};

}  // namespace lie
