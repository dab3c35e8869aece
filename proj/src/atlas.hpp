#pragma once

#include <map>
#include <string>
#include <vector>

#include "hints.hpp"

namespace lie {

// One row of the final classification tables. Printed rows carrying several
// index values for distinct subalgebras are split into parts 'a', 'b', ...
struct TGEntry {
  std::string table;   // g2, f4, e6, e7, e8
  int ordinal = 0;
  char part = 0;
  std::string ambient;                // real form id of the ambient space
  std::vector<std::string> factors;   // real form ids and flat tokens R^k
  std::vector<long long> index;       // printed tuple
  std::string reflective;             // yes / no / unstated
  int dim = 0;
  Hint hint;
  std::string hint_text;
  bool arity_flag = false;  // printed tuple length vs complexified factors

  std::string row_id() const;
};

// One candidate-set row: subalgebra with its deleted compact ideals.
struct CandidateEntry {
  std::string ambient;
  int ordinal = 0;
  std::vector<std::string> factors;    // surviving factors
  std::vector<std::string> cancelled;  // deleted ideals ("R" for the center)
  std::vector<long long> index;
  Hint hint;
  std::string hint_text;
};

// One row of the maximal-subalgebra list for a complex ambient.
struct LComplexEntry {
  std::string ambient;  // realified form id
  int ordinal = 0;
  char part = 0;
  std::vector<std::string> factors;
  std::vector<long long> index;
  Hint hint;
  std::string hint_text;

  std::string row_id() const;
};

// Parameterized classical row, stored verbatim.
struct IxtgRow {
  int ordinal = 0;
  std::string space, submanifold, codim, conditions;
};

// Minimal-codimension submanifold of an exceptional space.
struct ThmBPair {
  int ordinal = 0;
  std::string ambient;
  std::vector<std::string> sigma;
};

struct Atlas {
  const RealFormCatalog* catalog = nullptr;
  std::vector<TGEntry> tg;
  std::vector<CandidateEntry> candidates;
  std::vector<LComplexEntry> lcomplex;
  std::vector<IxtgRow> ixtg;
  std::vector<ThmBPair> pairs;

  std::vector<const TGEntry*> table(const std::string& name) const;
  std::map<std::string, int> row_counts() const;
  std::string dump() const;  // bit-exact modulo comments
};

Atlas load_dataset(const std::string& text, const RealFormCatalog& catalog);
Atlas load_dataset_file(const std::string& path, const RealFormCatalog& catalog);
const Atlas& bundled_atlas();

// ---- verification ----------------------------------------------------------

struct RowStatus {
  std::string row;
  std::string status;  // ok / mismatch / skipped
  std::string detail;
};

struct VerifyReport {
  std::vector<RowStatus> rows;
  int checked = 0, matched = 0, skipped = 0, mismatched = 0;

  void add(const std::string& row, bool ok, const std::string& detail);
  void skip(const std::string& row, const std::string& detail);
  void merge(const VerifyReport& other);
};

// every row's dimension column against the catalog
VerifyReport verify_dimensions(const Atlas& atlas);
// recompute every hinted index, multiset comparison against the printed tuple
VerifyReport verify_indices(const Atlas& atlas);

// Table-10 instance: concrete spaces, expected codimension, mechanism.
struct IxtgInstance {
  int ordinal = 0;
  std::string label;
  std::string space;
  std::vector<std::string> sigma;
  int codim = 0;
  std::string hint;  // full hint text; "flat" marks a dimension-only instance
};
std::vector<IxtgInstance> instantiate_ixtg(const Atlas& atlas);

// codimension and all-ones checks for the classical rows and the listed
// minimal pairs of the exceptional spaces
VerifyReport verify_theorem_b(const Atlas& atlas);

enum class Maximality { NotMaximal, Undetermined };
Maximality maximality_rank_filter(const Atlas& atlas, const CandidateEntry& entry);

// the rank filter may never reject a subalgebra that the final tables keep
VerifyReport verify_candidates(const Atlas& atlas);

}  // namespace lie
