#include "types.hpp"

#include <algorithm>

namespace lie {

const char* err_name(Err e) {
  switch (e) {
    case Err::InvalidType: return "InvalidType";
    case Err::NonDominant: return "NonDominant";
    case Err::DimensionCapExceeded: return "DimensionCapExceeded";
    case Err::IncompatibleShapes: return "IncompatibleShapes";
    case Err::NotASimpleSystem: return "NotASimpleSystem";
    case Err::NonIntegerIndex: return "NonIntegerIndex";
    case Err::UnresolvedMechanism: return "UnresolvedMechanism";
    case Err::IncompatibleChain: return "IncompatibleChain";
    case Err::UnsupportedModel: return "UnsupportedModel";
    case Err::UnclassifiableDiagram: return "UnclassifiableDiagram";
    case Err::UnknownRealForm: return "UnknownRealForm";
    case Err::UnsupportedCase: return "UnsupportedCase";
    case Err::ParseError: return "ParseError";
    case Err::UnresolvedReference: return "UnresolvedReference";
    case Err::DuplicateRow: return "DuplicateRow";
    case Err::MissingAnnotation: return "MissingAnnotation";
  }
  return "Unknown";
}

namespace {
constexpr int kMaxClassicalRank = 12;
}

SimpleTypeId SimpleTypeId::make(char family, int rank) {
  // rank-1 and low-rank coincidences collapse to one canonical name
  if ((family == 'B' || family == 'C' || family == 'D') && rank == 1)
    return {'A', 1};
  if (family == 'C' && rank == 2) return {'B', 2};
  if (family == 'D' && rank == 3) return {'A', 3};

  switch (family) {
    case 'A':
      if (rank < 1 || rank > kMaxClassicalRank) fail(Err::InvalidType, "A rank");
      break;
    case 'B':
    case 'C':
      if (rank < 2 || rank > kMaxClassicalRank)
        fail(Err::InvalidType, std::string(1, family) + " rank");
      break;
    case 'D':
      if (rank < 3 || rank > kMaxClassicalRank) fail(Err::InvalidType, "D rank");
      break;
    case 'E':
      if (rank < 6 || rank > 8) fail(Err::InvalidType, "E rank");
      break;
    case 'F':
      if (rank != 4) fail(Err::InvalidType, "F rank");
      break;
    case 'G':
      if (rank != 2) fail(Err::InvalidType, "G rank");
      break;
    default:
      fail(Err::InvalidType, std::string("family ") + family);
  }
  return {family, rank};
}

SimpleTypeId SimpleTypeId::parse(const std::string& token) {
  if (token.size() < 2) fail(Err::InvalidType, "type token '" + token + "'");
  char fam = token[0];
  if (fam >= 'a' && fam <= 'g') fam = static_cast<char>(fam - 'a' + 'A');
  int rank = 0;
  for (size_t i = 1; i < token.size(); ++i) {
    if (token[i] < '0' || token[i] > '9')
      fail(Err::InvalidType, "type token '" + token + "'");
    rank = rank * 10 + (token[i] - '0');
  }
  return make(fam, rank);
}

int SimpleTypeId::dimension() const {
  int n = rank;
  switch (family) {
    case 'A': return n * (n + 2);
    case 'B':
    case 'C': return n * (2 * n + 1);
    case 'D': return n * (2 * n - 1);
    case 'E': return rank == 6 ? 78 : rank == 7 ? 133 : 248;
    case 'F': return 52;
    case 'G': return 14;
  }
  fail(Err::InvalidType, "dimension");
}

ComplexSemisimpleDesc ComplexSemisimpleDesc::of(std::vector<SimpleTypeId> fs) {
  if (fs.empty()) fail(Err::InvalidType, "empty semisimple descriptor");
  std::sort(fs.begin(), fs.end());
  return {std::move(fs)};
}

std::string ComplexSemisimpleDesc::str() const {
  std::string s;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) s += "+";
    s += factors[i].str();
  }
  return s;
}

int ComplexSemisimpleDesc::total_rank() const {
  int r = 0;
  for (auto& f : factors) r += f.rank;
  return r;
}

}  // namespace lie
