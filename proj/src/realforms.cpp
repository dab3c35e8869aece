#include "realforms.hpp"

#include <fstream>
#include <sstream>

#include "data.hpp"

namespace lie {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

int to_int(const std::string& s, const std::string& what) {
  try {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    fail(Err::ParseError, "bad integer '" + s + "' in " + what);
  }
}

}  // namespace

std::vector<SimpleTypeId> ComplexifiedPair::expanded() const {
  std::vector<SimpleTypeId> out;
  for (auto& f : factors) {
    out.push_back(f.base);
    if (f.doubled) out.push_back(f.base);
  }
  return out;
}

RealFormCatalog RealFormCatalog::parse(const std::string& text) {
  RealFormCatalog cat;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip(raw);
    if (line.empty() || line[0] == '#') continue;
    auto fields = split(line, '|');
    if (fields.size() != 10)
      fail(Err::ParseError, "catalog line " + std::to_string(lineno) +
                                ": expected 10 fields");
    for (auto& f : fields) f = strip(f);
    RealFormDesc d;
    d.id = fields[0];
    d.base = SimpleTypeId::make(fields[1][0], to_int(fields[2], "rank"));
    d.character = to_int(fields[3], "character");
    d.dim_g = to_int(fields[4], "dim_g");
    d.dim_k = to_int(fields[5], "dim_k");
    d.absolutely_simple = fields[6] == "yes";
    d.dim_p = d.dim_g - d.dim_k;
    d.isotropy = fields[8];
    d.real_rank = to_int(fields[9], "real_rank");

    // structural invariants of the record
    std::string comp = d.absolutely_simple
                           ? d.base.str()
                           : d.base.str() + "+" + d.base.str();
    std::string stated = fields[7];
    {  // canonicalize the stated complexification tokens
      std::string canon;
      for (auto& tok : split(stated, '+')) {
        if (!canon.empty()) canon += "+";
        canon += SimpleTypeId::parse(strip(tok)).str();
      }
      stated = canon;
    }
    if (stated != comp)
      fail(Err::ParseError, d.id + ": complexification rule mismatch");
    int dim_c = d.base.dimension();
    if (d.dim_g != (d.absolutely_simple ? dim_c : 2 * dim_c))
      fail(Err::ParseError, d.id + ": dimension does not match complexification");
    if (d.character != d.dim_p - d.dim_k)
      fail(Err::ParseError, d.id + ": character mismatch");
    if (d.dim_p < 0) fail(Err::ParseError, d.id + ": negative dim_p");

    if (cat.by_id_.count(d.id)) fail(Err::DuplicateRow, "real form " + d.id);
    cat.by_id_[d.id] = cat.forms_.size();
    cat.forms_.push_back(std::move(d));
  }
  if (cat.forms_.empty()) fail(Err::ParseError, "empty catalog");
  return cat;
}

const RealFormCatalog& RealFormCatalog::bundled() {
  static RealFormCatalog cat = parse(data::realforms_cat);
  return cat;
}

RealFormCatalog RealFormCatalog::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Err::ParseError, "cannot open catalog file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

const RealFormDesc& RealFormCatalog::lookup(const std::string& id) const {
  auto it = by_id_.find(id);
  if (it == by_id_.end()) fail(Err::UnknownRealForm, id);
  return forms_[it->second];
}

bool RealFormCatalog::contains(const std::string& id) const {
  return by_id_.count(id) != 0;
}

SymmetricSpaceDesc RealFormCatalog::space(const std::string& id) const {
  const RealFormDesc& d = lookup(id);
  if (d.compact()) fail(Err::UnsupportedCase, id + " is compact");
  return {d.id, d.isotropy, d.dim_p, d.real_rank,
          d.absolutely_simple ? '3' : '4'};
}

bool RealFormCatalog::is_flat_token(const std::string& token, int* k) {
  if (token == "R") {
    if (k) *k = 1;
    return true;
  }
  if (token.rfind("R^", 0) == 0) {
    int v = std::atoi(token.c_str() + 2);
    if (v <= 0) return false;
    if (k) *k = v;
    return true;
  }
  return false;
}

int RealFormCatalog::space_dim(const std::vector<std::string>& factors) const {
  int total = 0;
  for (auto& f : factors) {
    int flat = 0;
    if (is_flat_token(f, &flat))
      total += flat;
    else
      total += lookup(f).dim_p;
  }
  return total;
}

ComplexifiedPair RealFormCatalog::complexify_factors(
    const std::vector<std::string>& subs, const std::string& ambient) const {
  const RealFormDesc& amb = lookup(ambient);
  if (amb.compact()) fail(Err::UnsupportedCase, "compact ambient " + ambient);
  ComplexifiedPair out;
  out.ambient = amb.base;
  if (subs.empty()) fail(Err::UnsupportedCase, "no subalgebra factors");

  if (amb.realified()) {
    // either a single real form of the ambient complex algebra, or a
    // complex subalgebra h (= h + ih) given by realified factors
    if (subs.size() == 1) {
      const RealFormDesc& s = lookup(subs[0]);
      if (s.absolutely_simple) {
        if (s.base != amb.base)
          fail(Err::UnsupportedCase,
               subs[0] + " is not a real form of " + ambient);
        out.kind = ComplexifiedPair::Kind::RealFormOfComplex;
        return out;
      }
    }
    for (auto& id : subs) {
      const RealFormDesc& s = lookup(id);
      if (!s.realified())
        fail(Err::UnsupportedCase,
             id + " is neither complex nor a real form of " + ambient);
      out.factors.push_back({s.base, false, id});
    }
    return out;
  }

  for (auto& id : subs) {
    const RealFormDesc& s = lookup(id);
    out.factors.push_back({s.base, s.realified(), id});
  }
  return out;
}

ComplexifiedPair RealFormCatalog::complexify_pair(const std::string& sub,
                                                  const std::string& ambient) const {
  return complexify_factors({sub}, ambient);
}

}  // namespace lie
