#include "atlas.hpp"

#include <algorithm>
#include <fstream>
#include <set>
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

std::vector<std::string> parse_list(const std::string& field) {
  std::vector<std::string> out;
  if (strip(field) == "-" || strip(field).empty()) return out;
  for (auto& t : split(field, ';')) out.push_back(strip(t));
  return out;
}

std::vector<long long> parse_tuple(const std::string& field, int lineno) {
  std::vector<long long> out;
  for (auto& t : split(field, ',')) {
    std::string s = strip(t);
    char* end = nullptr;
    long long v = std::strtoll(s.c_str(), &end, 10);
    if (!end || *end != '\0' || v <= 0)
      fail(Err::ParseError,
           "line " + std::to_string(lineno) + ": bad index tuple '" + field + "'");
    out.push_back(v);
  }
  return out;
}

void parse_ordinal(const std::string& tok, int lineno, int* ordinal, char* part) {
  size_t i = 0;
  while (i < tok.size() && isdigit(static_cast<unsigned char>(tok[i]))) ++i;
  if (i == 0) fail(Err::ParseError, "line " + std::to_string(lineno) + ": ordinal");
  *ordinal = std::atoi(tok.substr(0, i).c_str());
  *part = 0;
  if (i < tok.size()) {
    if (i + 1 != tok.size() || tok[i] < 'a' || tok[i] > 'z')
      fail(Err::ParseError, "line " + std::to_string(lineno) + ": ordinal part");
    *part = tok[i];
  }
}

// number of complexified simple-ideal entries the printed tuple should carry
int expected_arity(const RealFormCatalog& cat, const std::string& ambient,
                   const std::vector<std::string>& factors) {
  const RealFormDesc& amb = cat.lookup(ambient);
  int n = 0;
  for (auto& f : factors) {
    if (RealFormCatalog::is_flat_token(f)) continue;
    const RealFormDesc& d = cat.lookup(f);
    if (amb.realified())
      n += 1;  // complex subalgebra factor, or the whole real form
    else
      n += d.realified() ? 2 : 1;
  }
  return n;
}

}  // namespace

std::string TGEntry::row_id() const {
  std::string id = table + ":" + std::to_string(ordinal);
  if (part) id += part;
  return id;
}

std::string LComplexEntry::row_id() const {
  std::string id = "lcx:" + ambient + ":" + std::to_string(ordinal);
  if (part) id += part;
  return id;
}

std::vector<const TGEntry*> Atlas::table(const std::string& name) const {
  std::vector<const TGEntry*> out;
  for (auto& e : tg)
    if (e.table == name) out.push_back(&e);
  return out;
}

std::map<std::string, int> Atlas::row_counts() const {
  std::map<std::string, int> c;
  for (auto& e : tg) ++c[e.table];
  c["candidates"] = static_cast<int>(candidates.size());
  c["lcomplex"] = static_cast<int>(lcomplex.size());
  c["ixtg"] = static_cast<int>(ixtg.size());
  c["pairs"] = static_cast<int>(pairs.size());
  return c;
}

namespace {
std::string join(const std::vector<std::string>& v, char sep) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += v[i];
  }
  return s.empty() ? "-" : s;
}

std::string tuple_str(const std::vector<long long>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}
}  // namespace

std::string Atlas::dump() const {
  std::string out;
  for (auto& e : tg) {
    std::string ord = std::to_string(e.ordinal);
    if (e.part) ord += e.part;
    out += "tg|" + e.table + "|" + ord + "|" + e.ambient + "|" +
           join(e.factors, ';') + "|" + tuple_str(e.index) + "|" + e.reflective +
           "|" + std::to_string(e.dim) + "|" + e.hint_text + "\n";
  }
  for (auto& e : candidates)
    out += "cand|" + e.ambient + "|" + std::to_string(e.ordinal) + "|" +
           join(e.factors, ';') + "|" + join(e.cancelled, ';') + "|" +
           tuple_str(e.index) + "|" + e.hint_text + "\n";
  for (auto& e : lcomplex) {
    std::string ord = std::to_string(e.ordinal);
    if (e.part) ord += e.part;
    out += "lcx|" + e.ambient + "|" + ord + "|" + join(e.factors, ';') + "|" +
           tuple_str(e.index) + "|" + e.hint_text + "\n";
  }
  for (auto& r : ixtg)
    out += "ixtg|" + std::to_string(r.ordinal) + "|" + r.space + "|" +
           r.submanifold + "|" + r.codim + "|" + r.conditions + "\n";
  for (auto& p : pairs)
    out += "pair|" + std::to_string(p.ordinal) + "|" + p.ambient + "|" +
           join(p.sigma, ';') + "\n";
  return out;
}

Atlas load_dataset(const std::string& text, const RealFormCatalog& catalog) {
  Atlas atlas;
  atlas.catalog = &catalog;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  bool any = false;
  std::set<std::string> row_ids;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip(raw);
    if (line.empty() || line[0] == '#') continue;
    any = true;
    auto f = split(line, '|');
    for (auto& x : f) x = strip(x);
    const std::string& kind = f[0];
    auto want = [&](size_t n) {
      if (f.size() != n)
        fail(Err::ParseError, "line " + std::to_string(lineno) + ": expected " +
                                  std::to_string(n) + " fields");
    };
    if (kind == "tg") {
      want(9);
      TGEntry e;
      e.table = f[1];
      parse_ordinal(f[2], lineno, &e.ordinal, &e.part);
      e.ambient = f[3];
      e.factors = parse_list(f[4]);
      e.index = parse_tuple(f[5], lineno);
      e.reflective = f[6];
      if (e.reflective != "yes" && e.reflective != "no" && e.reflective != "unstated")
        fail(Err::ParseError, "line " + std::to_string(lineno) + ": reflective");
      e.dim = std::atoi(f[7].c_str());
      if (e.dim <= 0) fail(Err::ParseError, "line " + std::to_string(lineno) + ": dim");
      e.hint_text = f[8];
      e.hint = Hint::parse(f[8]);
      if (!row_ids.insert("tg:" + e.row_id()).second)
        fail(Err::DuplicateRow, e.row_id());
      atlas.tg.push_back(std::move(e));
    } else if (kind == "cand") {
      want(7);
      CandidateEntry e;
      e.ambient = f[1];
      char part = 0;
      parse_ordinal(f[2], lineno, &e.ordinal, &part);
      e.factors = parse_list(f[3]);
      e.cancelled = parse_list(f[4]);
      e.index = parse_tuple(f[5], lineno);
      e.hint_text = f[6];
      e.hint = Hint::parse(f[6]);
      if (!row_ids.insert("cand:" + e.ambient + ":" + f[2]).second)
        fail(Err::DuplicateRow, "cand " + e.ambient + ":" + f[2]);
      atlas.candidates.push_back(std::move(e));
    } else if (kind == "lcx") {
      want(6);
      LComplexEntry e;
      e.ambient = f[1];
      parse_ordinal(f[2], lineno, &e.ordinal, &e.part);
      e.factors = parse_list(f[3]);
      e.index = parse_tuple(f[4], lineno);
      e.hint_text = f[5];
      e.hint = Hint::parse(f[5]);
      if (!row_ids.insert(e.row_id()).second) fail(Err::DuplicateRow, e.row_id());
      atlas.lcomplex.push_back(std::move(e));
    } else if (kind == "ixtg") {
      want(6);
      IxtgRow r;
      char part = 0;
      parse_ordinal(f[1], lineno, &r.ordinal, &part);
      r.space = f[2];
      r.submanifold = f[3];
      r.codim = f[4];
      r.conditions = f[5];
      if (!row_ids.insert("ixtg:" + f[1]).second)
        fail(Err::DuplicateRow, "ixtg " + f[1]);
      atlas.ixtg.push_back(std::move(r));
    } else if (kind == "pair") {
      want(4);
      ThmBPair p;
      char part = 0;
      parse_ordinal(f[1], lineno, &p.ordinal, &part);
      p.ambient = f[2];
      p.sigma = parse_list(f[3]);
      if (!row_ids.insert("pair:" + f[1]).second)
        fail(Err::DuplicateRow, "pair " + f[1]);
      atlas.pairs.push_back(std::move(p));
    } else {
      fail(Err::ParseError, "line " + std::to_string(lineno) + ": record kind '" +
                                kind + "'");
    }
  }
  if (!any) fail(Err::ParseError, "dataset file has no records");

  // resolve every cross-reference now
  for (auto& e : atlas.tg) {
    catalog.lookup(e.ambient);
    for (auto& f : e.factors)
      if (!RealFormCatalog::is_flat_token(f)) catalog.lookup(f);
    e.arity_flag = static_cast<int>(e.index.size()) !=
                   expected_arity(catalog, e.ambient, e.factors);
  }
  for (auto& e : atlas.candidates) {
    catalog.lookup(e.ambient);
    for (auto& f : e.factors) catalog.lookup(f);
    for (auto& c : e.cancelled)
      if (!RealFormCatalog::is_flat_token(c)) catalog.lookup(c);
  }
  for (auto& e : atlas.lcomplex) {
    if (!catalog.lookup(e.ambient).realified())
      fail(Err::UnresolvedReference, e.row_id() + ": ambient is not complex");
    for (auto& f : e.factors) catalog.lookup(f);
  }
  for (auto& p : atlas.pairs) {
    catalog.lookup(p.ambient);
    for (auto& f : p.sigma)
      if (!RealFormCatalog::is_flat_token(f)) catalog.lookup(f);
  }
  return atlas;
}

Atlas load_dataset_file(const std::string& path, const RealFormCatalog& catalog) {
  std::ifstream in(path);
  if (!in) fail(Err::ParseError, "cannot open dataset file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_dataset(ss.str(), catalog);
}

const Atlas& bundled_atlas() {
  static Atlas atlas = load_dataset(data::atlas_dat, RealFormCatalog::bundled());
  return atlas;
}

void VerifyReport::add(const std::string& row, bool ok, const std::string& detail) {
  ++checked;
  if (ok) {
    ++matched;
    rows.push_back({row, "ok", detail});
  } else {
    ++mismatched;
    rows.push_back({row, "mismatch", detail});
  }
}

void VerifyReport::skip(const std::string& row, const std::string& detail) {
  ++skipped;
  rows.push_back({row, "skipped", detail});
}

void VerifyReport::merge(const VerifyReport& other) {
  rows.insert(rows.end(), other.rows.begin(), other.rows.end());
  checked += other.checked;
  matched += other.matched;
  skipped += other.skipped;
  mismatched += other.mismatched;
}

VerifyReport verify_dimensions(const Atlas& atlas) {
  VerifyReport rep;
  for (auto& e : atlas.tg) {
    int got = atlas.catalog->space_dim(e.factors);
    rep.add(e.row_id(), got == e.dim,
            "dim " + std::to_string(got) + " vs " + std::to_string(e.dim));
  }
  return rep;
}

namespace {

std::vector<long long> sorted(std::vector<long long> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<std::string> nonflat(const std::vector<std::string>& fs) {
  std::vector<std::string> out;
  for (auto& f : fs)
    if (!RealFormCatalog::is_flat_token(f)) out.push_back(f);
  return out;
}

void verify_one_index(const Atlas& atlas, const std::string& row,
                      const std::vector<std::string>& factors,
                      const std::string& ambient, const Hint& hint,
                      const std::vector<long long>& printed, VerifyReport* rep) {
  if (!hint.recomputable()) {
    rep->skip(row, "trusted-only");
    return;
  }
  try {
    IndexResult r = index_real(*atlas.catalog, nonflat(factors), ambient, hint);
    bool ok = sorted(r.values) == sorted(printed);
    rep->add(row, ok, "recomputed " + r.str());
  } catch (const LieError& err) {
    rep->add(row, false, err.what());
  }
}

}  // namespace

VerifyReport verify_indices(const Atlas& atlas) {
  VerifyReport rep;
  for (auto& e : atlas.tg)
    verify_one_index(atlas, e.row_id(), e.factors, e.ambient, e.hint, e.index, &rep);
  for (auto& e : atlas.lcomplex)
    verify_one_index(atlas, e.row_id(), e.factors, e.ambient, e.hint, e.index, &rep);
  for (auto& e : atlas.candidates)
    verify_one_index(atlas, "cand:" + e.ambient + ":" + std::to_string(e.ordinal),
                     e.factors, e.ambient, e.hint, e.index, &rep);
  return rep;
}

std::vector<IxtgInstance> instantiate_ixtg(const Atlas& atlas) {
  // smallest admissible parameters plus one larger instance with r <= 4,
  // kept within the rank range of the engine
  static const std::vector<IxtgInstance> table = {
      {1, "r=1,k=1", "su_{1,2}", {"su_{1,1}"}, 2, "real(block(sl2<sl3))"},
      {1, "r=4,k=1", "su_{4,5}", {"su_{4,4}"}, 8, "real(block(sl8<sl9))"},
      {2, "r=3", "su_{3,3}", {"su_{2,3}"}, 6, "real(block(sl5<sl6))"},
      {2, "r=4", "su_{4,4}", {"su_{3,4}"}, 8, "real(block(sl7<sl8))"},
      {3, "r=1,k=1", "so_{1,2}", {"R"}, 1, "flat"},
      {3, "r=4,k=1", "so_{4,5}", {"so_{4,4}"}, 4, "real(block(so8<so9))"},
      {4, "r=4", "so_{4,4}", {"so_{3,4}"}, 4, "real(block(so7<so8))"},
      {5, "", "sp_{2,2}", {"sp_2(C)"}, 6, "real(block(sp2+sp2<sp4))"},
      {6, "r=1,k=1", "sp_{1,2}", {"sp_{1,1}"}, 4, "real(block(sp2<sp3))"},
      {6, "r=3,k=1", "sp_{3,4}", {"sp_{3,3}"}, 12, "real(block(sp6<sp7))"},
      {7, "r=3", "sp_{3,3}", {"sp_{2,3}"}, 12, "real(block(sp5<sp6))"},
      {7, "r=4", "sp_{4,4}", {"sp_{3,4}"}, 16, "real(block(sp7<sp8))"},
      {8, "r=2", "sl_3(R)", {"R", "sl_2(R)"}, 2, "real(block(sl2<sl3))"},
      {8, "r=4", "sl_5(R)", {"R", "sl_4(R)"}, 4, "real(block(sl4<sl5))"},
      {9, "", "su*_6", {"sl_3(C)"}, 6, "real(block(sl3+sl3<sl6))"},
      {10, "", "su*_8", {"sp_{2,2}"}, 11, "real(block(sp4<sl8))"},
      {11, "r=4", "su*_10", {"R", "su*_8"}, 16, "real(block(sl8<sl10))"},
      {12, "r=3", "sp_3(R)", {"sp_1(R)", "sp_2(R)"}, 4, "real(block(sp1+sp2<sp3))"},
      {12, "r=4", "sp_4(R)", {"sp_1(R)", "sp_3(R)"}, 6, "real(block(sp1+sp3<sp4))"},
      {13, "r=3", "so*_12", {"so*_10"}, 10, "real(block(so10<so12))"},
      {13, "r=4", "so*_16", {"so*_14"}, 14, "real(block(so14<so16))"},
      {14, "r=2", "so*_10", {"so*_8"}, 8, "real(block(so8<so10))"},
      {14, "r=3", "so*_14", {"so*_12"}, 12, "real(block(so12<so14))"},
      {15, "", "sl_3(C)", {"sl_3(R)"}, 3, "realform"},
      {16, "", "sl_4(C)", {"sp_2(C)"}, 5, "cplx(block(sp2<sl4))"},
      {17, "r=4", "sl_5(C)", {"R", "sl_4(C)"}, 8, "cplx(block(sl4<sl5))"},
      {18, "r=2", "so_5(C)", {"sl_2(C)", "sl_2(C)"}, 4, "cplx(block(so4<so5))"},
      {18, "r=4", "so_9(C)", {"so_8(C)"}, 8, "cplx(block(so8<so9))"},
      {19, "r=3", "sp_3(C)", {"sp_1(C)", "sp_2(C)"}, 8, "cplx(block(sp1+sp2<sp3))"},
      {19, "r=4", "sp_4(C)", {"sp_1(C)", "sp_3(C)"}, 12, "cplx(block(sp1+sp3<sp4))"},
      {20, "r=4", "so_8(C)", {"so_7(C)"}, 7, "cplx(block(so7<so8))"},
  };
  std::set<int> ordinals;
  for (auto& r : atlas.ixtg) ordinals.insert(r.ordinal);
  std::vector<IxtgInstance> out;
  for (auto& i : table) {
    if (!ordinals.count(i.ordinal))
      fail(Err::UnresolvedReference,
           "instance for missing classical row " + std::to_string(i.ordinal));
    out.push_back(i);
  }
  for (int o : ordinals)
    if (std::none_of(table.begin(), table.end(),
                     [&](const IxtgInstance& i) { return i.ordinal == o; }))
      fail(Err::UnresolvedReference,
           "classical row " + std::to_string(o) + " has no instances");
  return out;
}

VerifyReport verify_theorem_b(const Atlas& atlas) {
  VerifyReport rep;
  const RealFormCatalog& cat = *atlas.catalog;

  for (auto& inst : instantiate_ixtg(atlas)) {
    std::string row = "ixtg:" + std::to_string(inst.ordinal) +
                      (inst.label.empty() ? "" : "(" + inst.label + ")");
    int codim = cat.lookup(inst.space).dim_p - cat.space_dim(inst.sigma);
    if (codim != inst.codim) {
      rep.add(row, false, "codim " + std::to_string(codim) + " vs " +
                              std::to_string(inst.codim));
      continue;
    }
    if (inst.hint == "flat") {
      rep.add(row, true, "codim " + std::to_string(codim) + ", flat submanifold");
      continue;
    }
    try {
      IndexResult r =
          index_real(cat, nonflat(inst.sigma), inst.space, Hint::parse(inst.hint));
      rep.add(row, r.all_ones(),
              "codim " + std::to_string(codim) + ", index " + r.str());
    } catch (const LieError& err) {
      rep.add(row, false, err.what());
    }
  }

  // the exceptional pairs realize the minimal codimension in their tables
  for (auto& p : atlas.pairs) {
    std::string row = "pair:" + std::to_string(p.ordinal) + "(" + p.ambient + ")";
    int amb_dim = cat.lookup(p.ambient).dim_p;
    int best = -1;
    const TGEntry* match = nullptr;
    auto key = [](std::vector<std::string> v) {
      std::sort(v.begin(), v.end());
      return v;
    };
    for (auto& e : atlas.tg) {
      if (e.ambient != p.ambient) continue;
      int codim = amb_dim - e.dim;
      if (best < 0 || codim < best) best = codim;
      if (key(e.factors) == key(p.sigma)) match = &e;
    }
    if (!match) {
      rep.add(row, false, "pair submanifold is not a table row");
      continue;
    }
    int codim = amb_dim - match->dim;
    bool minimal = codim == best;
    bool ones = true;
    for (long long v : match->index) ones = ones && v == 1;
    rep.add(row, minimal && ones,
            "codim " + std::to_string(codim) + " (min " + std::to_string(best) +
                "), index " + tuple_str(match->index));
  }
  return rep;
}

Maximality maximality_rank_filter(const Atlas& atlas, const CandidateEntry& entry) {
  if (entry.cancelled.empty())
    fail(Err::MissingAnnotation, "candidate has no cancelled-ideal annotation");
  for (auto& c : entry.cancelled) {
    if (RealFormCatalog::is_flat_token(c)) continue;  // cancelled center
    const RealFormDesc& d = atlas.catalog->lookup(c);
    if (!d.compact())
      fail(Err::MissingAnnotation, "cancelled ideal " + c + " is not compact");
    if (d.base.rank >= 2) return Maximality::NotMaximal;
  }
  return Maximality::Undetermined;
}

VerifyReport verify_candidates(const Atlas& atlas) {
  VerifyReport rep;
  auto key = [](std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  for (auto& e : atlas.candidates) {
    std::string row = "cand:" + e.ambient + ":" + std::to_string(e.ordinal);
    if (e.cancelled.empty()) {
      rep.skip(row, "no cancelled ideal");
      continue;
    }
    Maximality m = maximality_rank_filter(atlas, e);
    if (m == Maximality::Undetermined) {
      rep.add(row, true, "undetermined");
      continue;
    }
    // a rejected candidate must not survive into the final tables
    bool found = false;
    for (auto& t : atlas.tg) {
      if (t.ambient != e.ambient) continue;
      if (key(nonflat(t.factors)) == key(e.factors) &&
          sorted(t.index) == sorted(e.index))
        found = true;
    }
    rep.add(row, !found, found ? "rejected candidate appears in final tables"
                               : "not maximal, absent from final tables");
  }
  return rep;
}

}  // namespace lie
