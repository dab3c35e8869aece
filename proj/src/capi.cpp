#include "liec.h"

#include <json.hpp>

#include <cstdlib>
#include <cstring>
#include <memory>
#include <set>
#include <sstream>

#include "atlas.hpp"
#include "data.hpp"

using json = nlohmann::ordered_json;
using namespace lie;

struct liec_ctx {
  RealFormCatalog catalog;
  Atlas atlas;
  std::string last_error;
};

namespace {

constexpr const char* kVersion = "1.0.0";

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

liec_status classify_error(const LieError& e) {
  switch (e.code()) {
    case Err::InvalidType:
    case Err::IncompatibleShapes:
    case Err::IncompatibleChain:
      return LIEC_EINVAL;
    case Err::UnknownRealForm:
    case Err::UnresolvedReference:
      return LIEC_ENOTFOUND;
    case Err::ParseError:
    case Err::DuplicateRow:
      return LIEC_EPARSE;
    default:
      return LIEC_EDOMAIN;
  }
}

template <typename Fn>
liec_status guarded(liec_ctx* ctx, Fn&& fn) {
  if (!ctx) return LIEC_EINVAL;
  try {
    fn();
    return LIEC_OK;
  } catch (const LieError& e) {
    ctx->last_error = e.what();
    return classify_error(e);
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return LIEC_EFAIL;
  }
}

json index_json(const IndexResult& r) {
  json factors = json::array();
  for (auto& f : r.factors) factors.push_back(f.str());
  json values = json::array();
  for (auto v : r.values) values.push_back(v);
  return json{{"factors", factors}, {"values", values}, {"display", r.str()}};
}

json report_rows(const VerifyReport& rep) {
  json rows = json::array();
  for (auto& r : rep.rows)
    rows.push_back(json{{"row", r.row}, {"status", r.status}, {"detail", r.detail}});
  return rows;
}

struct Selection {
  std::set<std::string> tables;  // g2..e8
  bool candidates = false;
  bool theorem_b = false;
};

Selection parse_selection(const std::string& text) {
  Selection sel;
  std::string tok;
  std::istringstream in(text.empty() ? "all" : text);
  while (std::getline(in, tok, ',')) {
    if (tok == "all") {
      sel.tables = {"g2", "f4", "e6", "e7", "e8"};
      sel.candidates = sel.theorem_b = true;
    } else if (tok == "candidates") {
      sel.candidates = true;
    } else if (tok == "theorem-b") {
      sel.theorem_b = true;
    } else if (tok == "g2" || tok == "f4" || tok == "e6" || tok == "e7" ||
               tok == "e8") {
      sel.tables.insert(tok);
    } else {
      fail(Err::ParseError, "unknown table selector '" + tok + "'");
    }
  }
  return sel;
}

VerifyReport filter_report(const VerifyReport& rep, const Selection& sel) {
  VerifyReport out;
  for (auto& r : rep.rows) {
    std::string prefix = r.row.substr(0, r.row.find(':'));
    bool keep = false;
    if (sel.tables.count(prefix)) keep = true;
    if (sel.candidates && (prefix == "cand" || prefix == "lcx")) keep = true;
    if (sel.theorem_b && (prefix == "ixtg" || prefix == "pair")) keep = true;
    if (!keep) continue;
    if (r.status == "skipped") {
      out.skip(r.row, r.detail);
    } else {
      out.add(r.row, r.status == "ok", r.detail);
    }
  }
  return out;
}

json run_verification(const Atlas& atlas, const Selection& sel, int* mismatches) {
  VerifyReport dims = filter_report(verify_dimensions(atlas), sel);
  VerifyReport idx = filter_report(verify_indices(atlas), sel);
  VerifyReport thb = sel.theorem_b ? verify_theorem_b(atlas) : VerifyReport{};
  VerifyReport cand = sel.candidates ? verify_candidates(atlas) : VerifyReport{};

  int total = dims.mismatched + idx.mismatched + thb.mismatched + cand.mismatched;
  if (mismatches) *mismatches = total;
  json out;
  out["summary"] = {
      {"checked", dims.checked + idx.checked + thb.checked + cand.checked},
      {"matched", dims.matched + idx.matched + thb.matched + cand.matched},
      {"skipped", dims.skipped + idx.skipped + thb.skipped + cand.skipped},
      {"mismatched", total}};
  out["sections"] = {{"dimensions", report_rows(dims)},
                     {"indices", report_rows(idx)},
                     {"theorem_b", report_rows(thb)},
                     {"maximality_filter", report_rows(cand)}};
  return out;
}

IntVec parse_coords(const json& arr) {
  IntVec v;
  for (auto& x : arr) v.push_back(x.get<int>());
  return v;
}

IndexResult index_from_request(liec_ctx* ctx, const json& req) {
  std::string mech = req.at("mechanism").get<std::string>();
  if (mech == "regular") {
    SimpleTypeId amb = SimpleTypeId::parse(req.at("ambient").get<std::string>());
    std::vector<std::vector<IntVec>> factors;
    for (auto& f : req.at("factors")) {
      std::vector<IntVec> roots;
      for (auto& r : f) roots.push_back(parse_coords(r));
      factors.push_back(roots);
    }
    return index_regular(amb, factors);
  }
  if (mech == "branched") {
    BlockSpec spec = BlockSpec::parse(req.at("block").get<std::string>());
    return evaluate(block_embedding(spec));
  }
  if (mech == "principal") {
    SimpleTypeId amb = SimpleTypeId::parse(req.at("ambient").get<std::string>());
    std::vector<int> exps;
    if (req.contains("exponents"))
      for (auto& e : req.at("exponents")) exps.push_back(e.get<int>());
    else
      exps = exponents(amb);
    return {{SimpleTypeId::make('A', 1)}, {index_principal_sl2(amb, exps)}};
  }
  if (mech == "chain") {
    std::vector<Embedding> chain;
    for (auto& l : req.at("links"))
      chain.push_back(block_embedding(BlockSpec::parse(l.get<std::string>())));
    return index_composite(chain);
  }
  if (mech == "real") {
    std::string ambient = req.at("ambient").get<std::string>();
    std::vector<std::string> sub;
    for (auto& s : req.at("sub")) sub.push_back(s.get<std::string>());
    Hint hint;
    if (req.contains("via")) {
      hint = Hint::parse(req.at("via").get<std::string>());
    } else {
      bool realified = ctx->catalog.lookup(ambient).realified();
      hint.kind = realified ? Hint::Kind::Cplx : Hint::Kind::Real;
      hint.cmech = "auto";
    }
    return index_real(ctx->catalog, sub, ambient, hint);
  }
  fail(Err::ParseError, "unknown mechanism '" + mech + "'");
}

json dataset_json(const Atlas& atlas) {
  json out;
  json tg = json::array();
  for (auto& e : atlas.tg) {
    json idx = json::array();
    for (auto v : e.index) idx.push_back(v);
    tg.push_back(json{{"table", e.table},
                      {"row", e.row_id()},
                      {"ambient", e.ambient},
                      {"factors", e.factors},
                      {"index", idx},
                      {"reflective", e.reflective},
                      {"dim", e.dim},
                      {"hint", e.hint_text}});
  }
  out["tg"] = tg;
  json cand = json::array();
  for (auto& e : atlas.candidates) {
    json idx = json::array();
    for (auto v : e.index) idx.push_back(v);
    cand.push_back(json{{"ambient", e.ambient},
                        {"ordinal", e.ordinal},
                        {"factors", e.factors},
                        {"cancelled", e.cancelled},
                        {"index", idx},
                        {"hint", e.hint_text}});
  }
  out["candidates"] = cand;
  json lcx = json::array();
  for (auto& e : atlas.lcomplex) {
    json idx = json::array();
    for (auto v : e.index) idx.push_back(v);
    lcx.push_back(json{{"ambient", e.ambient},
                       {"row", e.row_id()},
                       {"factors", e.factors},
                       {"index", idx},
                       {"hint", e.hint_text}});
  }
  out["lcomplex"] = lcx;
  json ix = json::array();
  for (auto& r : atlas.ixtg)
    ix.push_back(json{{"ordinal", r.ordinal},
                      {"space", r.space},
                      {"submanifold", r.submanifold},
                      {"codim", r.codim},
                      {"conditions", r.conditions}});
  out["ixtg"] = ix;
  json pairs = json::array();
  for (auto& p : atlas.pairs)
    pairs.push_back(
        json{{"ordinal", p.ordinal}, {"ambient", p.ambient}, {"sigma", p.sigma}});
  out["pairs"] = pairs;
  return out;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    out += c;
  }
  return out + "\"";
}

std::string join_semi(const std::vector<std::string>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ";";
    s += v[i];
  }
  return s;
}

std::string dataset_csv(const Atlas& atlas) {
  std::string out = "kind,table,row,ambient,factors,index,reflective,dim,hint\n";
  auto tuple = [](const std::vector<long long>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) s += ";";
      s += std::to_string(v[i]);
    }
    return s;
  };
  for (auto& e : atlas.tg)
    out += "tg," + e.table + "," + e.row_id() + "," + e.ambient + "," +
           csv_escape(join_semi(e.factors)) + "," + tuple(e.index) + "," +
           e.reflective + "," + std::to_string(e.dim) + "," +
           csv_escape(e.hint_text) + "\n";
  for (auto& e : atlas.candidates)
    out += "cand,candidates," + e.ambient + ":" + std::to_string(e.ordinal) + "," +
           e.ambient + "," + csv_escape(join_semi(e.factors)) + "," +
           tuple(e.index) + ",,," + csv_escape(e.hint_text) + "\n";
  for (auto& e : atlas.lcomplex)
    out += "lcx,lcomplex," + e.row_id() + "," + e.ambient + "," +
           csv_escape(join_semi(e.factors)) + "," + tuple(e.index) + ",,," +
           csv_escape(e.hint_text) + "\n";
  for (auto& r : atlas.ixtg)
    out += "ixtg,ixtg," + std::to_string(r.ordinal) + "," +
           csv_escape(r.space) + "," + csv_escape(r.submanifold) + "," +
           csv_escape(r.codim) + ",,," + csv_escape(r.conditions) + "\n";
  for (auto& p : atlas.pairs)
    out += "pair,pairs," + std::to_string(p.ordinal) + "," + p.ambient + "," +
           csv_escape(join_semi(p.sigma)) + ",,,,\n";
  return out;
}

std::string report_csv(const json& report) {
  std::string out = "section,row,status,detail\n";
  for (auto& [section, rows] : report.at("sections").items())
    for (auto& r : rows)
      out += section + "," + csv_escape(r.at("row").get<std::string>()) + "," +
             r.at("status").get<std::string>() + "," +
             csv_escape(r.at("detail").get<std::string>()) + "\n";
  return out;
}

}  // namespace

extern "C" {

const char* liec_version(void) { return kVersion; }

liec_ctx* liec_ctx_new(void) { return liec_ctx_new_with_paths(nullptr, nullptr); }

liec_ctx* liec_ctx_new_with_paths(const char* catalog_path,
                                  const char* atlas_path) {
  try {
    auto ctx = std::make_unique<liec_ctx>();
    ctx->catalog = catalog_path ? RealFormCatalog::load_file(catalog_path)
                                : RealFormCatalog::bundled();
    ctx->atlas = atlas_path
                     ? load_dataset_file(atlas_path, ctx->catalog)
                     : load_dataset(lie::data::atlas_dat, ctx->catalog);
    ctx->atlas.catalog = &ctx->catalog;
    return ctx.release();
  } catch (const std::exception&) {
    return nullptr;
  }
}

void liec_ctx_free(liec_ctx* ctx) { delete ctx; }

const char* liec_last_error(const liec_ctx* ctx) {
  return ctx ? ctx->last_error.c_str() : "null context";
}

void liec_string_free(char* s) { std::free(s); }

liec_status liec_roots_info(liec_ctx* ctx, const char* type, char** json_out) {
  return guarded(ctx, [&] {
    const RootSystem& rs = root_system(SimpleTypeId::parse(type));
    json norms = json::array();
    std::set<Rat> spectrum;
    for (auto& v : rs.roots()) spectrum.insert(rs.q_norm(v));
    for (auto& n : spectrum) norms.push_back(rat_str(n));
    json out{{"type", rs.type().str()},
             {"roots", rs.roots().size()},
             {"dim", rs.dimension()},
             {"rank", rs.rank()},
             {"highest_root", rs.highest_root()},
             {"norm_spectrum", norms},
             {"dual_coxeter", rs.dual_coxeter()}};
    *json_out = dup_string(out.dump());
  });
}

liec_status liec_diagram(liec_ctx* ctx, const char* type, int extended,
                         char** json_out) {
  return guarded(ctx, [&] {
    ExtendedDiagram d = extended_diagram(SimpleTypeId::parse(type));
    int from = extended ? 0 : 1;
    json nodes = json::array(), edges = json::array(), marks = json::array();
    for (size_t i = from; i < d.nodes.size(); ++i) {
      nodes.push_back(d.nodes[i]);
      marks.push_back(d.marks[i]);
    }
    for (auto& e : d.edges) {
      if (!extended && (e.i == 0 || e.j == 0)) continue;
      edges.push_back(json{{"from", e.i - from},
                           {"to", e.j - from},
                           {"cartan", {e.aij, e.aji}}});
    }
    json out{{"type", d.type.str()},
             {"extended", extended != 0},
             {"nodes", nodes},
             {"marks", marks},
             {"edges", edges}};
    if (!extended) out.erase("marks");
    *json_out = dup_string(out.dump());
  });
}

liec_status liec_regular_subalgebras(liec_ctx* ctx, const char* type,
                                     char** json_out) {
  return guarded(ctx, [&] {
    json rows = json::array();
    for (auto& r : enumerate_maximal_regular(SimpleTypeId::parse(type))) {
      rows.push_back(json{{"subalgebra", r.sub.str()},
                          {"index", index_json(r.index)},
                          {"center_dim", r.center_dim},
                          {"origin", r.origin}});
    }
    json out{{"type", SimpleTypeId::parse(type).str()}, {"results", rows}};
    *json_out = dup_string(out.dump());
  });
}

liec_status liec_index(liec_ctx* ctx, const char* request_json, char** json_out) {
  return guarded(ctx, [&] {
    json req;
    try {
      req = json::parse(request_json);
    } catch (const json::exception& e) {
      fail(Err::ParseError, std::string("request: ") + e.what());
    }
    try {
      IndexResult r = index_from_request(ctx, req);
      *json_out = dup_string(index_json(r).dump());
    } catch (const json::exception& e) {
      fail(Err::ParseError, std::string("request: ") + e.what());
    }
  });
}

liec_status liec_trace_form_oracle(liec_ctx* ctx, const char* block,
                                   char** json_out) {
  return guarded(ctx, [&] {
    OracleResult o = trace_form_oracle(block);
    IndexResult r{o.factors, o.values};
    *json_out = dup_string(index_json(r).dump());
  });
}

liec_status liec_space_info(liec_ctx* ctx, const char* realform, char** json_out) {
  return guarded(ctx, [&] {
    const RealFormDesc& d = ctx->catalog.lookup(realform);
    json out{{"id", d.id},
             {"complexification", d.base.str()},
             {"realified", d.realified()},
             {"character", d.character},
             {"dim_g", d.dim_g},
             {"dim_k", d.dim_k},
             {"dim_p", d.dim_p},
             {"compact", d.compact()}};
    if (!d.compact()) {
      SymmetricSpaceDesc s = ctx->catalog.space(realform);
      out["space"] = json{{"isotropy", s.isotropy},
                          {"dim", s.dim},
                          {"rank", s.rank},
                          {"type", s.type == '3' ? "III" : "IV"}};
    }
    *json_out = dup_string(out.dump());
  });
}

liec_status liec_verify(liec_ctx* ctx, const char* tables, char** report_json_out,
                        int* mismatches_out) {
  return guarded(ctx, [&] {
    Selection sel = parse_selection(tables ? tables : "all");
    json report = run_verification(ctx->atlas, sel, mismatches_out);
    *report_json_out = dup_string(report.dump());
  });
}

liec_status liec_export(liec_ctx* ctx, const char* what, const char* format,
                        char** out) {
  return guarded(ctx, [&] {
    std::string w = what ? what : "", f = format ? format : "json";
    if (w == "dataset") {
      if (f == "json")
        *out = dup_string(dataset_json(ctx->atlas).dump(2) + "\n");
      else if (f == "csv")
        *out = dup_string(dataset_csv(ctx->atlas));
      else
        fail(Err::ParseError, "format '" + f + "'");
    } else if (w == "report") {
      int mism = 0;
      json rep = run_verification(ctx->atlas, parse_selection("all"), &mism);
      if (f == "json")
        *out = dup_string(rep.dump(2) + "\n");
      else if (f == "csv")
        *out = dup_string(report_csv(rep));
      else
        fail(Err::ParseError, "format '" + f + "'");
    } else {
      fail(Err::ParseError, "export target '" + w + "'");
    }
  });
}

}  // extern "C"
