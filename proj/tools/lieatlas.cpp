// lieatlas: command-line front end for the exact Lie-theory engine.
// Talks to the engine exclusively through the liec C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <memory>
#include <string>

#include "liec.h"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitComputation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitMismatch = 3;

struct CtxDeleter {
  void operator()(liec_ctx* c) const { liec_ctx_free(c); }
};
using Ctx = std::unique_ptr<liec_ctx, CtxDeleter>;

struct StrDeleter {
  void operator()(char* s) const { liec_string_free(s); }
};
using Str = std::unique_ptr<char, StrDeleter>;

int fail_with(const liec_ctx* ctx) {
  std::cerr << "error: " << liec_last_error(ctx) << "\n";
  return kExitComputation;
}

// default dataset resolution: --data flag, then LIE_ATLAS_DATA, then bundled
Ctx open_ctx(const std::string& data_path, const std::string& catalog_path) {
  std::string data = data_path;
  if (data.empty()) {
    const char* env = std::getenv("LIE_ATLAS_DATA");
    if (env) data = env;
  }
  Ctx ctx(liec_ctx_new_with_paths(catalog_path.empty() ? nullptr : catalog_path.c_str(),
                                  data.empty() ? nullptr : data.c_str()));
  if (!ctx) {
    std::cerr << "error: cannot load catalog or dataset\n";
    std::exit(kExitComputation);
  }
  return ctx;
}

std::string csv_field(const json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    out += c;
  }
  return out + "\"";
}

void emit(const json& out, const std::string& format) {
  if (format == "csv") {
    // flat key,value rendering; arrays of scalars join with ';'
    std::cout << "key,value\n";
    for (auto& [key, value] : out.items()) {
      if (value.is_array()) {
        std::string joined;
        bool flat = true;
        for (auto& x : value) {
          if (x.is_object() || x.is_array()) flat = false;
          if (!joined.empty()) joined += ";";
          joined += x.is_string() ? x.get<std::string>() : x.dump();
        }
        std::cout << key << "," << csv_field(flat ? json(joined) : value) << "\n";
      } else {
        std::cout << key << "," << csv_field(value) << "\n";
      }
    }
    return;
  }
  std::cout << out.dump() << "\n";
}

std::string tuple_text(const json& index) {
  return index.at("display").get<std::string>();
}

json parse_regular_roots(const std::string& text, const std::string& ambient) {
  // factors separated by '|', roots by ';', coordinates by ','
  json factors = json::array();
  std::istringstream fin(text);
  std::string ftok;
  while (std::getline(fin, ftok, '|')) {
    json roots = json::array();
    std::istringstream rin(ftok);
    std::string rtok;
    while (std::getline(rin, rtok, ';')) {
      json coords = json::array();
      std::istringstream cin(rtok);
      std::string ctok;
      while (std::getline(cin, ctok, ',')) coords.push_back(std::stoi(ctok));
      roots.push_back(coords);
    }
    factors.push_back(roots);
  }
  return json{{"mechanism", "regular"}, {"ambient", ambient}, {"factors", factors}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Dynkin-index engine and classification-table verifier"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  std::string format = "text", data_path, catalog_path;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--data", data_path, "dataset file (default: $LIE_ATLAS_DATA or bundled)");
  app.add_option("--catalog", catalog_path, "real-form catalog file");

  // roots TYPE
  std::string roots_type;
  CLI::App* roots = app.add_subcommand("roots", "root system summary");
  roots->add_option("type", roots_type, "simple type, e.g. G2 or E8")->required();

  // diagram TYPE [--extended]
  std::string diagram_type;
  bool extended = false;
  CLI::App* diagram = app.add_subcommand("diagram", "Dynkin diagram");
  diagram->add_option("type", diagram_type)->required();
  diagram->add_flag("--extended", extended, "attach the lowest-root node");

  // regular-subalgebras TYPE
  std::string regular_type;
  CLI::App* regular =
      app.add_subcommand("regular-subalgebras", "maximal regular subalgebras");
  regular->add_option("type", regular_type)->required();

  // index --ambient ... --mechanism ...
  std::string idx_ambient, idx_mechanism, idx_roots, idx_block, idx_via, idx_links,
      idx_exponents;
  std::vector<std::string> idx_sub;
  CLI::App* index = app.add_subcommand("index", "Dynkin index of an embedding");
  index->add_option("--ambient", idx_ambient, "ambient type or real form")->required();
  index
      ->add_option("--mechanism", idx_mechanism,
                   "regular | branched | real | chain | principal")
      ->required()
      ->check(CLI::IsMember({"regular", "branched", "real", "chain", "principal"}));
  index->add_option("--roots", idx_roots,
                    "regular: factors '|', roots ';', coords ','");
  index->add_option("--block", idx_block, "branched: block spec, e.g. so7<so9");
  index->add_option("--sub", idx_sub, "real: subalgebra factor real forms");
  index->add_option("--via", idx_via, "real: mechanism hint override");
  index->add_option("--links", idx_links, "chain: comma list of block specs");
  index->add_option("--exponents", idx_exponents, "principal: comma list");

  // principal-sl2 TYPE [--exponents]
  std::string psl_type, psl_exponents;
  CLI::App* psl2 = app.add_subcommand("principal-sl2", "principal sl2 index");
  psl2->add_option("type", psl_type)->required();
  psl2->add_option("--exponents", psl_exponents, "override the computed exponents");

  // spaces NAME
  std::string space_name;
  CLI::App* spaces = app.add_subcommand("spaces", "symmetric space data");
  spaces->add_option("name", space_name)->required();

  // verify [--tables ...]
  std::string tables = "all";
  CLI::App* verify = app.add_subcommand("verify", "run the verification harness");
  verify->add_option("--tables", tables,
                     "comma list of g2,f4,e6,e7,e8,candidates,theorem-b or all");

  // export --what ... --format ...
  std::string what;
  CLI::App* exp = app.add_subcommand("export", "dump dataset or report");
  exp->add_option("--what", what, "dataset | report")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  Ctx ctx = open_ctx(data_path, catalog_path);
  Str out;

  auto take = [&](liec_status st, char* raw) -> json {
    out.reset(raw);
    if (st != LIEC_OK) {
      std::cerr << "error: " << liec_last_error(ctx.get()) << "\n";
      std::exit(kExitComputation);
    }
    return json::parse(out.get());
  };

  if (*roots) {
    char* raw = nullptr;
    liec_status st = liec_roots_info(ctx.get(), roots_type.c_str(), &raw);
    json j = take(st, raw);
    if (format == "text") {
      std::cout << j["type"].get<std::string>() << ": " << j["roots"] << " roots, dim "
                << j["dim"] << ", rank " << j["rank"] << "\n";
      std::cout << "highest root: " << j["highest_root"].dump() << "\n";
      std::cout << "norm spectrum:";
      for (auto& n : j["norm_spectrum"]) std::cout << " " << n.get<std::string>();
      std::cout << "\ndual Coxeter number: " << j["dual_coxeter"] << "\n";
    } else {
      emit(j, format);
    }
    return kExitOk;
  }

  if (*diagram) {
    char* raw = nullptr;
    liec_status st = liec_diagram(ctx.get(), diagram_type.c_str(), extended, &raw);
    json j = take(st, raw);
    if (format == "text") {
      std::cout << j["type"].get<std::string>() << (extended ? " extended" : "")
                << ": " << j["nodes"].size() << " nodes\n";
      if (j.contains("marks")) std::cout << "marks: " << j["marks"].dump() << "\n";
      for (auto& e : j["edges"])
        std::cout << "edge " << e["from"] << " - " << e["to"] << "  cartan "
                  << e["cartan"].dump() << "\n";
    } else {
      emit(j, format);
    }
    return kExitOk;
  }

  if (*regular) {
    char* raw = nullptr;
    liec_status st = liec_regular_subalgebras(ctx.get(), regular_type.c_str(), &raw);
    json j = take(st, raw);
    if (format == "text") {
      for (auto& r : j["results"])
        std::cout << r["subalgebra"].get<std::string>() << "  index "
                  << tuple_text(r["index"])
                  << (r["center_dim"].get<int>() ? "  (+center)" : "") << "\n";
    } else if (format == "csv") {
      std::cout << "subalgebra,index,center_dim,origin\n";
      for (auto& r : j["results"])
        std::cout << r["subalgebra"].get<std::string>() << ","
                  << csv_field(tuple_text(r["index"])) << "," << r["center_dim"]
                  << "," << r["origin"].get<std::string>() << "\n";
    } else {
      emit(j, format);
    }
    return kExitOk;
  }

  if (*index) {
    json req;
    if (idx_mechanism == "regular") {
      if (idx_roots.empty()) {
        std::cerr << "error: --roots required for --mechanism regular\n";
        return kExitUsage;
      }
      req = parse_regular_roots(idx_roots, idx_ambient);
    } else if (idx_mechanism == "branched") {
      if (idx_block.empty()) {
        std::cerr << "error: --block required for --mechanism branched\n";
        return kExitUsage;
      }
      req = json{{"mechanism", "branched"}, {"block", idx_block}};
    } else if (idx_mechanism == "principal") {
      req = json{{"mechanism", "principal"}, {"ambient", idx_ambient}};
      if (!idx_exponents.empty()) {
        json exps = json::array();
        std::istringstream in(idx_exponents);
        std::string tok;
        while (std::getline(in, tok, ',')) exps.push_back(std::stoi(tok));
        req["exponents"] = exps;
      }
    } else if (idx_mechanism == "chain") {
      if (idx_links.empty()) {
        std::cerr << "error: --links required for --mechanism chain\n";
        return kExitUsage;
      }
      json links = json::array();
      std::istringstream in(idx_links);
      std::string tok;
      while (std::getline(in, tok, ',')) links.push_back(tok);
      req = json{{"mechanism", "chain"}, {"links", links}};
    } else {  // real
      if (idx_sub.empty()) {
        std::cerr << "error: --sub required for --mechanism real\n";
        return kExitUsage;
      }
      json sub = json::array();
      for (auto& s : idx_sub) sub.push_back(s);
      req = json{{"mechanism", "real"}, {"ambient", idx_ambient}, {"sub", sub}};
      if (!idx_via.empty()) req["via"] = idx_via;
    }
    char* raw = nullptr;
    liec_status st = liec_index(ctx.get(), req.dump().c_str(), &raw);
    json j = take(st, raw);
    if (format == "text")
      std::cout << tuple_text(j) << "\n";
    else
      emit(j, format);
    return kExitOk;
  }

  if (*psl2) {
    json req{{"mechanism", "principal"}, {"ambient", psl_type}};
    if (!psl_exponents.empty()) {
      json exps = json::array();
      std::istringstream in(psl_exponents);
      std::string tok;
      while (std::getline(in, tok, ',')) exps.push_back(std::stoi(tok));
      req["exponents"] = exps;
    }
    char* raw = nullptr;
    liec_status st = liec_index(ctx.get(), req.dump().c_str(), &raw);
    json j = take(st, raw);
    if (format == "text")
      std::cout << tuple_text(j) << "\n";
    else
      emit(j, format);
    return kExitOk;
  }

  if (*spaces) {
    if (space_name.find(';') != std::string::npos || space_name == "R" ||
        space_name.rfind("R^", 0) == 0) {
      // a product of factors: report each dimension and the total
      json factors = json::array();
      int total = 0;
      std::istringstream in(space_name);
      std::string tok;
      while (std::getline(in, tok, ';')) {
        int dim;
        if (tok == "R") {
          dim = 1;
        } else if (tok.rfind("R^", 0) == 0) {
          dim = std::atoi(tok.c_str() + 2);
        } else {
          char* raw = nullptr;
          liec_status st = liec_space_info(ctx.get(), tok.c_str(), &raw);
          json f = take(st, raw);
          dim = f["dim_p"].get<int>();
        }
        total += dim;
        factors.push_back(json{{"factor", tok}, {"dim", dim}});
      }
      json j{{"factors", factors}, {"dim", total}};
      if (format == "text") {
        for (auto& f : factors)
          std::cout << f["factor"].get<std::string>() << ": dim " << f["dim"]
                    << "\n";
        std::cout << "total dim " << total << "\n";
      } else {
        emit(j, format);
      }
      return kExitOk;
    }
    char* raw = nullptr;
    liec_status st = liec_space_info(ctx.get(), space_name.c_str(), &raw);
    json j = take(st, raw);
    if (format == "text") {
      std::cout << j["id"].get<std::string>() << ": complexification "
                << j["complexification"].get<std::string>() << ", dim_g "
                << j["dim_g"] << ", dim_k " << j["dim_k"] << ", dim_p "
                << j["dim_p"] << "\n";
      if (j.contains("space"))
        std::cout << "space: G/K with K = "
                  << j["space"]["isotropy"].get<std::string>() << ", dim "
                  << j["space"]["dim"] << ", rank " << j["space"]["rank"]
                  << ", type " << j["space"]["type"].get<std::string>() << "\n";
    } else {
      emit(j, format);
    }
    return kExitOk;
  }

  if (*verify) {
    char* raw = nullptr;
    int mismatches = 0;
    liec_status st = liec_verify(ctx.get(), tables.c_str(), &raw, &mismatches);
    json j = take(st, raw);
    if (format == "text") {
      auto& s = j["summary"];
      std::cout << "checked " << s["checked"] << ", matched " << s["matched"]
                << ", skipped " << s["skipped"] << ", mismatched "
                << s["mismatched"] << "\n";
      for (auto& [name, rows] : j["sections"].items())
        for (auto& r : rows)
          if (r["status"] == "mismatch")
            std::cout << "MISMATCH " << name << " " << r["row"].get<std::string>()
                      << ": " << r["detail"].get<std::string>() << "\n";
    } else if (format == "csv") {
      std::cout << "section,row,status,detail\n";
      for (auto& [name, rows] : j["sections"].items())
        for (auto& r : rows)
          std::cout << name << "," << csv_field(r["row"]) << ","
                    << r["status"].get<std::string>() << ","
                    << csv_field(r["detail"]) << "\n";
    } else {
      emit(j, format);
    }
    return mismatches == 0 ? kExitOk : kExitMismatch;
  }

  if (*exp) {
    char* raw = nullptr;
    std::string fmt = format == "text" ? "json" : format;
    liec_status st = liec_export(ctx.get(), what.c_str(), fmt.c_str(), &raw);
    Str guard(raw);
    if (st != LIEC_OK) return fail_with(ctx.get());
    std::cout << raw;
    return kExitOk;
  }

  return kExitUsage;
}
