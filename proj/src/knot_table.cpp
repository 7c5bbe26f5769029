#include "ajc/knot_table.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "ajc/errors.hpp"
#include "ajc/json_io.hpp"

namespace ajc {

namespace detail {
const char* embedded_knot_table();
const std::map<std::string, std::string>& embedded_apoly_files();
}  // namespace detail

namespace {

using Json = jsonio::Json;

// Line of each element of the "knots" array, found by a scan that tracks nesting and strings.
std::vector<int> record_lines(const std::string& text) {
  std::vector<int> lines;
  int depth = 0, line = 1;
  bool in_string = false, escape = false;
  for (char ch : text) {
    if (ch == '\n') ++line;
    if (in_string) {
      if (escape)
        escape = false;
      else if (ch == '\\')
        escape = true;
      else if (ch == '"')
        in_string = false;
      continue;
    }
    if (ch == '"') {
      in_string = true;
    } else if (ch == '{' || ch == '[') {
      if (depth == 2 && ch == '{') lines.push_back(line);
      ++depth;
    } else if (ch == '}' || ch == ']') {
      --depth;
    }
  }
  return lines;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(origin + ": malformed JSON: " + e.what());
  }
}

std::string need_source(const Json& obj, const char* key, const std::string& what) {
  if (!obj.contains(key) || !obj[key].is_string() || obj[key].get<std::string>().empty())
    throw SchemaError(what + " lacks a provenance note (\"" + key + "\")");
  return obj[key].get<std::string>();
}

int need_int(const Json& obj, const char* key, const std::string& what) {
  if (!obj.contains(key) || !obj[key].is_number_integer()) throw SchemaError(what + ": integer \"" + key + "\" required");
  return obj[key].get<int>();
}

void set_crossings(KnotRecord& k, int cp, int cm, const std::string& source) {
  if (cp < 0 || cm < 0) throw SchemaError("crossing counts must be nonnegative");
  if ((k.c_plus && *k.c_plus != cp) || (k.c_minus && *k.c_minus != cm))
    throw SchemaError("crossing counts disagree between the record and its A-polynomial file");
  k.c_plus = cp;
  k.c_minus = cm;
  if (k.crossing_source.empty()) k.crossing_source = source;
}

// An A-polynomial object {name, A, c_plus, c_minus, source_note}.
void read_apoly(KnotRecord& k, const Json& obj, const std::string& what) {
  if (!obj.is_object()) throw SchemaError(what + ": expected an object");
  k.apoly_source = need_source(obj, "source_note", what);
  if (!obj.contains("A")) throw SchemaError(what + ": \"A\" required");
  CommPoly a = jsonio::commpoly_from_json(obj["A"]);
  if (a.is_zero()) throw SchemaError(what + ": A-polynomial is zero");
  k.apoly = a;
  if (obj.contains("c_plus") || obj.contains("c_minus"))
    set_crossings(k, need_int(obj, "c_plus", what), need_int(obj, "c_minus", what), what);
}

KnotRecord read_record(const Json& obj, const FileResolver& resolve, const std::string& where) {
  if (!obj.is_object()) throw SchemaError(where + ": expected an object");
  KnotRecord k;
  if (!obj.contains("name") || !obj["name"].is_string() || obj["name"].get<std::string>().empty())
    throw SchemaError(where + ": \"name\" required");
  k.name = obj["name"].get<std::string>();
  const std::string what = where + " (" + k.name + ")";
  if (obj.contains("aliases"))
    for (const auto& a : obj["aliases"]) k.aliases.push_back(a.get<std::string>());
  k.two_bridge = obj.value("two_bridge", false);

  if (obj.contains("pd")) {
    const Json& pd = obj["pd"];
    k.pd_source = need_source(pd, "source", what + " pd");
    std::vector<KnotDiagram::Crossing> code;
    for (const auto& x : pd.at("code")) {
      if (!x.is_array() || x.size() != 4) throw SchemaError(what + ": PD crossings have four labels");
      code.push_back({x[0].get<int>(), x[1].get<int>(), x[2].get<int>(), x[3].get<int>()});
    }
    try {
      KnotDiagram::from_pd(code);
    } catch (const InvalidInput& e) {
      throw SchemaError(what + ": " + e.what());
    }
    k.pd = std::move(code);
  }

  if (obj.contains("engine")) {
    const Json& e = obj["engine"];
    k.engine_source = need_source(e, "source", what + " engine");
    const std::string kind = e.value("kind", "");
    if (kind == "unknot") {
      k.engine = KnotRecord::Engine::Unknot;
    } else if (kind == "torus") {
      k.engine = KnotRecord::Engine::Torus;
      k.torus_p = need_int(e, "p", what);
      k.torus_q = need_int(e, "q", what);
    } else if (kind == "twist") {
      k.engine = KnotRecord::Engine::Twist;
      k.twist_m = need_int(e, "m", what);
    } else if (kind != "none") {
      throw SchemaError(what + ": unknown engine kind \"" + kind + "\"");
    }
  }

  if (obj.contains("crossings")) {
    const Json& c = obj["crossings"];
    set_crossings(k, need_int(c, "c_plus", what), need_int(c, "c_minus", what), need_source(c, "source", what + " crossings"));
  }

  if (obj.contains("apoly")) {
    const Json& a = obj["apoly"];
    if (a.is_string()) {
      const std::string ref = a.get<std::string>();
      read_apoly(k, parse_json(resolve(ref), ref), what + " " + ref);
    } else {
      read_apoly(k, a, what + " apoly");
    }
  }

  if (!k.has_jones_source() && !k.apoly) throw SchemaError(what + ": no data source");
  return k;
}

void warn(std::vector<std::string>* sink, const std::string& msg) {
  if (sink)
    sink->push_back(msg);
  else
    std::cerr << "warning: " << msg << "\n";
}

}  // namespace

const char* engine_name(KnotRecord::Engine e) {
  switch (e) {
    case KnotRecord::Engine::Unknot:
      return "unknot";
    case KnotRecord::Engine::Torus:
      return "torus";
    case KnotRecord::Engine::Twist:
      return "twist";
    case KnotRecord::Engine::None:
      break;
  }
  return "none";
}

JonesSeq jones_source(const KnotRecord& k) {
  switch (k.engine) {
    case KnotRecord::Engine::Unknot:
      return unknot_seq();
    case KnotRecord::Engine::Torus:
      return torus_seq(k.torus_p, k.torus_q);
    case KnotRecord::Engine::Twist:
      return twist_seq(k.twist_m);
    case KnotRecord::Engine::None:
      break;
  }
  if (k.pd) return oracle_seq(KnotDiagram::from_pd(*k.pd), k.name);
  throw MissingData("knot " + k.name + ": no colored Jones source (PD code or closed form)");
}

std::vector<KnotRecord> parse_table(const std::string& text, const std::string& origin, const FileResolver& resolve,
                                    std::vector<std::string>* warnings) {
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) {
    warn(warnings, origin + ": empty table");
    return {};
  }
  const Json doc = parse_json(text, origin);
  if (!doc.is_object() || !doc.contains("knots") || !doc["knots"].is_array())
    throw SchemaError(origin + ": expected an object with a \"knots\" list");
  const std::vector<int> lines = record_lines(text);
  std::vector<KnotRecord> out;
  std::map<std::string, bool> seen;
  for (std::size_t i = 0; i < doc["knots"].size(); ++i) {
    std::string where = origin + ": record " + std::to_string(i);
    if (i < lines.size()) where += " at line " + std::to_string(lines[i]);
    KnotRecord k;
    try {
      k = read_record(doc["knots"][i], resolve, where);
    } catch (const nlohmann::json::exception& e) {
      throw SchemaError(where + ": " + e.what());
    }
    if (seen[k.name]) throw SchemaError(where + ": duplicate name " + k.name);
    seen[k.name] = true;
    out.push_back(std::move(k));
  }
  if (out.empty()) warn(warnings, origin + ": table has no records");
  return out;
}

std::vector<KnotRecord> ingest_table(const std::string& path, std::vector<std::string>* warnings) {
  const std::filesystem::path dir = std::filesystem::path(path).parent_path();
  return parse_table(read_file(path), path, [dir](const std::string& ref) { return read_file((dir / ref).string()); },
                     warnings);
}

std::vector<KnotRecord> bundled_table() {
  return parse_table(detail::embedded_knot_table(), "bundled table", [](const std::string& ref) {
    const auto& files = detail::embedded_apoly_files();
    auto it = files.find(ref);
    if (it == files.end()) throw SchemaError("bundled table: no embedded file " + ref);
    return it->second;
  });
}

std::vector<KnotRecord> merge_tables(std::vector<KnotRecord> base, const std::vector<KnotRecord>& over) {
  for (const auto& k : over) {
    bool replaced = false;
    for (auto& b : base)
      if (b.name == k.name) {
        b = k;
        replaced = true;
      }
    if (!replaced) base.push_back(k);
  }
  return base;
}

std::vector<KnotRecord> load_table(std::vector<std::string>* warnings) {
  std::vector<KnotRecord> table = bundled_table();
  if (const char* path = std::getenv(kTableEnv); path && *path) table = merge_tables(table, ingest_table(path, warnings));
  return table;
}

const KnotRecord& find_knot(const std::vector<KnotRecord>& table, const std::string& name) {
  for (const auto& k : table) {
    if (k.name == name) return k;
    for (const auto& a : k.aliases)
      if (a == name) return k;
  }
  std::string known;
  for (const auto& k : table) known += (known.empty() ? "" : ", ") + k.name;
  throw InvalidInput("unknown knot \"" + name + "\"; known: " + known);
}

}  // namespace ajc
