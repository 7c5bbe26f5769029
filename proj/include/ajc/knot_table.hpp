#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ajc/apoly.hpp"
#include "ajc/jones.hpp"

namespace ajc {

// Environment variable naming a user table merged over the bundled one.
inline constexpr const char* kTableEnv = "AJCABLE_TABLE";

struct KnotRecord {
  enum class Engine { None, Unknot, Torus, Twist };

  std::string name;
  std::vector<std::string> aliases;

  std::optional<std::vector<KnotDiagram::Crossing>> pd;
  std::string pd_source;

  Engine engine = Engine::None;
  int torus_p = 0, torus_q = 0;  // Torus
  int twist_m = 0;               // Twist
  std::string engine_source;

  // Stored without the abelian factor L - 1.
  std::optional<CommPoly> apoly;
  std::string apoly_source;

  std::optional<int> c_plus, c_minus;
  std::string crossing_source;

  bool two_bridge = false;

  bool has_jones_source() const { return pd.has_value() || engine != Engine::None; }
};

// Colored Jones sequence from the closed form when there is one, otherwise from the PD code.
// Throws MissingData when the record has neither.
JonesSeq jones_source(const KnotRecord& k);
const char* engine_name(KnotRecord::Engine e);

// Reads the text of an A-polynomial file referenced from a table, e.g. "apoly/3_1.json".
using FileResolver = std::function<std::string(const std::string& ref)>;

// Parses a table. Schema violations raise SchemaError naming the origin and the line of the
// offending record; an empty text yields no records and a warning.
std::vector<KnotRecord> parse_table(const std::string& text, const std::string& origin, const FileResolver& resolve,
                                    std::vector<std::string>* warnings = nullptr);
// parse_table on a file; references resolve relative to the file's directory. Warnings go to
// stderr when no sink is given.
std::vector<KnotRecord> ingest_table(const std::string& path, std::vector<std::string>* warnings = nullptr);

// The table compiled into the library.
std::vector<KnotRecord> bundled_table();
// Records of over replace records of base with the same name; the rest are appended.
std::vector<KnotRecord> merge_tables(std::vector<KnotRecord> base, const std::vector<KnotRecord>& over);
// The bundled table, merged with the file named by kTableEnv when that variable is set.
std::vector<KnotRecord> load_table(std::vector<std::string>* warnings = nullptr);

// Lookup by name or alias; throws InvalidInput listing the known names.
const KnotRecord& find_knot(const std::vector<KnotRecord>& table, const std::string& name);

}  // namespace ajc
