#include <fstream>

#include <json.hpp>

#include "qcp2/charnum.hpp"

namespace qcp2 {

namespace {
constexpr const char* kSchema = "charnum-base/1";
using json = nlohmann::ordered_json;
}  // namespace

BaseStore load_base(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("base file: cannot open '" + path.string() + "'");

  BaseStore store = default_base();

  // A zero-length file is an explicit "no overrides".
  in.peek();
  if (in.eof()) return store;

  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("base file '" + path.string() + "': " + e.what());
  }

  if (!doc.is_object() || doc.value("schema", "") != kSchema)
    throw ParseError("base file '" + path.string() +
                     "': expected schema \"" + kSchema + "\"");
  if (!doc.contains("entries") || !doc["entries"].is_array())
    throw ParseError("base file '" + path.string() +
                     "': missing \"entries\" array");

  size_t index = 0;
  for (const auto& item : doc["entries"]) {
    const std::string where =
        "base file '" + path.string() + "' entry " + std::to_string(index);
    ++index;
    if (!item.is_object() || !item.contains("d") || !item.contains("a") ||
        !item.contains("b") || !item.contains("c") || !item.contains("value"))
      throw ParseError(where + ": need fields d, a, b, c, value");
    CharKey key;
    try {
      key.d = item["d"].get<int>();
      key.a = item["a"].get<int>();
      key.b = item["b"].get<int>();
      key.c = item["c"].get<int>();
    } catch (const json::exception& e) {
      throw ParseError(where + ": " + e.what());
    }
    if (!item["value"].is_string())
      throw ParseError(where + ": value must be an exact rational string");
    Rational value;
    try {
      value = Rational::from_string(item["value"].get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(where + ": " + e.what());
    }
    const std::string source = item.value("source", "");
    store.put(key, std::move(value), source);  // may throw SchemaViolation
  }
  return store;
}

void save_base(const BaseStore& store, const std::filesystem::path& path) {
  json doc;
  doc["schema"] = kSchema;
  json entries = json::array();
  for (const auto& [key, entry] : store.entries()) {
    json item;
    item["d"] = key.d;
    item["a"] = key.a;
    item["b"] = key.b;
    item["c"] = key.c;
    item["value"] = entry.value.str();
    item["source"] = entry.source;
    entries.push_back(std::move(item));
  }
  doc["entries"] = std::move(entries);

  std::ofstream out(path);
  if (!out)
    throw ParseError("base file: cannot write '" + path.string() + "'");
  out << doc.dump(2) << "\n";
}

}  // namespace qcp2
