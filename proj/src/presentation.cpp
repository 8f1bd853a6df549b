#include "tk/presentation.hpp"

#include "tk/errors.hpp"

#include <json.hpp>

#include <set>

namespace tk {

using json = nlohmann::ordered_json;

int Presentation::parity(const Relation& r) const {
  return r.empty() ? 0 : generators.at(r.begin()->first).parity;
}

unsigned Presentation::max_index() const {
  unsigned m = 0;
  for (const auto& r : relations)
    for (const auto& [g, c] : r) m = std::max(m, c.max_index());
  return m;
}

void Presentation::validate() const {
  if (truncation < 1) throw MalformedPresentation("truncation must be at least 1");
  std::set<std::string> names;
  for (const auto& g : generators) {
    if (g.parity != 0 && g.parity != 1)
      throw MalformedPresentation("generator '" + g.name + "' has parity " + std::to_string(g.parity));
    if (!names.insert(g.name).second) throw MalformedPresentation("duplicate generator '" + g.name + "'");
  }
  for (std::size_t i = 0; i < relations.size(); ++i) {
    const auto where = "relation " + std::to_string(i + 1);
    for (const auto& [g, c] : relations[i]) {
      if (g >= generators.size()) throw MalformedPresentation(where + " refers to a missing generator");
      if (c.is_zero()) throw MalformedPresentation(where + " stores a zero coefficient");
      if (c.max_index() > truncation)
        throw MalformedPresentation(where + " uses b" + std::to_string(c.max_index()) + " above truncation " +
                                    std::to_string(truncation));
      if (generators[g].parity != parity(relations[i]))
        throw MalformedPresentation(where + " mixes generators of both parities");
    }
  }
}

namespace {

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

void require_keys(const json& object, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!object.is_object()) throw ValidationError(where + " must be an object");
  for (const auto& [key, value] : object.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) throw ValidationError(where + " has unknown key '" + key + "'");
  }
}

}  // namespace

Presentation parse_presentation(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document.begin(), document.end());
  } catch (const json::parse_error& e) {
    // nlohmann reports the byte just past the offending character.
    const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    const auto [line, column] = line_column(document, byte);
    throw ParseError("malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(column), byte + 1,
                     line, column);
  }
  require_keys(doc, {"truncation", "generators", "relations"}, "document");

  Presentation p;
  if (doc.contains("truncation")) {
    const auto& d = doc["truncation"];
    if (!d.is_number_unsigned() || d.get<std::uint64_t>() < 1 || d.get<std::uint64_t>() > 1000)
      throw ValidationError("truncation must be an integer between 1 and 1000");
    p.truncation = d.get<unsigned>();
  }

  std::map<std::string, std::size_t> index;
  const json gens = doc.value("generators", json::array());
  if (!gens.is_array()) throw ValidationError("generators must be an array");
  for (const auto& g : gens) {
    require_keys(g, {"name", "parity"}, "generator");
    if (!g.contains("name") || !g["name"].is_string() || g["name"].get<std::string>().empty())
      throw ValidationError("generator needs a non-empty string name");
    const auto name = g["name"].get<std::string>();
    if (!g.contains("parity") || !g["parity"].is_number_integer())
      throw ValidationError("generator '" + name + "' needs an integer parity");
    const auto parity = g["parity"].get<std::int64_t>();
    if (parity != 0 && parity != 1) throw ValidationError("generator '" + name + "' has parity outside {0, 1}");
    if (!index.emplace(name, p.generators.size()).second) throw ValidationError("duplicate generator '" + name + "'");
    p.generators.push_back({name, static_cast<int>(parity)});
  }

  const json rels = doc.value("relations", json::array());
  if (!rels.is_array()) throw ValidationError("relations must be an array");
  for (std::size_t i = 0; i < rels.size(); ++i) {
    const auto where = "relation " + std::to_string(i + 1);
    if (!rels[i].is_array()) throw ValidationError(where + " must be an array of terms");
    Relation row;
    for (const auto& term : rels[i]) {
      require_keys(term, {"gen", "coeff"}, where + " term");
      if (!term.contains("gen") || !term["gen"].is_string()) throw ValidationError(where + ": term needs a gen name");
      const auto name = term["gen"].get<std::string>();
      auto it = index.find(name);
      if (it == index.end()) throw ValidationError(where + " refers to unknown generator '" + name + "'");
      if (!term.contains("coeff") || !term["coeff"].is_string())
        throw ValidationError(where + ": coefficient of '" + name + "' must be a string");
      BetaPoly c;
      try {
        c = parse_beta_poly(term["coeff"].get<std::string>());
      } catch (const ParseError& e) {
        throw ValidationError(where + ": coefficient of '" + name + "': " + e.what());
      }
      if (row.count(it->second)) throw ValidationError(where + " lists generator '" + name + "' twice");
      if (!c.is_zero()) row.emplace(it->second, c);
    }
    p.relations.push_back(std::move(row));
  }
  p.validate();
  return p;
}

std::string serialize_presentation(const Presentation& p) {
  json doc;
  doc["truncation"] = p.truncation;
  doc["generators"] = json::array();
  for (const auto& g : p.generators) doc["generators"].push_back({{"name", g.name}, {"parity", g.parity}});
  doc["relations"] = json::array();
  for (const auto& r : p.relations) {
    json row = json::array();
    for (const auto& [g, c] : r) row.push_back({{"gen", p.generators.at(g).name}, {"coeff", c.str()}});
    doc["relations"].push_back(row);
  }
  return doc.dump(2) + "\n";
}

}  // namespace tk
