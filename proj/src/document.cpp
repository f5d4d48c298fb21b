#include "syz/document.hpp"

#include <fstream>
#include "json.hpp"
#include <sstream>

#include "syz/errors.hpp"
#include "syz/intersect.hpp"

namespace syz {

namespace {

using nlohmann::json;

Rational parse_rational(const json& v, const std::string& where) {
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const ParseError&) {
      throw ParseError(where + ": bad rational \"" + v.get<std::string>() + "\"");
    }
  }
  if (v.is_number_integer()) {
    return Rational(v.get<long long>());
  }
  throw ParseError(where + ": expected a rational string, got " +
                   std::string(v.type_name()));
}

int parse_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) {
    throw ParseError(where + ": expected an integer, got " +
                     std::string(v.type_name()));
  }
  return v.get<int>();
}

const json& require(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ParseError(where + ": missing field \"" + key + "\"");
  }
  return *it;
}

}  // namespace

Document Document::parse(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!root.is_object()) {
    throw ParseError("document root must be an object");
  }

  Document doc;
  if (root.contains("branes")) {
    const json& branes = root["branes"];
    if (!branes.is_object()) throw ParseError("\"branes\" must be an object");
    for (auto it = branes.begin(); it != branes.end(); ++it) {
      const std::string where = "brane \"" + it.key() + "\"";
      const json& entry = it.value();
      if (!entry.is_object()) throw ParseError(where + ": must be an object");
      try {
        doc.branes.emplace(
            it.key(),
            LineBrane(parse_int(require(entry, "r", where), where + ".r"),
                      parse_int(require(entry, "d", where), where + ".d"),
                      parse_rational(require(entry, "c", where), where + ".c"),
                      parse_rational(require(entry, "b", where), where + ".b")));
      } catch (const DomainError& e) {
        throw ParseError(where + ": " + e.what());
      }
    }
  }

  if (root.contains("specs")) {
    const json& specs = root["specs"];
    if (!specs.is_object()) throw ParseError("\"specs\" must be an object");
    for (auto it = specs.begin(); it != specs.end(); ++it) {
      const std::string where = "spec \"" + it.key() + "\"";
      const json& entry = it.value();
      if (!entry.is_object()) throw ParseError(where + ": must be an object");
      SpecEntry spec;
      spec.l1 = require(entry, "l1", where).get<std::string>();
      spec.l2 = require(entry, "l2", where).get<std::string>();
      const json& pts = require(entry, "points", where);
      if (!pts.is_array()) {
        throw ParseError(where + ".points: expected an array of indices");
      }
      for (size_t i = 0; i < pts.size(); ++i) {
        spec.points.push_back(
            parse_int(pts[i], where + ".points[" + std::to_string(i) + "]"));
      }
      spec.b = parse_rational(require(entry, "b", where), where + ".b");
      if (!doc.branes.count(spec.l1)) {
        throw ParseError(where + ": unknown brane \"" + spec.l1 + "\"");
      }
      if (!doc.branes.count(spec.l2)) {
        throw ParseError(where + ": unknown brane \"" + spec.l2 + "\"");
      }
      doc.specs.emplace(it.key(), std::move(spec));
    }
  }
  return doc;
}

Document Document::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::string Document::serialize() const {
  json root;
  root["branes"] = json::object();
  for (const auto& [name, l] : branes) {
    root["branes"][name] = {{"r", l.r},
                            {"d", l.d},
                            {"c", l.c.str()},
                            {"b", l.b.str()}};
  }
  root["specs"] = json::object();
  for (const auto& [name, s] : specs) {
    root["specs"][name] = {{"l1", s.l1},
                           {"l2", s.l2},
                           {"points", s.points},
                           {"b", s.b.str()}};
  }
  return root.dump(2) + "\n";
}

const LineBrane& Document::brane(const std::string& name) const {
  auto it = branes.find(name);
  if (it == branes.end()) {
    throw ParseError("unknown brane \"" + name + "\"");
  }
  return it->second;
}

SurgerySpec Document::make_spec(const std::string& name) const {
  auto it = specs.find(name);
  if (it == specs.end()) {
    throw ParseError("unknown spec \"" + name + "\"");
  }
  const SpecEntry& entry = it->second;
  const LineBrane& l1 = brane(entry.l1);
  const LineBrane& l2 = brane(entry.l2);
  const auto all = intersect_lines(l1, l2);
  std::vector<IntersectionPoint> k;
  for (int idx : entry.points) {
    if (idx < 0 || idx >= static_cast<int>(all.size())) {
      throw ParseError("spec \"" + name + "\": point index " +
                       std::to_string(idx) + " out of range [0, " +
                       std::to_string(all.size()) + ")");
    }
    k.push_back(all[idx]);
  }
  return SurgerySpec(l1, l2, std::move(k), entry.b);
}

BraneCollection Document::resolve(const std::string& name) const {
  if (branes.count(name)) {
    return {{line_to_pl(brane(name))}};
  }
  if (specs.count(name)) {
    return surger(make_spec(name));
  }
  throw ParseError("unknown brane or spec \"" + name + "\"");
}

}  // namespace syz
