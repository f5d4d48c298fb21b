#ifndef SYZ_DOCUMENT_HPP
#define SYZ_DOCUMENT_HPP

#include <map>
#include <string>
#include <vector>

#include "syz/brane.hpp"
#include "syz/surgery.hpp"

namespace syz {

/// Named surgery spec: two brane references plus indices into the sorted
/// intersection list of the pair.
struct SpecEntry {
  std::string l1;
  std::string l2;
  std::vector<int> points;
  Rational b;
};

/// JSON brane document. Rationals are strings ("3/2", "2"); floats are
/// rejected. Schema:
///   { "branes": { name: {"r": 1, "d": 3, "c": "0", "b": "0"} },
///     "specs":  { name: {"l1": n, "l2": n, "points": [0, 2], "b": "0"} } }
struct Document {
  std::map<std::string, LineBrane> branes;
  std::map<std::string, SpecEntry> specs;

  static Document parse(const std::string& text);
  static Document parse_file(const std::string& path);

  /// Canonical serialization: sorted keys, normalized rational strings.
  std::string serialize() const;

  const LineBrane& brane(const std::string& name) const;
  SurgerySpec make_spec(const std::string& name) const;

  /// A brane name resolves to its one-line collection; a spec name resolves
  /// to its surgered result.
  BraneCollection resolve(const std::string& name) const;
};

}  // namespace syz

#endif
