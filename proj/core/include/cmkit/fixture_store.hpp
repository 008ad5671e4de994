#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cmkit/group.hpp"
#include "cmkit/perm.hpp"

namespace cmkit {

// One stored complete mapping: which group it belongs to (by canonical
// group name), its parity, the permutation in cycle notation, and a short
// provenance note. The parity label is validated against the cycles on
// parse; the complete-mapping property is checked where the group is known.
struct FixtureRecord {
  std::string group;
  Parity parity = Parity::even;
  std::string cycles;
  std::string provenance;
};

// A versioned text store of fixture records. Format: a "# cmkit-fixtures v1"
// header, then one record per line as four whitespace-separated fields
// (group parity cycles provenance); blank lines and '#' comments ignored.
class FixtureStore {
public:
  FixtureStore() = default;

  static FixtureStore load_file(const std::string& path);
  static FixtureStore parse(const std::string& text);

  void add(FixtureRecord rec);
  void append_to_file(const std::string& path, const FixtureRecord& rec) const;

  const std::vector<FixtureRecord>& records() const { return records_; }
  std::vector<FixtureRecord> for_group(const std::string& group_name) const;
  std::optional<FixtureRecord> find(const std::string& group_name, Parity parity) const;

  std::string serialize() const;

private:
  std::vector<FixtureRecord> records_;
};

// Constructed complete mappings for group families the library can derive
// on demand (Singer cycles, the classic even mappings, recorded fixtures,
// the identity for odd-order groups, ...). Keyed by canonical group name.
std::vector<std::pair<Perm, Parity>> builtin_fixtures(const FiniteGroup& G);

}  // namespace cmkit
