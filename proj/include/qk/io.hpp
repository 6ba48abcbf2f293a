#pragma once

#include <memory>

#include "qk/crossed.hpp"
#include "qk/trimodule.hpp"

namespace qk {

/// Syntax-level problems (bad tokens, unknown references, misshaped files).
/// Mathematical validation failures at load stay plain Errors.
struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

struct MapObject {
  std::string src, dst;
  Matrix matrix;  // dim(dst) × dim(src)
};

/// A parsed .qk file: named objects over one field, fully validated at load
/// (type invariants run; invalid objects abort the parse).
struct Workspace {
  struct Entry {
    std::string kind;  // coalgebra|dqb|group|comodule|yd|braided|trimodule|crossed|map
    std::string name;
    std::string over;        // base object name, when applicable
    std::string hash_claim;  // content hash of the base, when applicable
    std::shared_ptr<Coalgebra> coalgebra;
    std::shared_ptr<DualQuasiBialgebra> dqb;
    std::shared_ptr<Comodule> com;
    std::shared_ptr<GroupCocycleData> group;
    std::shared_ptr<YDModule> yd;
    std::shared_ptr<BraidedBialgebra> braided;
    std::shared_ptr<Trimodule> trimodule;
    std::shared_ptr<CrossedGModule> crossed;
    std::shared_ptr<MapObject> map;
    std::pair<std::string, std::string> provenance;  // bosonization (H,R) hashes
    bool has_provenance = false;
  };

  Field field;
  std::vector<Entry> entries;

  const Entry* find(const std::string& name) const;
  const Entry& get(const std::string& name, const std::string& kind) const;
};

Workspace parse_workspace(const std::string& text, const std::optional<Field>& fallback_field);
std::string serialize_workspace(const Workspace& ws);

/// Canonical section text of one entry (used for content hashes).
std::string serialize_entry(const Workspace& ws, const Workspace::Entry& e);
std::string content_hash(const std::string& canonical_text);  // 64-bit FNV-1a, hex

/// Run the full invariant suite appropriate to the entry's type.
Report validate_entry(const Workspace& ws, const Workspace::Entry& e);

}  // namespace qk
