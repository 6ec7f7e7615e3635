#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "transfun/axiom.hpp"
#include "transfun/transfunction.hpp"

namespace transfun {

using Json = nlohmann::ordered_json;

/// Spaces known to a document, looked up by id.
class SpaceRegistry {
 public:
  SpaceRegistry() = default;
  explicit SpaceRegistry(const std::vector<Space>& spaces);

  /// Re-adding an identical space is a no-op; a different space with the
  /// same id is a SpaceMismatch.
  void add(const Space& space);
  const Space& get(std::string_view id) const;
  bool contains(std::string_view id) const { return spaces_.contains(std::string(id)); }
  std::vector<Space> spaces() const;

 private:
  std::map<std::string, Space> spaces_;
  std::vector<std::string> order_;
};

/// A spec file: the spaces it mentions plus the constructor tree.
struct SpecDocument {
  std::vector<Space> spaces;
  Transfunction spec;
};

/// Throws Errc::parse_error with the parser's position on malformed input.
Json parse_json(std::string_view text);
/// Two-space indentation and a trailing newline.
std::string dump(const Json& json);

Json to_json(const Space& space);
Space space_from_json(const Json& json);

Json to_json(const Measure& mu);
Measure measure_from_json(const Json& json, const SpaceRegistry& spaces);

/// Tree nodes reference spaces by id.
Json to_json(const Transfunction& spec);
/// Structural problems raise ParseError, semantic ones keep their own code;
/// both messages name the node by its slash-separated child-index path.
Transfunction spec_from_json(const Json& json, const SpaceRegistry& spaces);

/// Spaces are listed in order of first appearance in the tree.
SpecDocument make_document(const Transfunction& spec);
Json to_json(const SpecDocument& doc);
SpecDocument spec_document_from_json(const Json& json);

Json to_json(const Witness& witness);
Witness witness_from_json(const Json& json, const SpaceRegistry& spaces);
Json to_json(const PropertyReport& report);
PropertyReport report_from_json(const Json& json, const SpaceRegistry& spaces);

/// 64-bit FNV-1a of the serialized spec document, as 16 hex digits.
std::string spec_digest(const Transfunction& spec);

}  // namespace transfun
