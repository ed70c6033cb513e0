#pragma once

#include <map>
#include <string>
#include <vector>

#include "flatbase/verify.hpp"

namespace flatbase {

struct NamedRingMap {
    std::string name;
    RingMap map;
    std::string from;
    std::string to;
};

struct NamedModuleEntry {
    std::string name;
    std::string algebra_name;
    ModulePresentation module;
};

struct VerifyRequest {
    std::string name;
    std::string map_name;
    std::vector<std::string> module_names;  // empty = all file modules
};

/// Parsed and fully validated instance file.
struct InstanceFile {
    FieldDescriptor field;
    std::map<std::string, AlgebraPtr> algebras;  // sorted by name
    std::vector<NamedRingMap> maps;              // alphabetical (JSON object order)
    std::vector<NamedModuleEntry> modules;
    std::vector<VerifyRequest> requests;
};

/// Parses UTF-8 JSON. SyntaxError for malformed JSON, SchemaError for shape
/// problems, ValidationError (wrapping the library diagnostics) for
/// mathematical failures; messages name the offending path.
InstanceFile parse_instance(const std::string& bytes);

/// Canonical serialization: sorted keys, two-space indent, reduced scalars,
/// trailing newline. parse(emit(x)) == x and emit is idempotent on its image.
std::string emit_instance(const InstanceFile& file);

// Scalar/matrix JSON helpers shared with the report writers.
std::string scalar_to_json_string(const FieldDescriptor& f, const Rat& x);

}  // namespace flatbase
