#pragma once

#include <optional>
#include <string>

#include "gjsum/global.hpp"

namespace gjsum {

// Parsed input descriptor. Exactly one of the payload members is engaged,
// matching `kind`.
struct Descriptor {
    enum class Kind { Group, Local, TameAbelian, Global };
    Kind kind;
    GroupRef group;  // engaged for Kind::Group
    std::optional<LocalExtensionData> local;
    std::optional<TameAbelianLocalDatum> tame;
    std::optional<GlobalExtensionData> global;
    std::string echo;  // canonical echo of the input for reports
};

// Parses and validates a descriptor; schema violations raise input_error
// with a field diagnostic.
Descriptor parse_descriptor(const std::string& json_text);
Descriptor parse_descriptor_file(const std::string& path);

}  // namespace gjsum
