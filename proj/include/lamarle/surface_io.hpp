#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "lamarle/ruled_surface.hpp"

namespace lamarle {

/// Reads {"name", "base", "director", "u_range", "v_range"}. Unknown or
/// missing keys and malformed JSON raise DefinitionError; expression errors
/// keep their own code with the offending field named in the message.
[[nodiscard]] RuledSurface surface_from_json(std::string_view text);

/// Throws DefinitionError when the file cannot be read.
[[nodiscard]] RuledSurface load_surface_definition(const std::filesystem::path& path);

/// Inverse of surface_from_json, pretty-printed with two-space indent.
[[nodiscard]] std::string surface_to_json(const RuledSurface& surface);

}  // namespace lamarle
