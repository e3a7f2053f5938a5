#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lamarle/ruled_surface.hpp"

namespace lamarle {

struct CatalogEntry {
    std::string name;
    RuledSurface surface;
    SurfaceClass surface_class;
    std::optional<double> known_P;
    std::string known_K_formula;                 // closed form in v, for display
    std::function<double(double v)> known_K;     // empty when unknown
};

/// "helicoid-1", "helicoid-2", "helicoid-3".
[[nodiscard]] std::vector<std::string> catalog_names();

/// Throws UnknownSurface.
[[nodiscard]] CatalogEntry get_surface(std::string_view name);

inline constexpr int kMaxGenerationAttempts = 1000;

/// Deterministic random surface of the requested class on u in [-1, 1].
///
/// Directors come from unit-length trigonometric or hyperbolic families, the
/// base is the striction curve plus a small offset along the director, and
/// the whole surface is rotated about the x3 axis and translated. Seeds with
/// seed % 4 == 3 use a quadratic phase, which gives a striction curve that is
/// not unit-speed; all other seeds give a unit-speed striction curve.
/// M1/M3 surfaces carry v_range already clamped to |v| < |P|.
/// Throws GenerationExhausted after kMaxGenerationAttempts rejections.
[[nodiscard]] RuledSurface random_surface(SurfaceClass cls, std::uint64_t seed);

}  // namespace lamarle
