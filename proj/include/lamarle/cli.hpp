#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "lamarle/curves.hpp"
#include "lamarle/ruled_surface.hpp"

namespace lamarle::cli {

enum class Command { List, Classify, Frame, Striction, Drall, Curvature, Verify, Mesh };
enum class OutputFormat { Csv, Json, Obj };

std::optional<Command> parse_command(std::string_view text) noexcept;
std::optional<OutputFormat> parse_format(std::string_view text) noexcept;

/// "a:b" with a < b.
std::optional<Interval> parse_range(std::string_view text) noexcept;

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;  // usage and definition errors
inline constexpr int kExitTolerance = 3;

struct RunConfig {
    Command command = Command::List;

    // exactly one surface source (none for list)
    std::optional<std::string> surface_name;
    std::optional<std::string> definition_path;
    std::optional<std::string> base;
    std::optional<std::string> director;
    std::optional<SurfaceClass> random_class;
    std::uint64_t seed = 0;

    std::optional<Interval> u_range;
    std::optional<Interval> v_range;
    int u_samples = 41;
    int v_samples = 33;
    std::optional<OutputFormat> format;  // csv by default, obj for mesh
    std::optional<std::string> output_path;
    double tolerance = 1e-8;
    double causal_epsilon = kCausalEpsilon;
};

/// Runs one command. Tables and meshes go to `out` (or the output file);
/// diagnostics go to `err`. Returns one of the kExit* codes.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a RunConfig and runs it.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lamarle::cli
