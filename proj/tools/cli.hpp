#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <string_view>

#include <symreal/realization.hpp>

namespace symreal::cli
{

enum class Subcommand { trees, weights, realize, verify, jacobi };
enum class Check { bracket, compare, h1, homogeneity, pairing, linear };
enum class Format { json, csv };

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_usage = 2;

struct RunConfig {
    Subcommand subcommand = Subcommand::trees;
    std::optional<std::filesystem::path> poisson_path;
    unsigned order = 1;
    unsigned max_degree = 1;
    SeriesKind map_kind = SeriesKind::source;
    std::set<Check> checks;
    Format format = Format::json;
    std::optional<std::filesystem::path> out_path;
    /// Treat a failed Jacobi identity as an error instead of a warning.
    bool strict = false;
    std::size_t memo_limit = static_cast<std::size_t>(-1);
};

/// Throws std::invalid_argument for unknown names.
Check check_from_string(std::string_view name);
std::string_view to_string(Check c);

/// Executes one subcommand. Documents go to `out` (or to config.out_path for
/// realize), diagnostics to `err`. Returns 0 on success, 1 when a
/// verification fails, 2 on usage or input errors.
int run(const RunConfig &config, std::ostream &out, std::ostream &err);

} // namespace symreal::cli
