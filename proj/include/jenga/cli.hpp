#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "jenga/config.hpp"
#include "jenga/geometry.hpp"

namespace jenga {

/// One row per level, top level first, prefixed by the level index.
std::string render_ascii(const Configuration& c);

enum class MeshFormat { Obj, Off };

/// Writes a validated closed surface. Vertices are sorted by coordinate and
/// faces by their least vertex index. Throws InvalidSurface otherwise.
std::string export_mesh(const SurfaceComplex& s, MeshFormat format);

/// Reads back quad meshes written by export_mesh.
SurfaceComplex import_mesh(std::string_view text, MeshFormat format);

namespace cli {

enum ExitCode { kSuccess = 0, kDomainError = 1, kUsageError = 2 };

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cli

}  // namespace jenga
