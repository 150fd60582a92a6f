#pragma once

// Text formats: DGA presentations, generator class maps and the component
// path tables used for dipping.
//
// DGA files are line oriented:
//
//   dga cp2            # optional name
//   gen a 3
//   gen b 1
//   diff a = b.b       # 0, 1, or words joined by +, factors joined by .
//
// Generators without a diff line have zero differential.

#include <filesystem>
#include <string>
#include <string_view>

#include "lch/dga.hpp"
#include "lch/grading.hpp"
#include "lch/taxonomy.hpp"

namespace lch {

/// Throws SyntaxError (with line and column) or any build_presentation error.
DgaPresentation parse_dga(std::string_view text);

/// Canonical form: name line, gen lines in declaration order, then one diff
/// line per generator.
std::string serialize(const DgaPresentation& p);

/// Parses a polynomial in the `diff` right-hand-side syntax.
Polynomial parse_polynomial(std::string_view text);

/// Lines `<id> <class>` with class in {diagram, handle, dip_upper, minimum}.
ClassMap parse_classes(std::string_view text);

/// Lines `endpoints <id> <i-> <i+>` and
/// `pair <i-> <i+> <d+> <u+> <d-> <u-> <morse> <ambient> forward|reverse`.
struct PathTable {
    ComponentPathData pairs;
    ComponentEndpoints endpoints;
};
PathTable parse_path_table(std::string_view text);

/// Reads a whole file; throws InvalidBundle when it cannot be opened.
std::string read_text_file(const std::filesystem::path& path);

/// Writes via a temporary file in the same directory and a rename.
void write_text_file_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace lch
