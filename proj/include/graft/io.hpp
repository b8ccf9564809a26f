#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graft/fusion.hpp"
#include "graft/mat.hpp"
#include "graft/scheme.hpp"
#include "graft/transform.hpp"

namespace graft {

/// "scheme v1": header line, `points <n>`, `matrix`, then n rows of n class
/// indices. `#` starts a comment anywhere.
ClassMatrix parse_scheme(const std::string& text);

/// "fusion v1": header, `objects <name>...`, `unit <name>`, optional
/// `dual <a> <b>` lines (default self-dual), `N <x> <y> <z> <mult>` lines,
/// optional `autofill_unit true` to fill the unit laws.
FusionData parse_fusion(const std::string& text);

/// "group v1": header, `order <n>`, `table`, then n rows of n elements.
std::vector<std::vector<std::size_t>> parse_group_table(const std::string& text);

/// "matrix v1": header, `size <n>`, then n rows of n non-negative dims.
MatObject parse_matrix(const std::string& text);

/// "morphism v1": header, optional `f <d0,d1,...>` / `g <d0,d1,...>` lines
/// (default all-ones), then `M <x> <y>` blocks each followed by a rational
/// matrix, one row per line. Unlisted cells default to zero matrices.
struct MorphismInput {
    std::optional<std::vector<Integer>> f;
    std::optional<std::vector<Integer>> g;
    std::vector<std::pair<std::pair<std::size_t, std::size_t>, Mat>> cells;
};
MorphismInput parse_morphism(const std::string& text);

std::string format_scheme(const ClassMatrix& cm);
std::string format_fusion(const FusionRing& ring);

/// A parsed corpus entry: either side, plus where it came from.
struct ParsedInput {
    enum class Type { Scheme, Fusion };
    Type type = Type::Scheme;
    std::optional<ClassMatrix> scheme;
    std::optional<FusionData> fusion;
    std::string source;
};

/// Accepts a file path or a generator spec (gen:cyclic:5, gen:hamming:3,2,
/// gen:johnson:5,2, gen:group:<file>, gen:fibonacci, gen:ising, gen:zn:4).
/// File type is detected from the header line.
ParsedInput load_source(const std::string& spec);

std::string read_file(const std::string& path);

} // namespace graft
