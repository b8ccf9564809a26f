#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "graft/mat.hpp"
#include "graft/rational.hpp"
#include "graft/report.hpp"

namespace graft {

/// Discrete fusion data: finite object set with unit, dual involution and the
/// non-negative multiplicity tensor N(x,y,z) = multiplicity of z in x (x) y.
struct FusionRing {
    std::size_t m = 0;
    std::vector<std::string> names;
    std::size_t unit = 0;
    std::vector<std::size_t> dual;
    std::vector<Integer> tensor; // m^3, (x,y,z) lexicographic

    const Integer& N(std::size_t x, std::size_t y, std::size_t z) const {
        return tensor[(x * m + y) * m + z];
    }
    Integer& N(std::size_t x, std::size_t y, std::size_t z) {
        return tensor[(x * m + y) * m + z];
    }
};

/// Unvalidated input for validate_fusion.
struct FusionData {
    std::vector<std::string> names;
    std::size_t unit = 0;
    std::vector<std::size_t> dual; // empty = self-dual everywhere
    std::vector<Integer> tensor;   // m^3, zero-filled default
};

/// Verifies the unit laws N(0,y,z) = [y=z], N(x,0,z) = [x=z] and that the
/// dual is involutive. Throws ValidationError with a witness on failure.
FusionRing validate_fusion(const FusionData& data);

/// Sum over u of N(x,y,u) N(u,z,v) versus N(x,u,v) N(y,z,u), all quadruples.
CheckResult check_proassociativity(const FusionRing& ring);

/// N(x,y,z*) = N(y,z,x*) for all triples.
CheckResult check_cyclic(const FusionRing& ring);

/// N(x,y,z) = N(y,x,z) for all triples.
CheckResult check_braiding(const FusionRing& ring);

/// N(x,y,z) = N(y*,x*,z*) for all triples (antipode condition; precondition
/// of the dual-comparison chain).
CheckResult check_precompact(const FusionRing& ring);

/// Cayley matrices (N_x)_{y,z} = N(x,y,z).
std::vector<Mat> fusion_matrices(const FusionRing& ring);

/// When every column pair (y,z) has exactly one x with N(x,y,z) = 1 (and all
/// others 0), returns the internal-hom map (y,z) -> [y,z]; otherwise nullopt.
std::optional<std::vector<std::size_t>> is_closed(const FusionRing& ring);

FusionRing gen_fibonacci();
FusionRing gen_ising();
FusionRing gen_group_fusion(std::size_t n);

} // namespace graft
