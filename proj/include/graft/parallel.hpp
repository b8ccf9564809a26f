#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graft/report.hpp"
#include "graft/scheme.hpp"
#include "graft/transform.hpp"

namespace graft {

/// How to run a scan kernel. Serial is the reference implementation; the
/// OpenMP variant must produce an identical result (same verdict, same
/// witness), which the tests check.
enum class Exec { Serial, OpenMP };

/// Proassociativity over all m^4 quadruples. Witness is the lexicographically
/// smallest failing quadruple regardless of execution mode.
CheckResult proassociativity_scan(const IntersectionTensor& N, Exec exec);

/// check_multiplicative over a batch of dim-vector pairs. Returns the first
/// failing pair index and its witness, if any.
struct SweepResult {
    std::size_t checked = 0;
    std::optional<std::size_t> failed_pair;
    std::optional<Witness> witness;
    bool passed() const { return !failed_pair.has_value(); }
};
SweepResult multiplicativity_sweep(const Kernel& k,
                                   const std::vector<std::pair<DimObject, DimObject>>& pairs,
                                   Exec exec);

/// Exhaustive regularity scan: f = g = all-ones, every assignment of the
/// given scalars to the grid cells, |scalars|^(n^2) morphism families in
/// total. For each, the regular-morphism equation (via is_regular) is
/// compared against class-constancy computed directly from the partition.
/// Scheme kernels only.
struct RegularityScanResult {
    std::uint64_t total = 0;
    std::uint64_t regular = 0;
    std::uint64_t constant_on_classes = 0;
    std::uint64_t disagreements = 0;
    std::optional<std::uint64_t> first_disagreement; // odometer index
};
RegularityScanResult regularity_scan(const Kernel& k, const std::vector<Rational>& scalars,
                                     Exec exec);

} // namespace graft
