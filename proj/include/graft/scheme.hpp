#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "graft/rational.hpp"
#include "graft/report.hpp"

namespace graft {

/// Raw partition data: an n x n grid of class labels, row-major.
struct ClassMatrix {
    std::size_t n = 0;
    std::vector<std::size_t> cells; // n*n labels

    std::size_t class_of(std::size_t x, std::size_t y) const { return cells[x * n + y]; }
    std::size_t& class_of(std::size_t x, std::size_t y) { return cells[x * n + y]; }
};

/// The intersection-number tensor N(s,t,r).
struct IntersectionTensor {
    std::size_t m = 0;
    std::vector<Integer> entries; // m^3, (s,t,r) lexicographic

    const Integer& at(std::size_t s, std::size_t t, std::size_t r) const {
        return entries[(s * m + t) * m + r];
    }
    Integer& at(std::size_t s, std::size_t t, std::size_t r) {
        return entries[(s * m + t) * m + r];
    }
};

/// A validated association scheme. Classes are canonicalized: the diagonal
/// class is 0, the rest follow in order of first occurrence in a row-major
/// scan of the class matrix.
struct AssociationScheme {
    std::size_t n = 0;
    std::size_t m = 0;
    ClassMatrix class_matrix;
    std::size_t diagonal_class = 0;
    std::vector<std::size_t> involution;                          // s -> s*
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> pairs; // per class, row-major order

    std::size_t class_size(std::size_t s) const { return pairs[s].size(); }
};

/// Checks the partition axioms (single diagonal class, transpose closure) and
/// well-definedness of the intersection numbers. Throws ValidationError with
/// a witness on failure.
AssociationScheme validate(const ClassMatrix& cm);

/// N(s,t,r) computed from one representative pair of r and post-verified
/// equal across all pairs of r. Throws ValidationError with a witness
/// quadruple on disagreement.
IntersectionTensor intersection_numbers(const AssociationScheme& sch);

/// Sum over x of N(s,t,x) N(x,r,u) versus N(s,x,u) N(t,r,x), all quadruples.
CheckResult check_proassociativity(const IntersectionTensor& N);

/// N(s,t,r) = N(t*,s*,r*) for all triples.
CheckResult check_precompact(const IntersectionTensor& N, const std::vector<std::size_t>& involution);

/// Valency-weighted cyclic condition k_r N(s,t,r*) = k_s N(t,r,s*) for all
/// triples; equivalent to N(s,t,r*) = N(t,r,s*) when all valencies agree.
CheckResult check_compact(const IntersectionTensor& N, const std::vector<std::size_t>& involution);

/// Exact integer-matrix identity M_s M_t = sum_r N(s,t,r) M_r over the 0/1
/// class adjacency matrices.
CheckResult bose_mesner_closure(const AssociationScheme& sch, const IntersectionTensor& N);

ClassMatrix gen_cyclic(std::size_t n);
ClassMatrix gen_group(const std::vector<std::vector<std::size_t>>& cayley_table);
ClassMatrix gen_hamming(std::size_t n, std::size_t q);
ClassMatrix gen_johnson(std::size_t v, std::size_t k);

} // namespace graft
