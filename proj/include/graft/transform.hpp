#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "graft/fusion.hpp"
#include "graft/mat.hpp"
#include "graft/rational.hpp"
#include "graft/report.hpp"
#include "graft/scheme.hpp"

namespace graft {

/// Object of the source functor category: one dimension per class/object.
struct DimObject {
    std::vector<Integer> dims;

    std::size_t size() const { return dims.size(); }
    friend bool operator==(const DimObject&, const DimObject&) = default;
};

/// Morphism of the source category: one exact matrix per index, of shape
/// target.dims[i] x source.dims[i].
struct MorphismFamily {
    DimObject source;
    DimObject target;
    std::vector<Mat> mats;
};

/// Object of the target functor category: a dimension per grid cell (X x X
/// for schemes, S x S for fusion), row-major.
struct MatObject {
    std::size_t n = 0;
    std::vector<Integer> dims;

    const Integer& at(std::size_t x, std::size_t y) const { return dims[x * n + y]; }
    Integer& at(std::size_t x, std::size_t y) { return dims[x * n + y]; }
    friend bool operator==(const MatObject&, const MatObject&) = default;
};

/// Morphism of the target category: one matrix per grid cell.
struct MatMorphismFamily {
    MatObject source;
    MatObject target;
    std::vector<Mat> mats; // row-major over the grid

    const Mat& at(std::size_t x, std::size_t y) const { return mats[x * source.n + y]; }
    Mat& at(std::size_t x, std::size_t y) { return mats[x * source.n + y]; }
};

/// A discrete multiplicative kernel K(a,u): the partition kernel of a scheme
/// (u runs over X x X) or the Cayley kernel N(x,y,z) of a fusion ring (u runs
/// over S x S). Carries the promonoidal tensor of the source so convolution
/// and the checks can be written once.
class Kernel {
public:
    enum class Side { Scheme, Fusion };

    Kernel(AssociationScheme scheme, IntersectionTensor tensor);
    explicit Kernel(FusionRing ring);

    Side side() const { return side_; }
    std::size_t index_count() const { return index_count_; } // |A|
    std::size_t grid_n() const { return grid_n_; }           // grid is grid_n^2 cells
    std::size_t cell_count() const { return grid_n_ * grid_n_; }

    long long count(std::size_t a, std::size_t cell) const { return counts_[a * cell_count() + cell]; }
    /// Support of index a: (cell, multiplicity) pairs, cells ascending.
    const std::vector<std::pair<std::size_t, long long>>& support(std::size_t a) const {
        return support_[a];
    }

    const IntersectionTensor& tensor() const { return tensor_; }
    const std::vector<std::size_t>& involution() const { return involution_; }
    std::size_t unit_index() const { return unit_; }

    const AssociationScheme* scheme() const { return scheme_ ? &*scheme_ : nullptr; }
    const FusionRing* fusion() const { return fusion_ ? &*fusion_ : nullptr; }

private:
    Side side_;
    std::size_t index_count_ = 0;
    std::size_t grid_n_ = 0;
    std::size_t unit_ = 0;
    std::vector<long long> counts_;
    std::vector<std::vector<std::pair<std::size_t, long long>>> support_;
    IntersectionTensor tensor_;
    std::vector<std::size_t> involution_;
    std::optional<AssociationScheme> scheme_;
    std::optional<FusionRing> fusion_;
};

/// Forward transform on objects: dim(u) = sum_a K(a,u) f(a).
MatObject khat(const Kernel& k, const DimObject& f);

/// Forward transform on morphisms: per cell the direct sum over ascending a
/// of kron(alpha_a, I_{K(a,u)}).
MatMorphismFamily khat(const Kernel& k, const MorphismFamily& alpha);

/// Right adjoint on objects: dim(a) = sum_u K(a,u) F(u).
DimObject kcheck(const Kernel& k, const MatObject& F);

/// Right adjoint on morphisms: per index the direct sum over row-major cells
/// of kron(beta_u, I_{K(a,u)}).
MorphismFamily kcheck(const Kernel& k, const MatMorphismFamily& beta);

/// Unit of the adjunction at f, a split monomorphism at every index.
MorphismFamily unit_eta(const Kernel& k, const DimObject& f);

/// Counit of the adjunction at F.
MatMorphismFamily counit_eps(const Kernel& k, const MatObject& F);

/// Convolution on objects: (f (x) g)(r) = sum_{s,t} N(s,t,r) f(s) g(t).
DimObject convolve(const IntersectionTensor& N, const DimObject& f, const DimObject& g);

/// Convolution on morphisms, blocks kron(kron(alpha_s, beta_t), I_N) in
/// ascending (s,t) order.
MorphismFamily convolve(const IntersectionTensor& N, const MorphismFamily& alpha,
                        const MorphismFamily& beta);

/// Per-index composition of source morphisms.
MorphismFamily compose(const MorphismFamily& second, const MorphismFamily& first);

/// Target-side monoidal product. Scheme grid: dim(x,y) = sum_z F(x,z) G(z,y).
/// Fusion grid: dim(y,z) = sum_u G(y,u) F(u,z); this order is the one under
/// which the transform is multiplicative (frozen by a unit test on a
/// non-commutative example).
MatObject mat_compose(const Kernel& k, const MatObject& F, const MatObject& G);

/// The unit object of the target category: identity dimension pattern.
MatObject unit_mat_object(const Kernel& k);

/// The prounit of the source: 1 at the unit index, 0 elsewhere.
DimObject prounit(const Kernel& k);

/// khat(f (x) g) = khat(f) o khat(g), exact cell-by-cell.
CheckResult check_multiplicative(const Kernel& k, const DimObject& f, const DimObject& g);

/// khat(prounit) equals the unit pattern.
CheckResult check_unit_preserved(const Kernel& k);

/// Every source index occurs in the kernel's support.
CheckResult check_conservative_structural(const Kernel& k);

/// is_iso of every cell of khat(alpha) iff is_iso of every alpha_a.
CheckResult reflects_iso(const Kernel& k, const MorphismFamily& alpha);

/// f*(a) = f(a*) on objects; contravariant transpose per index on morphisms.
DimObject star_source(const Kernel& k, const DimObject& f);
MorphismFamily star_source(const Kernel& k, const MorphismFamily& alpha);

/// F*(x,y) = F(y,x).
MatObject star_target(const MatObject& F);

/// khat(f*) = khat(f)* (scheme case, always; fusion case only when the ring
/// is closed, via the internal-hom map; otherwise NOT-APPLICABLE).
CheckResult check_star_preserved(const Kernel& k, const DimObject& f);

/// Both triangle identities of the adjunction, as literal matrix identities.
CheckResult check_triangle_identities(const Kernel& k, const DimObject& f, const MatObject& F);

/// Scheme case: kcheck(khat(f))(s) = |s| f(s).
CheckResult check_roundtrip(const Kernel& k, const DimObject& f);

/// Each eta_a with f(a) > 0 admits a left inverse.
CheckResult check_eta_split_mono(const Kernel& k, const DimObject& f);

/// Precomputed data for regularity tests of morphisms khat(f) -> khat(g).
struct RegularityContext {
    const Kernel* kernel = nullptr;
    DimObject f;
    DimObject g;
    MatObject khat_f;
    MatObject khat_g;
    MatMorphismFamily khat_eta_f;
    MatMorphismFamily khat_eta_g;
};

RegularityContext make_regularity_context(const Kernel& k, DimObject f, DimObject g);

/// The regular-morphism equation: khat(kcheck(alpha)) o khat(eta_f) equals
/// khat(eta_g) o alpha, compared cell-by-cell in row-major order (the witness
/// is the first differing cell).
CheckResult is_regular(const RegularityContext& ctx, const MatMorphismFamily& alpha);
CheckResult is_regular(const Kernel& k, const DimObject& f, const DimObject& g,
                       const MatMorphismFamily& alpha);

/// Preimage search under khat. Scheme case: class-constancy, zero or one
/// solution, witness = first inconstant pair of cells. Fusion case: all
/// non-negative integer solutions with entries bounded by max F.dim.
struct WienerResult {
    std::vector<DimObject> solutions;
    std::optional<Witness> witness;
    bool in_image() const { return !solutions.empty(); }
};
WienerResult wiener_membership(const Kernel& k, const MatObject& F);

/// wiener_membership(khat(f)) recovers exactly f.
CheckResult check_wiener_roundtrip(const Kernel& k, const DimObject& f);

/// Dimensions of f* (x) g* agree with those of (g (x) f)* at every index.
/// Requires the precompactness condition; throws PreconditionError otherwise.
CheckResult dual_comparison(const Kernel& k, const DimObject& f, const DimObject& g);

} // namespace graft
