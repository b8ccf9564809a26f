#include "graft/transform.hpp"

#include <algorithm>
#include <sstream>

#include "graft/errors.hpp"

namespace graft {

namespace {

std::size_t to_size(const Integer& v) {
    if (v < 0) throw ShapeError("negative dimension");
    if (v > 1000000000) throw ShapeError("dimension too large: " + v.str());
    return static_cast<std::size_t>(static_cast<unsigned long long>(v));
}

std::string cell_str(std::size_t n, std::size_t cell) {
    return "(" + std::to_string(cell / n) + "," + std::to_string(cell % n) + ")";
}

// kron(a, I_c) without materializing the identity.
Mat kron_id(const Mat& a, std::size_t c) {
    Mat out(a.rows() * c, a.cols() * c);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Rational& v = a.at(i, j);
            if (v == 0) continue;
            for (std::size_t k = 0; k < c; ++k) out.at(i * c + k, j * c + k) = v;
        }
    return out;
}

Mat block_diag(const std::vector<Mat>& blocks) {
    std::size_t rows = 0, cols = 0;
    for (const Mat& b : blocks) { rows += b.rows(); cols += b.cols(); }
    Mat out(rows, cols);
    std::size_t r0 = 0, c0 = 0;
    for (const Mat& b : blocks) {
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < b.cols(); ++c)
                if (b.at(r, c) != 0) out.at(r0 + r, c0 + c) = b.at(r, c);
        r0 += b.rows();
        c0 += b.cols();
    }
    return out;
}

std::optional<Witness> first_cell_diff(const Mat& lhs, const Mat& rhs, std::size_t n,
                                       std::size_t cell) {
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
        return Witness{"cell " + cell_str(n, cell) + " shape",
                       std::to_string(lhs.rows()) + "x" + std::to_string(lhs.cols()),
                       std::to_string(rhs.rows()) + "x" + std::to_string(rhs.cols())};
    for (std::size_t r = 0; r < lhs.rows(); ++r)
        for (std::size_t c = 0; c < lhs.cols(); ++c)
            if (lhs.at(r, c) != rhs.at(r, c)) {
                std::ostringstream l, rr;
                l << lhs.at(r, c);
                rr << rhs.at(r, c);
                return Witness{"cell " + cell_str(n, cell) + " entry (" + std::to_string(r) +
                                   "," + std::to_string(c) + ")",
                               l.str(), rr.str()};
            }
    return std::nullopt;
}

} // namespace

Kernel::Kernel(AssociationScheme scheme, IntersectionTensor tensor)
    : side_(Side::Scheme),
      index_count_(scheme.m),
      grid_n_(scheme.n),
      unit_(scheme.diagonal_class),
      tensor_(std::move(tensor)),
      involution_(scheme.involution),
      scheme_(std::move(scheme)) {
    const std::size_t cells = cell_count();
    counts_.assign(index_count_ * cells, 0);
    support_.resize(index_count_);
    for (std::size_t s = 0; s < index_count_; ++s)
        for (const auto& [x, y] : scheme_->pairs[s]) {
            const std::size_t cell = x * grid_n_ + y;
            counts_[s * cells + cell] = 1;
            support_[s].emplace_back(cell, 1);
        }
}

Kernel::Kernel(FusionRing ring)
    : side_(Side::Fusion),
      index_count_(ring.m),
      grid_n_(ring.m),
      unit_(ring.unit),
      involution_(ring.dual),
      fusion_(std::move(ring)) {
    tensor_.m = index_count_;
    tensor_.entries = fusion_->tensor;
    const std::size_t cells = cell_count();
    counts_.assign(index_count_ * cells, 0);
    support_.resize(index_count_);
    for (std::size_t x = 0; x < index_count_; ++x)
        for (std::size_t y = 0; y < index_count_; ++y)
            for (std::size_t z = 0; z < index_count_; ++z) {
                const Integer& v = fusion_->N(x, y, z);
                if (v == 0) continue;
                const long long c = static_cast<long long>(to_size(v));
                const std::size_t cell = y * grid_n_ + z;
                counts_[x * cells + cell] = c;
                support_[x].emplace_back(cell, c);
            }
}

MatObject khat(const Kernel& k, const DimObject& f) {
    if (f.size() != k.index_count()) throw ShapeError("khat: dim vector does not match index set");
    MatObject out;
    out.n = k.grid_n();
    out.dims.assign(k.cell_count(), 0);
    for (std::size_t a = 0; a < k.index_count(); ++a) {
        if (f.dims[a] == 0) continue;
        for (const auto& [cell, c] : k.support(a)) out.dims[cell] += f.dims[a] * c;
    }
    return out;
}

MatMorphismFamily khat(const Kernel& k, const MorphismFamily& alpha) {
    MatMorphismFamily out;
    out.source = khat(k, alpha.source);
    out.target = khat(k, alpha.target);
    out.mats.reserve(k.cell_count());
    for (std::size_t cell = 0; cell < k.cell_count(); ++cell) {
        std::vector<Mat> blocks;
        for (std::size_t a = 0; a < k.index_count(); ++a) {
            const long long c = k.count(a, cell);
            if (c > 0) blocks.push_back(kron_id(alpha.mats[a], static_cast<std::size_t>(c)));
        }
        out.mats.push_back(block_diag(blocks));
    }
    return out;
}

DimObject kcheck(const Kernel& k, const MatObject& F) {
    if (F.n != k.grid_n() || F.dims.size() != k.cell_count())
        throw ShapeError("kcheck: matrix object does not match the kernel grid");
    DimObject out;
    out.dims.assign(k.index_count(), 0);
    for (std::size_t a = 0; a < k.index_count(); ++a)
        for (const auto& [cell, c] : k.support(a)) out.dims[a] += F.dims[cell] * c;
    return out;
}

MorphismFamily kcheck(const Kernel& k, const MatMorphismFamily& beta) {
    MorphismFamily out;
    out.source = kcheck(k, beta.source);
    out.target = kcheck(k, beta.target);
    out.mats.reserve(k.index_count());
    for (std::size_t a = 0; a < k.index_count(); ++a) {
        std::vector<Mat> blocks;
        for (const auto& [cell, c] : k.support(a))
            blocks.push_back(kron_id(beta.mats[cell], static_cast<std::size_t>(c)));
        out.mats.push_back(block_diag(blocks));
    }
    return out;
}

MorphismFamily unit_eta(const Kernel& k, const DimObject& f) {
    const MatObject khf = khat(k, f);
    MorphismFamily out;
    out.source = f;
    out.target = kcheck(k, khf);
    out.mats.reserve(k.index_count());
    for (std::size_t a = 0; a < k.index_count(); ++a) {
        const std::size_t fa = to_size(f.dims[a]);
        Mat eta(to_size(out.target.dims[a]), fa);
        std::size_t rowbase = 0;
        for (const auto& [cell, cll] : k.support(a)) {
            const std::size_t c = static_cast<std::size_t>(cll);
            // Offset of index a's block inside khat(f)(cell).
            std::size_t offset = 0;
            for (std::size_t b = 0; b < a; ++b)
                offset += to_size(f.dims[b]) * static_cast<std::size_t>(k.count(b, cell));
            for (std::size_t i = 0; i < fa; ++i)
                for (std::size_t copy = 0; copy < c; ++copy) {
                    const std::size_t j = offset + i * c + copy;
                    eta.at(rowbase + j * c + copy, i) = 1;
                }
            rowbase += to_size(khf.dims[cell]) * c;
        }
        out.mats.push_back(std::move(eta));
    }
    return out;
}

MatMorphismFamily counit_eps(const Kernel& k, const MatObject& F) {
    const DimObject kchF = kcheck(k, F);
    MatMorphismFamily out;
    out.source = khat(k, kchF);
    out.target = F;
    out.mats.reserve(k.cell_count());
    for (std::size_t cell = 0; cell < k.cell_count(); ++cell) {
        const std::size_t fu = to_size(F.dims[cell]);
        Mat eps(fu, to_size(out.source.dims[cell]));
        std::size_t colbase = 0;
        for (std::size_t a = 0; a < k.index_count(); ++a) {
            const long long cll = k.count(a, cell);
            if (cll > 0) {
                const std::size_t c = static_cast<std::size_t>(cll);
                // Offset of this cell's block inside kcheck(F)(a).
                std::size_t tbase = 0;
                for (const auto& [cell2, c2] : k.support(a)) {
                    if (cell2 >= cell) break;
                    tbase += to_size(F.dims[cell2]) * static_cast<std::size_t>(c2);
                }
                for (std::size_t j = 0; j < fu; ++j)
                    for (std::size_t copy = 0; copy < c; ++copy) {
                        const std::size_t t = tbase + j * c + copy;
                        eps.at(j, colbase + t * c + copy) = 1;
                    }
            }
            colbase += to_size(kchF.dims[a]) * static_cast<std::size_t>(std::max(cll, 0LL));
        }
        out.mats.push_back(std::move(eps));
    }
    return out;
}

DimObject convolve(const IntersectionTensor& N, const DimObject& f, const DimObject& g) {
    const std::size_t m = N.m;
    if (f.size() != m || g.size() != m) throw ShapeError("convolve: index set mismatch");
    DimObject out;
    out.dims.assign(m, 0);
    for (std::size_t s = 0; s < m; ++s) {
        if (f.dims[s] == 0) continue;
        for (std::size_t t = 0; t < m; ++t) {
            if (g.dims[t] == 0) continue;
            const Integer prod = f.dims[s] * g.dims[t];
            for (std::size_t r = 0; r < m; ++r) out.dims[r] += N.at(s, t, r) * prod;
        }
    }
    return out;
}

MorphismFamily convolve(const IntersectionTensor& N, const MorphismFamily& alpha,
                        const MorphismFamily& beta) {
    const std::size_t m = N.m;
    MorphismFamily out;
    out.source = convolve(N, alpha.source, beta.source);
    out.target = convolve(N, alpha.target, beta.target);
    out.mats.reserve(m);
    for (std::size_t r = 0; r < m; ++r) {
        std::vector<Mat> blocks;
        for (std::size_t s = 0; s < m; ++s)
            for (std::size_t t = 0; t < m; ++t) {
                const std::size_t copies = to_size(N.at(s, t, r));
                if (copies) blocks.push_back(kron_id(kron(alpha.mats[s], beta.mats[t]), copies));
            }
        out.mats.push_back(block_diag(blocks));
    }
    return out;
}

MorphismFamily compose(const MorphismFamily& second, const MorphismFamily& first) {
    if (first.target.dims != second.source.dims)
        throw ShapeError("compose: middle objects disagree");
    MorphismFamily out;
    out.source = first.source;
    out.target = second.target;
    out.mats.reserve(first.mats.size());
    for (std::size_t a = 0; a < first.mats.size(); ++a)
        out.mats.push_back(mat_mul(second.mats[a], first.mats[a]));
    return out;
}

MatObject mat_compose(const Kernel& k, const MatObject& F, const MatObject& G) {
    const std::size_t n = k.grid_n();
    if (F.n != n || G.n != n) throw ShapeError("mat_compose: grid mismatch");
    MatObject out;
    out.n = n;
    out.dims.assign(n * n, 0);
    if (k.side() == Kernel::Side::Scheme) {
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t z = 0; z < n; ++z) out.at(x, y) += F.at(x, z) * G.at(z, y);
    } else {
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                for (std::size_t u = 0; u < n; ++u) out.at(y, z) += G.at(y, u) * F.at(u, z);
    }
    return out;
}

MatObject unit_mat_object(const Kernel& k) {
    MatObject out;
    out.n = k.grid_n();
    out.dims.assign(k.cell_count(), 0);
    for (std::size_t x = 0; x < out.n; ++x) out.at(x, x) = 1;
    return out;
}

DimObject prounit(const Kernel& k) {
    DimObject j;
    j.dims.assign(k.index_count(), 0);
    j.dims[k.unit_index()] = 1;
    return j;
}

CheckResult check_multiplicative(const Kernel& k, const DimObject& f, const DimObject& g) {
    const MatObject lhs = khat(k, convolve(k.tensor(), f, g));
    const MatObject rhs = mat_compose(k, khat(k, f), khat(k, g));
    for (std::size_t cell = 0; cell < k.cell_count(); ++cell)
        if (lhs.dims[cell] != rhs.dims[cell])
            return CheckResult::fail({"cell " + cell_str(k.grid_n(), cell),
                                      lhs.dims[cell].str(), rhs.dims[cell].str()});
    return CheckResult::pass();
}

CheckResult check_unit_preserved(const Kernel& k) {
    const MatObject lhs = khat(k, prounit(k));
    const MatObject rhs = unit_mat_object(k);
    for (std::size_t cell = 0; cell < k.cell_count(); ++cell)
        if (lhs.dims[cell] != rhs.dims[cell])
            return CheckResult::fail({"cell " + cell_str(k.grid_n(), cell),
                                      lhs.dims[cell].str(), rhs.dims[cell].str()});
    return CheckResult::pass();
}

CheckResult check_conservative_structural(const Kernel& k) {
    for (std::size_t a = 0; a < k.index_count(); ++a)
        if (k.support(a).empty())
            return CheckResult::fail({"index " + std::to_string(a), "empty support", "nonempty"});
    return CheckResult::pass();
}

CheckResult reflects_iso(const Kernel& k, const MorphismFamily& alpha) {
    const MatMorphismFamily image = khat(k, alpha);
    bool target_iso = true;
    for (const Mat& m : image.mats)
        if (!is_iso(m)) { target_iso = false; break; }
    bool source_iso = true;
    for (const Mat& m : alpha.mats)
        if (!is_iso(m)) { source_iso = false; break; }
    if (target_iso != source_iso)
        return CheckResult::fail({"khat(alpha) iso everywhere vs alpha iso everywhere",
                                  target_iso ? "true" : "false", source_iso ? "true" : "false"});
    return CheckResult::pass();
}

DimObject star_source(const Kernel& k, const DimObject& f) {
    DimObject out;
    out.dims.resize(f.size());
    for (std::size_t a = 0; a < f.size(); ++a) out.dims[a] = f.dims[k.involution()[a]];
    return out;
}

MorphismFamily star_source(const Kernel& k, const MorphismFamily& alpha) {
    MorphismFamily out;
    out.source = star_source(k, alpha.target);
    out.target = star_source(k, alpha.source);
    out.mats.resize(alpha.mats.size());
    for (std::size_t a = 0; a < alpha.mats.size(); ++a)
        out.mats[a] = dual(alpha.mats[k.involution()[a]]);
    return out;
}

MatObject star_target(const MatObject& F) {
    MatObject out;
    out.n = F.n;
    out.dims.resize(F.dims.size());
    for (std::size_t x = 0; x < F.n; ++x)
        for (std::size_t y = 0; y < F.n; ++y) out.at(x, y) = F.at(y, x);
    return out;
}

CheckResult check_star_preserved(const Kernel& k, const DimObject& f) {
    if (k.side() == Kernel::Side::Scheme) {
        const MatObject lhs = khat(k, star_source(k, f));
        const MatObject rhs = star_target(khat(k, f));
        for (std::size_t cell = 0; cell < k.cell_count(); ++cell)
            if (lhs.dims[cell] != rhs.dims[cell])
                return CheckResult::fail({"cell " + cell_str(k.grid_n(), cell),
                                          lhs.dims[cell].str(), rhs.dims[cell].str()});
        return CheckResult::pass();
    }
    const FusionRing& ring = *k.fusion();
    const auto hom = is_closed(ring);
    if (!hom) return CheckResult::not_applicable("ring is not closed");
    const std::size_t m = ring.m;
    const DimObject fs = star_source(k, f);
    const MatObject lhs = khat(k, fs);
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y) {
            // Via the internal hom: khat(f*)(x,y) = f*[x,y] = f([x,y]*) and
            // khat(f)(y,x)* has dimension f([y,x]).
            const Integer& via_hom = f.dims[ring.dual[(*hom)[x * m + y]]];
            const Integer& rhs = f.dims[(*hom)[y * m + x]];
            if (lhs.at(x, y) != via_hom || via_hom != rhs)
                return CheckResult::fail({"cell (" + std::to_string(x) + "," + std::to_string(y) +
                                              ")",
                                          lhs.at(x, y).str(), rhs.str()});
        }
    return CheckResult::pass();
}

CheckResult check_triangle_identities(const Kernel& k, const DimObject& f, const MatObject& F) {
    // (eps khat) o (khat eta) = id on khat(f).
    const MatObject khf = khat(k, f);
    const MatMorphismFamily keta = khat(k, unit_eta(k, f));
    const MatMorphismFamily eps_khf = counit_eps(k, khf);
    for (std::size_t cell = 0; cell < k.cell_count(); ++cell) {
        const Mat composite = mat_mul(eps_khf.mats[cell], keta.mats[cell]);
        const Mat id = Mat::identity(to_size(khf.dims[cell]));
        if (auto w = first_cell_diff(composite, id, k.grid_n(), cell)) {
            w->location = "triangle 1, " + w->location;
            return CheckResult::fail(*w);
        }
    }
    // (kcheck eps) o (eta kcheck) = id on kcheck(F).
    const DimObject kchF = kcheck(k, F);
    const MorphismFamily keps = kcheck(k, counit_eps(k, F));
    const MorphismFamily eta_kch = unit_eta(k, kchF);
    for (std::size_t a = 0; a < k.index_count(); ++a) {
        const Mat composite = mat_mul(keps.mats[a], eta_kch.mats[a]);
        const Mat id = Mat::identity(to_size(kchF.dims[a]));
        if (composite != id)
            return CheckResult::fail({"triangle 2, index " + std::to_string(a),
                                      composite.to_string(), id.to_string()});
    }
    return CheckResult::pass();
}

CheckResult check_roundtrip(const Kernel& k, const DimObject& f) {
    if (k.side() != Kernel::Side::Scheme)
        return CheckResult::not_applicable("class-size round trip is scheme-specific");
    const DimObject round = kcheck(k, khat(k, f));
    for (std::size_t s = 0; s < k.index_count(); ++s) {
        const Integer expected = Integer(k.scheme()->class_size(s)) * f.dims[s];
        if (round.dims[s] != expected)
            return CheckResult::fail(
                {"class " + std::to_string(s), round.dims[s].str(), expected.str()});
    }
    return CheckResult::pass();
}

CheckResult check_eta_split_mono(const Kernel& k, const DimObject& f) {
    const MorphismFamily eta = unit_eta(k, f);
    for (std::size_t a = 0; a < k.index_count(); ++a) {
        if (f.dims[a] == 0) continue;
        // eta_a is split mono iff dual(eta_a) eta_a is invertible.
        if (!is_iso(mat_mul(dual(eta.mats[a]), eta.mats[a])))
            return CheckResult::fail({"index " + std::to_string(a),
                                      "eta has no left inverse", "split mono"});
    }
    return CheckResult::pass();
}

RegularityContext make_regularity_context(const Kernel& k, DimObject f, DimObject g) {
    RegularityContext ctx;
    ctx.kernel = &k;
    ctx.khat_f = khat(k, f);
    ctx.khat_g = khat(k, g);
    ctx.khat_eta_f = khat(k, unit_eta(k, f));
    ctx.khat_eta_g = khat(k, unit_eta(k, g));
    ctx.f = std::move(f);
    ctx.g = std::move(g);
    return ctx;
}

namespace {

/// The scheme-kernel, all-dims-one case: khat(eta) at a cell is the all-ones
/// column over its class, kcheck(alpha) is the diagonal of the class's
/// scalars, so the equation at cell u reads alpha(u_j) = alpha(u) for every
/// cell u_j of class(u). Same comparisons and witness as the generic path,
/// without materializing any matrices.
CheckResult is_regular_scalar(const RegularityContext& ctx, const MatMorphismFamily& alpha) {
    const AssociationScheme& sch = *ctx.kernel->scheme();
    const std::size_t n = sch.n;
    for (std::size_t cell = 0; cell < n * n; ++cell) {
        const Rational& here = alpha.mats[cell].at(0, 0);
        const auto& cls = sch.pairs[sch.class_matrix.cells[cell]];
        for (std::size_t j = 0; j < cls.size(); ++j) {
            const Rational& there = alpha.mats[cls[j].first * n + cls[j].second].at(0, 0);
            if (there != here)
                return CheckResult::fail({"cell " + cell_str(n, cell) + " entry (" +
                                              std::to_string(j) + ",0)",
                                          there.str(), here.str()});
        }
    }
    return CheckResult::pass();
}

bool all_ones(const std::vector<Integer>& dims) {
    for (const Integer& d : dims)
        if (d != 1) return false;
    return true;
}

} // namespace

CheckResult is_regular(const RegularityContext& ctx, const MatMorphismFamily& alpha) {
    const Kernel& k = *ctx.kernel;
    if (alpha.source.dims != ctx.khat_f.dims || alpha.target.dims != ctx.khat_g.dims)
        throw ShapeError("is_regular: alpha is not a morphism khat(f) -> khat(g)");

    if (k.side() == Kernel::Side::Scheme && all_ones(ctx.f.dims) && all_ones(ctx.g.dims))
        return is_regular_scalar(ctx, alpha);

    // kcheck(alpha), one index at a time, only when a cell needs it.
    std::vector<std::optional<Mat>> kalpha(k.index_count());
    auto kalpha_at = [&](std::size_t a) -> const Mat& {
        if (!kalpha[a]) {
            std::vector<Mat> blocks;
            for (const auto& [cell, c] : k.support(a))
                blocks.push_back(kron_id(alpha.mats[cell], static_cast<std::size_t>(c)));
            kalpha[a] = block_diag(blocks);
        }
        return *kalpha[a];
    };

    for (std::size_t cell = 0; cell < k.cell_count(); ++cell) {
        // khat(kcheck(alpha)) at this cell.
        std::vector<Mat> blocks;
        for (std::size_t a = 0; a < k.index_count(); ++a) {
            const long long c = k.count(a, cell);
            if (c > 0) blocks.push_back(kron_id(kalpha_at(a), static_cast<std::size_t>(c)));
        }
        const Mat lhs = mat_mul(block_diag(blocks), ctx.khat_eta_f.mats[cell]);
        const Mat rhs = mat_mul(ctx.khat_eta_g.mats[cell], alpha.mats[cell]);
        if (auto w = first_cell_diff(lhs, rhs, k.grid_n(), cell)) return CheckResult::fail(*w);
    }
    return CheckResult::pass();
}

CheckResult is_regular(const Kernel& k, const DimObject& f, const DimObject& g,
                       const MatMorphismFamily& alpha) {
    return is_regular(make_regularity_context(k, f, g), alpha);
}

WienerResult wiener_membership(const Kernel& k, const MatObject& F) {
    if (F.n != k.grid_n()) throw ShapeError("wiener_membership: grid mismatch");
    WienerResult res;
    if (k.side() == Kernel::Side::Scheme) {
        const AssociationScheme& sch = *k.scheme();
        DimObject f;
        f.dims.assign(sch.m, 0);
        for (std::size_t s = 0; s < sch.m; ++s) {
            const auto& [x0, y0] = sch.pairs[s][0];
            f.dims[s] = F.at(x0, y0);
            for (const auto& [x, y] : sch.pairs[s])
                if (F.at(x, y) != f.dims[s]) {
                    res.witness = Witness{"cells (" + std::to_string(x0) + "," +
                                              std::to_string(y0) + ") and (" + std::to_string(x) +
                                              "," + std::to_string(y) + ") of class " +
                                              std::to_string(s),
                                          f.dims[s].str(), F.at(x, y).str()};
                    return res;
                }
        }
        res.solutions.push_back(std::move(f));
        return res;
    }

    // Fusion: all non-negative integer solutions of sum_x f(x) N(x,y,z) =
    // F(y,z) with entries bounded by max F.dim, by backtracking (partial sums
    // only grow, so an overshoot prunes the branch).
    const std::size_t m = k.index_count();
    Integer bound = 0;
    for (const Integer& d : F.dims) bound = std::max(bound, d);
    std::vector<Integer> partial(k.cell_count(), 0);
    DimObject f;
    f.dims.assign(m, 0);
    auto overshoots = [&](std::size_t a) {
        for (const auto& [cell, c] : k.support(a))
            if (partial[cell] > F.dims[cell]) return true;
        return false;
    };
    auto search = [&](auto&& self, std::size_t a) -> void {
        if (a == m) {
            if (partial == F.dims) res.solutions.push_back(f);
            return;
        }
        for (Integer v = 0; v <= bound; ++v) {
            f.dims[a] = v;
            if (v > 0)
                for (const auto& [cell, c] : k.support(a)) partial[cell] += c;
            if (!overshoots(a)) self(self, a + 1);
            if (v == bound)
                for (const auto& [cell, c] : k.support(a)) partial[cell] -= v * c;
        }
        f.dims[a] = 0;
    };
    search(search, 0);
    return res;
}

CheckResult check_wiener_roundtrip(const Kernel& k, const DimObject& f) {
    const WienerResult res = wiener_membership(k, khat(k, f));
    for (const DimObject& sol : res.solutions)
        if (sol == f) return CheckResult::pass();
    return CheckResult::fail({"preimage of khat(f)",
                              res.solutions.empty() ? "no solution" : "different solution",
                              "f itself"});
}

CheckResult dual_comparison(const Kernel& k, const DimObject& f, const DimObject& g) {
    const CheckResult pre = k.side() == Kernel::Side::Scheme
                                ? check_precompact(k.tensor(), k.involution())
                                : check_precompact(*k.fusion());
    if (!pre.passed())
        throw PreconditionError("dual_comparison requires the precompactness condition; violated at " +
                                pre.witness->location);
    const DimObject lhs = convolve(k.tensor(), star_source(k, f), star_source(k, g));
    const DimObject rhs = star_source(k, convolve(k.tensor(), g, f));
    for (std::size_t a = 0; a < k.index_count(); ++a)
        if (lhs.dims[a] != rhs.dims[a])
            return CheckResult::fail(
                {"index " + std::to_string(a), lhs.dims[a].str(), rhs.dims[a].str()});
    return CheckResult::pass();
}

} // namespace graft
