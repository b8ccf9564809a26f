#include "graft/parallel.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "graft/errors.hpp"

namespace graft {

namespace {

std::size_t worker_count(Exec exec) {
#ifdef _OPENMP
    if (exec == Exec::OpenMP) return static_cast<std::size_t>(omp_get_max_threads());
#else
    (void)exec;
#endif
    return 1;
}

} // namespace

CheckResult proassociativity_scan(const IntersectionTensor& N, Exec exec) {
    const std::size_t m = N.m;
    const std::uint64_t none = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t best = none;

    const std::int64_t outer = static_cast<std::int64_t>(m * m);
#pragma omp parallel for schedule(dynamic) if (exec == Exec::OpenMP)
    for (std::int64_t st = 0; st < outer; ++st) {
        const std::size_t s = static_cast<std::size_t>(st) / m;
        const std::size_t t = static_cast<std::size_t>(st) % m;
        std::uint64_t local = none;
        for (std::size_t r = 0; r < m && local == none; ++r)
            for (std::size_t u = 0; u < m && local == none; ++u) {
                Integer lhs = 0, rhs = 0;
                for (std::size_t x = 0; x < m; ++x) {
                    lhs += N.at(s, t, x) * N.at(x, r, u);
                    rhs += N.at(s, x, u) * N.at(t, r, x);
                }
                if (lhs != rhs) local = ((static_cast<std::uint64_t>(st) * m + r) * m + u);
            }
        if (local != none) {
#pragma omp critical(proassoc_best)
            best = std::min(best, local);
        }
    }

    if (best == none) return CheckResult::pass();
    const std::size_t u = best % m;
    const std::size_t r = (best / m) % m;
    const std::size_t t = (best / m / m) % m;
    const std::size_t s = best / m / m / m;
    Integer lhs = 0, rhs = 0;
    for (std::size_t x = 0; x < m; ++x) {
        lhs += N.at(s, t, x) * N.at(x, r, u);
        rhs += N.at(s, x, u) * N.at(t, r, x);
    }
    return CheckResult::fail({"(s,t,r,u)=(" + std::to_string(s) + "," + std::to_string(t) + "," +
                                  std::to_string(r) + "," + std::to_string(u) + ")",
                              lhs.str(), rhs.str()});
}

SweepResult multiplicativity_sweep(const Kernel& k,
                                   const std::vector<std::pair<DimObject, DimObject>>& pairs,
                                   Exec exec) {
    SweepResult res;
    res.checked = pairs.size();
    const std::size_t none = std::numeric_limits<std::size_t>::max();
    std::size_t first_fail = none;

    const std::int64_t count = static_cast<std::int64_t>(pairs.size());
#pragma omp parallel for schedule(dynamic) if (exec == Exec::OpenMP)
    for (std::int64_t i = 0; i < count; ++i) {
        if (!check_multiplicative(k, pairs[i].first, pairs[i].second).passed()) {
#pragma omp critical(sweep_best)
            first_fail = std::min(first_fail, static_cast<std::size_t>(i));
        }
    }

    if (first_fail != none) {
        res.failed_pair = first_fail;
        res.witness = check_multiplicative(k, pairs[first_fail].first, pairs[first_fail].second)
                          .witness;
    }
    return res;
}

RegularityScanResult regularity_scan(const Kernel& k, const std::vector<Rational>& scalars,
                                     Exec exec) {
    if (k.side() != Kernel::Side::Scheme)
        throw PreconditionError("regularity_scan runs over scheme kernels");
    if (scalars.empty()) throw PreconditionError("regularity_scan needs a scalar set");
    const AssociationScheme& sch = *k.scheme();
    const std::size_t cells = k.cell_count();
    const std::uint64_t base = scalars.size();

    std::uint64_t total = 1;
    for (std::size_t i = 0; i < cells; ++i) {
        if (total > std::numeric_limits<std::uint64_t>::max() / base)
            throw PreconditionError("regularity_scan space too large");
        total *= base;
    }

    DimObject ones;
    ones.dims.assign(k.index_count(), 1);
    const RegularityContext ctx = make_regularity_context(k, ones, ones);

    const std::size_t chunks = std::max<std::size_t>(worker_count(exec) * 4, 1);
    std::vector<RegularityScanResult> part(chunks);

#pragma omp parallel for schedule(dynamic) if (exec == Exec::OpenMP)
    for (std::int64_t chunk = 0; chunk < static_cast<std::int64_t>(chunks); ++chunk) {
        const std::uint64_t lo = total / chunks * chunk + std::min<std::uint64_t>(chunk, total % chunks);
        const std::uint64_t hi = lo + total / chunks + (static_cast<std::uint64_t>(chunk) < total % chunks ? 1 : 0);
        RegularityScanResult& out = part[chunk];

        // Decode lo into digits, cell 0 most significant; then run an
        // odometer so each step touches only the cells whose digit changed.
        std::vector<std::size_t> digit(cells, 0);
        {
            std::uint64_t rest = lo;
            for (std::size_t c = cells; c-- > 0;) {
                digit[c] = static_cast<std::size_t>(rest % base);
                rest /= base;
            }
        }
        MatMorphismFamily alpha;
        alpha.source = ctx.khat_f;
        alpha.target = ctx.khat_g;
        alpha.mats.assign(cells, Mat(1, 1));
        for (std::size_t c = 0; c < cells; ++c) alpha.mats[c].at(0, 0) = scalars[digit[c]];

        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            const bool regular = is_regular(ctx, alpha).passed();
            bool constant = true;
            for (std::size_t s = 0; s < sch.m && constant; ++s) {
                const auto& [x0, y0] = sch.pairs[s][0];
                const Rational& v0 = alpha.at(x0, y0).at(0, 0);
                for (const auto& [x, y] : sch.pairs[s])
                    if (alpha.at(x, y).at(0, 0) != v0) { constant = false; break; }
            }
            ++out.total;
            if (regular) ++out.regular;
            if (constant) ++out.constant_on_classes;
            if (regular != constant) {
                ++out.disagreements;
                if (!out.first_disagreement) out.first_disagreement = idx;
            }
            // Odometer step (least significant digit = last cell).
            for (std::size_t c = cells; c-- > 0;) {
                if (++digit[c] < base) {
                    alpha.mats[c].at(0, 0) = scalars[digit[c]];
                    break;
                }
                digit[c] = 0;
                alpha.mats[c].at(0, 0) = scalars[0];
            }
        }
    }

    RegularityScanResult res;
    for (const RegularityScanResult& p : part) {
        res.total += p.total;
        res.regular += p.regular;
        res.constant_on_classes += p.constant_on_classes;
        res.disagreements += p.disagreements;
        if (p.first_disagreement &&
            (!res.first_disagreement || *p.first_disagreement < *res.first_disagreement))
            res.first_disagreement = p.first_disagreement;
    }
    return res;
}

} // namespace graft
