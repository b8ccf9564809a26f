#include "graft/scheme.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "graft/errors.hpp"
#include "graft/mat.hpp"

namespace graft {

namespace {

std::string pair_str(std::size_t x, std::size_t y) {
    return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

std::string triple_str(std::size_t s, std::size_t t, std::size_t r) {
    return "(" + std::to_string(s) + "," + std::to_string(t) + "," + std::to_string(r) + ")";
}

} // namespace

AssociationScheme validate(const ClassMatrix& cm) {
    const std::size_t n = cm.n;
    if (n == 0 || cm.cells.size() != n * n)
        throw ValidationError("class matrix must be a nonempty n x n grid");

    const std::size_t m = 1 + *std::max_element(cm.cells.begin(), cm.cells.end());
    std::vector<bool> seen(m, false);
    for (std::size_t label : cm.cells) seen[label] = true;
    for (std::size_t s = 0; s < m; ++s)
        if (!seen[s])
            throw ValidationError("class label " + std::to_string(s) + " never occurs");

    // Single diagonal class containing exactly the diagonal pairs.
    const std::size_t diag_raw = cm.class_of(0, 0);
    for (std::size_t x = 0; x < n; ++x)
        if (cm.class_of(x, x) != diag_raw)
            throw ValidationError("diagonal is not a single class: witness pair " + pair_str(x, x));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (x != y && cm.class_of(x, y) == diag_raw)
                throw ValidationError("diagonal class contains off-diagonal pair " + pair_str(x, y));

    // Canonical relabeling: diagonal -> 0, then first occurrence row-major.
    std::vector<std::size_t> relabel(m, m);
    relabel[diag_raw] = 0;
    std::size_t next = 1;
    for (std::size_t cell = 0; cell < n * n; ++cell) {
        const std::size_t raw = cm.cells[cell];
        if (relabel[raw] == m) relabel[raw] = next++;
    }

    AssociationScheme sch;
    sch.n = n;
    sch.m = m;
    sch.diagonal_class = 0;
    sch.class_matrix.n = n;
    sch.class_matrix.cells.resize(n * n);
    sch.pairs.resize(m);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            const std::size_t s = relabel[cm.class_of(x, y)];
            sch.class_matrix.class_of(x, y) = s;
            sch.pairs[s].emplace_back(x, y);
        }

    // Transpose closure and the involution.
    sch.involution.assign(m, m);
    for (std::size_t s = 0; s < m; ++s) {
        const auto [x0, y0] = sch.pairs[s][0];
        const std::size_t star = sch.class_matrix.class_of(y0, x0);
        for (const auto& [x, y] : sch.pairs[s])
            if (sch.class_matrix.class_of(y, x) != star)
                throw ValidationError("partition not transpose-closed: class " + std::to_string(s) +
                                      ", pairs " + pair_str(x0, y0) + " and " + pair_str(x, y));
        sch.involution[s] = star;
    }
    for (std::size_t s = 0; s < m; ++s)
        if (sch.involution[sch.involution[s]] != s)
            throw ValidationError("transpose map not involutive at class " + std::to_string(s));

    // Well-definedness of the intersection numbers is part of the axioms.
    intersection_numbers(sch);
    return sch;
}

IntersectionTensor intersection_numbers(const AssociationScheme& sch) {
    const std::size_t n = sch.n;
    const std::size_t m = sch.m;
    IntersectionTensor N;
    N.m = m;
    N.entries.assign(m * m * m, 0);

    std::vector<bool> have_rep(m, false);
    std::vector<long long> table(m * m);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            std::fill(table.begin(), table.end(), 0);
            for (std::size_t z = 0; z < n; ++z)
                ++table[sch.class_matrix.class_of(x, z) * m + sch.class_matrix.class_of(z, y)];
            const std::size_t r = sch.class_matrix.class_of(x, y);
            if (!have_rep[r]) {
                have_rep[r] = true;
                for (std::size_t s = 0; s < m; ++s)
                    for (std::size_t t = 0; t < m; ++t) N.at(s, t, r) = table[s * m + t];
            } else {
                for (std::size_t s = 0; s < m; ++s)
                    for (std::size_t t = 0; t < m; ++t)
                        if (N.at(s, t, r) != table[s * m + t]) {
                            const auto [rx, ry] = sch.pairs[r][0];
                            std::ostringstream msg;
                            msg << "intersection numbers ill-defined: (s,t)=" << pair_str(s, t)
                                << ", pair " << pair_str(rx, ry) << " gives " << N.at(s, t, r)
                                << " but pair " << pair_str(x, y) << " gives " << table[s * m + t];
                            throw ValidationError(msg.str());
                        }
            }
        }
    return N;
}

CheckResult check_proassociativity(const IntersectionTensor& N) {
    const std::size_t m = N.m;
    for (std::size_t s = 0; s < m; ++s)
        for (std::size_t t = 0; t < m; ++t)
            for (std::size_t r = 0; r < m; ++r)
                for (std::size_t u = 0; u < m; ++u) {
                    Integer lhs = 0, rhs = 0;
                    for (std::size_t x = 0; x < m; ++x) {
                        lhs += N.at(s, t, x) * N.at(x, r, u);
                        rhs += N.at(s, x, u) * N.at(t, r, x);
                    }
                    if (lhs != rhs)
                        return CheckResult::fail({"(s,t,r,u)=(" + std::to_string(s) + "," +
                                                      std::to_string(t) + "," + std::to_string(r) +
                                                      "," + std::to_string(u) + ")",
                                                  lhs.str(), rhs.str()});
                }
    return CheckResult::pass();
}

CheckResult check_precompact(const IntersectionTensor& N, const std::vector<std::size_t>& inv) {
    const std::size_t m = N.m;
    for (std::size_t s = 0; s < m; ++s)
        for (std::size_t t = 0; t < m; ++t)
            for (std::size_t r = 0; r < m; ++r)
                if (N.at(s, t, r) != N.at(inv[t], inv[s], inv[r]))
                    return CheckResult::fail({"(s,t,r)=" + triple_str(s, t, r),
                                              N.at(s, t, r).str(),
                                              N.at(inv[t], inv[s], inv[r]).str()});
    return CheckResult::pass();
}

CheckResult check_compact(const IntersectionTensor& N, const std::vector<std::size_t>& inv) {
    // Cyclic (rigidity) condition, weighted by valencies: counting triangles
    // (x,z) in s, (z,y) in t, (y,x) in r two ways gives
    //   k_r N(s,t,r*) = k_s N(t,r,s*),
    // which reduces to the unweighted equation whenever all valencies agree
    // (e.g. group schemes). The valency k_s = N(s,s*,diagonal) is recovered
    // from the tensor itself.
    const std::size_t m = N.m;
    std::vector<Integer> valency(m);
    for (std::size_t s = 0; s < m; ++s) valency[s] = N.at(s, inv[s], 0);
    for (std::size_t s = 0; s < m; ++s)
        for (std::size_t t = 0; t < m; ++t)
            for (std::size_t r = 0; r < m; ++r) {
                const Integer lhs = valency[r] * N.at(s, t, inv[r]);
                const Integer rhs = valency[s] * N.at(t, r, inv[s]);
                if (lhs != rhs)
                    return CheckResult::fail(
                        {"(s,t,r)=" + triple_str(s, t, r), lhs.str(), rhs.str()});
            }
    return CheckResult::pass();
}

CheckResult bose_mesner_closure(const AssociationScheme& sch, const IntersectionTensor& N) {
    const std::size_t n = sch.n;
    const std::size_t m = sch.m;
    std::vector<Mat> adj(m, Mat(n, n));
    for (std::size_t s = 0; s < m; ++s)
        for (const auto& [x, y] : sch.pairs[s]) adj[s].at(x, y) = 1;

    for (std::size_t s = 0; s < m; ++s)
        for (std::size_t t = 0; t < m; ++t) {
            const Mat lhs = mat_mul(adj[s], adj[t]);
            Mat rhs(n, n);
            for (std::size_t r = 0; r < m; ++r) {
                if (N.at(s, t, r) == 0) continue;
                const Rational coeff(N.at(s, t, r));
                for (const auto& [x, y] : sch.pairs[r]) rhs.at(x, y) += coeff;
            }
            if (lhs != rhs) {
                for (std::size_t x = 0; x < n; ++x)
                    for (std::size_t y = 0; y < n; ++y)
                        if (lhs.at(x, y) != rhs.at(x, y)) {
                            std::ostringstream loc, l, r_;
                            loc << "(s,t)=" << pair_str(s, t) << " cell " << pair_str(x, y);
                            l << lhs.at(x, y);
                            r_ << rhs.at(x, y);
                            return CheckResult::fail({loc.str(), l.str(), r_.str()});
                        }
            }
        }
    return CheckResult::pass();
}

ClassMatrix gen_cyclic(std::size_t n) {
    if (n == 0) throw GenerationError("cyclic scheme needs n >= 1");
    ClassMatrix cm;
    cm.n = n;
    cm.cells.resize(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) cm.class_of(x, y) = (y + n - x) % n;
    return cm;
}

ClassMatrix gen_group(const std::vector<std::vector<std::size_t>>& table) {
    const std::size_t n = table.size();
    if (n == 0) throw GenerationError("empty group table");
    for (const auto& row : table) {
        if (row.size() != n) throw GenerationError("group table not square");
        for (std::size_t v : row)
            if (v >= n) throw GenerationError("group table entry out of range");
    }
    // Identity element.
    std::size_t e = n;
    for (std::size_t c = 0; c < n && e == n; ++c) {
        bool ok = true;
        for (std::size_t x = 0; x < n; ++x)
            if (table[c][x] != x || table[x][c] != x) { ok = false; break; }
        if (ok) e = c;
    }
    if (e == n) throw GenerationError("group table has no identity");
    // Inverses.
    std::vector<std::size_t> inv(n, n);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y)
            if (table[x][y] == e && table[y][x] == e) { inv[x] = y; break; }
        if (inv[x] == n) throw GenerationError("element " + std::to_string(x) + " has no inverse");
    }
    // Associativity.
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw GenerationError("group table not associative at (" + std::to_string(a) +
                                          "," + std::to_string(b) + "," + std::to_string(c) + ")");

    ClassMatrix cm;
    cm.n = n;
    cm.cells.resize(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) cm.class_of(x, y) = table[y][inv[x]]; // y * x^{-1}
    return cm;
}

ClassMatrix gen_hamming(std::size_t n, std::size_t q) {
    if (n == 0 || q < 2) throw GenerationError("Hamming scheme needs n >= 1, q >= 2");
    std::size_t points = 1;
    for (std::size_t i = 0; i < n; ++i) {
        points *= q;
        if (points > 4096) throw GenerationError("Hamming scheme too large");
    }
    auto digit = [&](std::size_t p, std::size_t i) {
        for (std::size_t k = 0; k < i; ++k) p /= q;
        return p % q;
    };
    ClassMatrix cm;
    cm.n = points;
    cm.cells.resize(points * points);
    for (std::size_t x = 0; x < points; ++x)
        for (std::size_t y = 0; y < points; ++y) {
            std::size_t dist = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (digit(x, i) != digit(y, i)) ++dist;
            cm.class_of(x, y) = dist;
        }
    return cm;
}

ClassMatrix gen_johnson(std::size_t v, std::size_t k) {
    if (k > v) throw GenerationError("Johnson scheme needs 0 <= k <= v");
    // All k-subsets of {0..v-1} as bitmasks, lexicographic in the sorted
    // element lists.
    std::vector<unsigned long long> subsets;
    std::vector<std::size_t> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        unsigned long long mask = 0;
        for (std::size_t i : pick) mask |= 1ULL << i;
        subsets.push_back(mask);
        if (k == 0) break;
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == v - k + (i - 1)) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    const std::size_t points = subsets.size();
    if (points > 4096) throw GenerationError("Johnson scheme too large");
    ClassMatrix cm;
    cm.n = points;
    cm.cells.resize(points * points);
    for (std::size_t x = 0; x < points; ++x)
        for (std::size_t y = 0; y < points; ++y)
            cm.class_of(x, y) = k - static_cast<std::size_t>(
                                        __builtin_popcountll(subsets[x] & subsets[y]));
    return cm;
}

} // namespace graft
