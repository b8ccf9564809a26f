#include "graft/fusion.hpp"

#include "graft/errors.hpp"

namespace graft {

namespace {

std::string triple_str(std::size_t x, std::size_t y, std::size_t z) {
    return "(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")";
}

} // namespace

FusionRing validate_fusion(const FusionData& data) {
    const std::size_t m = data.names.size();
    if (m == 0) throw ValidationError("fusion ring needs at least one object");
    if (data.unit >= m) throw ValidationError("unit index out of range");
    if (data.tensor.size() != m * m * m) throw ValidationError("tensor must have m^3 entries");

    FusionRing ring;
    ring.m = m;
    ring.names = data.names;
    ring.unit = data.unit;
    ring.dual = data.dual;
    ring.tensor = data.tensor;
    if (ring.dual.empty()) {
        ring.dual.resize(m);
        for (std::size_t x = 0; x < m; ++x) ring.dual[x] = x;
    }
    if (ring.dual.size() != m) throw ValidationError("dual map must cover every object");

    for (const Integer& v : ring.tensor)
        if (v < 0) throw ValidationError("tensor entries must be non-negative");
    for (std::size_t x = 0; x < m; ++x) {
        if (ring.dual[x] >= m) throw ValidationError("dual index out of range");
        if (ring.dual[ring.dual[x]] != x)
            throw ValidationError("dual not involutive: witness object " + ring.names[x]);
    }
    for (std::size_t y = 0; y < m; ++y)
        for (std::size_t z = 0; z < m; ++z) {
            const Integer expected = (y == z) ? 1 : 0;
            if (ring.N(ring.unit, y, z) != expected)
                throw ValidationError("unit law (lambda) violated at (y,z)=(" + ring.names[y] +
                                      "," + ring.names[z] + ")");
            if (ring.N(y, ring.unit, z) != expected)
                throw ValidationError("unit law (rho) violated at (x,z)=(" + ring.names[y] + "," +
                                      ring.names[z] + ")");
        }
    return ring;
}

CheckResult check_proassociativity(const FusionRing& ring) {
    const std::size_t m = ring.m;
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y)
            for (std::size_t z = 0; z < m; ++z)
                for (std::size_t v = 0; v < m; ++v) {
                    Integer lhs = 0, rhs = 0;
                    for (std::size_t u = 0; u < m; ++u) {
                        lhs += ring.N(x, y, u) * ring.N(u, z, v);
                        rhs += ring.N(x, u, v) * ring.N(y, z, u);
                    }
                    if (lhs != rhs)
                        return CheckResult::fail({"(x,y,z,v)=(" + std::to_string(x) + "," +
                                                      std::to_string(y) + "," + std::to_string(z) +
                                                      "," + std::to_string(v) + ")",
                                                  lhs.str(), rhs.str()});
                }
    return CheckResult::pass();
}

CheckResult check_cyclic(const FusionRing& ring) {
    const std::size_t m = ring.m;
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y)
            for (std::size_t z = 0; z < m; ++z)
                if (ring.N(x, y, ring.dual[z]) != ring.N(y, z, ring.dual[x]))
                    return CheckResult::fail({"(x,y,z)=" + triple_str(x, y, z),
                                              ring.N(x, y, ring.dual[z]).str(),
                                              ring.N(y, z, ring.dual[x]).str()});
    return CheckResult::pass();
}

CheckResult check_braiding(const FusionRing& ring) {
    const std::size_t m = ring.m;
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y)
            for (std::size_t z = 0; z < m; ++z)
                if (ring.N(x, y, z) != ring.N(y, x, z))
                    return CheckResult::fail({"(x,y,z)=" + triple_str(x, y, z),
                                              ring.N(x, y, z).str(), ring.N(y, x, z).str()});
    return CheckResult::pass();
}

CheckResult check_precompact(const FusionRing& ring) {
    const std::size_t m = ring.m;
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y)
            for (std::size_t z = 0; z < m; ++z)
                if (ring.N(x, y, z) != ring.N(ring.dual[y], ring.dual[x], ring.dual[z]))
                    return CheckResult::fail(
                        {"(x,y,z)=" + triple_str(x, y, z), ring.N(x, y, z).str(),
                         ring.N(ring.dual[y], ring.dual[x], ring.dual[z]).str()});
    return CheckResult::pass();
}

std::vector<Mat> fusion_matrices(const FusionRing& ring) {
    const std::size_t m = ring.m;
    std::vector<Mat> mats(m, Mat(m, m));
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y)
            for (std::size_t z = 0; z < m; ++z) mats[x].at(y, z) = Rational(ring.N(x, y, z));
    return mats;
}

std::optional<std::vector<std::size_t>> is_closed(const FusionRing& ring) {
    const std::size_t m = ring.m;
    std::vector<std::size_t> hom(m * m, m);
    for (std::size_t y = 0; y < m; ++y)
        for (std::size_t z = 0; z < m; ++z) {
            std::size_t found = m;
            for (std::size_t x = 0; x < m; ++x) {
                const Integer& v = ring.N(x, y, z);
                if (v == 0) continue;
                if (v != 1 || found != m) return std::nullopt;
                found = x;
            }
            if (found == m) return std::nullopt;
            hom[y * m + z] = found;
        }
    return hom;
}

FusionRing gen_fibonacci() {
    FusionData d;
    d.names = {"1", "tau"};
    d.unit = 0;
    d.tensor.assign(8, 0);
    auto set = [&](std::size_t x, std::size_t y, std::size_t z) { d.tensor[(x * 2 + y) * 2 + z] = 1; };
    set(0, 0, 0);
    set(0, 1, 1);
    set(1, 0, 1);
    set(1, 1, 0);
    set(1, 1, 1);
    return validate_fusion(d);
}

FusionRing gen_ising() {
    FusionData d;
    d.names = {"1", "sigma", "psi"};
    d.unit = 0;
    d.tensor.assign(27, 0);
    auto set = [&](std::size_t x, std::size_t y, std::size_t z) { d.tensor[(x * 3 + y) * 3 + z] = 1; };
    for (std::size_t x = 0; x < 3; ++x) { set(0, x, x); set(x, 0, x); }
    set(1, 1, 0); // sigma sigma = 1 + psi
    set(1, 1, 2);
    set(1, 2, 1); // sigma psi = sigma
    set(2, 1, 1); // psi sigma = sigma
    set(2, 2, 0); // psi psi = 1
    return validate_fusion(d);
}

FusionRing gen_group_fusion(std::size_t n) {
    if (n == 0) throw GenerationError("group fusion needs n >= 1");
    FusionData d;
    d.names.reserve(n);
    for (std::size_t x = 0; x < n; ++x) d.names.push_back("g" + std::to_string(x));
    d.unit = 0;
    d.dual.resize(n);
    for (std::size_t x = 0; x < n; ++x) d.dual[x] = (n - x) % n;
    d.tensor.assign(n * n * n, 0);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) d.tensor[(x * n + y) * n + (x + y) % n] = 1;
    return validate_fusion(d);
}

} // namespace graft
