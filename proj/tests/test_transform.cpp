#include <doctest.h>

#include <array>
#include <random>
#include <vector>

#include "graft/errors.hpp"
#include "graft/fusion.hpp"
#include "graft/scheme.hpp"
#include "graft/transform.hpp"

using namespace graft;

namespace {

Kernel scheme_kernel(const ClassMatrix& cm) {
    AssociationScheme sch = validate(cm);
    IntersectionTensor N = intersection_numbers(sch);
    return Kernel(std::move(sch), std::move(N));
}

Kernel c3_kernel() { return scheme_kernel(gen_cyclic(3)); }

DimObject dims(std::vector<Integer> v) {
    DimObject f;
    f.dims = std::move(v);
    return f;
}

// Fusion ring of a (possibly non-abelian) group given by its Cayley table.
FusionRing group_ring(const std::vector<std::vector<std::size_t>>& table) {
    const std::size_t n = table.size();
    FusionData d;
    d.unit = 0;
    for (std::size_t g = 0; g < n; ++g) d.names.push_back("g" + std::to_string(g));
    d.dual.resize(n);
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h)
            if (table[g][h] == 0) d.dual[g] = h;
    d.tensor.assign(n * n * n, 0);
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h) d.tensor[(g * n + h) * n + table[g][h]] = 1;
    return validate_fusion(d);
}

std::vector<std::vector<std::size_t>> s3_table() {
    const std::vector<std::array<int, 3>> perms = {
        {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    std::vector<std::vector<std::size_t>> table(6, std::vector<std::size_t>(6));
    for (std::size_t g = 0; g < 6; ++g)
        for (std::size_t h = 0; h < 6; ++h) {
            std::array<int, 3> comp{};
            for (int i = 0; i < 3; ++i) comp[i] = perms[g][perms[h][i]];
            for (std::size_t k = 0; k < 6; ++k)
                if (perms[k] == comp) table[g][h] = k;
        }
    return table;
}

MorphismFamily random_morphism(const Kernel& k, const DimObject& f, const DimObject& g,
                               std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    MorphismFamily alpha;
    alpha.source = f;
    alpha.target = g;
    for (std::size_t a = 0; a < k.index_count(); ++a) {
        Mat m(static_cast<std::size_t>(static_cast<unsigned long long>(g.dims[a])),
              static_cast<std::size_t>(static_cast<unsigned long long>(f.dims[a])));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                m.at(i, j) = static_cast<long long>(rng() % 7) - 3;
        alpha.mats.push_back(std::move(m));
    }
    return alpha;
}

} // namespace

TEST_CASE("forward transform on dim vectors over the 3-cycle") {
    const Kernel k = c3_kernel();
    const MatObject F = khat(k, dims({1, 2, 0}));
    const std::vector<Integer> expect = {1, 2, 0, 0, 1, 2, 2, 0, 1};
    CHECK(F.dims == expect);
    CHECK(khat(k, prounit(k)) == unit_mat_object(k));
    CHECK((khat(k, dims({0, 0, 0})).dims == std::vector<Integer>(9, 0)));
}

TEST_CASE("right adjoint on dim matrices over the 3-cycle") {
    const Kernel k = c3_kernel();
    MatObject ones;
    ones.n = 3;
    ones.dims.assign(9, 1);
    CHECK((kcheck(k, ones).dims == std::vector<Integer>{3, 3, 3}));
    CHECK((kcheck(k, khat(k, dims({1, 2, 0}))).dims == std::vector<Integer>{3, 6, 0}));
    MatObject zero;
    zero.n = 3;
    zero.dims.assign(9, 0);
    CHECK((kcheck(k, zero).dims == std::vector<Integer>{0, 0, 0}));
}

TEST_CASE("adjunction unit on the 3-cycle: each component stacks identities") {
    const Kernel k = c3_kernel();
    const MorphismFamily eta = unit_eta(k, dims({1, 1, 1}));
    for (std::size_t s = 0; s < 3; ++s) {
        REQUIRE(eta.mats[s].rows() == 3);
        REQUIRE(eta.mats[s].cols() == 1);
        for (std::size_t i = 0; i < 3; ++i) CHECK(eta.mats[s].at(i, 0) == 1);
    }
}

TEST_CASE("triangle identities hold exactly on schemes and fusion rings") {
    const std::vector<DimObject> objs = {dims({1, 2, 0}), dims({1, 1, 1}), dims({0, 3, 2})};
    for (const Kernel& k : {c3_kernel(), scheme_kernel(gen_hamming(2, 2))})
        for (const DimObject& f : objs) CHECK(check_triangle_identities(k, f, khat(k, f)).passed());
    const Kernel fib((gen_fibonacci()));
    CHECK(check_triangle_identities(fib, dims({1, 2}), khat(fib, dims({1, 2}))).passed());
    const Kernel ising((gen_ising()));
    CHECK(check_triangle_identities(ising, dims({1, 2, 3}), khat(ising, dims({1, 2, 3}))).passed());
}

TEST_CASE("unit is a split mono at every index with positive dim") {
    const Kernel k = scheme_kernel(gen_hamming(2, 2));
    CHECK(check_eta_split_mono(k, dims({2, 0, 3})).passed());
    const Kernel fib((gen_fibonacci()));
    CHECK(check_eta_split_mono(fib, dims({1, 4})).passed());
}

TEST_CASE("scheme round trip: kcheck(khat(f)) = |class| * f") {
    CHECK(check_roundtrip(c3_kernel(), dims({1, 2, 0})).passed());
    CHECK(check_roundtrip(scheme_kernel(gen_johnson(4, 2)), dims({2, 0, 5})).passed());
}

TEST_CASE("convolution on the 3-cycle: delta_1 (x) delta_1 = delta_2") {
    const Kernel k = c3_kernel();
    CHECK((convolve(k.tensor(), dims({0, 1, 0}), dims({0, 1, 0})).dims ==
           std::vector<Integer>{0, 0, 1}));
    const DimObject g = dims({2, 0, 3});
    CHECK(convolve(k.tensor(), prounit(k), g).dims == g.dims);
}

TEST_CASE("Fibonacci convolution: delta_tau (x) delta_tau = (1,1)") {
    const Kernel fib((gen_fibonacci()));
    CHECK((convolve(fib.tensor(), dims({0, 1}), dims({0, 1})).dims ==
           std::vector<Integer>{1, 1}));
}

TEST_CASE("target composition examples") {
    const Kernel k = c3_kernel();
    const MatObject d1 = khat(k, dims({0, 1, 0}));
    const MatObject sq = mat_compose(k, d1, d1);
    CHECK(sq == khat(k, dims({0, 0, 1})));
    const MatObject F = khat(k, dims({1, 2, 0}));
    CHECK(mat_compose(k, unit_mat_object(k), F) == F);

    const Kernel fib((gen_fibonacci()));
    const MatObject nt = khat(fib, dims({0, 1}));
    const MatObject prod = mat_compose(fib, nt, nt);
    CHECK((prod.dims == std::vector<Integer>{1, 1, 1, 2}));
}

TEST_CASE("multiplicativity on schemes and fusion rings") {
    const Kernel k = c3_kernel();
    CHECK(check_multiplicative(k, dims({1, 2, 0}), dims({0, 1, 1})).passed());
    const Kernel fib((gen_fibonacci()));
    CHECK(check_multiplicative(fib, dims({0, 1}), dims({0, 1})).passed());
    CHECK(check_unit_preserved(k).passed());
    CHECK(check_unit_preserved(fib).passed());
}

TEST_CASE("fusion composition order is forced by the non-abelian case") {
    const FusionRing s3 = group_ring(s3_table());
    const Kernel k(s3);
    // two non-commuting generators: a transposition and a 3-cycle
    DimObject da = dims({0, 1, 0, 0, 0, 0});
    DimObject dd = dims({0, 0, 0, 0, 1, 0});
    CHECK(check_multiplicative(k, da, dd).passed());
    CHECK(check_multiplicative(k, dd, da).passed());

    // The mirrored formula sum_u F(y,u) G(u,z) fails for this pair, so the
    // implemented order is the only multiplicative one.
    const MatObject A = khat(k, da), B = khat(k, dd);
    const MatObject AB = khat(k, convolve(k.tensor(), da, dd));
    MatObject flipped;
    flipped.n = A.n;
    flipped.dims.assign(A.n * A.n, 0);
    for (std::size_t y = 0; y < A.n; ++y)
        for (std::size_t z = 0; z < A.n; ++z)
            for (std::size_t u = 0; u < A.n; ++u)
                flipped.at(y, z) += A.at(y, u) * B.at(u, z);
    CHECK(mat_compose(k, A, B) == AB);
    CHECK(!(flipped == AB));
}

TEST_CASE("transform reflects isomorphisms") {
    const Kernel k = c3_kernel();
    CHECK(check_conservative_structural(k).passed());
    const DimObject ones = dims({1, 1, 1});
    MorphismFamily ident;
    ident.source = ident.target = ones;
    ident.mats.assign(3, Mat::identity(1));
    CHECK(reflects_iso(k, ident).passed());

    MorphismFamily degenerate = ident;
    degenerate.mats[1] = Mat(1, 1); // rank 0 at s1
    CHECK(reflects_iso(k, degenerate).passed()); // consistent: both sides non-iso
}

TEST_CASE("star on dim vectors over the 3-cycle") {
    const Kernel k = c3_kernel();
    const DimObject f = dims({1, 2, 0});
    CHECK((star_source(k, f).dims == std::vector<Integer>{1, 0, 2}));
    CHECK(star_source(k, star_source(k, f)).dims == f.dims);
    CHECK(star_source(k, prounit(k)).dims == prounit(k).dims);
}

TEST_CASE("transform preserves the involution") {
    const Kernel k = c3_kernel();
    CHECK(check_star_preserved(k, dims({1, 2, 0})).passed());
    CHECK(star_target(khat(k, dims({1, 2, 0}))) == khat(k, star_source(k, dims({1, 2, 0}))));
    const Kernel h = scheme_kernel(gen_hamming(2, 2));
    CHECK(check_star_preserved(h, dims({3, 1, 4})).passed());

    const Kernel z2((gen_group_fusion(2)));
    CHECK(check_star_preserved(z2, dims({1, 2})).passed());
    const Kernel fib((gen_fibonacci()));
    CHECK(check_star_preserved(fib, dims({1, 2})).outcome == Outcome::NotApplicable);
}

TEST_CASE("image morphisms are regular") {
    const Kernel k = c3_kernel();
    const DimObject f = dims({1, 2, 1}), g = dims({2, 1, 1});
    const MorphismFamily beta = random_morphism(k, f, g, 99);
    const RegularityContext ctx = make_regularity_context(k, f, g);
    CHECK(is_regular(ctx, khat(k, beta)).passed());
}

TEST_CASE("regularity over the 3-cycle with unit dims is class-constancy") {
    const Kernel k = c3_kernel();
    const DimObject ones = dims({1, 1, 1});
    const RegularityContext ctx = make_regularity_context(k, ones, ones);

    MatMorphismFamily alpha;
    alpha.source = ctx.khat_f;
    alpha.target = ctx.khat_g;
    alpha.mats.assign(9, Mat{{1}});
    // constant 2 on class s1 = {(0,1),(1,2),(2,0)}
    alpha.at(0, 1) = Mat{{2}};
    alpha.at(1, 2) = Mat{{2}};
    alpha.at(2, 0) = Mat{{2}};
    CHECK(is_regular(ctx, alpha).passed());

    alpha.at(1, 2) = Mat{{3}}; // same class, different scalar
    const CheckResult res = is_regular(ctx, alpha);
    CHECK(res.failed());
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->location == "cell (0,1) entry (1,0)");
    CHECK(res.witness->lhs == "3");
    CHECK(res.witness->rhs == "2");
}

TEST_CASE("scalar and generic regularity paths agree in witness format") {
    // Matches the generic matrix computation: first differing cell row-major,
    // first differing entry within it.
    const Kernel k = c3_kernel();
    const DimObject ones = dims({1, 1, 1});
    const RegularityContext ctx = make_regularity_context(k, ones, ones);
    MatMorphismFamily alpha;
    alpha.source = ctx.khat_f;
    alpha.target = ctx.khat_g;
    alpha.mats.assign(9, Mat{{0}});
    alpha.at(0, 0) = Mat{{2}};
    const CheckResult res = is_regular(ctx, alpha);
    REQUIRE(res.failed());
    CHECK(res.witness->location == "cell (0,0) entry (1,0)");
    CHECK(res.witness->lhs == "0");
    CHECK(res.witness->rhs == "2");
}

TEST_CASE("preimage search over the 3-cycle") {
    const Kernel k = c3_kernel();
    MatObject F = khat(k, dims({1, 2, 0}));
    WienerResult res = wiener_membership(k, F);
    REQUIRE(res.in_image());
    REQUIRE(res.solutions.size() == 1);
    CHECK((res.solutions[0].dims == std::vector<Integer>{1, 2, 0}));

    F.at(0, 1) = 2;
    F.at(1, 2) = 3;
    res = wiener_membership(k, F);
    CHECK(!res.in_image());
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->location.find("(0,1)") != std::string::npos);
    CHECK(res.witness->location.find("(1,2)") != std::string::npos);

    MatObject zero;
    zero.n = 3;
    zero.dims.assign(9, 0);
    res = wiener_membership(k, zero);
    REQUIRE(res.in_image());
    CHECK((res.solutions[0].dims == std::vector<Integer>{0, 0, 0}));
}

TEST_CASE("preimage search over Fibonacci enumerates bounded solutions") {
    const Kernel fib((gen_fibonacci()));
    const WienerResult res = wiener_membership(fib, khat(fib, dims({0, 1})));
    REQUIRE(res.solutions.size() == 1);
    CHECK((res.solutions[0].dims == std::vector<Integer>{0, 1}));
    CHECK(check_wiener_roundtrip(fib, dims({2, 3})).passed());
    CHECK(check_wiener_roundtrip(c3_kernel(), dims({1, 2, 0})).passed());
}

TEST_CASE("fusion right adjoint: Fibonacci N_tau pattern pulls back to (1,3)") {
    const Kernel fib((gen_fibonacci()));
    CHECK((kcheck(fib, khat(fib, dims({0, 1}))).dims == std::vector<Integer>{1, 3}));
}

TEST_CASE("dual comparison under precompactness") {
    const Kernel k = c3_kernel();
    CHECK(dual_comparison(k, dims({1, 0, 0}), dims({0, 1, 0})).passed());
    CHECK(dual_comparison(k, prounit(k), prounit(k)).passed());
    const Kernel h = scheme_kernel(gen_hamming(2, 2));
    CHECK(dual_comparison(h, dims({1, 2, 3}), dims({0, 4, 1})).passed());
    const Kernel fib((gen_fibonacci()));
    CHECK(dual_comparison(fib, dims({1, 2}), dims({3, 1})).passed());
}

TEST_CASE("dual comparison requires the antipode condition") {
    FusionData d;
    d.names = {"1", "a", "b"};
    d.unit = 0;
    d.dual = {0, 2, 1};
    d.tensor.assign(27, 0);
    const auto set = [&](std::size_t x, std::size_t y, std::size_t z) {
        d.tensor[(x * 3 + y) * 3 + z] = 1;
    };
    for (std::size_t x = 0; x < 3; ++x) { set(0, x, x); if (x) set(x, 0, x); }
    set(1, 1, 2); // N(a,a,b) = 1 but N(b,b,a) = 0: not precompact
    const Kernel k(validate_fusion(d));
    CHECK_THROWS_AS(dual_comparison(k, dims({1, 1, 1}), dims({1, 2, 0})), PreconditionError);
}

TEST_CASE("transform is functorial on morphisms") {
    const Kernel k = scheme_kernel(gen_hamming(2, 2));
    const DimObject f = dims({1, 2, 1}), g = dims({2, 1, 2}), h = dims({1, 1, 1});
    const MorphismFamily a1 = random_morphism(k, f, g, 5);
    const MorphismFamily a2 = random_morphism(k, g, h, 6);
    const MatMorphismFamily lhs = khat(k, compose(a2, a1));
    const MatMorphismFamily k1 = khat(k, a1), k2 = khat(k, a2);
    for (std::size_t cell = 0; cell < k.cell_count(); ++cell)
        CHECK(lhs.mats[cell] == mat_mul(k2.mats[cell], k1.mats[cell]));
}
