#include <doctest.h>

#include <algorithm>
#include <array>
#include <vector>

#include "graft/errors.hpp"
#include "graft/scheme.hpp"

using namespace graft;

namespace {

ClassMatrix c3_matrix() {
    ClassMatrix cm;
    cm.n = 3;
    cm.cells = {0, 1, 2, 2, 0, 1, 1, 2, 0};
    return cm;
}

// Symmetric group on 3 letters; table[g][h] = g after h as a permutation.
std::vector<std::vector<std::size_t>> s3_table() {
    const std::vector<std::array<int, 3>> perms = {
        {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    std::vector<std::vector<std::size_t>> table(6, std::vector<std::size_t>(6));
    for (std::size_t g = 0; g < 6; ++g)
        for (std::size_t h = 0; h < 6; ++h) {
            std::array<int, 3> comp{};
            for (int i = 0; i < 3; ++i) comp[i] = perms[g][perms[h][i]];
            table[g][h] = static_cast<std::size_t>(
                std::find(perms.begin(), perms.end(), comp) - perms.begin());
        }
    return table;
}

} // namespace

TEST_CASE("cyclic 3-point scheme: canonical classes and involution") {
    const AssociationScheme sch = validate(c3_matrix());
    CHECK(sch.n == 3);
    CHECK(sch.m == 3);
    CHECK(sch.diagonal_class == 0);
    CHECK((sch.involution == std::vector<std::size_t>{0, 2, 1}));
    CHECK(sch.class_size(0) == 3);
    CHECK(sch.class_size(1) == 3);
}

TEST_CASE("one-point scheme is valid") {
    ClassMatrix cm;
    cm.n = 1;
    cm.cells = {0};
    const AssociationScheme sch = validate(cm);
    CHECK(sch.m == 1);
}

TEST_CASE("non-transpose-closed partition is rejected with a witness") {
    ClassMatrix cm;
    cm.n = 2;
    cm.cells = {0, 1, 2, 0}; // (0,1) and (1,0) in different classes, neither closed
    CHECK_THROWS_AS(validate(cm), ValidationError);
}

TEST_CASE("partition with ill-defined intersection numbers is rejected") {
    // Diagonal plus one class holding all off-diagonal cells of a 4-point
    // path-distance partition collapses unequal counts.
    ClassMatrix cm;
    cm.n = 4;
    cm.cells = {0, 1, 1, 1, 1, 0, 1, 1, 1, 1, 0, 2, 1, 1, 2, 0};
    CHECK_THROWS_AS(validate(cm), ValidationError);
}

TEST_CASE("cyclic 3 intersection numbers: N(a,b,c) = [a+b = c mod 3]") {
    const AssociationScheme sch = validate(c3_matrix());
    const IntersectionTensor N = intersection_numbers(sch);
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b)
            for (std::size_t c = 0; c < 3; ++c)
                CHECK(N.at(a, b, c) == ((a + b) % 3 == c ? 1 : 0));
}

TEST_CASE("Hamming(2,2) intersection numbers, classes by distance") {
    const AssociationScheme sch = validate(gen_hamming(2, 2));
    REQUIRE(sch.m == 3);
    const IntersectionTensor N = intersection_numbers(sch);
    CHECK(N.at(1, 1, 0) == 2);
    CHECK(N.at(1, 1, 1) == 0);
    CHECK(N.at(1, 1, 2) == 2);
    CHECK(N.at(2, 2, 0) == 1);
    CHECK(N.at(1, 2, 1) == 1);
}

TEST_CASE("diagonal class composes trivially: N(0,t,r) = [t=r]") {
    const AssociationScheme sch = validate(gen_johnson(5, 2));
    const IntersectionTensor N = intersection_numbers(sch);
    for (std::size_t t = 0; t < sch.m; ++t)
        for (std::size_t r = 0; r < sch.m; ++r)
            CHECK(N.at(sch.diagonal_class, t, r) == (t == r ? 1 : 0));
}

TEST_CASE("valency identity: sum_r N(s,t,r) |r| = |s| |t| / n") {
    const AssociationScheme sch = validate(gen_hamming(3, 2));
    const IntersectionTensor N = intersection_numbers(sch);
    for (std::size_t s = 0; s < sch.m; ++s)
        for (std::size_t t = 0; t < sch.m; ++t) {
            Integer lhs = 0;
            for (std::size_t r = 0; r < sch.m; ++r)
                lhs += N.at(s, t, r) * Integer(sch.class_size(r));
            CHECK(lhs * Integer(sch.n) ==
                  Integer(sch.class_size(s)) * Integer(sch.class_size(t)));
        }
}

TEST_CASE("proassociativity, precompactness, compactness on small corpus") {
    for (std::size_t n = 1; n <= 8; ++n) {
        const AssociationScheme sch = validate(gen_cyclic(n));
        const IntersectionTensor N = intersection_numbers(sch);
        CHECK(check_proassociativity(N).passed());
        CHECK(check_precompact(N, sch.involution).passed());
        CHECK(check_compact(N, sch.involution).passed());
    }
    const AssociationScheme h = validate(gen_hamming(2, 2));
    const IntersectionTensor Nh = intersection_numbers(h);
    CHECK(check_proassociativity(Nh).passed());
    CHECK(check_precompact(Nh, h.involution).passed());
    CHECK(check_compact(Nh, h.involution).passed());
}

TEST_CASE("mutated tensor fails proassociativity with a witness") {
    const AssociationScheme sch = validate(gen_hamming(2, 2));
    IntersectionTensor N = intersection_numbers(sch);
    N.at(1, 1, 2) += 1;
    const CheckResult res = check_proassociativity(N);
    CHECK(res.failed());
    REQUIRE(res.witness.has_value());
    CHECK(!res.witness->location.empty());
    CHECK(res.witness->lhs != res.witness->rhs);
}

TEST_CASE("mutated tensor fails precompactness and compactness") {
    const AssociationScheme sch = validate(c3_matrix());
    IntersectionTensor N = intersection_numbers(sch);
    N.at(1, 1, 0) += 1; // breaks both cyclic identities
    CHECK(check_precompact(N, sch.involution).failed());
    CHECK(check_compact(N, sch.involution).failed());
}

TEST_CASE("Bose-Mesner closure: C3 permutation matrices") {
    const AssociationScheme sch = validate(c3_matrix());
    const IntersectionTensor N = intersection_numbers(sch);
    CHECK(bose_mesner_closure(sch, N).passed());
}

TEST_CASE("Bose-Mesner closure over generated families") {
    for (const ClassMatrix& cm :
         {gen_hamming(2, 2), gen_hamming(2, 3), gen_johnson(4, 2), gen_johnson(5, 2)}) {
        const AssociationScheme sch = validate(cm);
        CHECK(bose_mesner_closure(sch, intersection_numbers(sch)).passed());
    }
}

TEST_CASE("Bose-Mesner closure detects a mutated tensor") {
    const AssociationScheme sch = validate(gen_hamming(2, 2));
    IntersectionTensor N = intersection_numbers(sch);
    N.at(1, 1, 0) += 1;
    CHECK(bose_mesner_closure(sch, N).failed());
}

TEST_CASE("gen_cyclic(3) reproduces the 3-point matrix") {
    const ClassMatrix cm = gen_cyclic(3);
    CHECK(cm.cells == c3_matrix().cells);
}

TEST_CASE("gen_hamming(2,2): 4 points, 3 distance classes") {
    const AssociationScheme sch = validate(gen_hamming(2, 2));
    CHECK(sch.n == 4);
    CHECK(sch.m == 3);
    // all classes symmetric
    for (std::size_t s = 0; s < sch.m; ++s) CHECK(sch.involution[s] == s);
}

TEST_CASE("gen_johnson(4,2): 6 points, classes by intersection size") {
    const AssociationScheme sch = validate(gen_johnson(4, 2));
    CHECK(sch.n == 6);
    CHECK(sch.m == 3);
}

TEST_CASE("S3 group scheme validates; compactness holds by brute force") {
    const AssociationScheme sch = validate(gen_group(s3_table()));
    CHECK(sch.n == 6);
    CHECK(sch.m == 6);
    const IntersectionTensor N = intersection_numbers(sch);
    CHECK(check_proassociativity(N).passed());
    CHECK(check_precompact(N, sch.involution).passed());
    CHECK(check_compact(N, sch.involution).passed());
    CHECK(bose_mesner_closure(sch, N).passed());
}

TEST_CASE("group scheme tensor is the multiplication table: N(a,b,c) = [ab=c]") {
    const auto table = s3_table();
    const AssociationScheme sch = validate(gen_group(table));
    const IntersectionTensor N = intersection_numbers(sch);
    // Classes are canonically relabelled; recover the labelling through the
    // class of (0, g): the class of right-translation by g.
    std::vector<std::size_t> cls(6);
    for (std::size_t g = 0; g < 6; ++g) cls[g] = sch.class_matrix.class_of(0, g);
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b)
            for (std::size_t c = 0; c < 6; ++c)
                CHECK(N.at(cls[a], cls[b], cls[c]) == (table[b][a] == c ? 1 : 0));
}

TEST_CASE("validation is invariant under class relabelling") {
    ClassMatrix cm = c3_matrix();
    for (std::size_t& c : cm.cells) c = (c + 1) % 3; // diagonal now labelled 1
    const AssociationScheme sch = validate(cm);
    CHECK(sch.diagonal_class == 0);
    CHECK((sch.involution == std::vector<std::size_t>{0, 2, 1}));
    CHECK(intersection_numbers(sch).entries ==
          intersection_numbers(validate(c3_matrix())).entries);
}
