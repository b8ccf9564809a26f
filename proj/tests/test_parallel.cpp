#include <doctest.h>

#include <random>
#include <vector>

#include "graft/errors.hpp"
#include "graft/parallel.hpp"
#include "graft/scheme.hpp"
#include "graft/transform.hpp"

using namespace graft;

namespace {

Kernel scheme_kernel(const ClassMatrix& cm) {
    AssociationScheme sch = validate(cm);
    IntersectionTensor N = intersection_numbers(sch);
    return Kernel(std::move(sch), std::move(N));
}

} // namespace

TEST_CASE("proassociativity scan: serial and parallel agree on pass") {
    const AssociationScheme sch = validate(gen_hamming(3, 2));
    const IntersectionTensor N = intersection_numbers(sch);
    CHECK(proassociativity_scan(N, Exec::Serial).passed());
    CHECK(proassociativity_scan(N, Exec::OpenMP).passed());
}

TEST_CASE("proassociativity scan: identical witness in both modes") {
    const AssociationScheme sch = validate(gen_hamming(3, 2));
    IntersectionTensor N = intersection_numbers(sch);
    N.at(2, 1, 3) += 1;
    const CheckResult a = proassociativity_scan(N, Exec::Serial);
    const CheckResult b = proassociativity_scan(N, Exec::OpenMP);
    REQUIRE(a.failed());
    REQUIRE(b.failed());
    CHECK(a.witness->location == b.witness->location);
    CHECK(a.witness->lhs == b.witness->lhs);
    CHECK(a.witness->rhs == b.witness->rhs);
    // and it matches the plain quadruple loop
    CHECK(a.witness->location == check_proassociativity(N).witness->location);
}

TEST_CASE("multiplicativity sweep: both modes find the same first failure") {
    const Kernel k = scheme_kernel(gen_cyclic(4));
    std::mt19937_64 rng(123);
    std::vector<std::pair<DimObject, DimObject>> pairs;
    for (int i = 0; i < 40; ++i) {
        DimObject f, g;
        for (std::size_t a = 0; a < 4; ++a) {
            f.dims.push_back(rng() % 3);
            g.dims.push_back(rng() % 3);
        }
        pairs.emplace_back(std::move(f), std::move(g));
    }
    const SweepResult sa = multiplicativity_sweep(k, pairs, Exec::Serial);
    const SweepResult sb = multiplicativity_sweep(k, pairs, Exec::OpenMP);
    CHECK(sa.passed());
    CHECK(sb.passed());
    CHECK(sa.checked == sb.checked);
}

TEST_CASE("regularity scan on the 3-cycle: 27 regular = 27 class-constant") {
    const Kernel k = scheme_kernel(gen_cyclic(3));
    for (const Exec exec : {Exec::Serial, Exec::OpenMP}) {
        const std::vector<Rational> scalars = {0, 1, 2};
        const RegularityScanResult res = regularity_scan(k, scalars, exec);
        CHECK(res.total == 19683);
        CHECK(res.regular == 27);
        CHECK(res.constant_on_classes == 27);
        CHECK(res.disagreements == 0);
        CHECK(!res.first_disagreement.has_value());
    }
}

TEST_CASE("regularity scan rejects fusion kernels and empty scalar sets") {
    const Kernel fib((gen_fibonacci()));
    const std::vector<Rational> two = {0, 1};
    const std::vector<Rational> none;
    CHECK_THROWS_AS(regularity_scan(fib, two, Exec::Serial), PreconditionError);
    const Kernel k = scheme_kernel(gen_cyclic(2));
    CHECK_THROWS_AS(regularity_scan(k, none, Exec::Serial), PreconditionError);
}
