#include "graft/suite.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include <json.hpp>

#include "graft/errors.hpp"
#include "graft/transform.hpp"

namespace graft {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::NotApplicable: return "NOT-APPLICABLE";
        case Verdict::Error: return "ERROR";
    }
    return "ERROR";
}

namespace {

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    std::size_t below(std::size_t n) { return n ? static_cast<std::size_t>(eng() % n) : 0; }
};

DimObject random_dims(Rng& rng, std::size_t m, std::size_t max_entry) {
    DimObject f;
    f.dims.resize(m);
    for (std::size_t i = 0; i < m; ++i) f.dims[i] = rng.below(max_entry + 1);
    return f;
}

MorphismFamily random_endomorphism(Rng& rng, const DimObject& f) {
    MorphismFamily alpha;
    alpha.source = f;
    alpha.target = f;
    for (const Integer& d : f.dims) {
        const std::size_t n = static_cast<std::size_t>(static_cast<unsigned long long>(d));
        Mat m(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                m.at(r, c) = Rational(static_cast<long long>(rng.below(7)) - 3);
        alpha.mats.push_back(std::move(m));
    }
    return alpha;
}

/// Every dim vector over m indices with entries in {0..max_entry}.
std::vector<DimObject> all_dim_vectors(std::size_t m, std::size_t max_entry) {
    std::vector<DimObject> out;
    DimObject cur;
    cur.dims.assign(m, 0);
    while (true) {
        out.push_back(cur);
        std::size_t i = m;
        while (i-- > 0) {
            if (cur.dims[i] < max_entry) { ++cur.dims[i]; break; }
            cur.dims[i] = 0;
            if (i == 0) return out;
        }
    }
}

class Runner {
public:
    Runner(std::vector<CheckReport>& reports, const SuiteOptions& opt)
        : reports_(reports), opt_(opt) {}

    bool selected(const std::string& name) const {
        return opt_.only.empty() ||
               std::find(opt_.only.begin(), opt_.only.end(), name) != opt_.only.end();
    }

    void run(const std::string& name, const std::function<CheckResult()>& fn) {
        if (!selected(name)) return;
        CheckReport rep;
        rep.name = name;
        const auto start = std::chrono::steady_clock::now();
        try {
            const CheckResult res = fn();
            switch (res.outcome) {
                case Outcome::Pass: rep.verdict = Verdict::Pass; break;
                case Outcome::Fail: rep.verdict = Verdict::Fail; break;
                case Outcome::NotApplicable: rep.verdict = Verdict::NotApplicable; break;
            }
            rep.witness = res.witness;
            rep.note = res.note;
        } catch (const std::exception& e) {
            rep.verdict = Verdict::Error;
            rep.note = e.what();
        }
        rep.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                     .count();
        reports_.push_back(std::move(rep));
    }

    void skip(const std::string& name, const std::string& why) {
        if (!selected(name)) return;
        reports_.push_back({name, Verdict::Error, std::nullopt, why, 0.0});
    }

private:
    std::vector<CheckReport>& reports_;
    const SuiteOptions& opt_;
};

std::vector<std::pair<DimObject, DimObject>> multiplicativity_pairs(Rng& rng, std::size_t m) {
    std::vector<std::pair<DimObject, DimObject>> pairs;
    if (m <= 3) {
        const auto vecs = all_dim_vectors(m, 2);
        for (const DimObject& f : vecs)
            for (const DimObject& g : vecs) pairs.emplace_back(f, g);
    } else {
        for (int i = 0; i < 100; ++i)
            pairs.emplace_back(random_dims(rng, m, 5), random_dims(rng, m, 5));
    }
    return pairs;
}

std::vector<DimObject> sample_objects(Rng& rng, const Kernel& k) {
    std::vector<DimObject> fs;
    fs.push_back(prounit(k));
    DimObject ones;
    ones.dims.assign(k.index_count(), 1);
    fs.push_back(std::move(ones));
    for (int i = 0; i < 3; ++i) fs.push_back(random_dims(rng, k.index_count(), 3));
    return fs;
}

CheckResult conservativity_check(Rng& rng, const Kernel& k) {
    if (const CheckResult structural = check_conservative_structural(k); !structural.passed())
        return structural;
    for (int i = 0; i < 20; ++i) {
        const DimObject f = random_dims(rng, k.index_count(), 3);
        MorphismFamily alpha = random_endomorphism(rng, f);
        if (i % 2 == 1) {
            // Force a singular index so the non-iso direction is exercised.
            for (std::size_t a = 0; a < k.index_count(); ++a)
                if (f.dims[a] > 0) {
                    alpha.mats[a] = Mat(static_cast<std::size_t>(f.dims[a]),
                                        static_cast<std::size_t>(f.dims[a]));
                    break;
                }
        }
        if (const CheckResult res = reflects_iso(k, alpha); !res.passed()) return res;
    }
    return CheckResult::pass();
}

CheckResult adjunction_check(Rng& rng, const Kernel& k, const std::vector<DimObject>& fs) {
    for (const DimObject& f : fs) {
        if (const auto res = check_triangle_identities(k, f, khat(k, f)); !res.passed()) return res;
        if (const auto res = check_eta_split_mono(k, f); !res.passed()) return res;
        if (k.side() == Kernel::Side::Scheme)
            if (const auto res = check_roundtrip(k, f); !res.passed()) return res;
    }
    // A target object that is not an image of khat.
    MatObject F;
    F.n = k.grid_n();
    F.dims.resize(k.cell_count());
    for (auto& d : F.dims) d = rng.below(3);
    DimObject probe;
    probe.dims.assign(k.index_count(), 1);
    return check_triangle_identities(k, probe, F);
}

CheckResult star_check(const Kernel& k, const std::vector<DimObject>& fs) {
    for (const DimObject& f : fs) {
        const CheckResult res = check_star_preserved(k, f);
        if (!res.passed()) return res;
    }
    return CheckResult::pass();
}

CheckResult regularity_characterization(Rng& rng, const Kernel& k, Exec exec) {
    const AssociationScheme& sch = *k.scheme();
    const std::size_t cells = k.cell_count();
    if (cells <= 9) {
        const RegularityScanResult scan = regularity_scan(k, {0, 1, 2}, exec);
        if (scan.disagreements)
            return CheckResult::fail({"alpha #" + std::to_string(*scan.first_disagreement),
                                      "is_regular", "class-constancy"});
        std::ostringstream note;
        note << "exhaustive over " << scan.total << " morphisms, " << scan.regular << " regular";
        return CheckResult::pass(note.str());
    }
    // Sampled: class-constant families must be regular, one-cell perturbations
    // of them must not be (when some class has two or more pairs).
    DimObject ones;
    ones.dims.assign(k.index_count(), 1);
    const RegularityContext ctx = make_regularity_context(k, ones, ones);
    std::size_t wide_class = sch.m;
    for (std::size_t s = 0; s < sch.m; ++s)
        if (sch.pairs[s].size() >= 2) { wide_class = s; break; }
    for (int i = 0; i < 30; ++i) {
        MatMorphismFamily alpha;
        alpha.source = ctx.khat_f;
        alpha.target = ctx.khat_g;
        alpha.mats.assign(cells, Mat(1, 1));
        for (std::size_t s = 0; s < sch.m; ++s) {
            const Rational v(static_cast<long long>(rng.below(3)));
            for (const auto& [x, y] : sch.pairs[s]) alpha.at(x, y).at(0, 0) = v;
        }
        if (!is_regular(ctx, alpha).passed())
            return CheckResult::fail({"class-constant sample #" + std::to_string(i),
                                      "not regular", "regular"});
        if (wide_class != sch.m) {
            const auto& [x, y] = sch.pairs[wide_class][1];
            alpha.at(x, y).at(0, 0) += 1;
            if (is_regular(ctx, alpha).passed())
                return CheckResult::fail({"perturbed sample #" + std::to_string(i),
                                          "regular", "not regular"});
        }
    }
    return CheckResult::pass("sampled characterization, 30 pairs");
}

CheckResult wiener_check(const Kernel& k, const std::vector<DimObject>& fs) {
    for (const DimObject& f : fs) {
        const CheckResult res = check_wiener_roundtrip(k, f);
        if (!res.passed()) return res;
    }
    if (k.side() == Kernel::Side::Scheme) {
        const AssociationScheme& sch = *k.scheme();
        for (std::size_t s = 0; s < sch.m; ++s)
            if (sch.pairs[s].size() >= 2) {
                DimObject ones;
                ones.dims.assign(k.index_count(), 1);
                MatObject F = khat(k, ones);
                const auto& [x, y] = sch.pairs[s][1];
                F.at(x, y) += 1;
                const WienerResult res = wiener_membership(k, F);
                if (res.in_image() || !res.witness)
                    return CheckResult::fail({"class-inconstant matrix", "accepted", "rejected"});
                break;
            }
    }
    return CheckResult::pass();
}

CheckResult dual_comparison_check(Rng& rng, const Kernel& k) {
    const CheckResult pre = k.side() == Kernel::Side::Scheme
                                ? check_precompact(k.tensor(), k.involution())
                                : check_precompact(*k.fusion());
    if (!pre.passed())
        return CheckResult::not_applicable("precompactness fails at " + pre.witness->location);
    const std::size_t m = k.index_count();
    std::vector<std::pair<DimObject, DimObject>> pairs;
    if (m <= 4) {
        for (std::size_t s = 0; s < m; ++s)
            for (std::size_t t = 0; t < m; ++t) {
                DimObject ds, dt;
                ds.dims.assign(m, 0);
                dt.dims.assign(m, 0);
                ds.dims[s] = 1;
                dt.dims[t] = 1;
                pairs.emplace_back(std::move(ds), std::move(dt));
            }
    }
    for (int i = 0; i < 5; ++i)
        pairs.emplace_back(random_dims(rng, m, 3), random_dims(rng, m, 3));
    for (const auto& [f, g] : pairs) {
        const CheckResult res = dual_comparison(k, f, g);
        if (!res.passed()) return res;
    }
    return CheckResult::pass();
}

void run_scheme_suite(std::vector<CheckReport>& reports, const ClassMatrix& cm,
                      const SuiteOptions& opt) {
    Runner runner(reports, opt);
    static const std::vector<std::string> downstream = {
        "intersection-numbers", "bose-mesner", "proassociativity", "precompact", "compact",
        "multiplicative", "unit-preserved", "conservative", "adjunction-triangles",
        "star-preserved", "regularity-characterization", "wiener-roundtrip", "dual-comparison"};

    AssociationScheme sch;
    bool valid = false;
    runner.run("validate", [&] {
        sch = validate(cm);
        valid = true;
        return CheckResult::pass("n=" + std::to_string(sch.n) + ", m=" + std::to_string(sch.m));
    });
    if (!valid) {
        for (const std::string& name : downstream) runner.skip(name, "unavailable: validation failed");
        return;
    }

    IntersectionTensor N;
    runner.run("intersection-numbers", [&] {
        N = intersection_numbers(sch);
        return CheckResult::pass(std::to_string(sch.m) + " classes");
    });
    if (N.m == 0) {
        for (std::size_t i = 1; i < downstream.size(); ++i)
            runner.skip(downstream[i], "unavailable: intersection numbers failed");
        return;
    }

    const Kernel kernel(sch, N);
    Rng rng(opt.seed);
    const std::vector<DimObject> fs = sample_objects(rng, kernel);

    runner.run("bose-mesner", [&] { return bose_mesner_closure(sch, N); });
    runner.run("proassociativity", [&] { return proassociativity_scan(N, opt.exec); });
    runner.run("precompact", [&] { return check_precompact(N, sch.involution); });
    runner.run("compact", [&] { return check_compact(N, sch.involution); });
    runner.run("multiplicative", [&] {
        const auto pairs = multiplicativity_pairs(rng, sch.m);
        const SweepResult sweep = multiplicativity_sweep(kernel, pairs, opt.exec);
        if (!sweep.passed()) return CheckResult::fail(*sweep.witness);
        return CheckResult::pass(std::to_string(sweep.checked) + " pairs");
    });
    runner.run("unit-preserved", [&] { return check_unit_preserved(kernel); });
    runner.run("conservative", [&] { return conservativity_check(rng, kernel); });
    runner.run("adjunction-triangles", [&] { return adjunction_check(rng, kernel, fs); });
    runner.run("star-preserved", [&] { return star_check(kernel, fs); });
    runner.run("regularity-characterization",
               [&] { return regularity_characterization(rng, kernel, opt.exec); });
    runner.run("wiener-roundtrip", [&] { return wiener_check(kernel, fs); });
    runner.run("dual-comparison", [&] { return dual_comparison_check(rng, kernel); });
}

void run_fusion_suite(std::vector<CheckReport>& reports, const FusionData& data,
                      const SuiteOptions& opt) {
    Runner runner(reports, opt);
    static const std::vector<std::string> downstream = {
        "fusion-matrices", "proassociativity", "cyclic", "braiding", "closed", "multiplicative",
        "unit-preserved", "conservative", "adjunction-triangles", "star-preserved",
        "wiener-roundtrip", "dual-comparison"};

    FusionRing ring;
    bool valid = false;
    runner.run("validate", [&] {
        ring = validate_fusion(data);
        valid = true;
        return CheckResult::pass("m=" + std::to_string(ring.m));
    });
    if (!valid) {
        for (const std::string& name : downstream) runner.skip(name, "unavailable: validation failed");
        return;
    }

    const Kernel kernel(ring);
    Rng rng(opt.seed);
    const std::vector<DimObject> fs = sample_objects(rng, kernel);

    runner.run("fusion-matrices", [&] {
        const std::vector<Mat> mats = fusion_matrices(ring);
        if (mats[ring.unit] != Mat::identity(ring.m))
            return CheckResult::fail({"N_unit", mats[ring.unit].to_string(), "identity"});
        // Matrix form of proassociativity under the frozen index convention.
        for (std::size_t x = 0; x < ring.m; ++x)
            for (std::size_t y = 0; y < ring.m; ++y) {
                const Mat lhs = mat_mul(mats[x], mats[y]);
                Mat rhs(ring.m, ring.m);
                for (std::size_t u = 0; u < ring.m; ++u) {
                    if (ring.N(x, y, u) == 0) continue;
                    const Rational c(ring.N(x, y, u));
                    for (std::size_t a = 0; a < ring.m; ++a)
                        for (std::size_t b = 0; b < ring.m; ++b)
                            rhs.at(a, b) += c * mats[u].at(a, b);
                }
                if (lhs != rhs)
                    return CheckResult::fail({"(x,y)=(" + std::to_string(x) + "," +
                                                  std::to_string(y) + ")",
                                              lhs.to_string(), rhs.to_string()});
            }
        return CheckResult::pass();
    });
    runner.run("proassociativity", [&] { return proassociativity_scan(kernel.tensor(), opt.exec); });
    runner.run("cyclic", [&] { return check_cyclic(ring); });
    runner.run("braiding", [&] { return check_braiding(ring); });
    runner.run("closed", [&] {
        if (const auto hom = is_closed(ring)) {
            std::ostringstream note;
            note << "closed, [y,z]:";
            for (std::size_t y = 0; y < ring.m; ++y)
                for (std::size_t z = 0; z < ring.m; ++z)
                    note << " [" << ring.names[y] << "," << ring.names[z] << "]="
                         << ring.names[(*hom)[y * ring.m + z]];
            return CheckResult::pass(note.str());
        }
        return CheckResult::pass("not closed");
    });
    runner.run("multiplicative", [&] {
        const auto pairs = multiplicativity_pairs(rng, ring.m);
        const SweepResult sweep = multiplicativity_sweep(kernel, pairs, opt.exec);
        if (!sweep.passed()) return CheckResult::fail(*sweep.witness);
        return CheckResult::pass(std::to_string(sweep.checked) + " pairs");
    });
    runner.run("unit-preserved", [&] { return check_unit_preserved(kernel); });
    runner.run("conservative", [&] { return conservativity_check(rng, kernel); });
    runner.run("adjunction-triangles", [&] { return adjunction_check(rng, kernel, fs); });
    runner.run("star-preserved", [&] { return star_check(kernel, fs); });
    runner.run("wiener-roundtrip", [&] { return wiener_check(kernel, fs); });
    runner.run("dual-comparison", [&] { return dual_comparison_check(rng, kernel); });
}

} // namespace

std::vector<CheckReport> run_checks(const ParsedInput& input, const SuiteOptions& opt) {
    std::vector<CheckReport> reports;
    if (input.type == ParsedInput::Type::Scheme)
        run_scheme_suite(reports, *input.scheme, opt);
    else
        run_fusion_suite(reports, *input.fusion, opt);
    return reports;
}

std::string emit_report(const std::vector<CheckReport>& reports, ReportFormat fmt,
                        const std::string& source, std::uint64_t seed) {
    if (fmt == ReportFormat::Text) {
        std::ostringstream out;
        for (const CheckReport& r : reports) {
            out << "CHECK " << r.name << " " << to_string(r.verdict);
            if (r.witness)
                out << " witness=\"" << r.witness->location << "; lhs=" << r.witness->lhs
                    << "; rhs=" << r.witness->rhs << "\"";
            if (!r.note.empty()) out << " note=\"" << r.note << "\"";
            out << " " << static_cast<long long>(r.ms * 1000.0 + 0.5) / 1000.0 << "ms\n";
        }
        return out.str();
    }
    nlohmann::ordered_json doc;
    doc["format"] = "graft-report v1";
    doc["source"] = source;
    doc["seed"] = seed;
    doc["checks"] = nlohmann::ordered_json::array();
    std::size_t failures = 0;
    for (const CheckReport& r : reports) {
        nlohmann::ordered_json jr;
        jr["name"] = r.name;
        jr["verdict"] = to_string(r.verdict);
        if (r.witness) {
            jr["witness"] = {{"location", r.witness->location},
                             {"lhs", r.witness->lhs},
                             {"rhs", r.witness->rhs}};
        } else {
            jr["witness"] = nullptr;
        }
        jr["note"] = r.note;
        doc["checks"].push_back(std::move(jr));
        if (r.verdict == Verdict::Fail || r.verdict == Verdict::Error) ++failures;
    }
    doc["failures"] = failures;
    return doc.dump(2) + "\n";
}

int exit_code(const std::vector<CheckReport>& reports) {
    for (const CheckReport& r : reports)
        if (r.verdict == Verdict::Fail || r.verdict == Verdict::Error) return 1;
    return 0;
}

} // namespace graft
