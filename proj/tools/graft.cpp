#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "graft/errors.hpp"
#include "graft/io.hpp"
#include "graft/suite.hpp"
#include "graft/transform.hpp"

namespace {

using namespace graft;

Kernel make_kernel(const ParsedInput& input) {
    if (input.type == ParsedInput::Type::Scheme) {
        AssociationScheme sch = validate(*input.scheme);
        IntersectionTensor N = intersection_numbers(sch);
        return Kernel(std::move(sch), std::move(N));
    }
    return Kernel(validate_fusion(*input.fusion));
}

std::vector<Integer> parse_dim_list(const std::string& text) {
    std::vector<Integer> dims;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) dims.emplace_back(item);
    return dims;
}

void print_mat_object(const MatObject& F) {
    for (std::size_t x = 0; x < F.n; ++x) {
        for (std::size_t y = 0; y < F.n; ++y) {
            if (y) std::cout << " ";
            std::cout << F.at(x, y);
        }
        std::cout << "\n";
    }
}

int cmd_validate(const std::string& src) {
    const ParsedInput input = load_source(src);
    if (input.type == ParsedInput::Type::Scheme) {
        const AssociationScheme sch = validate(*input.scheme);
        std::cout << "valid association scheme: " << sch.n << " points, " << sch.m
                  << " classes\ninvolution:";
        for (std::size_t s = 0; s < sch.m; ++s) std::cout << " " << s << "->" << sch.involution[s];
        std::cout << "\n";
    } else {
        const FusionRing ring = validate_fusion(*input.fusion);
        std::cout << "valid fusion ring: " << ring.m << " objects, unit " << ring.names[ring.unit]
                  << "\ndual:";
        for (std::size_t x = 0; x < ring.m; ++x)
            std::cout << " " << ring.names[x] << "->" << ring.names[ring.dual[x]];
        std::cout << "\n";
    }
    return 0;
}

int cmd_numbers(const std::string& src) {
    const ParsedInput input = load_source(src);
    if (input.type == ParsedInput::Type::Scheme) {
        const AssociationScheme sch = validate(*input.scheme);
        const IntersectionTensor N = intersection_numbers(sch);
        for (std::size_t s = 0; s < N.m; ++s)
            for (std::size_t t = 0; t < N.m; ++t)
                for (std::size_t r = 0; r < N.m; ++r)
                    if (N.at(s, t, r) != 0)
                        std::cout << "N " << s << " " << t << " " << r << " = " << N.at(s, t, r)
                                  << "\n";
    } else {
        const FusionRing ring = validate_fusion(*input.fusion);
        for (std::size_t x = 0; x < ring.m; ++x)
            for (std::size_t y = 0; y < ring.m; ++y)
                for (std::size_t z = 0; z < ring.m; ++z)
                    if (ring.N(x, y, z) != 0)
                        std::cout << "N " << ring.names[x] << " " << ring.names[y] << " "
                                  << ring.names[z] << " = " << ring.N(x, y, z) << "\n";
    }
    return 0;
}

int cmd_check(const std::string& src, const std::string& only, std::uint64_t seed,
              const std::string& format, bool serial) {
    const ReportFormat fmt = format == "structured" ? ReportFormat::Structured : ReportFormat::Text;
    ParsedInput input;
    try {
        input = load_source(src);
    } catch (const std::exception& e) {
        const std::vector<CheckReport> reports = {
            {"parse", Verdict::Error, std::nullopt, e.what(), 0.0}};
        std::cout << emit_report(reports, fmt, src, seed);
        return 2;
    }
    SuiteOptions opt;
    opt.seed = seed;
    opt.exec = serial ? Exec::Serial : Exec::OpenMP;
    if (!only.empty()) {
        std::istringstream in(only);
        std::string name;
        while (std::getline(in, name, ',')) opt.only.push_back(name);
    }
    const std::vector<CheckReport> reports = run_checks(input, opt);
    std::cout << emit_report(reports, fmt, src, seed);
    return exit_code(reports);
}

int cmd_transform(const std::string& src, const std::string& vector_arg) {
    const Kernel kernel = make_kernel(load_source(src));
    DimObject f;
    f.dims = parse_dim_list(vector_arg);
    print_mat_object(khat(kernel, f));
    return 0;
}

int cmd_regular(const std::string& src, const std::string& morphism_path) {
    const Kernel kernel = make_kernel(load_source(src));
    const MorphismInput morphism = parse_morphism(read_file(morphism_path));
    DimObject f, g;
    f.dims = morphism.f.value_or(std::vector<Integer>(kernel.index_count(), 1));
    g.dims = morphism.g.value_or(std::vector<Integer>(kernel.index_count(), 1));
    const RegularityContext ctx = make_regularity_context(kernel, f, g);

    MatMorphismFamily alpha;
    alpha.source = ctx.khat_f;
    alpha.target = ctx.khat_g;
    const std::size_t n = kernel.grid_n();
    alpha.mats.reserve(kernel.cell_count());
    for (std::size_t cell = 0; cell < kernel.cell_count(); ++cell)
        alpha.mats.emplace_back(
            static_cast<std::size_t>(static_cast<unsigned long long>(ctx.khat_g.dims[cell])),
            static_cast<std::size_t>(static_cast<unsigned long long>(ctx.khat_f.dims[cell])));
    for (const auto& [cell, mat] : morphism.cells) {
        if (cell.first >= n || cell.second >= n) throw ShapeError("morphism cell out of range");
        alpha.at(cell.first, cell.second) = mat;
        const Mat& placed = alpha.at(cell.first, cell.second);
        if (placed.rows() != static_cast<std::size_t>(
                                 static_cast<unsigned long long>(ctx.khat_g.at(cell.first, cell.second))) ||
            placed.cols() != static_cast<std::size_t>(
                                 static_cast<unsigned long long>(ctx.khat_f.at(cell.first, cell.second))))
            throw ShapeError("morphism block at (" + std::to_string(cell.first) + "," +
                             std::to_string(cell.second) + ") has the wrong shape");
    }
    const CheckResult res = is_regular(ctx, alpha);
    if (res.passed()) {
        std::cout << "REGULAR\n";
        return 0;
    }
    std::cout << "NOT-REGULAR witness=\"" << res.witness->location << "; lhs=" << res.witness->lhs
              << "; rhs=" << res.witness->rhs << "\"\n";
    return 1;
}

int cmd_wiener(const std::string& src, const std::string& matrix_path) {
    const Kernel kernel = make_kernel(load_source(src));
    const MatObject F = parse_matrix(read_file(matrix_path));
    const WienerResult res = wiener_membership(kernel, F);
    if (!res.in_image()) {
        std::cout << "NOT-IN-IMAGE";
        if (res.witness)
            std::cout << " witness=\"" << res.witness->location << "; lhs=" << res.witness->lhs
                      << "; rhs=" << res.witness->rhs << "\"";
        std::cout << "\n";
        return 1;
    }
    for (const DimObject& sol : res.solutions) {
        std::cout << "f =";
        for (const Integer& d : sol.dims) std::cout << " " << d;
        std::cout << "\n";
    }
    return 0;
}

int cmd_gen(const std::string& spec, const std::string& out_path) {
    const ParsedInput input = load_source(spec);
    std::string text;
    if (input.type == ParsedInput::Type::Scheme)
        text = format_scheme(*input.scheme);
    else
        text = format_fusion(validate_fusion(*input.fusion));
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
        out << text;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of graphic Fourier transforms on association schemes and fusion rings"};
    app.require_subcommand(1);

    std::string src, only, format = "text", morphism_path, matrix_path, vector_arg, out_path;
    std::uint64_t seed = graft::kDefaultSeed;
    bool serial = false;

    auto* validate_cmd = app.add_subcommand("validate", "validate a scheme or fusion ring");
    validate_cmd->add_option("src", src)->required();

    auto* numbers_cmd = app.add_subcommand("numbers", "print the intersection/fusion tensor");
    numbers_cmd->add_option("src", src)->required();

    auto* check_cmd = app.add_subcommand("check", "run the verification suite");
    check_cmd->add_option("src", src)->required();
    check_cmd->add_option("--only", only, "comma-separated check names");
    check_cmd->add_option("--seed", seed, "seed for randomized checks");
    check_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "structured"}));
    check_cmd->add_flag("--serial", serial, "run scan kernels on one thread");

    auto* transform_cmd = app.add_subcommand("transform", "apply the transform to a dim vector");
    transform_cmd->add_option("src", src)->required();
    transform_cmd->add_option("--vector", vector_arg, "comma-separated dims")->required();

    auto* regular_cmd = app.add_subcommand("regular", "test the regular-morphism equation");
    regular_cmd->add_option("src", src)->required();
    regular_cmd->add_option("--morphism", morphism_path)->required();

    auto* wiener_cmd = app.add_subcommand("wiener", "preimage search under the transform");
    wiener_cmd->add_option("src", src)->required();
    wiener_cmd->add_option("--matrix", matrix_path)->required();

    auto* gen_cmd = app.add_subcommand("gen", "write a standard family to a file");
    gen_cmd->add_option("spec", src)->required();
    gen_cmd->add_option("-o,--output", out_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate_cmd->parsed()) return cmd_validate(src);
        if (numbers_cmd->parsed()) return cmd_numbers(src);
        if (check_cmd->parsed()) return cmd_check(src, only, seed, format, serial);
        if (transform_cmd->parsed()) return cmd_transform(src, vector_arg);
        if (regular_cmd->parsed()) return cmd_regular(src, morphism_path);
        if (wiener_cmd->parsed()) return cmd_wiener(src, matrix_path);
        if (gen_cmd->parsed()) return cmd_gen(src, out_path);
    } catch (const graft::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
