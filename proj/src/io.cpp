#include "graft/io.hpp"

#include <fstream>
#include <sstream>

#include "graft/errors.hpp"

namespace graft {

namespace {

struct Token {
    std::string text;
    std::size_t line;
    std::size_t column;
};

// Whitespace-separated tokens with line/column positions; `#` kills the rest
// of its line.
std::vector<std::vector<Token>> tokenize(const std::string& text) {
    std::vector<std::vector<Token>> lines;
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::vector<Token> toks;
        std::size_t i = 0;
        while (i < raw.size()) {
            if (std::isspace(static_cast<unsigned char>(raw[i]))) { ++i; continue; }
            if (raw[i] == '#') break;
            const std::size_t start = i;
            while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
            toks.push_back({raw.substr(start, i - start), lineno, start + 1});
        }
        if (!toks.empty()) lines.push_back(std::move(toks));
    }
    return lines;
}

std::size_t parse_index(const Token& t, const std::string& what) {
    try {
        std::size_t pos = 0;
        const unsigned long long v = std::stoull(t.text, &pos);
        if (pos != t.text.size()) throw std::invalid_argument("");
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw ParseError(t.line, t.column, "expected " + what + ", got '" + t.text + "'");
    }
}

Integer parse_integer(const Token& t, const std::string& what) {
    try {
        return Integer(t.text);
    } catch (const std::exception&) {
        throw ParseError(t.line, t.column, "expected " + what + ", got '" + t.text + "'");
    }
}

Rational parse_rational(const Token& t) {
    try {
        return Rational(t.text);
    } catch (const std::exception&) {
        throw ParseError(t.line, t.column, "expected rational, got '" + t.text + "'");
    }
}

void expect_header(const std::vector<std::vector<Token>>& lines, const std::string& kind) {
    if (lines.empty()) throw ParseError(1, 1, "empty input, expected '" + kind + " v1' header");
    const auto& h = lines[0];
    if (h.size() != 2 || h[0].text != kind || h[1].text != "v1")
        throw ParseError(h[0].line, h[0].column, "expected '" + kind + " v1' header");
}

} // namespace

ClassMatrix parse_scheme(const std::string& text) {
    const auto lines = tokenize(text);
    expect_header(lines, "scheme");
    std::size_t n = 0;
    bool have_points = false;
    std::size_t i = 1;
    for (; i < lines.size(); ++i) {
        const auto& l = lines[i];
        if (l[0].text == "points") {
            if (l.size() != 2) throw ParseError(l[0].line, l[0].column, "points wants one count");
            n = parse_index(l[1], "point count");
            have_points = true;
        } else if (l[0].text == "matrix") {
            ++i;
            break;
        } else {
            throw ParseError(l[0].line, l[0].column, "unknown directive '" + l[0].text + "'");
        }
    }
    if (!have_points || n == 0) throw ParseError(1, 1, "missing or zero 'points' declaration");
    ClassMatrix cm;
    cm.n = n;
    cm.cells.reserve(n * n);
    std::size_t rows = 0;
    for (; i < lines.size(); ++i, ++rows) {
        const auto& l = lines[i];
        if (l.size() != n)
            throw ParseError(l[0].line, l[0].column,
                             "matrix row has " + std::to_string(l.size()) + " entries, expected " +
                                 std::to_string(n));
        for (const Token& t : l) {
            const std::size_t c = parse_index(t, "class index");
            if (c >= n * n) throw ParseError(t.line, t.column, "class index out of range");
            cm.cells.push_back(c);
        }
    }
    if (rows == 0) throw ParseError(lines.back()[0].line, 1, "no rows in matrix section");
    if (rows != n)
        throw ParseError(lines.back()[0].line, 1,
                         "matrix has " + std::to_string(rows) + " rows, expected " + std::to_string(n));
    return cm;
}

FusionData parse_fusion(const std::string& text) {
    const auto lines = tokenize(text);
    expect_header(lines, "fusion");
    FusionData d;
    bool have_unit = false;
    bool autofill = false;
    struct Entry { std::size_t x, y, z; Integer v; Token tok; };
    std::vector<Entry> entries;

    auto object_index = [&](const Token& t) {
        for (std::size_t i = 0; i < d.names.size(); ++i)
            if (d.names[i] == t.text) return i;
        throw ParseError(t.line, t.column, "unknown object name '" + t.text + "'");
    };

    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& l = lines[i];
        const std::string& kw = l[0].text;
        if (kw == "objects") {
            if (l.size() < 2) throw ParseError(l[0].line, l[0].column, "objects wants names");
            for (std::size_t j = 1; j < l.size(); ++j) d.names.push_back(l[j].text);
        } else if (kw == "unit") {
            if (l.size() != 2) throw ParseError(l[0].line, l[0].column, "unit wants one name");
            d.unit = object_index(l[1]);
            have_unit = true;
        } else if (kw == "dual") {
            if (l.size() != 3) throw ParseError(l[0].line, l[0].column, "dual wants two names");
            if (d.dual.empty()) {
                d.dual.resize(d.names.size());
                for (std::size_t x = 0; x < d.names.size(); ++x) d.dual[x] = x;
            }
            const std::size_t a = object_index(l[1]);
            const std::size_t b = object_index(l[2]);
            d.dual[a] = b;
            d.dual[b] = a;
        } else if (kw == "N") {
            if (l.size() != 5)
                throw ParseError(l[0].line, l[0].column, "N wants three names and a multiplicity");
            entries.push_back({object_index(l[1]), object_index(l[2]), object_index(l[3]),
                               parse_integer(l[4], "multiplicity"), l[1]});
        } else if (kw == "autofill_unit") {
            if (l.size() != 2 || l[1].text != "true")
                throw ParseError(l[0].line, l[0].column, "autofill_unit only accepts 'true'");
            autofill = true;
        } else {
            throw ParseError(l[0].line, l[0].column, "unknown directive '" + kw + "'");
        }
    }

    if (d.names.empty()) throw ParseError(1, 1, "missing 'objects' declaration");
    if (!have_unit) throw ParseError(1, 1, "missing 'unit' declaration");
    const std::size_t m = d.names.size();
    d.tensor.assign(m * m * m, 0);
    std::vector<bool> set(m * m * m, false);
    for (const Entry& e : entries) {
        const std::size_t idx = (e.x * m + e.y) * m + e.z;
        if (set[idx] && d.tensor[idx] != e.v)
            throw ParseError(e.tok.line, e.tok.column,
                             "conflicting duplicate N(" + d.names[e.x] + "," + d.names[e.y] + "," +
                                 d.names[e.z] + ")");
        d.tensor[idx] = e.v;
        set[idx] = true;
    }
    if (autofill)
        for (std::size_t x = 0; x < m; ++x) {
            d.tensor[(d.unit * m + x) * m + x] = 1;
            d.tensor[(x * m + d.unit) * m + x] = 1;
        }
    return d;
}

std::vector<std::vector<std::size_t>> parse_group_table(const std::string& text) {
    const auto lines = tokenize(text);
    expect_header(lines, "group");
    std::size_t n = 0;
    std::size_t i = 1;
    for (; i < lines.size(); ++i) {
        const auto& l = lines[i];
        if (l[0].text == "order") {
            if (l.size() != 2) throw ParseError(l[0].line, l[0].column, "order wants one count");
            n = parse_index(l[1], "order");
        } else if (l[0].text == "table") {
            ++i;
            break;
        } else {
            throw ParseError(l[0].line, l[0].column, "unknown directive '" + l[0].text + "'");
        }
    }
    if (n == 0) throw ParseError(1, 1, "missing or zero 'order' declaration");
    std::vector<std::vector<std::size_t>> table;
    for (; i < lines.size(); ++i) {
        const auto& l = lines[i];
        if (l.size() != n) throw ParseError(l[0].line, l[0].column, "table row length mismatch");
        std::vector<std::size_t> row;
        for (const Token& t : l) row.push_back(parse_index(t, "element"));
        table.push_back(std::move(row));
    }
    if (table.size() != n) throw ParseError(1, 1, "table row count mismatch");
    return table;
}

MatObject parse_matrix(const std::string& text) {
    const auto lines = tokenize(text);
    expect_header(lines, "matrix");
    if (lines.size() < 2 || lines[1][0].text != "size" || lines[1].size() != 2)
        throw ParseError(lines.size() > 1 ? lines[1][0].line : 1, 1, "expected 'size <n>'");
    const std::size_t n = parse_index(lines[1][1], "size");
    MatObject F;
    F.n = n;
    F.dims.reserve(n * n);
    for (std::size_t i = 2; i < lines.size(); ++i) {
        const auto& l = lines[i];
        if (l.size() != n) throw ParseError(l[0].line, l[0].column, "matrix row length mismatch");
        for (const Token& t : l) {
            Integer v = parse_integer(t, "dimension");
            if (v < 0) throw ParseError(t.line, t.column, "dimensions must be non-negative");
            F.dims.push_back(std::move(v));
        }
    }
    if (F.dims.size() != n * n) throw ParseError(1, 1, "matrix row count mismatch");
    return F;
}

MorphismInput parse_morphism(const std::string& text) {
    const auto lines = tokenize(text);
    expect_header(lines, "morphism");
    MorphismInput out;
    auto parse_dim_list = [](const Token& t) {
        std::vector<Integer> dims;
        std::string item;
        std::istringstream in(t.text);
        while (std::getline(in, item, ',')) dims.emplace_back(item);
        return dims;
    };
    std::size_t i = 1;
    while (i < lines.size()) {
        const auto& l = lines[i];
        if (l[0].text == "f" && l.size() == 2) { out.f = parse_dim_list(l[1]); ++i; }
        else if (l[0].text == "g" && l.size() == 2) { out.g = parse_dim_list(l[1]); ++i; }
        else if (l[0].text == "M") {
            if (l.size() != 3) throw ParseError(l[0].line, l[0].column, "M wants two cell indices");
            const std::size_t x = parse_index(l[1], "cell row");
            const std::size_t y = parse_index(l[2], "cell column");
            ++i;
            std::vector<std::vector<Rational>> rows;
            while (i < lines.size() && lines[i][0].text != "M" && lines[i][0].text != "f" &&
                   lines[i][0].text != "g") {
                std::vector<Rational> row;
                for (const Token& t : lines[i]) row.push_back(parse_rational(t));
                rows.push_back(std::move(row));
                ++i;
            }
            const std::size_t r = rows.size();
            const std::size_t c = r ? rows[0].size() : 0;
            Mat mat(r, c);
            for (std::size_t rr = 0; rr < r; ++rr) {
                if (rows[rr].size() != c)
                    throw ParseError(l[0].line, l[0].column, "ragged matrix block after M");
                for (std::size_t cc = 0; cc < c; ++cc) mat.at(rr, cc) = rows[rr][cc];
            }
            out.cells.push_back({{x, y}, std::move(mat)});
        } else {
            throw ParseError(l[0].line, l[0].column, "unknown directive '" + l[0].text + "'");
        }
    }
    return out;
}

std::string format_scheme(const ClassMatrix& cm) {
    std::ostringstream out;
    out << "scheme v1\n" << "points " << cm.n << "\n" << "matrix\n";
    for (std::size_t x = 0; x < cm.n; ++x) {
        for (std::size_t y = 0; y < cm.n; ++y) {
            if (y) out << " ";
            out << cm.class_of(x, y);
        }
        out << "\n";
    }
    return out.str();
}

std::string format_fusion(const FusionRing& ring) {
    std::ostringstream out;
    out << "fusion v1\nobjects";
    for (const std::string& name : ring.names) out << " " << name;
    out << "\nunit " << ring.names[ring.unit] << "\n";
    for (std::size_t x = 0; x < ring.m; ++x)
        if (ring.dual[x] != x && x < ring.dual[x])
            out << "dual " << ring.names[x] << " " << ring.names[ring.dual[x]] << "\n";
    for (std::size_t x = 0; x < ring.m; ++x)
        for (std::size_t y = 0; y < ring.m; ++y)
            for (std::size_t z = 0; z < ring.m; ++z)
                if (ring.N(x, y, z) != 0)
                    out << "N " << ring.names[x] << " " << ring.names[y] << " " << ring.names[z]
                        << " " << ring.N(x, y, z) << "\n";
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(1, 1, "cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ParsedInput load_source(const std::string& spec) {
    ParsedInput out;
    out.source = spec;
    if (spec.rfind("gen:", 0) == 0) {
        const std::string rest = spec.substr(4);
        const std::size_t colon = rest.find(':');
        const std::string family = rest.substr(0, colon);
        const std::string args = colon == std::string::npos ? "" : rest.substr(colon + 1);
        auto split_args = [&]() {
            std::vector<std::size_t> vals;
            std::istringstream in(args);
            std::string item;
            while (std::getline(in, item, ',')) vals.push_back(std::stoull(item));
            return vals;
        };
        if (family == "cyclic") {
            const auto a = split_args();
            if (a.size() != 1) throw GenerationError("gen:cyclic wants one argument");
            out.type = ParsedInput::Type::Scheme;
            out.scheme = gen_cyclic(a[0]);
        } else if (family == "hamming") {
            const auto a = split_args();
            if (a.size() != 2) throw GenerationError("gen:hamming wants n,q");
            out.type = ParsedInput::Type::Scheme;
            out.scheme = gen_hamming(a[0], a[1]);
        } else if (family == "johnson") {
            const auto a = split_args();
            if (a.size() != 2) throw GenerationError("gen:johnson wants v,k");
            out.type = ParsedInput::Type::Scheme;
            out.scheme = gen_johnson(a[0], a[1]);
        } else if (family == "group") {
            if (args.empty()) throw GenerationError("gen:group wants a table file");
            out.type = ParsedInput::Type::Scheme;
            out.scheme = gen_group(parse_group_table(read_file(args)));
        } else if (family == "fibonacci") {
            out.type = ParsedInput::Type::Fusion;
            const FusionRing ring = gen_fibonacci();
            out.fusion = FusionData{ring.names, ring.unit, ring.dual, ring.tensor};
        } else if (family == "ising") {
            out.type = ParsedInput::Type::Fusion;
            const FusionRing ring = gen_ising();
            out.fusion = FusionData{ring.names, ring.unit, ring.dual, ring.tensor};
        } else if (family == "zn") {
            const auto a = split_args();
            if (a.size() != 1) throw GenerationError("gen:zn wants one argument");
            out.type = ParsedInput::Type::Fusion;
            const FusionRing ring = gen_group_fusion(a[0]);
            out.fusion = FusionData{ring.names, ring.unit, ring.dual, ring.tensor};
        } else {
            throw GenerationError("unknown generator family '" + family + "'");
        }
        return out;
    }

    const std::string text = read_file(spec);
    const auto lines = tokenize(text);
    if (lines.empty()) throw ParseError(1, 1, "empty input");
    const std::string& kind = lines[0][0].text;
    if (kind == "scheme") {
        out.type = ParsedInput::Type::Scheme;
        out.scheme = parse_scheme(text);
    } else if (kind == "fusion") {
        out.type = ParsedInput::Type::Fusion;
        out.fusion = parse_fusion(text);
    } else {
        throw ParseError(lines[0][0].line, lines[0][0].column,
                         "unknown input kind '" + kind + "'");
    }
    return out;
}

} // namespace graft
