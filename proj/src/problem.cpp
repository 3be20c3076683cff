#include "bilip/problem.hpp"

#include <fstream>
#include <sstream>

namespace bilip {

namespace {

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(strip(cur));
    return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
    throw ParseError("problem file line " + std::to_string(line) + ": " + msg, line);
}

struct RawMap {
    std::vector<std::string> components;
    std::string denom;
    std::size_t line;
};

}  // namespace

ProblemFile parse_problem_text(const std::string& text) {
    ProblemFile pf;
    std::vector<std::string> ideal_lines;
    std::vector<RawMap> raw_maps;
    std::optional<std::pair<int, int>> matrix_shape;
    std::vector<std::vector<std::string>> matrix_rows;
    std::string point_line;
    std::size_t point_lineno = 0;

    std::istringstream is(text);
    std::string line;
    std::size_t lineno = 0;
    enum class Mode { None, Ideal, Matrix } mode = Mode::None;

    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = strip(line);
        if (line.empty()) continue;

        auto starts = [&](const char* kw) { return line.rfind(kw, 0) == 0; };
        if (starts("vars ") || starts("vars\t")) {
            mode = Mode::None;
            auto names = split(line.substr(5), ',');
            if (names.empty()) fail(lineno, "empty vars list");
            pf.vars = Ring::make(names);
        } else if (starts("params ")) {
            mode = Mode::None;
            auto names = split(line.substr(7), ',');
            if (names.empty()) fail(lineno, "empty params list");
            pf.params = Ring::make(names);
        } else if (starts("ideal:")) {
            mode = Mode::Ideal;
            std::string rest = strip(line.substr(6));
            if (!rest.empty()) ideal_lines.push_back(rest);
        } else if (starts("map:")) {
            mode = Mode::None;
            RawMap rm;
            rm.line = lineno;
            for (auto& part : split(line.substr(4), ';')) {
                if (part.rfind("denom ", 0) == 0)
                    rm.denom = strip(part.substr(6));
                else if (!part.empty())
                    rm.components.push_back(part);
            }
            if (rm.components.empty()) fail(lineno, "map with no components");
            raw_maps.push_back(std::move(rm));
        } else if (starts("matrix:")) {
            mode = Mode::Matrix;
            std::istringstream ms(line.substr(7));
            int k = 0, n = 0;
            if (!(ms >> k >> n) || k <= 0 || n <= 0) fail(lineno, "matrix needs 'k n'");
            matrix_shape = {k, n};
        } else if (starts("point:")) {
            mode = Mode::None;
            point_line = strip(line.substr(6));
            point_lineno = lineno;
        } else if (mode == Mode::Ideal) {
            ideal_lines.push_back(line);
        } else if (mode == Mode::Matrix) {
            std::vector<std::string> entries;
            std::istringstream ms(line);
            std::string tok;
            while (ms >> tok) entries.push_back(tok);
            matrix_rows.push_back(std::move(entries));
        } else {
            fail(lineno, "unrecognized line: " + line);
        }
    }

    if (!ideal_lines.empty()) {
        if (!pf.vars) throw ParseError("ideal section requires a vars declaration", 0);
        std::vector<Polynomial> gens;
        for (const auto& l : ideal_lines) gens.push_back(parse_polynomial(l, pf.vars));
        pf.ideal = Ideal(pf.vars, std::move(gens));
    } else if (pf.vars) {
        // A vars declaration with no ideal lines means the zero ideal.
        pf.ideal = Ideal(pf.vars);
    }

    for (const auto& rm : raw_maps) {
        // Classify by the ring in which the components parse.
        auto try_ring = [&](const RingPtr& r) -> std::optional<std::vector<Polynomial>> {
            if (!r) return std::nullopt;
            std::vector<Polynomial> comps;
            try {
                for (const auto& c : rm.components) comps.push_back(parse_polynomial(c, r));
            } catch (const ParseError&) {
                return std::nullopt;
            }
            return comps;
        };
        if (auto comps = try_ring(pf.params)) {
            if (pf.parametrization) fail(rm.line, "duplicate parametrization");
            Parametrization p;
            p.param_ring = pf.params;
            p.components = std::move(*comps);
            if (pf.vars && pf.vars->arity() == static_cast<int>(p.components.size()))
                p.target_names = pf.vars->variables();
            else
                p.target_names =
                    fresh_names("x", static_cast<int>(p.components.size()), pf.params->variables());
            pf.parametrization = std::move(p);
        } else if (auto comps2 = try_ring(pf.vars)) {
            if (pf.map) fail(rm.line, "duplicate map");
            AlgebraicMap m;
            m.source = pf.ideal ? *pf.ideal : Ideal(pf.vars);
            m.components = std::move(*comps2);
            if (!rm.denom.empty()) m.denominator = parse_polynomial(rm.denom, pf.vars);
            pf.map = std::move(m);
        } else {
            fail(rm.line, "map components parse in neither params nor vars");
        }
    }

    if (matrix_shape) {
        auto [k, n] = *matrix_shape;
        if (static_cast<int>(matrix_rows.size()) != k)
            throw ParseError("matrix: expected " + std::to_string(k) + " rows", 0);
        RationalMatrix m;
        for (const auto& row : matrix_rows) {
            if (static_cast<int>(row.size()) != n)
                throw ParseError("matrix: expected " + std::to_string(n) + " entries per row", 0);
            std::vector<Rational> r;
            for (const auto& e : row) r.push_back(rational_from_string(e));
            m.push_back(std::move(r));
        }
        pf.matrix = LinearProjection::make(std::move(m));
    }

    if (!point_line.empty()) {
        AffinePoint p;
        for (const auto& c : split(point_line, ',')) p.push_back(rational_from_string(c));
        pf.point = std::move(p);
    } else if (point_lineno) {
        fail(point_lineno, "empty point");
    }

    return pf;
}

ProblemFile parse_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path, 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_problem_text(ss.str());
}

Ideal ProblemFile::variety_ideal(const Budget& budget) const {
    if (ideal && !ideal->generators.empty()) return *ideal;
    if (parametrization) return implicitize(*parametrization, budget);
    if (ideal) return *ideal;
    throw PreconditionError("problem file has neither an ideal nor a parametrization");
}

}  // namespace bilip
