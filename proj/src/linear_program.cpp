#include "erelax/linear_program.hpp"

#include <sstream>

namespace erelax {

namespace {
const IntervalSet& unit_set() {
    static const IntervalSet full = IntervalSet::full();
    return full;
}
}  // namespace

const IntervalSet& LinearProgram::var_set(int i) const {
    const auto idx = static_cast<std::size_t>(i);
    if (idx < var_sets.size() && var_sets[idx]) return *var_sets[idx];
    return unit_set();
}

Rational LinearProgram::row_value(int r, const std::vector<Rational>& x) const {
    Rational v = 0;
    for (const auto& [idx, coeff] : rows[static_cast<std::size_t>(r)].coeffs)
        v += coeff * x[static_cast<std::size_t>(idx)];
    return v;
}

bool LinearProgram::satisfied_by(const std::vector<Rational>& x) const {
    if (static_cast<int>(x.size()) != n)
        throw DimensionMismatch("point has " + std::to_string(x.size()) + " coords, lp has " +
                                std::to_string(n));
    for (const auto& xi : x)
        if (xi < 0 || xi > 1) return false;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r)
        if (row_value(r, x) > rows[static_cast<std::size_t>(r)].rhs) return false;
    return true;
}

Box Box::unit(int n) {
    Box b;
    b.bounds.assign(static_cast<std::size_t>(n), {Rational(0), Rational(1)});
    return b;
}

bool Box::contains(const std::vector<Rational>& x) const {
    if (x.size() != bounds.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] < bounds[i].lo || x[i] > bounds[i].hi) return false;
    return true;
}

LinearProgram parse_lp(std::string_view text) {
    std::istringstream is{std::string(text)};
    std::string line;
    LinearProgram lp;
    int m = -1;
    bool have_header = false;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        if (!have_header) {
            std::string tag;
            ls >> tag >> lp.n >> m;
            if (tag != "lp" || ls.fail() || lp.n < 0 || m < 0)
                throw LpParseError("line " + std::to_string(lineno) + ": expected 'lp <n> <m>'");
            have_header = true;
            continue;
        }
        // "<rhs> : <coeff>*x<idx> ..."
        std::string rhs_tok, colon;
        ls >> rhs_tok >> colon;
        if (ls.fail() || colon != ":")
            throw LpParseError("line " + std::to_string(lineno) + ": expected '<rhs> : ...'");
        LpRow row;
        row.rhs = parse_rational(rhs_tok);
        std::string term;
        while (ls >> term) {
            const auto star = term.find("*x");
            if (star == std::string::npos)
                throw LpParseError("line " + std::to_string(lineno) + ": bad term '" + term +
                                   "' (want <coeff>*x<idx>)");
            const Rational coeff = parse_rational(term.substr(0, star));
            int idx = 0;
            try {
                idx = std::stoi(term.substr(star + 2));
            } catch (const std::exception&) {
                throw LpParseError("line " + std::to_string(lineno) + ": bad index in '" + term + "'");
            }
            if (idx < 1 || idx > lp.n)
                throw LpParseError("line " + std::to_string(lineno) + ": variable x" +
                                   std::to_string(idx) + " out of range 1.." + std::to_string(lp.n));
            row.coeffs.emplace_back(idx - 1, coeff);
        }
        lp.rows.push_back(std::move(row));
    }
    if (!have_header) throw LpParseError("missing 'lp <n> <m>' header");
    if (static_cast<int>(lp.rows.size()) != m)
        throw LpParseError("header announced " + std::to_string(m) + " rows, found " +
                           std::to_string(lp.rows.size()));
    return lp;
}

std::string serialize_lp(const LinearProgram& lp) {
    std::ostringstream os;
    os << "lp " << lp.n << ' ' << lp.rows.size() << '\n';
    for (const auto& row : lp.rows) {
        os << row.rhs.str() << " :";
        for (const auto& [idx, coeff] : row.coeffs) os << ' ' << coeff.str() << "*x" << idx + 1;
        os << '\n';
    }
    return os.str();
}

}  // namespace erelax
