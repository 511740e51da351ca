#pragma once

#include <memory>
#include <string>
#include <vector>

#include "erelax/interval_set.hpp"
#include "erelax/rational.hpp"

namespace erelax {

class DimensionMismatch : public std::runtime_error {
public:
    explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};
class LpParseError : public std::runtime_error {
public:
    explicit LpParseError(const std::string& what) : std::runtime_error(what) {}
};

// One row of Ax <= b, coefficients stored sparse (0-based variable index).
struct LpRow {
    std::vector<std::pair<int, Rational>> coeffs;
    Rational rhs;
};

// Ax <= b over n variables with the implicit box 0 <= x <= 1. Each variable
// may carry its own target IntervalSet; var_set(i) falls back to [0,1] when
// none has been assigned.
struct LinearProgram {
    int n = 0;
    std::vector<LpRow> rows;
    std::vector<std::shared_ptr<const IntervalSet>> var_sets;

    void set_uniform_set(std::shared_ptr<const IntervalSet> e) {
        var_sets.assign(static_cast<std::size_t>(n), std::move(e));
    }
    const IntervalSet& var_set(int i) const;

    // Exact evaluation of row r at x.
    Rational row_value(int r, const std::vector<Rational>& x) const;
    // True iff Ax <= b and 0 <= x <= 1 hold exactly.
    bool satisfied_by(const std::vector<Rational>& x) const;
};

// Axis-aligned box, a sub-box of [0,1]^n.
struct Box {
    std::vector<Interval> bounds;

    static Box unit(int n);
    std::size_t size() const { return bounds.size(); }
    bool contains(const std::vector<Rational>& x) const;
};

// Text format: header "lp <n> <m>", then m lines "<rhs> : <coeff>*x<idx> ...",
// '#' starts a comment line. Variables are 1-indexed in the file.
LinearProgram parse_lp(std::string_view text);
std::string serialize_lp(const LinearProgram& lp);

}  // namespace erelax
