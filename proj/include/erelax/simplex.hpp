#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "erelax/linear_program.hpp"

namespace erelax {

// min c.x subject to rows a.x <= rhs and lo <= x <= hi; hi entries may be
// absent (unbounded above). The walk's strategy system needs the unbounded
// uppers; the public module operations below only ever pass boxes.
struct GeneralLp {
    int n = 0;
    std::vector<LpRow> rows;
    std::vector<Rational> lo;
    std::vector<std::optional<Rational>> hi;

    static GeneralLp from_box(const LinearProgram& lp, const Box& box);
};

struct FeasibleResult {
    std::vector<Rational> witness;
};
// farkas holds one multiplier per constraint row; the box multipliers are
// recovered from the sign pattern of -A^T y during verification.
struct InfeasibleResult {
    std::vector<Rational> farkas;
};
struct OptimalResult {
    Rational value;
    std::vector<Rational> primal;
    std::vector<Rational> dual_rows;   // y >= 0, one per constraint row
    std::vector<Rational> dual_upper;  // u >= 0, one per variable (0 where hi absent)
    std::vector<Rational> dual_lower;  // w >= 0, one per variable
};
struct UnboundedResult {};

using LpOutcome = std::variant<FeasibleResult, InfeasibleResult, OptimalResult, UnboundedResult>;

bool is_feasible(const LpOutcome& o);
bool is_optimal(const LpOutcome& o);
bool is_infeasible(const LpOutcome& o);

// Two-phase primal simplex with Bland's pivoting rule over exact rationals;
// deterministic for a fixed input. objective == nullptr stops after phase 1
// and yields Feasible/Infeasible.
LpOutcome solve_general(const GeneralLp& problem, const std::vector<Rational>* objective);

// Feasibility of Ax <= b over a box. Returns Feasible with an exact witness
// or Infeasible with a Farkas certificate. Throws DimensionMismatch.
LpOutcome check_feasible(const LinearProgram& lp, const Box& box);

// Exact minimum of objective.x over {Ax <= b} intersect box, with dual
// certificate. Never Unbounded. Throws DimensionMismatch.
LpOutcome minimize(const LinearProgram& lp, const std::vector<Rational>& objective, const Box& box);

// Exact certificate checks. Each returns true when the certificate proves
// its claim; solver outputs must always pass.
bool verify_witness(const GeneralLp& problem, const std::vector<Rational>& witness);
bool verify_farkas(const GeneralLp& problem, const std::vector<Rational>& farkas);
bool verify_optimal(const GeneralLp& problem, const std::vector<Rational>& objective,
                    const OptimalResult& res);

}  // namespace erelax
