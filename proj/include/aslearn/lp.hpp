#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

namespace aslearn {

// Scaled feasibility tolerance used across the repository.
inline constexpr double kFeasTol = 1e-6;
// Simplex pivot acceptance threshold.
inline constexpr double kPivotTol = 1e-9;
// Below this magnitude (after row scaling) a pivot signals ill-conditioning.
inline constexpr double kBreakdownTol = 1e-12;

enum class LpStatus { Optimal, Infeasible, Unbounded };

/**
 * @brief A dense linear program over free variables.
 *
 * minimize    cost . x
 * subject to  eq_matrix x  = eq_rhs
 *             ineq_matrix x <= ineq_rhs   (row j encodes g_j(x) = a_j.x - b_j <= 0)
 *
 * Variable bounds, when present, are folded into the inequality rows so that
 * active-set keys index inequalities uniformly.
 */
struct LpInstance {
    Eigen::VectorXd cost;
    Eigen::MatrixXd eq_matrix;
    Eigen::VectorXd eq_rhs;
    Eigen::MatrixXd ineq_matrix;
    Eigen::VectorXd ineq_rhs;

    int num_vars() const { return static_cast<int>(cost.size()); }
    int num_eq() const { return static_cast<int>(eq_rhs.size()); }
    int num_ineq() const { return static_cast<int>(ineq_rhs.size()); }

    /// Throws DimensionMismatch when shapes are inconsistent, n < 1, or an
    /// inequality row has no nonzero coefficient.
    void validate() const;
};

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    Eigen::VectorXd point;       // valid when Optimal
    double objective = 0.0;      // cost . point when Optimal
    Eigen::VectorXd ineq_slacks; // b - A x per inequality row, when Optimal
    int iterations = 0;
};

struct FeasibilityReport {
    bool feasible = false;
    double worst_violation = 0.0;
    // Inequality rows are indexed 0..m-1, equality rows m..m+p-1.
    std::vector<int> violating_indices;
};

/**
 * @brief Deterministic two-phase primal simplex on the slack-augmented form.
 *
 * Bland's anti-cycling rule drives both phases, so identical inputs always
 * produce the identical optimal point bit-for-bit. When the feasible set is
 * pointed the returned point is a vertex (a basic feasible solution): after
 * phase 2 any structural variable still nonbasic is pushed into the basis
 * along the optimal face.
 *
 * Throws NumericalBreakdown when candidate pivots fall below 1e-12 after row
 * scaling, DimensionMismatch on malformed instances.
 */
LpSolution solve_lp(const LpInstance& instance);

/**
 * @brief Brute-force enumeration of all basic feasible solutions.
 *
 * Test oracle: every subset of n tight rows (all independent equality rows
 * plus n - rank(E) inequality rows) is solved and feasibility-checked.
 * Returns vertices deduplicated at tolerance 1e-9, sorted by objective then
 * lexicographically by point. Guard: n <= 12 and m + p <= 24, else TooLarge.
 */
std::vector<std::pair<Eigen::VectorXd, double>> enumerate_vertices(const LpInstance& instance);

/**
 * @brief Row-scaled feasibility check of a candidate point.
 *
 * Violations are scaled by max(1, |rhs|) per row. Equality rows violate on
 * either sign. feasible iff worst_violation <= tol.
 */
FeasibilityReport check_feasibility(const LpInstance& instance, const Eigen::VectorXd& point,
                                    double tol);

}  // namespace aslearn
