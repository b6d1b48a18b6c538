#include "aslearn/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "aslearn/errors.hpp"

namespace aslearn {

void LpInstance::validate() const {
    const int n = num_vars();
    if (n < 1) throw DimensionMismatch("LpInstance: need at least one variable");
    if (eq_matrix.rows() != eq_rhs.size())
        throw DimensionMismatch("LpInstance: equality row count mismatch");
    if (eq_matrix.rows() > 0 && eq_matrix.cols() != n)
        throw DimensionMismatch("LpInstance: equality column count mismatch");
    if (ineq_matrix.rows() != ineq_rhs.size())
        throw DimensionMismatch("LpInstance: inequality row count mismatch");
    if (ineq_matrix.rows() > 0 && ineq_matrix.cols() != n)
        throw DimensionMismatch("LpInstance: inequality column count mismatch");
    for (int j = 0; j < num_ineq(); ++j) {
        if (ineq_matrix.row(j).cwiseAbs().maxCoeff() <= 0.0)
            throw DimensionMismatch("LpInstance: inequality row " + std::to_string(j) +
                                    " has no nonzero coefficient");
    }
}

namespace {

// Column kinds in the simplex tableau.
enum ColKind : std::uint8_t { kFree = 0, kNonNeg = 1, kArtificial = 2 };

class SimplexSolver {
  public:
    explicit SimplexSolver(const LpInstance& inst)
        : inst_(inst),
          n_(inst.num_vars()),
          m_(inst.num_ineq()),
          p_(inst.num_eq()),
          rows_(p_ + m_),
          cols_(n_ + m_ + rows_),  // structural, slacks, room for one artificial per row
          rhs_(cols_),
          tab_(static_cast<std::size_t>(rows_) * (cols_ + 1), 0.0),
          obj_(static_cast<std::size_t>(cols_) + 1, 0.0),
          basis_(rows_, -1),
          in_basis_(cols_, false),
          kind_(cols_, kNonNeg),
          excluded_(cols_, false),
          row_active_(rows_, true) {}

    LpSolution run() {
        build();
        if (num_artificials_ > 0) {
            if (!phase1()) {
                LpSolution sol;
                sol.status = LpStatus::Infeasible;
                sol.iterations = iterations_;
                return sol;
            }
        }
        return phase2();
    }

  private:
    double& at(int r, int c) { return tab_[static_cast<std::size_t>(r) * (cols_ + 1) + c]; }

    void build() {
        for (int j = 0; j < n_; ++j) kind_[j] = kFree;
        for (int j = n_; j < n_ + m_; ++j) kind_[j] = kNonNeg;

        // Equality rows first, then inequality rows with unit slacks.
        for (int i = 0; i < p_; ++i) {
            double scale = std::max(inst_.eq_matrix.row(i).cwiseAbs().maxCoeff(),
                                    std::abs(inst_.eq_rhs[i]));
            if (scale < 1e-30) scale = 1.0;
            double sign = inst_.eq_rhs[i] < 0.0 ? -1.0 : 1.0;
            for (int j = 0; j < n_; ++j) at(i, j) = sign * inst_.eq_matrix(i, j) / scale;
            at(i, rhs_) = sign * inst_.eq_rhs[i] / scale;
            addArtificial(i);
        }
        for (int k = 0; k < m_; ++k) {
            const int r = p_ + k;
            double scale = std::max(inst_.ineq_matrix.row(k).cwiseAbs().maxCoeff(),
                                    std::abs(inst_.ineq_rhs[k]));
            double sign = inst_.ineq_rhs[k] < 0.0 ? -1.0 : 1.0;
            for (int j = 0; j < n_; ++j) at(r, j) = sign * inst_.ineq_matrix(k, j) / scale;
            at(r, n_ + k) = sign;  // slack coefficient
            at(r, rhs_) = sign * inst_.ineq_rhs[k] / scale;
            if (sign > 0.0) {
                basis_[r] = n_ + k;
                in_basis_[n_ + k] = true;
            } else {
                addArtificial(r);
            }
        }
    }

    void addArtificial(int row) {
        const int col = n_ + m_ + row;
        kind_[col] = kArtificial;
        at(row, col) = 1.0;
        basis_[row] = col;
        in_basis_[col] = true;
        ++num_artificials_;
    }

    // Returns false when the LP is infeasible.
    bool phase1() {
        std::fill(obj_.begin(), obj_.end(), 0.0);
        for (int j = 0; j < cols_; ++j)
            if (kind_[j] == kArtificial) obj_[j] = 1.0;
        for (int r = 0; r < rows_; ++r) {
            if (kind_[basis_[r]] == kArtificial)
                for (int c = 0; c <= cols_; ++c) obj_[c] -= at(r, c);
        }
        const Phase outcome = iterate();
        if (outcome != Phase::Optimal)
            throw NumericalBreakdown("phase-1 simplex did not reach an optimum");
        const double aux = -obj_[rhs_];
        if (aux > 1e-8 * (1.0 + static_cast<double>(rows_))) return false;
        removeArtificialsFromBasis();
        for (int j = 0; j < cols_; ++j)
            if (kind_[j] == kArtificial) excluded_[j] = true;
        return true;
    }

    void removeArtificialsFromBasis() {
        for (int r = 0; r < rows_; ++r) {
            if (!row_active_[r] || kind_[basis_[r]] != kArtificial) continue;
            at(r, rhs_) = 0.0;  // aux optimum ~ 0, snap the degenerate value
            int pivot_col = -1;
            for (int j = 0; j < n_ + m_; ++j) {
                if (in_basis_[j]) continue;
                if (std::abs(at(r, j)) > kPivotTol) {
                    pivot_col = j;
                    break;
                }
            }
            if (pivot_col >= 0) {
                pivot(r, pivot_col);
            } else {
                // Redundant constraint row (dependent equalities); retire it.
                in_basis_[basis_[r]] = false;
                basis_[r] = -1;
                row_active_[r] = false;
            }
        }
    }

    LpSolution phase2() {
        std::fill(obj_.begin(), obj_.end(), 0.0);
        for (int j = 0; j < n_; ++j) obj_[j] = inst_.cost[j];
        for (int r = 0; r < rows_; ++r) {
            if (!row_active_[r]) continue;
            const double cb = obj_[basis_[r]];
            if (cb != 0.0)
                for (int c = 0; c <= cols_; ++c) obj_[c] -= cb * at(r, c);
        }
        const Phase outcome = iterate();
        LpSolution sol;
        sol.iterations = iterations_;
        if (outcome == Phase::Unbounded) {
            sol.status = LpStatus::Unbounded;
            return sol;
        }
        pushToVertex();
        sol.status = LpStatus::Optimal;
        sol.point = Eigen::VectorXd::Zero(n_);
        for (int r = 0; r < rows_; ++r) {
            if (row_active_[r] && basis_[r] < n_) sol.point[basis_[r]] = at(r, rhs_);
        }
        sol.objective = inst_.cost.dot(sol.point);
        sol.ineq_slacks = inst_.ineq_rhs - inst_.ineq_matrix * sol.point;
        sol.iterations = iterations_;
        return sol;
    }

    enum class Phase { Optimal, Unbounded };

    Phase iterate() {
        const int cap = 10000 + 200 * (rows_ + cols_);
        while (true) {
            if (++iterations_ > cap)
                throw NumericalBreakdown("simplex iteration limit exceeded");
            int enter = -1;
            double dir = 1.0;
            for (int j = 0; j < cols_; ++j) {
                if (in_basis_[j] || excluded_[j]) continue;
                const double rc = obj_[j];
                if (kind_[j] == kFree) {
                    if (std::abs(rc) > kPivotTol) {
                        enter = j;
                        dir = rc > 0.0 ? -1.0 : 1.0;
                        break;
                    }
                } else if (rc < -kPivotTol) {
                    enter = j;
                    dir = 1.0;
                    break;
                }
            }
            if (enter < 0) return Phase::Optimal;
            const auto [leave, grey] = ratioTest(enter, dir);
            if (leave < 0) {
                if (grey)
                    throw NumericalBreakdown("candidate pivots below breakdown threshold");
                return Phase::Unbounded;
            }
            pivot(leave, enter);
        }
    }

    // Least-ratio row for x[enter] moving in direction dir; Bland tie-break on
    // the least basic-variable index. Free basic variables never block.
    std::pair<int, bool> ratioTest(int enter, double dir) {
        double best_t = std::numeric_limits<double>::infinity();
        int leave = -1;
        bool grey = false;
        for (int r = 0; r < rows_; ++r) {
            if (!row_active_[r] || kind_[basis_[r]] == kFree) continue;
            const double coef = dir * at(r, enter);
            if (coef > kPivotTol) {
                const double t = std::max(0.0, at(r, rhs_)) / coef;
                if (t < best_t || (t == best_t && (leave < 0 || basis_[r] < basis_[leave]))) {
                    best_t = t;
                    leave = r;
                }
            } else if (coef > kBreakdownTol) {
                grey = true;
            }
        }
        return {leave, leave < 0 && grey};
    }

    void pivot(int lr, int ec) {
        const double piv = at(lr, ec);
        const double inv = 1.0 / piv;
        for (int c = 0; c <= cols_; ++c) at(lr, c) *= inv;
        at(lr, ec) = 1.0;
        for (int r = 0; r < rows_; ++r) {
            if (r == lr || !row_active_[r]) continue;
            const double f = at(r, ec);
            if (f != 0.0) {
                for (int c = 0; c <= cols_; ++c) at(r, c) -= f * at(lr, c);
                at(r, ec) = 0.0;
            }
        }
        const double fz = obj_[ec];
        if (fz != 0.0) {
            for (int c = 0; c <= cols_; ++c) obj_[c] -= fz * at(lr, c);
            obj_[ec] = 0.0;
        }
        in_basis_[basis_[lr]] = false;
        if (kind_[basis_[lr]] == kArtificial) excluded_[basis_[lr]] = true;
        basis_[lr] = ec;
        in_basis_[ec] = true;
    }

    // At a phase-2 optimum, enter any structural variable still nonbasic so the
    // reported point is a vertex whenever the feasible set is pointed. Reduced
    // costs of these columns are ~0, so the move stays on the optimal face.
    void pushToVertex() {
        for (int j = 0; j < n_; ++j) {
            if (in_basis_[j]) continue;
            auto [leave, grey] = ratioTest(j, 1.0);
            if (leave < 0) {
                auto [leave2, grey2] = ratioTest(j, -1.0);
                leave = leave2;
            }
            if (leave >= 0) pivot(leave, j);
            // Unblocked in both directions: the feasible set contains a line;
            // no vertex exists along this coordinate, leave the variable at 0.
        }
    }

    const LpInstance& inst_;
    int n_, m_, p_, rows_, cols_, rhs_;
    std::vector<double> tab_;
    std::vector<double> obj_;
    std::vector<int> basis_;
    std::vector<bool> in_basis_;
    std::vector<std::uint8_t> kind_;
    std::vector<bool> excluded_;
    std::vector<bool> row_active_;
    int num_artificials_ = 0;
    int iterations_ = 0;
};

}  // namespace

LpSolution solve_lp(const LpInstance& instance) {
    instance.validate();
    SimplexSolver solver(instance);
    return solver.run();
}

namespace {

// Row-echelon reduction of the equality block. Returns the selected
// independent row indices, or nullopt when the system is inconsistent.
struct EqReduction {
    bool consistent = true;
    std::vector<int> independent_rows;
};

EqReduction reduce_equalities(const Eigen::MatrixXd& eq, const Eigen::VectorXd& rhs) {
    EqReduction out;
    const int p = static_cast<int>(eq.rows());
    if (p == 0) return out;
    const int n = static_cast<int>(eq.cols());
    Eigen::MatrixXd work(p, n + 1);
    work.leftCols(n) = eq;
    work.col(n) = rhs;
    std::vector<int> row_of(p);
    for (int i = 0; i < p; ++i) row_of[i] = i;
    int lead = 0;
    for (int col = 0; col < n && lead < p; ++col) {
        int piv = -1;
        double best = 1e-9;
        for (int r = lead; r < p; ++r) {
            if (std::abs(work(r, col)) > best) {
                best = std::abs(work(r, col));
                piv = r;
            }
        }
        if (piv < 0) continue;
        work.row(piv).swap(work.row(lead));
        std::swap(row_of[piv], row_of[lead]);
        for (int r = 0; r < p; ++r) {
            if (r != lead && work(r, col) != 0.0)
                work.row(r) -= (work(r, col) / work(lead, col)) * work.row(lead);
        }
        out.independent_rows.push_back(row_of[lead]);
        ++lead;
    }
    for (int r = lead; r < p; ++r) {
        if (std::abs(work(r, n)) > 1e-8) {
            out.consistent = false;
            break;
        }
    }
    std::sort(out.independent_rows.begin(), out.independent_rows.end());
    return out;
}

}  // namespace

std::vector<std::pair<Eigen::VectorXd, double>> enumerate_vertices(const LpInstance& instance) {
    instance.validate();
    const int n = instance.num_vars();
    const int m = instance.num_ineq();
    const int p = instance.num_eq();
    if (n > 12 || m + p > 24)
        throw TooLarge("enumerate_vertices guard: need n <= 12 and m + p <= 24");

    const EqReduction eq = reduce_equalities(instance.eq_matrix, instance.eq_rhs);
    if (!eq.consistent) return {};
    const int r = static_cast<int>(eq.independent_rows.size());
    const int extra = n - r;
    if (extra < 0 || extra > m) return {};

    std::vector<std::pair<Eigen::VectorXd, double>> found;
    std::vector<int> combo(extra);
    for (int i = 0; i < extra; ++i) combo[i] = i;

    Eigen::MatrixXd tight(n, n);
    Eigen::VectorXd tight_rhs(n);
    const double accept_tol = 1e-9;

    auto try_combo = [&]() {
        for (int i = 0; i < r; ++i) {
            tight.row(i) = instance.eq_matrix.row(eq.independent_rows[i]);
            tight_rhs[i] = instance.eq_rhs[eq.independent_rows[i]];
        }
        for (int i = 0; i < extra; ++i) {
            tight.row(r + i) = instance.ineq_matrix.row(combo[i]);
            tight_rhs[r + i] = instance.ineq_rhs[combo[i]];
        }
        Eigen::FullPivLU<Eigen::MatrixXd> lu(tight);
        lu.setThreshold(1e-9);
        if (!lu.isInvertible()) return;
        const Eigen::VectorXd x = lu.solve(tight_rhs);
        for (int i = 0; i < p; ++i) {
            const double v = std::abs(instance.eq_matrix.row(i).dot(x) - instance.eq_rhs[i]);
            if (v > accept_tol * std::max(1.0, std::abs(instance.eq_rhs[i]))) return;
        }
        for (int j = 0; j < m; ++j) {
            const double v = instance.ineq_matrix.row(j).dot(x) - instance.ineq_rhs[j];
            if (v > accept_tol * std::max(1.0, std::abs(instance.ineq_rhs[j]))) return;
        }
        found.emplace_back(x, instance.cost.dot(x));
    };

    if (extra == 0) {
        try_combo();
    } else {
        while (true) {
            try_combo();
            int i = extra - 1;
            while (i >= 0 && combo[i] == m - extra + i) --i;
            if (i < 0) break;
            ++combo[i];
            for (int k = i + 1; k < extra; ++k) combo[k] = combo[k - 1] + 1;
        }
    }

    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        for (int i = 0; i < a.first.size(); ++i)
            if (a.first[i] != b.first[i]) return a.first[i] < b.first[i];
        return false;
    });
    std::vector<std::pair<Eigen::VectorXd, double>> unique;
    for (const auto& cand : found) {
        bool dup = false;
        for (auto it = unique.rbegin(); it != unique.rend(); ++it) {
            if (cand.second - it->second > 1e-7 * (1.0 + std::abs(cand.second))) break;
            if ((cand.first - it->first).cwiseAbs().maxCoeff() <= 1e-9) {
                dup = true;
                break;
            }
        }
        if (!dup) unique.push_back(cand);
    }
    return unique;
}

FeasibilityReport check_feasibility(const LpInstance& instance, const Eigen::VectorXd& point,
                                    double tol) {
    instance.validate();
    if (point.size() != instance.num_vars())
        throw DimensionMismatch("check_feasibility: point length mismatch");
    FeasibilityReport report;
    report.worst_violation = 0.0;
    const int m = instance.num_ineq();
    for (int j = 0; j < m; ++j) {
        const double raw = instance.ineq_matrix.row(j).dot(point) - instance.ineq_rhs[j];
        const double v = std::max(0.0, raw) / std::max(1.0, std::abs(instance.ineq_rhs[j]));
        report.worst_violation = std::max(report.worst_violation, v);
        if (v > tol) report.violating_indices.push_back(j);
    }
    for (int i = 0; i < instance.num_eq(); ++i) {
        const double v = std::abs(instance.eq_matrix.row(i).dot(point) - instance.eq_rhs[i]) /
                         std::max(1.0, std::abs(instance.eq_rhs[i]));
        report.worst_violation = std::max(report.worst_violation, v);
        if (v > tol) report.violating_indices.push_back(m + i);
    }
    report.feasible = report.worst_violation <= tol;
    return report;
}

}  // namespace aslearn
