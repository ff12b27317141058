#include "postdom/simplex.hpp"

#include <cstddef>
#include <vector>

#include "postdom/errors.hpp"

namespace postdom {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// Standard form: minimize cost . z subject to rows . z = rhs, z >= 0.
class Tableau {
public:
    Tableau(std::vector<RationalVector> rows, RationalVector rhs) : rows_(std::move(rows)), rhs_(std::move(rhs)) {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (rhs_[i].is_negative()) {
                for (auto& v : rows_[i]) {
                    v = -v;
                }
                rhs_[i] = -rhs_[i];
            }
        }
    }

    // Returns the solution z, or nullopt if infeasible. Unboundedness throws:
    // every caller's region is bounded.
    std::optional<RationalVector> minimize(const RationalVector& cost) {
        const std::size_t n = cost.size();
        const std::size_t m = rows_.size();

        // Phase I: one artificial per row, starting basis = artificials.
        for (std::size_t i = 0; i < m; ++i) {
            rows_[i].resize(n + m);
            rows_[i][n + i] = Rational(1);
        }
        basis_.resize(m);
        for (std::size_t i = 0; i < m; ++i) {
            basis_[i] = n + i;
        }
        RationalVector phase1(n + m);
        for (std::size_t i = 0; i < m; ++i) {
            phase1[n + i] = Rational(1);
        }
        run(phase1, n + m);
        if (objective(phase1).is_positive()) {
            return std::nullopt;
        }
        drive_out_artificials(n);

        RationalVector phase2(n + m);
        std::copy(cost.begin(), cost.end(), phase2.begin());
        run(phase2, n);

        RationalVector z(n);
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            if (basis_[i] < n) {
                z[basis_[i]] = rhs_[i];
            }
        }
        return z;
    }

private:
    Rational objective(const RationalVector& cost) const {
        Rational total;
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            total += cost[basis_[i]] * rhs_[i];
        }
        return total;
    }

    // Bland's rule: lowest-index entering column with negative reduced cost,
    // lowest-index basic variable among ratio-test ties.
    void run(const RationalVector& cost, std::size_t usable_columns) {
        for (;;) {
            std::size_t entering = kNone;
            for (std::size_t j = 0; j < usable_columns && entering == kNone; ++j) {
                Rational reduced = cost[j];
                for (std::size_t i = 0; i < basis_.size(); ++i) {
                    if (!rows_[i][j].is_zero()) {
                        reduced -= cost[basis_[i]] * rows_[i][j];
                    }
                }
                if (reduced.is_negative()) {
                    entering = j;
                }
            }
            if (entering == kNone) {
                return;
            }
            std::size_t leaving = kNone;
            Rational best;
            for (std::size_t i = 0; i < basis_.size(); ++i) {
                if (!rows_[i][entering].is_positive()) {
                    continue;
                }
                Rational ratio = rhs_[i] / rows_[i][entering];
                if (leaving == kNone || ratio < best || (ratio == best && basis_[i] < basis_[leaving])) {
                    leaving = i;
                    best = std::move(ratio);
                }
            }
            if (leaving == kNone) {
                throw Error("simplex: unbounded objective on a bounded formulation");
            }
            pivot(leaving, entering);
        }
    }

    void pivot(std::size_t r, std::size_t c) {
        const Rational inv = rows_[r][c].reciprocal();
        for (auto& v : rows_[r]) {
            v *= inv;
        }
        rhs_[r] *= inv;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i == r || rows_[i][c].is_zero()) {
                continue;
            }
            const Rational factor = rows_[i][c];
            for (std::size_t j = 0; j < rows_[i].size(); ++j) {
                if (!rows_[r][j].is_zero()) {
                    rows_[i][j] -= factor * rows_[r][j];
                }
            }
            rhs_[i] -= factor * rhs_[r];
        }
        basis_[r] = c;
    }

    // After phase I every artificial sits at zero; pivot them out, dropping
    // rows that turn out to be redundant.
    void drive_out_artificials(std::size_t n) {
        for (std::size_t i = 0; i < basis_.size();) {
            if (basis_[i] < n) {
                ++i;
                continue;
            }
            std::size_t col = kNone;
            for (std::size_t j = 0; j < n && col == kNone; ++j) {
                if (!rows_[i][j].is_zero()) {
                    col = j;
                }
            }
            if (col == kNone) {
                rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
                rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
                continue;
            }
            pivot(i, col);
            ++i;
        }
    }

    std::vector<RationalVector> rows_;
    RationalVector rhs_;
    std::vector<std::size_t> basis_;
};

}  // namespace

std::optional<SlackSolution> maximize_slack(std::span<const LinearEquality> equalities,
                                            std::span<const RationalVector> strict_positives, const Rational& box) {
    if (!box.is_positive()) {
        throw PreconditionError("feasibility box must be positive");
    }
    std::size_t dim = kNone;
    auto check_dim = [&](std::size_t d) {
        if (dim == kNone) {
            dim = d;
        } else if (dim != d) {
            throw PreconditionError("feasibility system rows have inconsistent dimensions");
        }
    };
    for (const auto& e : equalities) {
        check_dim(e.coeffs.size());
    }
    for (const auto& c : strict_positives) {
        check_dim(c.size());
    }
    if (dim == kNone || dim == 0) {
        throw PreconditionError("feasibility system has no variables");
    }

    // Columns: u (dim, x = u - box), t, r (one per strict row), w (dim box slacks).
    const std::size_t k = strict_positives.size();
    const bool has_t = k > 0;
    const std::size_t col_t = dim;
    const std::size_t col_r = dim + (has_t ? 1 : 0);
    const std::size_t col_w = col_r + k;
    const std::size_t ncols = col_w + dim;

    std::vector<RationalVector> rows;
    RationalVector rhs;
    for (const auto& e : equalities) {
        RationalVector row(ncols);
        std::copy(e.coeffs.begin(), e.coeffs.end(), row.begin());
        rows.push_back(std::move(row));
        rhs.push_back(e.rhs + box * sum(e.coeffs));
    }
    for (std::size_t i = 0; i < k; ++i) {
        RationalVector row(ncols);
        std::copy(strict_positives[i].begin(), strict_positives[i].end(), row.begin());
        row[col_t] = Rational(-1);
        row[col_r + i] = Rational(-1);
        rows.push_back(std::move(row));
        rhs.push_back(box * sum(strict_positives[i]));
    }
    for (std::size_t j = 0; j < dim; ++j) {
        RationalVector row(ncols);
        row[j] = Rational(1);
        row[col_w + j] = Rational(1);
        rows.push_back(std::move(row));
        rhs.push_back(box + box);
    }

    RationalVector cost(ncols);
    if (has_t) {
        cost[col_t] = Rational(-1);
    }
    Tableau tableau(std::move(rows), std::move(rhs));
    auto z = tableau.minimize(cost);
    if (!z) {
        return std::nullopt;
    }
    SlackSolution out;
    out.x.reserve(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        out.x.push_back((*z)[j] - box);
    }
    if (has_t) {
        out.slack = (*z)[col_t];
    }
    return out;
}

std::optional<RationalVector> feasibility_solve(std::span<const LinearEquality> equalities,
                                                std::span<const RationalVector> strict_positives,
                                                const Rational& box) {
    auto solution = maximize_slack(equalities, strict_positives, box);
    if (!solution) {
        return std::nullopt;
    }
    if (!strict_positives.empty() && !solution->slack.is_positive()) {
        return std::nullopt;
    }
    return std::move(solution->x);
}

}  // namespace postdom
