#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace nerverep {

class DimensionError : public std::invalid_argument
{
public:
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

enum class Relation { less_equal, equal, greater_equal };

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution
{
    LpStatus status = LpStatus::infeasible;
    std::vector<Rational> x;  ///< values of the declared variables (optimal only)
    Rational objective = 0;   ///< value of the objective being minimized
};

/**
 * Exact linear program over the rationals.
 *
 * Solved with a dense two-phase tableau simplex using Bland's smallest-index
 * rule for both the entering and the leaving variable, which rules out
 * cycling. Free variables are split into a difference of two nonnegative
 * columns. There are no tolerances: every comparison is exact.
 */
class LinearProgram
{
public:
    explicit LinearProgram(std::size_t num_vars, bool all_nonnegative = false)
        : num_vars_(num_vars), nonnegative_(num_vars, all_nonnegative), cost_(num_vars, 0)
    {
    }

    std::size_t num_vars() const { return num_vars_; }

    void set_nonnegative(std::size_t j, bool value = true) { nonnegative_.at(j) = value; }

    void add_constraint(std::vector<Rational> coeffs, Relation rel, Rational rhs)
    {
        if (coeffs.size() != num_vars_)
            throw DimensionError("constraint has " + std::to_string(coeffs.size()) + " coefficients, expected " +
                                 std::to_string(num_vars_));
        rows_.push_back({std::move(coeffs), rel, std::move(rhs)});
    }

    /// The program minimizes cost · x.
    void set_objective(std::vector<Rational> cost)
    {
        if (cost.size() != num_vars_)
            throw DimensionError("objective length mismatch");
        cost_ = std::move(cost);
    }

    LpSolution minimize() const { return solve(true); }

    LpSolution maximize() const
    {
        LinearProgram neg = *this;
        for (auto& c : neg.cost_)
            c = -c;
        LpSolution s = neg.solve(true);
        s.objective = -s.objective;
        return s;
    }

    /// Phase I only.
    std::optional<std::vector<Rational>> find_feasible_point() const
    {
        LpSolution s = solve(false);
        if (s.status == LpStatus::infeasible)
            return std::nullopt;
        return std::move(s.x);
    }

    bool is_feasible() const { return find_feasible_point().has_value(); }

private:
    struct Row
    {
        std::vector<Rational> coeffs;
        Relation rel;
        Rational rhs;
    };

    class Tableau
    {
    public:
        std::vector<std::vector<Rational>> t;  // rows x (cols + 1); last column is the rhs
        std::vector<std::size_t> basis;
        std::vector<Rational> reduced;  // cols + 1; last entry is minus the objective
        std::size_t cols = 0;

        void pivot(std::size_t r, std::size_t c)
        {
            const Rational p = t[r][c];
            for (auto& v : t[r])
                if (!v.is_zero())
                    v /= p;
            for (std::size_t i = 0; i < t.size(); ++i) {
                if (i == r || t[i][c].is_zero())
                    continue;
                eliminate(t[i], c, r);
            }
            if (!reduced[c].is_zero())
                eliminate(reduced, c, r);
            basis[r] = c;
        }

        void eliminate(std::vector<Rational>& row, std::size_t c, std::size_t r)
        {
            const Rational f = row[c];
            const auto& src = t[r];
            for (std::size_t j = 0; j <= cols; ++j)
                if (!src[j].is_zero())
                    row[j] -= f * src[j];
        }

        void price(const std::vector<Rational>& cost)
        {
            reduced.assign(cols + 1, 0);
            for (std::size_t j = 0; j < cols; ++j)
                reduced[j] = cost[j];
            for (std::size_t i = 0; i < t.size(); ++i) {
                const Rational& cb = cost[basis[i]];
                if (cb.is_zero())
                    continue;
                for (std::size_t j = 0; j <= cols; ++j)
                    if (!t[i][j].is_zero())
                        reduced[j] -= cb * t[i][j];
            }
        }

        /// Returns false when the objective is unbounded below.
        bool run(std::size_t allowed_cols)
        {
            for (;;) {
                std::size_t enter = cols;
                for (std::size_t j = 0; j < allowed_cols; ++j)
                    if (reduced[j].sign() < 0) {
                        enter = j;
                        break;
                    }
                if (enter == cols)
                    return true;
                std::size_t leave = t.size();
                Rational best;
                for (std::size_t i = 0; i < t.size(); ++i) {
                    if (t[i][enter].sign() <= 0)
                        continue;
                    Rational ratio = t[i][cols] / t[i][enter];
                    if (leave == t.size() || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                        leave = i;
                        best = std::move(ratio);
                    }
                }
                if (leave == t.size())
                    return false;
                pivot(leave, enter);
            }
        }
    };

    LpSolution solve(bool optimize) const
    {
        // Column layout: structural columns, then slacks, then artificials.
        std::vector<std::size_t> plus_col(num_vars_), minus_col(num_vars_, SIZE_MAX);
        std::size_t cols = 0;
        for (std::size_t j = 0; j < num_vars_; ++j) {
            plus_col[j] = cols++;
            if (!nonnegative_[j])
                minus_col[j] = cols++;
        }
        const std::size_t structural = cols;
        std::vector<std::size_t> slack_col(rows_.size(), SIZE_MAX);
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (rows_[i].rel != Relation::equal)
                slack_col[i] = cols++;
        const std::size_t first_artificial = cols;

        std::vector<std::vector<Rational>> dense(rows_.size());
        std::vector<std::size_t> basis(rows_.size(), SIZE_MAX);
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Row& row = rows_[i];
            auto& d = dense[i];
            d.assign(first_artificial + 1, 0);
            for (std::size_t j = 0; j < num_vars_; ++j) {
                d[plus_col[j]] = row.coeffs[j];
                if (minus_col[j] != SIZE_MAX)
                    d[minus_col[j]] = -row.coeffs[j];
            }
            if (slack_col[i] != SIZE_MAX)
                d[slack_col[i]] = row.rel == Relation::less_equal ? 1 : -1;
            d[first_artificial] = row.rhs;
            if (row.rhs.sign() < 0)
                for (auto& v : d)
                    v = -v;
            if (slack_col[i] != SIZE_MAX && d[slack_col[i]] == 1)
                basis[i] = slack_col[i];
        }
        std::size_t total = first_artificial;
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (basis[i] == SIZE_MAX)
                basis[i] = total++;

        Tableau tab;
        tab.cols = total;
        tab.basis = basis;
        tab.t.resize(rows_.size());
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            auto& r = tab.t[i];
            r.assign(total + 1, 0);
            for (std::size_t j = 0; j < first_artificial; ++j)
                r[j] = dense[i][j];
            r[total] = dense[i][first_artificial];
            if (basis[i] >= first_artificial)
                r[basis[i]] = 1;
        }

        // Phase I: minimize the sum of artificials.
        std::vector<Rational> phase1(total, 0);
        for (std::size_t j = first_artificial; j < total; ++j)
            phase1[j] = 1;
        tab.price(phase1);
        tab.run(total);
        if (tab.reduced[total].sign() != 0)
            return {LpStatus::infeasible, {}, 0};

        // Drive remaining artificials out of the basis; drop redundant rows.
        for (std::size_t i = 0; i < tab.t.size();) {
            if (tab.basis[i] < first_artificial) {
                ++i;
                continue;
            }
            std::size_t c = first_artificial;
            for (std::size_t j = 0; j < first_artificial; ++j)
                if (!tab.t[i][j].is_zero()) {
                    c = j;
                    break;
                }
            if (c == first_artificial) {
                tab.t.erase(tab.t.begin() + static_cast<std::ptrdiff_t>(i));
                tab.basis.erase(tab.basis.begin() + static_cast<std::ptrdiff_t>(i));
                continue;
            }
            tab.pivot(i, c);
            ++i;
        }

        LpSolution sol;
        sol.status = LpStatus::optimal;
        if (optimize) {
            std::vector<Rational> phase2(total, 0);
            for (std::size_t j = 0; j < num_vars_; ++j) {
                phase2[plus_col[j]] = cost_[j];
                if (minus_col[j] != SIZE_MAX)
                    phase2[minus_col[j]] = -cost_[j];
            }
            tab.price(phase2);
            if (!tab.run(first_artificial))
                return {LpStatus::unbounded, {}, 0};
            sol.objective = -tab.reduced[total];
        }

        std::vector<Rational> value(structural, 0);
        for (std::size_t i = 0; i < tab.t.size(); ++i)
            if (tab.basis[i] < structural)
                value[tab.basis[i]] = tab.t[i][total];
        sol.x.resize(num_vars_);
        for (std::size_t j = 0; j < num_vars_; ++j) {
            sol.x[j] = value[plus_col[j]];
            if (minus_col[j] != SIZE_MAX)
                sol.x[j] -= value[minus_col[j]];
        }
        if (!optimize)
            sol.objective = dot(cost_, sol.x);
        return sol;
    }

    std::size_t num_vars_;
    std::vector<bool> nonnegative_;
    std::vector<Rational> cost_;
    std::vector<Row> rows_;
};

} // namespace nerverep
