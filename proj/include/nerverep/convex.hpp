#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "linear_program.hpp"
#include "rational.hpp"

namespace nerverep {

class GeometryError : public std::runtime_error
{
public:
    explicit GeometryError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a straight-line crossing test hits a non-generic configuration.
class GenericityError : public std::runtime_error
{
public:
    explicit GenericityError(const std::string& what) : std::runtime_error(what) {}
};

/// The convex set {x : A x <= b} in R^m.
class HPolytope
{
public:
    HPolytope() = default;

    HPolytope(std::size_t ambient, std::vector<std::vector<Rational>> a, std::vector<Rational> b)
        : ambient_(ambient), a_(std::move(a)), b_(std::move(b))
    {
        if (a_.size() != b_.size())
            throw DimensionError("HPolytope: " + std::to_string(a_.size()) + " rows but " +
                                 std::to_string(b_.size()) + " right-hand sides");
        for (const auto& row : a_)
            if (row.size() != ambient_)
                throw DimensionError("HPolytope: row length differs from ambient dimension");
    }

    /// Axis-parallel box lo <= x <= hi.
    static HPolytope box(const Point& lo, const Point& hi)
    {
        if (lo.size() != hi.size())
            throw DimensionError("box: corner dimensions differ");
        const std::size_t m = lo.size();
        std::vector<std::vector<Rational>> a;
        std::vector<Rational> b;
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<Rational> up(m, 0), down(m, 0);
            up[i] = 1;
            down[i] = -1;
            a.push_back(std::move(up));
            b.push_back(hi[i]);
            a.push_back(std::move(down));
            b.push_back(-lo[i]);
        }
        return HPolytope(m, std::move(a), std::move(b));
    }

    std::size_t ambient() const { return ambient_; }
    std::size_t num_rows() const { return a_.size(); }
    const std::vector<std::vector<Rational>>& a() const { return a_; }
    const std::vector<Rational>& b() const { return b_; }

    void add_row(std::vector<Rational> row, Rational rhs)
    {
        if (row.size() != ambient_)
            throw DimensionError("HPolytope::add_row: wrong row length");
        a_.push_back(std::move(row));
        b_.push_back(std::move(rhs));
    }

    /// Index of the first row with a_i x > b_i, if any.
    std::optional<std::size_t> first_violated_row(const Point& x) const
    {
        if (x.size() != ambient_)
            throw DimensionError("point dimension differs from polytope ambient dimension");
        for (std::size_t i = 0; i < a_.size(); ++i)
            if (dot(a_[i], x) > b_[i])
                return i;
        return std::nullopt;
    }

    bool contains(const Point& x) const { return !first_violated_row(x).has_value(); }

    /// Stacked constraint system of both polytopes.
    HPolytope intersect(const HPolytope& other) const
    {
        if (other.ambient_ != ambient_)
            throw DimensionError("intersect: ambient dimensions differ");
        HPolytope out = *this;
        out.a_.insert(out.a_.end(), other.a_.begin(), other.a_.end());
        out.b_.insert(out.b_.end(), other.b_.begin(), other.b_.end());
        return out;
    }

    friend bool operator==(const HPolytope&, const HPolytope&) = default;

private:
    std::size_t ambient_ = 0;
    std::vector<std::vector<Rational>> a_;
    std::vector<Rational> b_;
};

inline bool polytope_is_empty(const HPolytope& p)
{
    LinearProgram lp(p.ambient());
    for (std::size_t i = 0; i < p.num_rows(); ++i)
        lp.add_constraint(p.a()[i], Relation::less_equal, p.b()[i]);
    return !lp.is_feasible();
}

struct CanonicalPoint
{
    Point point;
    Rational radius;  ///< radius of the largest inscribed L-infinity ball
};

/**
 * Deterministic point of a nonempty bounded polytope.
 *
 * First the radius r of the largest inscribed L-infinity ball is maximized
 * (A x + r |a_i|_1 <= b); then, among all centres achieving r, the
 * lexicographically smallest one is selected by minimizing one coordinate at
 * a time with the earlier coordinates fixed.
 */
inline CanonicalPoint canonical_point_with_radius(const HPolytope& p)
{
    const std::size_t m = p.ambient();
    std::vector<Rational> l1(p.num_rows(), 0);
    for (std::size_t i = 0; i < p.num_rows(); ++i)
        for (const auto& v : p.a()[i])
            l1[i] += abs(v);

    LinearProgram stage1(m + 1);
    for (std::size_t i = 0; i < p.num_rows(); ++i) {
        std::vector<Rational> row = p.a()[i];
        row.push_back(l1[i]);
        stage1.add_constraint(std::move(row), Relation::less_equal, p.b()[i]);
    }
    std::vector<Rational> obj(m + 1, 0);
    obj[m] = 1;
    stage1.set_objective(obj);
    const LpSolution s1 = stage1.maximize();
    if (s1.status == LpStatus::infeasible)
        throw GeometryError("canonical_point: polytope is empty");
    if (s1.status == LpStatus::unbounded)
        throw GeometryError("canonical_point: inscribed radius is unbounded");
    const Rational radius = s1.objective;

    Point x;
    for (std::size_t j = 0; j < m; ++j) {
        LinearProgram stage2(m);
        for (std::size_t i = 0; i < p.num_rows(); ++i)
            stage2.add_constraint(p.a()[i], Relation::less_equal, p.b()[i] - radius * l1[i]);
        for (std::size_t k = 0; k < j; ++k) {
            std::vector<Rational> e(m, 0);
            e[k] = 1;
            stage2.add_constraint(std::move(e), Relation::equal, x[k]);
        }
        std::vector<Rational> c(m, 0);
        c[j] = 1;
        stage2.set_objective(std::move(c));
        const LpSolution s2 = stage2.minimize();
        if (s2.status != LpStatus::optimal)
            throw GeometryError("canonical_point: polytope is unbounded");
        x.push_back(s2.x[j]);
    }
    if (!p.contains(x))
        throw GeometryError("canonical_point: internal error, result outside polytope");
    return {std::move(x), radius};
}

inline Point canonical_point(const HPolytope& p)
{
    return canonical_point_with_radius(p).point;
}

/// A common point of two hulls with its convex coefficients on each side.
struct HullIntersection
{
    std::vector<Rational> lambda;
    std::vector<Rational> mu;
    Point point;
};

namespace detail {

inline std::size_t common_dimension(const std::vector<Point>& a, const std::vector<Point>& b)
{
    if (a.empty() || b.empty())
        throw DimensionError("hull test needs nonempty point lists");
    const std::size_t m = a.front().size();
    for (const auto& p : a)
        if (p.size() != m)
            throw DimensionError("hull test: inconsistent point dimensions");
    for (const auto& p : b)
        if (p.size() != m)
            throw DimensionError("hull test: inconsistent point dimensions");
    return m;
}

} // namespace detail

/// Solves sum λ_i a_i = sum μ_j b_j with λ, μ >= 0 and unit sums.
inline std::optional<HullIntersection> hull_intersection(const std::vector<Point>& a, const std::vector<Point>& b)
{
    const std::size_t m = detail::common_dimension(a, b);
    const std::size_t na = a.size();
    const std::size_t nb = b.size();
    LinearProgram lp(na + nb, true);
    for (std::size_t k = 0; k < m; ++k) {
        std::vector<Rational> row(na + nb, 0);
        for (std::size_t i = 0; i < na; ++i)
            row[i] = a[i][k];
        for (std::size_t j = 0; j < nb; ++j)
            row[na + j] = -b[j][k];
        lp.add_constraint(std::move(row), Relation::equal, 0);
    }
    std::vector<Rational> sum_a(na + nb, 0), sum_b(na + nb, 0);
    for (std::size_t i = 0; i < na; ++i)
        sum_a[i] = 1;
    for (std::size_t j = 0; j < nb; ++j)
        sum_b[na + j] = 1;
    lp.add_constraint(std::move(sum_a), Relation::equal, 1);
    lp.add_constraint(std::move(sum_b), Relation::equal, 1);
    auto x = lp.find_feasible_point();
    if (!x)
        return std::nullopt;
    HullIntersection hit;
    hit.lambda.assign(x->begin(), x->begin() + static_cast<std::ptrdiff_t>(na));
    hit.mu.assign(x->begin() + static_cast<std::ptrdiff_t>(na), x->end());
    hit.point.assign(m, 0);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t k = 0; k < m; ++k)
            hit.point[k] += hit.lambda[i] * a[i][k];
    return hit;
}

inline bool hulls_intersect(const std::vector<Point>& a, const std::vector<Point>& b)
{
    return hull_intersection(a, b).has_value();
}

enum class SquareSystem { unique, inconsistent, underdetermined };

/// Gauss-Jordan on an n x n system; `x` is filled only for a unique solution.
inline SquareSystem solve_square_system(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs,
                                        std::vector<Rational>& x)
{
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i)
        m[i].push_back(rhs[i]);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < n && rank < n; ++c) {
        std::size_t piv = rank;
        while (piv < n && m[piv][c].is_zero())
            ++piv;
        if (piv == n)
            continue;
        std::swap(m[piv], m[rank]);
        const Rational p = m[rank][c];
        for (auto& v : m[rank])
            v /= p;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == rank || m[i][c].is_zero())
                continue;
            const Rational f = m[i][c];
            for (std::size_t j = c; j <= n; ++j)
                m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    if (rank == n) {
        x.assign(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            x[i] = m[i][n];
        return SquareSystem::unique;
    }
    for (std::size_t i = rank; i < n; ++i)
        if (!m[i][n].is_zero())
            return SquareSystem::inconsistent;
    return SquareSystem::underdetermined;
}

/// Unique solution of the crossing system for two d-simplices in R^{2d}.
struct CrossingSolution
{
    bool crosses = false;  ///< every coefficient strictly positive
    bool flats_meet = false;
    std::vector<Rational> lambda;
    std::vector<Rational> mu;
    Point point;  ///< common point of the two affine hulls, when they meet
};

/**
 * Solves sum λ_i u_i = sum μ_j w_j, sum λ = sum μ = 1 for d+1 points u and
 * d+1 points w in R^{2d}. Disjoint affine hulls give no crossing; an
 * underdetermined system or a zero coefficient is a genericity failure.
 */
inline CrossingSolution crossing_solution(const std::vector<Point>& u, const std::vector<Point>& w)
{
    const std::size_t m = detail::common_dimension(u, w);
    if (u.size() != w.size() || m != 2 * (u.size() - 1) || m == 0)
        throw DimensionError("crossing test needs d+1 and d+1 points in R^{2d}, d >= 1");
    const std::size_t k = u.size();
    const std::size_t n = 2 * k;
    std::vector<std::vector<Rational>> sys(n, std::vector<Rational>(n, 0));
    std::vector<Rational> rhs(n, 0);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t i = 0; i < k; ++i) {
            sys[r][i] = u[i][r];
            sys[r][k + i] = -w[i][r];
        }
    }
    for (std::size_t i = 0; i < k; ++i) {
        sys[m][i] = 1;
        sys[m + 1][k + i] = 1;
    }
    rhs[m] = 1;
    rhs[m + 1] = 1;

    CrossingSolution out;
    std::vector<Rational> x;
    switch (solve_square_system(sys, rhs, x)) {
    case SquareSystem::inconsistent:
        return out;
    case SquareSystem::underdetermined:
        throw GenericityError("affine hulls meet in more than one point");
    case SquareSystem::unique:
        break;
    }
    out.flats_meet = true;
    out.lambda.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(k));
    out.mu.assign(x.begin() + static_cast<std::ptrdiff_t>(k), x.end());
    bool all_positive = true;
    for (const auto& v : x) {
        if (v.is_zero())
            throw GenericityError("intersection lies on a proper face (zero barycentric coordinate)");
        if (v.sign() < 0)
            all_positive = false;
    }
    out.crosses = all_positive;
    out.point.assign(m, 0);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t r = 0; r < m; ++r)
            out.point[r] += out.lambda[i] * u[i][r];
    return out;
}

inline int generic_crossing_parity(const std::vector<Point>& sigma, const std::vector<Point>& tau)
{
    return crossing_solution(sigma, tau).crosses ? 1 : 0;
}

} // namespace nerverep
