#include "trackcut/lp.hpp"

#include "trackcut/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>

namespace trackcut {

Rational VertexValues::at(int v) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it == vertices.end() || *it != v) {
        return Rational(0);
    }
    return values[static_cast<std::size_t>(it - vertices.begin())];
}

Rational VertexValues::sum_over(std::span<const int> vs) const {
    Rational sum = 0;
    for (int v : vs) {
        sum += at(v);
    }
    return sum;
}

std::vector<Rational> VertexValues::dense(int n) const {
    std::vector<Rational> out(static_cast<std::size_t>(n), Rational(0));
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        out.at(vertices[i]) = values[i];
    }
    return out;
}

CoveringLP::CoveringLP(std::vector<int> variables, std::vector<Rational> objective) {
    if (variables.size() != objective.size()) {
        throw std::invalid_argument("objective length does not match variable count");
    }
    std::vector<std::size_t> order(variables.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return variables[a] < variables[b]; });
    for (std::size_t i : order) {
        if (!variables_.empty() && variables_.back() == variables[i]) {
            throw std::invalid_argument("duplicate LP variable " + std::to_string(variables[i]));
        }
        if (objective[i] < 0) {
            throw std::invalid_argument("negative objective coefficient");
        }
        variables_.push_back(variables[i]);
        objective_.push_back(objective[i]);
    }
}

CoveringLP CoveringLP::over(const WeightedGraph& g, std::vector<int> variables) {
    std::vector<Rational> costs;
    costs.reserve(variables.size());
    for (int v : variables) {
        costs.emplace_back(g.weight(v));
    }
    return CoveringLP(std::move(variables), std::move(costs));
}

std::optional<std::size_t> CoveringLP::index_of(int vertex) const {
    auto it = std::lower_bound(variables_.begin(), variables_.end(), vertex);
    if (it == variables_.end() || *it != vertex) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - variables_.begin());
}

void CoveringLP::add_constraint(std::vector<int> vertices) {
    if (vertices.empty()) {
        throw std::invalid_argument("empty covering constraint makes the LP infeasible");
    }
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    for (int v : vertices) {
        if (!index_of(v)) {
            throw std::invalid_argument("constraint member " + std::to_string(v) +
                                        " is not an LP variable");
        }
    }
    constraints_.push_back(std::move(vertices));
}

bool FractionalSolution::is_integral() const {
    return std::all_of(x.values.begin(), x.values.end(),
                       [](const Rational& v) { return trackcut::is_integral(v); });
}

bool is_feasible(const CoveringLP& lp, const VertexValues& x) {
    for (int v : lp.variables()) {
        const Rational value = x.at(v);
        if (value < 0 || value > 1) {
            return false;
        }
    }
    for (const auto& c : lp.constraints()) {
        if (x.sum_over(c) < 1) {
            return false;
        }
    }
    return true;
}

Rational objective_of(const CoveringLP& lp, const VertexValues& x) {
    Rational sum = 0;
    for (std::size_t i = 0; i < lp.variables().size(); ++i) {
        sum += lp.objective()[i] * x.at(lp.variables()[i]);
    }
    return sum;
}

namespace {

using Bits = std::vector<std::uint64_t>;

// Drops duplicate constraints and supersets of other constraints; neither
// changes the feasible region.
std::vector<std::vector<std::size_t>> essential_constraints(const CoveringLP& lp) {
    const std::size_t words = (lp.variables().size() + 63) / 64;
    std::vector<std::pair<std::vector<std::size_t>, Bits>> rows;
    std::set<std::vector<std::size_t>> seen;
    for (const auto& c : lp.constraints()) {
        std::vector<std::size_t> idx;
        idx.reserve(c.size());
        for (int v : c) idx.push_back(*lp.index_of(v));
        if (!seen.insert(idx).second) continue;
        Bits bits(words, 0);
        for (auto i : idx) bits[i / 64] |= std::uint64_t{1} << (i % 64);
        rows.emplace_back(std::move(idx), std::move(bits));
    }
    std::stable_sort(rows.begin(), rows.end(),
                     [](const auto& a, const auto& b) { return a.first.size() < b.first.size(); });
    std::vector<std::vector<std::size_t>> kept;
    std::vector<const Bits*> kept_bits;
    for (const auto& [idx, bits] : rows) {
        bool dominated = false;
        for (const Bits* other : kept_bits) {
            bool subset = true;
            for (std::size_t w = 0; w < words && subset; ++w) {
                subset = ((*other)[w] & ~bits[w]) == 0;
            }
            if (subset) {
                dominated = true;
                break;
            }
        }
        if (!dominated) {
            kept.push_back(idx);
            kept_bits.push_back(&bits);
        }
    }
    return kept;
}

}  // namespace

FractionalSolution solve(const CoveringLP& lp) {
    const std::size_t n = lp.variables().size();
    FractionalSolution result;
    result.x.vertices = lp.variables();
    result.x.values.assign(n, Rational(0));
    result.objective_value = 0;
    const auto rows_of_dual = essential_constraints(lp);
    if (rows_of_dual.empty()) {
        return result;
    }

    // Dual: maximize sum y_i - sum z_j
    //       s.t. sum_{i : j in C_i} y_i - z_j + s_j = c_j   (one row per primal variable j)
    // Columns: y (m) | z (n) | s (n).
    const std::size_t m = rows_of_dual.size();
    const std::size_t cols = m + 2 * n;
    std::vector<std::vector<Rational>> tableau(n, std::vector<Rational>(cols, Rational(0)));
    std::vector<Rational> rhs(lp.objective());
    std::vector<Rational> reduced(cols, Rational(0));
    std::vector<std::size_t> basis(n);
    for (std::size_t i = 0; i < m; ++i) {
        for (auto j : rows_of_dual[i]) tableau[j][i] = 1;
        reduced[i] = 1;
    }
    for (std::size_t j = 0; j < n; ++j) {
        tableau[j][m + j] = -1;
        reduced[m + j] = -1;
        tableau[j][m + n + j] = 1;
        basis[j] = m + n + j;
    }
    Rational dual_value = 0;

    std::vector<std::size_t> nonzero;
    for (;;) {
        // Bland: lowest-index improving column.
        std::size_t entering = cols;
        for (std::size_t k = 0; k < cols; ++k) {
            if (reduced[k] > 0) {
                entering = k;
                break;
            }
        }
        if (entering == cols) {
            break;
        }
        std::size_t pivot_row = n;
        Rational best_ratio;
        for (std::size_t r = 0; r < n; ++r) {
            if (tableau[r][entering] <= 0) continue;
            Rational ratio = rhs[r] / tableau[r][entering];
            if (pivot_row == n || ratio < best_ratio ||
                (ratio == best_ratio && basis[r] < basis[pivot_row])) {
                pivot_row = r;
                best_ratio = std::move(ratio);
            }
        }
        if (pivot_row == n) {
            throw std::logic_error("covering LP dual is unbounded; the primal is infeasible");
        }

        auto& prow = tableau[pivot_row];
        const Rational pivot = prow[entering];
        nonzero.clear();
        for (std::size_t k = 0; k < cols; ++k) {
            if (prow[k] != 0) {
                prow[k] /= pivot;
                nonzero.push_back(k);
            }
        }
        rhs[pivot_row] /= pivot;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == pivot_row || tableau[r][entering] == 0) continue;
            const Rational factor = tableau[r][entering];
            for (auto k : nonzero) tableau[r][k] -= factor * prow[k];
            rhs[r] -= factor * rhs[pivot_row];
        }
        const Rational factor = reduced[entering];
        for (auto k : nonzero) reduced[k] -= factor * prow[k];
        dual_value += factor * rhs[pivot_row];
        basis[pivot_row] = entering;
    }

    for (std::size_t j = 0; j < n; ++j) {
        result.x.values[j] = -reduced[m + n + j];
    }
    result.objective_value = objective_of(lp, result.x);
    if (!is_feasible(lp, result.x)) {
        throw std::logic_error("simplex returned a primal point violating the covering LP");
    }
    if (result.objective_value != dual_value) {
        throw std::logic_error("primal and dual objectives disagree: " +
                               to_fraction_string(result.objective_value) + " vs " +
                               to_fraction_string(dual_value));
    }
    return result;
}

std::vector<Path> threshold_filter(const FractionalSolution& sol, std::span<const PathGroup> groups,
                                   const Rational& theta) {
    std::set<Path> selected;
    for (const auto& group : groups) {
        for (const auto& path : group.paths) {
            if (sol.x.sum_over(path.vertices) >= theta) {
                selected.insert(normalized(path));
            }
        }
    }
    return {selected.begin(), selected.end()};
}

VertexValues scale_and_cap(const VertexValues& x, const Rational& c) {
    if (c < 1) {
        throw std::invalid_argument("scale_and_cap requires c >= 1");
    }
    VertexValues out{x.vertices, {}};
    out.values.reserve(x.values.size());
    for (const auto& v : x.values) {
        Rational scaled = c * v;
        out.values.push_back(scaled > 1 ? Rational(1) : scaled);
    }
    return out;
}

}  // namespace trackcut
