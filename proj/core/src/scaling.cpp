#include "kostant/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "kostant/entropy.hpp"

namespace kostant {

namespace {

constexpr double kEdgeGuard = 1e-15;  // keeps x_i y_j strictly below 1

// Reduced transportation problem: active rows/columns (positive marginals)
// and the staircase support restricted to them.
struct Problem {
    int n = 0;
    std::vector<int> rows;   // active row indices
    std::vector<int> cols;   // active column indices
    std::vector<double> alpha;
    std::vector<double> beta;
    std::vector<std::vector<int>> row_cells;  // positions into cols
    std::vector<std::vector<int>> col_cells;  // positions into rows
    // Per row-cell flags. `usable` marks cells that can be positive
    // somewhere on the polytope (structurally forced zeros are excluded:
    // they vanish on every feasible point, so the face and its capacity are
    // unchanged). `dropped` marks cells removed by the numerical stall
    // safeguard; those still get priced into the certified dual.
    std::vector<std::vector<char>> usable;
    std::vector<std::vector<char>> dropped;

    static Problem build(const NetflowVector& netflow) {
        Problem p;
        p.n = netflow.n();
        for (int i = 0; i < p.n; ++i)
            if (netflow.alpha()[static_cast<size_t>(i)] > 0) p.rows.push_back(i);
        for (int j = 0; j < p.n; ++j)
            if (netflow.beta()[static_cast<size_t>(j)] > 0) p.cols.push_back(j);
        for (int i : p.rows) p.alpha.push_back(static_cast<double>(netflow.alpha()[static_cast<size_t>(i)]));
        for (int j : p.cols) p.beta.push_back(static_cast<double>(netflow.beta()[static_cast<size_t>(j)]));
        p.row_cells.resize(p.rows.size());
        p.col_cells.resize(p.cols.size());
        p.usable.resize(p.rows.size());
        p.dropped.resize(p.rows.size());
        for (size_t r = 0; r < p.rows.size(); ++r) {
            for (size_t c = 0; c < p.cols.size(); ++c) {
                if (!on_support(p.n, p.rows[r], p.cols[c])) continue;
                p.row_cells[r].push_back(static_cast<int>(c));
                p.col_cells[c].push_back(static_cast<int>(r));
                // Cells forced to zero on the whole polytope are excluded
                // upfront, otherwise the optimum sits on the boundary and
                // the scaling crawls: the flow f_{ij} crosses cuts i..j-1,
                // so it vanishes identically iff one of them has zero
                // capacity. (Subdiagonal cells are never forced once their
                // row and column marginals are positive.)
                const int i = p.rows[r];
                const int j = p.n - p.cols[c];  // flow target vertex
                char cell_possible = 1;
                for (int k = i; k < j; ++k)
                    if (netflow.s(k) == 0) {
                        cell_possible = 0;
                        break;
                    }
                p.usable[r].push_back(cell_possible);
                p.dropped[r].push_back(0);
            }
        }
        for (size_t r = 0; r < p.rows.size(); ++r) {
            bool any = false;
            for (char a : p.usable[r]) any = any || a;
            internal_check(any, "active row with no usable support cells");
        }
        for (size_t c = 0; c < p.cols.size(); ++c) {
            bool any = false;
            for (size_t k = 0; k < p.col_cells[c].size(); ++k) {
                const size_t r = static_cast<size_t>(p.col_cells[c][k]);
                const auto& cellsr = p.row_cells[r];
                const auto it = std::lower_bound(cellsr.begin(), cellsr.end(), static_cast<int>(c));
                any = any || p.usable[r][static_cast<size_t>(it - cellsr.begin())];
            }
            internal_check(any, "active column with no usable support cells");
        }
        return p;
    }

    bool cell_active(size_t r, size_t pos) const {
        return usable[r][pos] != 0 && dropped[r][pos] == 0;
    }
};

// Rationalizes the float flow values and repairs the netflow equalities
// exactly. For each vertex i the deficit is pushed onto the furthest edge
// (i, j) whose cuts all have positive capacity, which leaves earlier
// vertices untouched.
FlowMatrix repair_flow(const NetflowVector& netflow,
                       const std::vector<std::vector<double>>& cell_value,
                       const Problem& p) {
    const int n = netflow.n();
    std::vector<BigRat> upper(FlowMatrix::upper_size(n), BigRat(0));

    std::vector<int> row_pos(static_cast<size_t>(n), -1), col_pos(static_cast<size_t>(n), -1);
    for (size_t r = 0; r < p.rows.size(); ++r) row_pos[static_cast<size_t>(p.rows[r])] = static_cast<int>(r);
    for (size_t c = 0; c < p.cols.size(); ++c) col_pos[static_cast<size_t>(p.cols[c])] = static_cast<int>(c);

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const int mc = n - j;  // matrix column of f_{ij}
            const int r = row_pos[static_cast<size_t>(i)];
            const int c = mc < n ? col_pos[static_cast<size_t>(mc)] : -1;
            if (r < 0 || c < 0) continue;
            // Find the position of column c in this row's cell list.
            const auto& cells = p.row_cells[static_cast<size_t>(r)];
            const auto it = std::lower_bound(cells.begin(), cells.end(), c);
            if (it == cells.end() || *it != c) continue;
            const size_t pos = static_cast<size_t>(it - cells.begin());
            if (!p.cell_active(static_cast<size_t>(r), pos)) continue;
            const double v = cell_value[static_cast<size_t>(r)][pos];
            if (v > 0.0)
                upper[FlowMatrix::upper_index(n, i, j)] = rationalize(v, 1'000'000'000LL);
        }
    }

    // Sequential repair: fix vertex i's deficit on an edge that only
    // disturbs later vertices.
    for (int i = 0; i < n; ++i) {
        BigRat net = 0;
        for (int j = i + 1; j <= n; ++j) net += upper[FlowMatrix::upper_index(n, i, j)];
        for (int k = 0; k < i; ++k) net -= upper[FlowMatrix::upper_index(n, k, i)];
        BigRat deficit = BigRat(netflow.entry(i)) - net;
        if (deficit == 0) continue;
        bool fixed = false;
        for (int j = n; j > i && !fixed; --j) {
            long long min_cut = std::numeric_limits<long long>::max();
            for (int k = i; k < j; ++k) min_cut = std::min(min_cut, netflow.s(k));
            if (min_cut <= 0) continue;
            BigRat& slot = upper[FlowMatrix::upper_index(n, i, j)];
            internal_check(slot + deficit >= 0, "repair would drive a flow negative");
            slot += deficit;
            fixed = true;
        }
        internal_check(fixed, "no repair edge with positive cut capacity");
    }
    return FlowMatrix::from_upper(netflow, std::move(upper));
}

void write_trace(std::ostream* trace, long sweep, double residual, double dual) {
    if (!trace) return;
    (*trace) << sweep << ',' << residual << ',' << dual << '\n';
}

// ---------------------------------------------------------------------------
// Entropy kernel: cells a_ij = x_i y_j / (1 - x_i y_j), dual
// D(x,y) = -sum log(1 - x_i y_j) - <alpha, log x> - <beta, log y>.
// ---------------------------------------------------------------------------

struct EntropyEngine {
    const Problem& p;
    std::vector<double> x, y;

    explicit EntropyEngine(const Problem& problem)
        : p(problem), x(problem.rows.size(), 0.5), y(problem.cols.size(), 0.5) {}

    double cell(double xi, double yj) const {
        const double z = xi * yj;
        return z / (1.0 - z);
    }

    // Dual of the reduced (active-cell) problem; dropped forced-zero cells
    // are priced back in once at the end of the optimization.
    double dual() const {
        KahanSum s;
        for (size_t r = 0; r < p.rows.size(); ++r)
            for (size_t cpos = 0; cpos < p.row_cells[r].size(); ++cpos) {
                if (!p.cell_active(r, cpos)) continue;
                const double z = x[r] * y[static_cast<size_t>(p.row_cells[r][cpos])];
                s.add(-std::log1p(-z));
            }
        for (size_t r = 0; r < p.rows.size(); ++r) s.add(-p.alpha[r] * std::log(x[r]));
        for (size_t c = 0; c < p.cols.size(); ++c) s.add(-p.beta[c] * std::log(y[c]));
        return s.value();
    }

    // Solve sum_j x y_j/(1-x y_j) = target for x; the map is increasing.
    double solve_var(const std::vector<double>& other, const std::vector<int>& cells,
                     const std::vector<char>& active, double target) const {
        double omax = 0.0;
        for (size_t k = 0; k < cells.size(); ++k)
            if (active[k]) omax = std::max(omax, other[static_cast<size_t>(cells[k])]);
        internal_check(omax > 0.0, "scaling variable lost all partners");
        double lo = 0.0, hi = (1.0 - kEdgeGuard) / omax;
        auto eval = [&](double v) {
            double s = 0.0;
            for (size_t k = 0; k < cells.size(); ++k) {
                if (!active[k]) continue;
                const double z = v * other[static_cast<size_t>(cells[k])];
                s += z / (1.0 - z);
            }
            return s;
        };
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (eval(mid) < target)
                lo = mid;
            else
                hi = mid;
            if (hi - lo <= 1e-16 * hi) break;
        }
        return 0.5 * (lo + hi);
    }

    std::vector<char> row_active(size_t r) const {
        std::vector<char> act(p.row_cells[r].size());
        for (size_t k = 0; k < act.size(); ++k) act[k] = p.cell_active(r, k) ? 1 : 0;
        return act;
    }

    std::vector<char> col_active(size_t c) const {
        std::vector<char> act(p.col_cells[c].size());
        for (size_t k = 0; k < act.size(); ++k) {
            const size_t r = static_cast<size_t>(p.col_cells[c][k]);
            const auto& cellsr = p.row_cells[r];
            const auto it = std::lower_bound(cellsr.begin(), cellsr.end(), static_cast<int>(c));
            act[k] = p.cell_active(r, static_cast<size_t>(it - cellsr.begin())) ? 1 : 0;
        }
        return act;
    }

    void sweep() {
        for (size_t r = 0; r < p.rows.size(); ++r)
            x[r] = solve_var(y, p.row_cells[r], row_active(r), p.alpha[r]);
        for (size_t c = 0; c < p.cols.size(); ++c)
            y[c] = solve_var(x, p.col_cells[c], col_active(c), p.beta[c]);
        rebalance();
    }

    // Gauge fix: products x_i y_j are invariant, so balance the log norms.
    void rebalance() {
        double sx = 0.0, sy = 0.0;
        for (double v : x) sx += std::log(v);
        for (double v : y) sy += std::log(v);
        const double c = std::exp((sy - sx) / static_cast<double>(x.size() + y.size()));
        for (double& v : x) v *= c;
        for (double& v : y) v /= c;
    }

    double residual() const {
        double row_err = 0.0, col_err = 0.0;
        for (size_t r = 0; r < p.rows.size(); ++r) {
            double s = 0.0;
            for (size_t k = 0; k < p.row_cells[r].size(); ++k)
                if (p.cell_active(r, k)) s += cell(x[r], y[static_cast<size_t>(p.row_cells[r][k])]);
            row_err = std::max(row_err, std::abs(s - p.alpha[r]));
        }
        for (size_t c = 0; c < p.cols.size(); ++c) {
            double s = 0.0;
            const std::vector<char> act = col_active(c);
            for (size_t k = 0; k < p.col_cells[c].size(); ++k)
                if (act[k]) s += cell(x[static_cast<size_t>(p.col_cells[c][k])], y[c]);
            col_err = std::max(col_err, std::abs(s - p.beta[c]));
        }
        return row_err + col_err;
    }

    // Damped gradient descent on the dual in log coordinates; used only when
    // the alternating scheme stalls.
    void gradient_steps(int count) {
        for (int step = 0; step < count; ++step) {
            std::vector<double> gx(x.size(), 0.0), gy(y.size(), 0.0);
            for (size_t r = 0; r < p.rows.size(); ++r) {
                for (size_t k = 0; k < p.row_cells[r].size(); ++k) {
                    if (!p.cell_active(r, k)) continue;
                    const size_t c = static_cast<size_t>(p.row_cells[r][k]);
                    const double a = cell(x[r], y[c]);
                    gx[r] += a;
                    gy[c] += a;
                }
                gx[r] -= p.alpha[r];
            }
            for (size_t c = 0; c < p.cols.size(); ++c) gy[c] -= p.beta[c];
            const double d0 = dual();
            double eta = 0.5;
            std::vector<double> nx(x.size()), ny(y.size());
            for (int tries = 0; tries < 40; ++tries, eta *= 0.5) {
                for (size_t r = 0; r < x.size(); ++r) nx[r] = x[r] * std::exp(-eta * gx[r]);
                for (size_t c = 0; c < y.size(); ++c) ny[c] = y[c] * std::exp(-eta * gy[c]);
                bool feasible = true;
                for (size_t r = 0; r < p.rows.size() && feasible; ++r)
                    for (size_t k = 0; k < p.row_cells[r].size() && feasible; ++k)
                        if (p.cell_active(r, k) &&
                            nx[r] * ny[static_cast<size_t>(p.row_cells[r][k])] >= 1.0 - kEdgeGuard)
                            feasible = false;
                if (!feasible) continue;
                std::swap(x, nx);
                std::swap(y, ny);
                if (dual() <= d0) break;
                std::swap(x, nx);
                std::swap(y, ny);
            }
        }
    }

    std::vector<std::vector<double>> primal_cells() const {
        std::vector<std::vector<double>> out(p.rows.size());
        for (size_t r = 0; r < p.rows.size(); ++r) {
            out[r].resize(p.row_cells[r].size(), 0.0);
            for (size_t k = 0; k < p.row_cells[r].size(); ++k)
                if (p.cell_active(r, k))
                    out[r][k] = cell(x[r], y[static_cast<size_t>(p.row_cells[r][k])]);
        }
        return out;
    }
};

}  // namespace

ScalingResult maximize_entropy(const NetflowVector& netflow, const ScalingOptions& opts) {
    if (opts.tol <= 0) throw Error(ErrorKind::BadParams, "tol must be positive");
    const int n = netflow.n();
    Problem p = Problem::build(netflow);

    if (p.rows.empty()) {
        // Zero netflow: the polytope is the single zero flow.
        std::vector<BigRat> upper(FlowMatrix::upper_size(n), BigRat(0));
        ScalingResult res{FlowMatrix::from_upper(netflow, std::move(upper)), 0.0, 0.0, 0.0, 0,
                          {std::vector<double>(static_cast<size_t>(n), 0.0),
                           std::vector<double>(static_cast<size_t>(n), 0.0)}};
        return res;
    }

    EntropyEngine engine(p);
    double dual_prev = std::numeric_limits<double>::infinity();
    double residual = std::numeric_limits<double>::infinity();
    long sweep = 0;
    long last_progress_sweep = 0;
    double last_progress_residual = std::numeric_limits<double>::infinity();

    if (opts.trace) (*opts.trace) << "iteration,residual,dual\n";
    for (; sweep < opts.max_sweeps; ++sweep) {
        engine.sweep();
        const double dual_now = engine.dual();
        // Exact coordinate minimization cannot increase the dual (up to root
        // tolerance).
        internal_check(dual_now <= dual_prev + 1e-7 * (1.0 + std::abs(dual_now)),
                       "dual objective increased during a scaling sweep");
        dual_prev = dual_now;
        residual = engine.residual();
        write_trace(opts.trace, sweep, residual, dual_now);
        if (residual <= opts.tol) break;
        if (residual < 0.5 * last_progress_residual) {
            last_progress_residual = residual;
            last_progress_sweep = sweep;
        } else if (sweep - last_progress_sweep >= 200) {
            // Stalled; drop cells that are vanishing (forced-zero support)
            // and take a few damped gradient steps.
            for (size_t r = 0; r < p.rows.size(); ++r)
                for (size_t k = 0; k < p.row_cells[r].size(); ++k)
                    if (p.cell_active(r, k) &&
                        engine.cell(engine.x[r],
                                    engine.y[static_cast<size_t>(p.row_cells[r][k])]) < 1e-13)
                        p.dropped[r][k] = 1;
            engine.gradient_steps(20);
            last_progress_sweep = sweep;
        }
    }
    if (residual > opts.tol)
        throw Error(ErrorKind::NoConvergence,
                    "scaling residual " + std::to_string(residual) + " after " +
                        std::to_string(sweep) + " sweeps");

    FlowMatrix flow = repair_flow(netflow, engine.primal_cells(), p);
    const double h_star = flow_entropy(flow, netflow);

    // Certified dual value. Structurally forced cells vanish on every
    // feasible point, so the face and its capacity match the reduced
    // problem's; cells dropped by the numerical safeguard carry no such
    // proof and stay priced in with their -log(1 - x_i y_j) >= 0 terms.
    double priced_back = 0.0;
    for (size_t r = 0; r < p.rows.size(); ++r)
        for (size_t k = 0; k < p.row_cells[r].size(); ++k)
            if (p.dropped[r][k])
                priced_back +=
                    -std::log1p(-engine.x[r] * engine.y[static_cast<size_t>(p.row_cells[r][k])]);
    const double dual_value = engine.dual() + priced_back;

    double gap = dual_value - h_star;
    internal_check(gap > -1e-9, "duality gap came out negative");
    gap = std::max(gap, 0.0);

    ScalingPoint point{std::vector<double>(static_cast<size_t>(n), 0.0),
                       std::vector<double>(static_cast<size_t>(n), 0.0)};
    for (size_t r = 0; r < p.rows.size(); ++r)
        point.x[static_cast<size_t>(p.rows[r])] = engine.x[r];
    for (size_t c = 0; c < p.cols.size(); ++c)
        point.y[static_cast<size_t>(p.cols[c])] = engine.y[c];

    return ScalingResult{std::move(flow), h_star, dual_value, gap, sweep + 1, std::move(point)};
}

double capacity_log(const NetflowVector& netflow, double tol) {
    ScalingOptions opts;
    opts.tol = tol;
    return maximize_entropy(netflow, opts).dual_value;
}

double duality_gap(const NetflowVector& netflow, double tol) {
    ScalingOptions opts;
    opts.tol = tol;
    return maximize_entropy(netflow, opts).gap;
}

namespace {

// ---------------------------------------------------------------------------
// Volume kernel: cells a_ij = 1/(u_i + v_j), dual
// D(u,v) = -sum log(u_i + v_j) + <alpha, u> + <beta, v>, domain u_i+v_j > 0.
// ---------------------------------------------------------------------------

struct VolumeEngine {
    const Problem& p;
    std::vector<double> u, v;

    explicit VolumeEngine(const Problem& problem)
        : p(problem), u(problem.rows.size(), 1.0), v(problem.cols.size(), 1.0) {}

    double dual() const {
        KahanSum s;
        for (size_t r = 0; r < p.rows.size(); ++r)
            for (int c : p.row_cells[r]) s.add(-std::log(u[r] + v[static_cast<size_t>(c)]));
        for (size_t r = 0; r < p.rows.size(); ++r) s.add(p.alpha[r] * u[r]);
        for (size_t c = 0; c < p.cols.size(); ++c) s.add(p.beta[c] * v[c]);
        return s.value();
    }

    // Solve sum_j 1/(u + v_j) = target; the map decreases from +inf at the
    // domain boundary u = -min_j v_j.
    double solve_var(const std::vector<double>& other, const std::vector<int>& cells,
                     double target) const {
        double omin = std::numeric_limits<double>::infinity();
        for (int c : cells) omin = std::min(omin, other[static_cast<size_t>(c)]);
        auto eval = [&](double w) {
            double s = 0.0;
            for (int c : cells) s += 1.0 / (w + other[static_cast<size_t>(c)]);
            return s;
        };
        double lo = -omin;  // exclusive; never evaluated
        double hi = std::max(-omin + 1.0, 1.0);
        while (eval(hi) > target) hi = 2.0 * hi + 1.0;
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            if (eval(mid) > target)
                lo = mid;
            else
                hi = mid;
            if (hi - lo <= 1e-16 * std::max(1.0, std::abs(hi))) break;
        }
        return hi;  // the feasible side of the bracket
    }

    void sweep() {
        for (size_t r = 0; r < p.rows.size(); ++r)
            u[r] = solve_var(v, p.row_cells[r], p.alpha[r]);
        for (size_t c = 0; c < p.cols.size(); ++c)
            v[c] = solve_var(u, p.col_cells[c], p.beta[c]);
        // Gauge: u -> u + t, v -> v - t keeps u_i + v_j fixed.
        double su = 0.0, sv = 0.0;
        for (double w : u) su += w;
        for (double w : v) sv += w;
        const double t = (sv / static_cast<double>(v.size()) - su / static_cast<double>(u.size())) / 2.0;
        for (double& w : u) w += t;
        for (double& w : v) w -= t;
    }

    double residual() const {
        double row_err = 0.0, col_err = 0.0;
        for (size_t r = 0; r < p.rows.size(); ++r) {
            double s = 0.0;
            for (int c : p.row_cells[r]) s += 1.0 / (u[r] + v[static_cast<size_t>(c)]);
            row_err = std::max(row_err, std::abs(s - p.alpha[r]));
        }
        for (size_t c = 0; c < p.cols.size(); ++c) {
            double s = 0.0;
            for (int r : p.col_cells[c]) s += 1.0 / (u[static_cast<size_t>(r)] + v[c]);
            col_err = std::max(col_err, std::abs(s - p.beta[c]));
        }
        return row_err + col_err;
    }

    std::vector<std::vector<double>> primal_cells() const {
        std::vector<std::vector<double>> out(p.rows.size());
        for (size_t r = 0; r < p.rows.size(); ++r) {
            out[r].resize(p.row_cells[r].size(), 0.0);
            for (size_t k = 0; k < p.row_cells[r].size(); ++k)
                out[r][k] = 1.0 / (u[r] + v[static_cast<size_t>(p.row_cells[r][k])]);
        }
        return out;
    }
};

}  // namespace

LogProductResult maximize_log_product(const NetflowVector& netflow, const ScalingOptions& opts) {
    if (opts.tol <= 0) throw Error(ErrorKind::BadParams, "tol must be positive");
    const int n = netflow.n();
    for (int k = 0; k < n; ++k)
        if (netflow.s(k) == 0)
            throw Error(ErrorKind::ZeroMarginal, "log-product maximization needs s_k > 0");

    const Problem p = Problem::build(netflow);
    VolumeEngine engine(p);
    double dual_prev = std::numeric_limits<double>::infinity();
    double residual = std::numeric_limits<double>::infinity();
    long sweep = 0;
    if (opts.trace) (*opts.trace) << "iteration,residual,dual\n";
    for (; sweep < opts.max_sweeps; ++sweep) {
        engine.sweep();
        const double dual_now = engine.dual();
        internal_check(dual_now <= dual_prev + 1e-7 * (1.0 + std::abs(dual_now)),
                       "volume dual increased during a scaling sweep");
        dual_prev = dual_now;
        residual = engine.residual();
        write_trace(opts.trace, sweep, residual, dual_now);
        if (residual <= opts.tol) break;
    }
    if (residual > opts.tol)
        throw Error(ErrorKind::NoConvergence,
                    "volume scaling residual " + std::to_string(residual) + " after " +
                        std::to_string(sweep) + " sweeps");

    FlowMatrix flow = repair_flow(netflow, engine.primal_cells(), p);

    // sum of log a_ij over the full support at the repaired point.
    const DenseMatrix a = embed(flow, netflow);
    KahanSum logsum;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!on_support(n, i, j)) continue;
            const double value = to_double(a.at(i, j));
            internal_check(value > 0.0, "repaired log-product flow hit a zero entry");
            logsum.add(std::log(value));
        }
    const double sup_log_product = logsum.value();
    const double support_cells = static_cast<double>(n) * (n - 1) / 2.0 + 2.0 * n - 1.0;
    double gap = engine.dual() - support_cells - sup_log_product;
    internal_check(gap > -1e-9, "volume duality gap came out negative");
    gap = std::max(gap, 0.0);

    return LogProductResult{std::move(flow), sup_log_product, engine.dual(), gap, sweep + 1};
}

double volume_duality_check(const NetflowVector& netflow, double tol) {
    ScalingOptions opts;
    opts.tol = tol;
    const LogProductResult res = maximize_log_product(netflow, opts);
    const double support_cells =
        static_cast<double>(netflow.n()) * (netflow.n() - 1) / 2.0 + 2.0 * netflow.n() - 1.0;
    return std::abs(res.dual_value - support_cells - res.sup_log_product);
}

}  // namespace kostant
