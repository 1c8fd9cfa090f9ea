#include "kostant/exact_count.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace kostant {

namespace {

struct StateCounter {
    unsigned long long used = 0;
    unsigned long long cap = 0;
    void tick(unsigned long long amount = 1) {
        used += amount;
        if (used > cap)
            throw Error(ErrorKind::ResourceLimit,
                        "state cap " + std::to_string(cap) + " exceeded");
    }
};

// Recursive sink-peeling count. `w` is the free part (N_0..N_{m-1}) of a
// netflow on the complete DAG with vertices 0..m; every prefix sum of `w` is
// nonnegative by construction.
class PeelCounter {
  public:
    explicit PeelCounter(unsigned long long cap) { counter_.cap = cap; }

    BigInt count(const std::vector<long long>& w) {
        if (w.empty()) return 1;
        if (w.size() == 1) return w[0] >= 0 ? 1 : 0;
        const auto it = memo_.find(w);
        if (it != memo_.end()) return it->second;
        counter_.tick();

        std::vector<long long> s(w.size());
        std::partial_sum(w.begin(), w.end(), s.begin());

        // Choose the flows (f_{0,m}, ..., f_{m-2,m}) into the sink; the last
        // one is forced by the inflow total s_{m-1}. Feasibility of the
        // residual is exactly the prefix condition sum_{j<=k} f_j <= s_k.
        BigInt total = 0;
        std::vector<long long> residual(w.begin(), w.end() - 1);
        dfs(0, 0, w, s, residual, total);

        return memo_.emplace(w, std::move(total)).first->second;
    }

  private:
    void dfs(int k, long long prefix, const std::vector<long long>& w,
             const std::vector<long long>& s, std::vector<long long>& residual, BigInt& total) {
        const int m = static_cast<int>(s.size());
        if (k == m - 1) {
            counter_.tick();
            total += count(residual);
            return;
        }
        const long long cap =
            std::min(s[static_cast<size_t>(k)], s[static_cast<size_t>(m - 1)]) - prefix;
        for (long long f = 0; f <= cap; ++f) {
            residual[static_cast<size_t>(k)] = w[static_cast<size_t>(k)] - f;
            dfs(k + 1, prefix + f, w, s, residual, total);
        }
        residual[static_cast<size_t>(k)] = w[static_cast<size_t>(k)];
    }

    std::map<std::vector<long long>, BigInt> memo_;
    StateCounter counter_;
};

}  // namespace

BigInt count_exact(const NetflowVector& netflow, const ResourceLimits& limits) {
    PeelCounter counter(limits.max_states);
    std::vector<long long> w(netflow.entries().begin(), netflow.entries().end() - 1);
    return counter.count(w);
}

namespace {

// Row-by-row contingency table enumeration on the staircase support.
// Column n-i closes right after row i is placed, which forces the value of
// the cell (i, n-i).
class TableEnumerator {
  public:
    TableEnumerator(const NetflowVector& netflow, unsigned long long cap,
                    std::function<void(const std::vector<long long>&)> leaf)
        : netflow_(netflow), n_(netflow.n()), leaf_(std::move(leaf)) {
        counter_.cap = cap;
    }

    BigInt run() {
        colrem_.assign(netflow_.beta().begin(), netflow_.beta().end());
        cells_.assign(static_cast<size_t>(n_) * n_, 0);
        total_ = 0;
        row(0);
        return total_;
    }

  private:
    void row(int i) {
        if (i == n_) {
            for (long long rem : colrem_) internal_check(rem == 0, "unfilled column");
            ++total_;
            if (leaf_) leaf_(cells_);
            return;
        }
        const long long alpha_i = netflow_.alpha()[static_cast<size_t>(i)];
        if (i == 0) {
            fill(i, 0, n_ - 1, alpha_i);
        } else {
            // Forced closing cell.
            const long long forced = colrem_[static_cast<size_t>(n_ - i)];
            if (forced > alpha_i) return;
            fill(i, 0, n_ - i - 1, alpha_i - forced, forced);
        }
    }

    // Distribute `budget` over columns c..last of row i, then write the
    // forced cell (if any) and recurse into the next row.
    void fill(int i, int c, int last, long long budget, long long forced = -1) {
        counter_.tick();
        if (c > last) {
            if (budget != 0) return;
            if (forced >= 0) {
                cells_[idx(i, n_ - i)] = forced;
                colrem_[static_cast<size_t>(n_ - i)] = 0;
                row(i + 1);
                colrem_[static_cast<size_t>(n_ - i)] = forced;
                cells_[idx(i, n_ - i)] = 0;
            } else {
                row(i + 1);
            }
            return;
        }
        // Remaining capacity prune.
        long long capacity = 0;
        for (int cc = c; cc <= last; ++cc) capacity += colrem_[static_cast<size_t>(cc)];
        if (capacity < budget) return;

        const long long hi = std::min(budget, colrem_[static_cast<size_t>(c)]);
        for (long long v = 0; v <= hi; ++v) {
            cells_[idx(i, c)] = v;
            colrem_[static_cast<size_t>(c)] -= v;
            fill(i, c + 1, last, budget - v, forced);
            colrem_[static_cast<size_t>(c)] += v;
            cells_[idx(i, c)] = 0;
        }
    }

    size_t idx(int i, int c) const { return static_cast<size_t>(i) * n_ + c; }

    const NetflowVector& netflow_;
    int n_;
    std::function<void(const std::vector<long long>&)> leaf_;
    std::vector<long long> colrem_;
    std::vector<long long> cells_;
    BigInt total_ = 0;
    StateCounter counter_;
};

}  // namespace

BigInt count_brute(const NetflowVector& netflow, const ResourceLimits& limits) {
    TableEnumerator e(netflow, limits.max_states, nullptr);
    return e.run();
}

void for_each_integral_flow(const NetflowVector& netflow,
                            const std::function<void(const FlowMatrix&)>& visit,
                            const ResourceLimits& limits) {
    const int n = netflow.n();
    TableEnumerator e(netflow, limits.max_states, [&](const std::vector<long long>& cells) {
        std::vector<BigRat> upper(FlowMatrix::upper_size(n));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j <= n; ++j)
                upper[FlowMatrix::upper_index(n, i, j)] =
                    BigRat(cells[static_cast<size_t>(i) * n + (n - j)]);
        visit(FlowMatrix::from_upper(netflow, std::move(upper)));
    });
    e.run();
}

Dag Dag::complete(int n_vertices) {
    Dag g;
    g.n_vertices = n_vertices;
    for (int i = 0; i < n_vertices; ++i)
        for (int j = i + 1; j < n_vertices; ++j) g.edges.emplace_back(i, j);
    return g;
}

namespace {

// Fraction-free Bareiss determinant over exact integers.
BigInt bareiss_det(std::vector<std::vector<BigInt>> m) {
    const size_t n = m.size();
    if (n == 0) return 1;
    BigInt sign = 1;
    BigInt prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

BigInt ryser_permanent(const std::vector<std::vector<BigInt>>& m) {
    const size_t n = m.size();
    internal_check(n <= 20, "permanent request too large");
    BigInt total = 0;
    std::vector<BigInt> row_sums(n, 0);
    // Gray-code subset walk over columns.
    unsigned long prev_mask = 0;
    for (unsigned long g = 1; g < (1UL << n); ++g) {
        const unsigned long mask = g ^ (g >> 1UL);
        const unsigned long diff = mask ^ prev_mask;
        const int col = __builtin_ctzl(diff);
        const bool added = (mask & diff) != 0;
        for (size_t i = 0; i < n; ++i)
            row_sums[i] += added ? m[i][static_cast<size_t>(col)] : -m[i][static_cast<size_t>(col)];
        prev_mask = mask;
        BigInt prod = 1;
        for (size_t i = 0; i < n; ++i) prod *= row_sums[i];
        const int bits = __builtin_popcountl(mask);
        if (((static_cast<int>(n) - bits) % 2) == 0)
            total += prod;
        else
            total -= prod;
    }
    return total;
}

bool weakly_connected(const Dag& g) {
    if (g.n_vertices <= 1) return true;
    std::vector<int> parent(static_cast<size_t>(g.n_vertices));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) {
        while (parent[static_cast<size_t>(v)] != v) {
            parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
            v = parent[static_cast<size_t>(v)];
        }
        return v;
    };
    int components = g.n_vertices;
    for (const auto& [a, b] : g.edges) {
        const int ra = find(a), rb = find(b);
        if (ra != rb) {
            parent[static_cast<size_t>(ra)] = rb;
            --components;
        }
    }
    return components == 1;
}

}  // namespace

BigInt count_unit_flows_det(const Dag& g) {
    const int n = g.n_vertices - 1;
    if (n < 1) throw Error(ErrorKind::BadParams, "need at least 2 vertices");
    for (const auto& [a, b] : g.edges) {
        if (!(0 <= a && a < b && b <= n))
            throw Error(ErrorKind::BadParams, "edges must satisfy 0 <= i < j <= n");
    }
    if (!weakly_connected(g)) throw Error(ErrorKind::Disconnected, "graph is not connected");

    std::vector<std::vector<BigInt>> nm(static_cast<size_t>(n), std::vector<BigInt>(static_cast<size_t>(n), 0));
    std::vector<std::vector<BigInt>> mm = nm;
    for (int i = 1; i < n; ++i) {
        nm[static_cast<size_t>(i)][static_cast<size_t>(i - 1)] = -1;
        mm[static_cast<size_t>(i)][static_cast<size_t>(i - 1)] = 1;
    }
    for (const auto& [a, b] : g.edges) {
        // Column j encodes edges into vertex j+1.
        if (b >= 1 && a < n) {
            nm[static_cast<size_t>(a)][static_cast<size_t>(b - 1)] = 1;
            mm[static_cast<size_t>(a)][static_cast<size_t>(b - 1)] = 1;
        }
    }
    BigInt det = bareiss_det(nm);
    if (n <= 8) internal_check(det == ryser_permanent(mm), "det/permanent disagree");
    return det;
}

std::vector<BigInt> inversion_numbers(int n) {
    if (n < 1) throw Error(ErrorKind::BadParams, "inversion_numbers requires n >= 1");
    std::vector<BigInt> coeffs{1};
    for (int m = 2; m <= n; ++m) {
        std::vector<BigInt> next(coeffs.size() + static_cast<size_t>(m) - 1, 0);
        for (size_t k = 0; k < coeffs.size(); ++k)
            for (int r = 0; r < m; ++r) next[k + static_cast<size_t>(r)] += coeffs[k];
        coeffs = std::move(next);
    }
    return coeffs;
}

BigInt inversions_at_most(int n, long long k) {
    if (k < 0) return 0;
    const std::vector<BigInt> inv = inversion_numbers(n);
    BigInt total = 0;
    const size_t hi = std::min<size_t>(inv.size() - 1, static_cast<size_t>(k));
    for (size_t i = 0; i <= hi; ++i) total += inv[i];
    return total;
}

BigInt partition_count(long long t) {
    if (t < 0) return 0;
    std::vector<BigInt> p(static_cast<size_t>(t) + 1, 0);
    p[0] = 1;
    for (long long m = 1; m <= t; ++m) {
        BigInt acc = 0;
        for (long long k = 1;; ++k) {
            const long long g1 = k * (3 * k - 1) / 2;
            const long long g2 = k * (3 * k + 1) / 2;
            if (g1 > m && g2 > m) break;
            const BigInt sign = (k % 2 == 1) ? 1 : -1;
            if (g1 <= m) acc += sign * p[static_cast<size_t>(m - g1)];
            if (g2 <= m) acc += sign * p[static_cast<size_t>(m - g2)];
        }
        p[static_cast<size_t>(m)] = acc;
    }
    return p[static_cast<size_t>(t)];
}

namespace {

// Solve A c = b exactly; returns nullopt when inconsistent. Rank-deficient
// systems yield a particular solution with free variables set to zero.
std::optional<std::vector<BigRat>> solve_exact(std::vector<std::vector<BigRat>> a,
                                               std::vector<BigRat> b) {
    const size_t rows = a.size();
    const size_t cols = rows ? a[0].size() : 0;
    std::vector<size_t> pivot_col_of_row;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[r], a[piv]);
        std::swap(b[r], b[piv]);
        const BigRat inv = a[r][c];
        for (size_t cc = c; cc < cols; ++cc) a[r][cc] /= inv;
        b[r] /= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const BigRat factor = a[i][c];
            for (size_t cc = c; cc < cols; ++cc) a[i][cc] -= factor * a[r][cc];
            b[i] -= factor * b[r];
        }
        pivot_col_of_row.push_back(c);
        ++r;
    }
    for (size_t i = r; i < rows; ++i)
        if (b[i] != 0) return std::nullopt;
    std::vector<BigRat> x(cols, BigRat(0));
    for (size_t i = 0; i < r; ++i) x[pivot_col_of_row[i]] = b[i];
    return x;
}

}  // namespace

std::optional<std::vector<BigRat>> fit_recurrence(const std::vector<BigInt>& seq, int max_order) {
    if (max_order < 1) throw Error(ErrorKind::BadParams, "max_order must be >= 1");
    const size_t len = seq.size();
    if (len < 2 * static_cast<size_t>(max_order) + 2)
        throw Error(ErrorKind::BadParams, "sequence too short for requested order");

    for (int order = 1; order <= max_order; ++order) {
        const size_t r = static_cast<size_t>(order);
        // Train on every window except a held-out tail (three terms when the
        // sequence affords them); then validate on the full sequence.
        const size_t first_eq = r;
        const size_t held = std::min<size_t>(3, len - r - 1);  // len >= 2*max_order+2 > r+1
        const size_t last_train = len - 1 - held;
        if (last_train < first_eq) continue;
        std::vector<std::vector<BigRat>> a;
        std::vector<BigRat> b;
        for (size_t m = first_eq; m <= last_train; ++m) {
            std::vector<BigRat> row(r);
            for (size_t i = 1; i <= r; ++i) row[i - 1] = BigRat(seq[m - i]);
            a.push_back(std::move(row));
            b.push_back(BigRat(seq[m]));
        }
        auto solution = solve_exact(std::move(a), std::move(b));
        if (!solution) continue;
        bool valid = true;
        for (size_t m = first_eq; m < len && valid; ++m) {
            BigRat predicted = 0;
            for (size_t i = 1; i <= r; ++i) predicted += (*solution)[i - 1] * BigRat(seq[m - i]);
            valid = predicted == BigRat(seq[m]);
        }
        if (valid) return solution;
    }
    return std::nullopt;
}

}  // namespace kostant
