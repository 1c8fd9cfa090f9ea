#pragma once

#include <string>
#include <vector>

#include "kostant/netflow.hpp"
#include "kostant/numbers.hpp"

namespace kostant {

// Dense n x n matrix of exact rationals, row-major.
struct DenseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<BigRat> data;

    const BigRat& at(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }
    BigRat& at(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
};

// A point of the flow polytope F_n(N), stored through its transportation
// embedding. The free coordinates are the edge flows f_{ij} for
// 0 <= i < j <= n; the subdiagonal slacks g_j = sum_{i<j} (N_i - f_{ij})
// are derived and cached. Entries are exact rationals; the optimizer
// rationalizes its float iterates before constructing one of these.
class FlowMatrix {
  public:
    // Validates the netflow equalities exactly and caches g_1..g_{n-1}.
    static FlowMatrix from_upper(const NetflowVector& netflow, std::vector<BigRat> upper);

    // Convex combination; stays inside the polytope for lambda in [0,1].
    static FlowMatrix blend(const NetflowVector& netflow, const FlowMatrix& a,
                            const FlowMatrix& b, const BigRat& lambda);

    int n() const { return n_; }
    const BigRat& f(int i, int j) const;  // 0 <= i < j <= n
    const std::vector<BigRat>& upper() const { return upper_; }
    const std::vector<BigRat>& subdiag() const { return subdiag_; }  // g_1..g_{n-1}
    const BigRat& g(int j) const { return subdiag_[static_cast<size_t>(j - 1)]; }
    bool integral() const { return integral_; }

    static size_t upper_index(int n, int i, int j);
    static size_t upper_size(int n) { return static_cast<size_t>(n) * (n + 1) / 2; }

    std::string to_json() const;
    static FlowMatrix from_json(const NetflowVector& netflow, const std::string& json_text);

    bool operator==(const FlowMatrix& other) const {
        return n_ == other.n_ && upper_ == other.upper_;
    }

  private:
    FlowMatrix() = default;
    int n_ = 0;
    std::vector<BigRat> upper_;
    std::vector<BigRat> subdiag_;
    bool integral_ = false;
};

// The affine injection into the transportation polytope T(alpha, beta):
// row i carries f_{i,n}, f_{i,n-1}, ..., the cell (j, n-j) carries g_j for
// 0 < j < n, and everything below that antidiagonal is zero.
DenseMatrix embed(const FlowMatrix& flow, const NetflowVector& netflow);

// Cells (i, j) of the embedded matrix that can be nonzero: i + j <= n.
inline bool on_support(int n, int i, int j) { return i + j <= n; }

// Projection onto the first n-1 flows into the sink; the image lies in the
// prefix-constrained box with bounds sum_{i<=k} N_i (certified here).
std::vector<BigRat> project_ps(const FlowMatrix& flow, const NetflowVector& netflow);

// Projection onto total outflows x_i = sum_{j>i} f_{ij}; the image lies in
// the parallelepiped prod_i [N_i, s_i] (certified here).
std::vector<BigRat> project_box(const FlowMatrix& flow, const NetflowVector& netflow);

}  // namespace kostant
