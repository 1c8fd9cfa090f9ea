#pragma once

#include <string>
#include <vector>

#include "kostant/errors.hpp"

namespace kostant {

// Netflow vector (N_0, ..., N_{n-1}, -sum N_i) on the complete DAG with
// vertices 0..n. Interior entries may be negative (the 2rho family) as long
// as every partial sum s_k stays nonnegative, i.e. the flow polytope is
// nonempty.
class NetflowVector {
  public:
    static NetflowVector make(std::vector<long long> entries);
    static NetflowVector parse(const std::string& comma_separated);

    int n() const { return n_; }
    const std::vector<long long>& entries() const { return entries_; }
    long long entry(int i) const { return entries_[static_cast<size_t>(i)]; }

    // s_k = N_0 + ... + N_k for k = 0..n-1; cached at construction.
    const std::vector<long long>& partial_sums() const { return s_; }
    long long s(int k) const { return s_[static_cast<size_t>(k)]; }

    // Row/column marginals of the transportation embedding.
    const std::vector<long long>& alpha() const { return s_; }
    const std::vector<long long>& beta() const { return beta_; }

    bool all_interior_positive() const;     // N_i > 0 for i < n
    bool all_interior_nonnegative() const;  // N_i >= 0 for i < n
    bool is_cry() const;                    // (t, 0, ..., 0, -t), t >= 1

    std::string to_string() const;  // comma-separated signed integers

  private:
    NetflowVector() = default;
    std::vector<long long> entries_;
    std::vector<long long> s_;
    std::vector<long long> beta_;
    int n_ = 0;
};

inline NetflowVector make_netflow(std::vector<long long> entries) {
    return NetflowVector::make(std::move(entries));
}

// Prefix-sum dominance order on equal-length integer vectors.
bool dominates(const std::vector<long long>& np, const std::vector<long long>& mp);

enum class FamilyTag {
    cry,            // (t, 0, ..., 0, -t)
    tesler,         // (1, ..., 1, -n)
    dilated_tesler, // (t, ..., t, -nt)
    staircase,      // (t, t+1, ..., t+n-1, -nt-C(n,2))
    two_rho,        // t * (n, n-2, ..., -n+2, -n)
    linear,         // N_i = a*n + i
    constant_an,    // N_i = a*n
    power,          // N_k = ceil(a * k^p)
};

struct NamedFamily {
    FamilyTag tag = FamilyTag::tesler;
    long long t = 1;  // dilation, where applicable
    double a = 1.0;
    double p = 0.0;
};

const char* family_tag_name(FamilyTag tag);
FamilyTag parse_family_tag(const std::string& name);

NetflowVector family(const NamedFamily& f, int n);

}  // namespace kostant
