#include "kostant/lidskii.hpp"

#include <algorithm>
#include <ostream>

#include "kostant/closed_forms.hpp"

namespace kostant {

namespace {

void require_nonnegative(const NetflowVector& netflow) {
    if (!netflow.all_interior_nonnegative())
        throw Error(ErrorKind::NegativeEntry, "Lidskii expansion needs N_i >= 0");
}

long long choose2(long long n) { return n * (n - 1) / 2; }

}  // namespace

void positive_compositions(const NetflowVector& netflow,
                           const std::function<void(const WeakComposition&)>& visit) {
    require_nonnegative(netflow);
    const int n = netflow.n();
    const long long total = choose2(n);

    // Upper bounds j_i <= N_i + n - 1 - i and suffix slack for pruning.
    std::vector<long long> cap(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) cap[static_cast<size_t>(i)] = netflow.entry(i) + n - 1 - i;
    std::vector<long long> suffix_cap(static_cast<size_t>(n) + 1, 0);
    for (int i = n - 1; i >= 0; --i)
        suffix_cap[static_cast<size_t>(i)] = suffix_cap[static_cast<size_t>(i) + 1] + cap[static_cast<size_t>(i)];

    WeakComposition j;
    j.parts.assign(static_cast<size_t>(n), 0);

    // delta prefix sums for the dominance filter.
    std::vector<long long> delta_prefix(static_cast<size_t>(n));
    long long acc = 0;
    for (int i = 0; i < n; ++i) {
        acc += n - 1 - i;
        delta_prefix[static_cast<size_t>(i)] = acc;
    }

    auto rec = [&](auto&& self, int i, long long placed) -> void {
        if (i == n) {
            if (placed == total) visit(j);
            return;
        }
        const long long remaining = total - placed;
        const long long hi = std::min(cap[static_cast<size_t>(i)], remaining);
        // Dominance: prefix of j must stay >= prefix of delta.
        const long long lo_dominance = delta_prefix[static_cast<size_t>(i)] - placed;
        // Capacity: the rest must be able to absorb what is left.
        const long long lo_capacity = remaining - suffix_cap[static_cast<size_t>(i) + 1];
        const long long lo = std::max({0LL, lo_dominance, lo_capacity});
        for (long long v = hi; v >= lo; --v) {  // descending: CRY maximizer first
            j.parts[static_cast<size_t>(i)] = v;
            self(self, i + 1, placed + v);
        }
        j.parts[static_cast<size_t>(i)] = 0;
    };
    rec(rec, 0, 0);
}

std::vector<WeakComposition> positive_compositions(const NetflowVector& netflow) {
    std::vector<WeakComposition> out;
    positive_compositions(netflow, [&](const WeakComposition& j) { out.push_back(j); });
    return out;
}

BigInt lidskii_term(const NetflowVector& netflow, const WeakComposition& j,
                    const ResourceLimits& limits) {
    require_nonnegative(netflow);
    const int n = netflow.n();
    if (j.parts.size() != static_cast<size_t>(n))
        throw Error(ErrorKind::LengthMismatch, "composition length must be n");

    BigInt binom_product = 1;
    for (int i = 0; i < n; ++i) {
        const long long ji = j.parts[static_cast<size_t>(i)];
        if (ji < 0) return 0;
        binom_product *= binomial(BigInt(netflow.entry(i) + n - 1 - i), ji);
        if (binom_product == 0) return 0;
    }

    // Inner Kostant value on n vertices: the netflow is j - delta, which
    // sums to zero. An infeasible inner vector means a zero term.
    std::vector<long long> inner(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        inner[static_cast<size_t>(i)] = j.parts[static_cast<size_t>(i)] - (n - 1 - i);
    long long prefix = 0;
    for (int i = 0; i + 1 < n; ++i) {
        prefix += inner[static_cast<size_t>(i)];
        if (prefix < 0) return 0;
    }
    const NetflowVector inner_netflow = NetflowVector::make(std::move(inner));
    return binom_product * count_exact(inner_netflow, limits);
}

BigInt lidskii_count(const NetflowVector& netflow, const ResourceLimits& limits) {
    BigInt total = 0;
    positive_compositions(netflow, [&](const WeakComposition& j) {
        const BigInt term = lidskii_term(netflow, j, limits);
        internal_check(term > 0, "positive_compositions produced a vanishing term");
        total += term;
    });
    return total;
}

BigInt s_plus(const NetflowVector& netflow, const ResourceLimits& limits) {
    require_nonnegative(netflow);
    if (netflow.is_cry()) return inversions_at_most(netflow.n() - 1, netflow.entry(0));
    (void)limits;
    BigInt count = 0;
    positive_compositions(netflow, [&](const WeakComposition&) { ++count; });
    return count;
}

BigInt m_n(const NetflowVector& netflow, const ResourceLimits& limits) {
    BigInt best = 0;
    positive_compositions(netflow, [&](const WeakComposition& j) {
        const BigInt term = lidskii_term(netflow, j, limits);
        if (term > best) best = term;
    });
    if (best == 0)
        throw Error(ErrorKind::Internal, "Lidskii expansion has no positive term");
    return best;
}

BoundReport lidskii_bounds(const NetflowVector& netflow, const ResourceLimits& limits) {
    BigInt best = 0;
    BigInt terms = 0;
    positive_compositions(netflow, [&](const WeakComposition& j) {
        const BigInt term = lidskii_term(netflow, j, limits);
        ++terms;
        if (term > best) best = term;
    });
    internal_check(best > 0 && terms > 0, "Lidskii expansion has no positive term");
    BoundReport report;
    report.log_lower = big_log(best);
    report.log_upper = big_log(best * terms);
    report.method = BoundMethod::lidskii;
    report.certified = true;
    return report;
}

void lidskii_term_csv(const NetflowVector& netflow, std::ostream& out,
                      const ResourceLimits& limits) {
    const int n = netflow.n();
    out << "j,binomial,kostant,term\n";
    positive_compositions(netflow, [&](const WeakComposition& j) {
        BigInt binom_product = 1;
        for (int i = 0; i < n; ++i)
            binom_product *= binomial(BigInt(netflow.entry(i) + n - 1 - i),
                                      j.parts[static_cast<size_t>(i)]);
        const BigInt term = lidskii_term(netflow, j, limits);
        internal_check(binom_product > 0 && term % binom_product == 0,
                       "term does not factor through its binomial part");
        out << '"';
        for (size_t i = 0; i < j.parts.size(); ++i) {
            if (i) out << ',';
            out << j.parts[i];
        }
        const BigInt kostant_factor = term / binom_product;
        out << "\"," << binom_product.str() << ',' << kostant_factor.str() << ',' << term.str()
            << '\n';
    });
}

CryLargeTBounds cry_large_t_bounds(int n, long long t) {
    if (n < 2 || t < 1) throw Error(ErrorKind::BadParams, "need n >= 2 and t >= 1");
    // Regime t >= n^3/2, compared exactly.
    if (2 * t < static_cast<long long>(n) * n * n)
        throw Error(ErrorKind::RegimeViolation,
                    "bounds require t >= n^3/2; got t=" + std::to_string(t));

    BigInt lower = binomial(BigInt(t + n - 1), choose2(n));
    for (int i = 0; i <= n - 2; ++i) lower *= catalan(i);
    const BigInt upper = factorial(n - 1) * lower;

    CryLargeTBounds out;
    out.lower = lower;
    out.upper = upper;
    out.report.log_lower = big_log(lower);
    out.report.log_upper = big_log(upper);
    out.report.method = BoundMethod::closed_form;
    out.report.certified = true;
    return out;
}

}  // namespace kostant
