#include "kostant/netflow.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace kostant {

NetflowVector NetflowVector::make(std::vector<long long> entries) {
    if (entries.size() < 2)
        throw Error(ErrorKind::BadParams, "netflow vector needs at least 2 entries");
    long long sum = 0;
    for (long long e : entries) sum += e;
    if (sum != 0) throw Error(ErrorKind::NonZeroSum, "netflow entries must sum to zero");

    NetflowVector v;
    v.entries_ = std::move(entries);
    v.n_ = static_cast<int>(v.entries_.size()) - 1;
    v.s_.reserve(static_cast<size_t>(v.n_));
    long long acc = 0;
    for (int k = 0; k < v.n_; ++k) {
        acc += v.entries_[static_cast<size_t>(k)];
        if (acc < 0)
            throw Error(ErrorKind::EmptyPolytope,
                        "partial sum s_" + std::to_string(k) + " is negative");
        v.s_.push_back(acc);
    }
    v.beta_.assign(v.s_.rbegin(), v.s_.rend());
    return v;
}

NetflowVector NetflowVector::parse(const std::string& comma_separated) {
    std::vector<long long> entries;
    std::stringstream ss(comma_separated);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw Error(ErrorKind::BadParams, "empty netflow component");
        size_t pos = 0;
        long long value = 0;
        try {
            value = std::stoll(item, &pos);
        } catch (const std::exception&) {
            throw Error(ErrorKind::BadParams, "bad netflow component '" + item + "'");
        }
        if (pos != item.size())
            throw Error(ErrorKind::BadParams, "bad netflow component '" + item + "'");
        entries.push_back(value);
    }
    return make(std::move(entries));
}

bool NetflowVector::all_interior_positive() const {
    for (int i = 0; i < n_; ++i)
        if (entries_[static_cast<size_t>(i)] <= 0) return false;
    return true;
}

bool NetflowVector::all_interior_nonnegative() const {
    for (int i = 0; i < n_; ++i)
        if (entries_[static_cast<size_t>(i)] < 0) return false;
    return true;
}

bool NetflowVector::is_cry() const {
    if (entries_[0] < 1) return false;
    for (int i = 1; i < n_; ++i)
        if (entries_[static_cast<size_t>(i)] != 0) return false;
    return true;
}

std::string NetflowVector::to_string() const {
    std::string out;
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(entries_[i]);
    }
    return out;
}

bool dominates(const std::vector<long long>& np, const std::vector<long long>& mp) {
    if (np.size() != mp.size())
        throw Error(ErrorKind::LengthMismatch, "dominance needs equal-length vectors");
    long long a = 0, b = 0;
    for (size_t i = 0; i < np.size(); ++i) {
        a += np[i];
        b += mp[i];
        if (a < b) return false;
    }
    return true;
}

const char* family_tag_name(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::cry: return "cry";
        case FamilyTag::tesler: return "tesler";
        case FamilyTag::dilated_tesler: return "dilated_tesler";
        case FamilyTag::staircase: return "staircase";
        case FamilyTag::two_rho: return "two_rho";
        case FamilyTag::linear: return "linear";
        case FamilyTag::constant_an: return "constant_an";
        case FamilyTag::power: return "power";
    }
    return "unknown";
}

FamilyTag parse_family_tag(const std::string& name) {
    if (name == "cry") return FamilyTag::cry;
    if (name == "tesler") return FamilyTag::tesler;
    if (name == "dilated_tesler") return FamilyTag::dilated_tesler;
    if (name == "staircase") return FamilyTag::staircase;
    if (name == "two_rho") return FamilyTag::two_rho;
    if (name == "linear") return FamilyTag::linear;
    if (name == "constant_an") return FamilyTag::constant_an;
    if (name == "power") return FamilyTag::power;
    throw Error(ErrorKind::BadParams, "unknown family '" + name + "'");
}

namespace {

long long near_integer(double x, const char* what) {
    const double r = std::llround(x);
    if (std::abs(x - r) > 1e-9)
        throw Error(ErrorKind::BadParams, std::string(what) + " must be an integer");
    return static_cast<long long>(r);
}

}  // namespace

NetflowVector family(const NamedFamily& f, int n) {
    if (n < 2 && f.tag != FamilyTag::power)
        throw Error(ErrorKind::BadParams, "family requires n >= 2");
    std::vector<long long> e;
    switch (f.tag) {
        case FamilyTag::cry: {
            if (f.t < 1) throw Error(ErrorKind::BadParams, "cry requires t >= 1");
            e.assign(static_cast<size_t>(n) + 1, 0);
            e.front() = f.t;
            e.back() = -f.t;
            break;
        }
        case FamilyTag::tesler: {
            e.assign(static_cast<size_t>(n), 1);
            e.push_back(-static_cast<long long>(n));
            break;
        }
        case FamilyTag::dilated_tesler: {
            if (f.t < 1) throw Error(ErrorKind::BadParams, "dilated_tesler requires t >= 1");
            e.assign(static_cast<size_t>(n), f.t);
            e.push_back(-f.t * n);
            break;
        }
        case FamilyTag::staircase: {
            if (f.t < 0) throw Error(ErrorKind::BadParams, "staircase requires t >= 0");
            long long sum = 0;
            for (int i = 0; i < n; ++i) {
                e.push_back(f.t + i);
                sum += f.t + i;
            }
            e.push_back(-sum);
            break;
        }
        case FamilyTag::two_rho: {
            if (f.t < 1) throw Error(ErrorKind::BadParams, "two_rho requires t >= 1");
            for (int i = 0; i <= n; ++i) e.push_back(f.t * (n - 2LL * i));
            break;
        }
        case FamilyTag::linear: {
            if (f.a < 0) throw Error(ErrorKind::BadParams, "linear requires a >= 0");
            const long long an = near_integer(f.a * n, "a*n");
            long long sum = 0;
            for (int i = 0; i < n; ++i) {
                e.push_back(an + i);
                sum += an + i;
            }
            e.push_back(-sum);
            break;
        }
        case FamilyTag::constant_an: {
            if (f.a <= 0) throw Error(ErrorKind::BadParams, "constant_an requires a > 0");
            const long long an = near_integer(f.a * n, "a*n");
            e.assign(static_cast<size_t>(n), an);
            e.push_back(-an * n);
            break;
        }
        case FamilyTag::power: {
            if (n < 2) throw Error(ErrorKind::BadParams, "power requires n >= 2");
            if (f.a <= 0 || f.p < 0)
                throw Error(ErrorKind::BadParams, "power requires a > 0 and p >= 0");
            long long sum = 0;
            for (int k = 0; k < n; ++k) {
                const double raw = f.a * std::pow(static_cast<double>(k), f.p);
                const long long v = static_cast<long long>(std::ceil(raw - 1e-12));
                e.push_back(v);
                sum += v;
            }
            e.push_back(-sum);
            break;
        }
    }
    return NetflowVector::make(std::move(e));
}

}  // namespace kostant
