#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace comvar::bounds {

/// Largest n accepted by composition enumeration and search (2^29 streams).
inline constexpr int kMaxN = 30;

/// Ordered block sizes (n_1, ..., n_s), each >= 1, summing to n. These index
/// the interval partitions of {1..n}: block h covers the next n_h positions.
class Composition {
public:
    explicit Composition(std::vector<int> blocks);

    static Composition singletons(int n);
    static Composition whole(int n);

    const std::vector<int>& blocks() const { return blocks_; }
    int n() const { return n_; }
    int size() const { return static_cast<int>(blocks_.size()); }

    Composition reversed() const;
    std::string to_string() const; // "1,5,6,5,1"

    bool operator==(const Composition& o) const { return blocks_ == o.blocks_; }
    bool operator!=(const Composition& o) const { return !(*this == o); }

private:
    std::vector<int> blocks_;
    int n_;
};

/// Streams the 2^(n-1) compositions of n in lexicographic order of their
/// block-size sequences: (1,1,...,1) first, (n) last.
class CompositionStream {
public:
    explicit CompositionStream(int n);

    /// Fills `out` with the next composition; false when exhausted.
    bool next(std::vector<int>& out);

private:
    int n_;
    bool done_;
    bool started_;
    std::vector<int> cur_;
};

/// All compositions of n, lexicographic. Intended for small n (tests, CLI).
std::vector<Composition> enumerate_compositions(int n);

enum class Verdict { none, reducible, not_complete_intersection };

const char* to_string(Verdict v);

/// Per-composition record of the equation count, the dimension lower bound
/// for the block-supported nilpotent commuting pairs, the two-parameter
/// scalar-shift orbit bound, and the verdicts they certify.
struct BoundCertificate {
    Composition composition;
    long long equation_count = 0;
    long long ambient_dim = 0;
    long long nt_bound = 0;       // ambient_dim - equation_count
    long long ct_orbit_bound = 0; // nt_bound + 2
    long long dim_ct0 = 0;        // n(n+3)/2
    long long dim_nt0 = 0;        // n(n+1)/2 - 1
    Verdict verdict_ct = Verdict::none;
    Verdict verdict_nt = Verdict::none;
};

/// n(n+3)/2: dimension of the closure of regular commuting triangular pairs.
long long dim_ct0(int n);
/// n(n+1)/2 - 1: same for strictly upper triangular pairs.
long long dim_nt0(int n);

/// Number of scalar equations cutting out the block variety: sum of
/// n_h * n_k over block pairs h < k with k - h >= 2.
long long equation_count(const Composition& j);

/// dim of the block-supported pair space: 2 * sum_{h<k} n_h n_k.
long long ambient_dim(const Composition& j);

/// ambient_dim - equation_count. Also computed through the closed form
/// sum_{h<k} n_h n_k + sum_h n_h n_{h+1}; the two routes must agree.
long long nt_bound(const Composition& j);

/// Fills a certificate and derives both verdicts. The reducibility verdict
/// needs s < n (block pairs then have minimal polynomial degree < n, so the
/// witnessed component avoids the regular locus).
BoundCertificate classify(const Composition& j);

struct SearchResult {
    int n = 0;
    std::uint64_t compositions_scanned = 0;
    BoundCertificate max_nt_bound; // ties: lexicographically least blocks
    BoundCertificate best_ct;      // strongest verdict, then largest bound, then lex
    BoundCertificate best_nt;
    std::array<std::uint64_t, 3> ct_verdict_counts{}; // [none, reducible, not_ci]
    std::array<std::uint64_t, 3> nt_verdict_counts{};
};

/// Exhaustive scan over all 2^(n-1) compositions; deterministic regardless of
/// thread count. threads = 0 picks a hardware default.
SearchResult search(int n, int threads = 0);

struct VmpqComponent {
    int rank_a = 0;
    int rank_b = 0;
    long long dim = 0;
};

/// Component data for pairs (A, B) in M(m,p) x M(p,q) with AB = 0: the
/// maximal rank caps (a, b) with b <= min(p,q), a <= min(p-b, m), and the
/// dimension a(p+m-a) + b(p+q-b) - ab of each.
struct VmpqReport {
    int m = 0, p = 0, q = 0;
    std::vector<VmpqComponent> components;
    bool is_complete_intersection = false; // p >= m + q - 1
};

long long vmpq_component_dim(int m, int p, int q, int a, int b);
VmpqReport vmpq_report(int m, int p, int q);

} // namespace comvar::bounds
