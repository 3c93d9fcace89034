#include "comvar/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace comvar::bounds {

namespace {

void check_n(int n) {
    if (n < 1 || n > kMaxN)
        throw std::invalid_argument("composition order n must lie in [1, " +
                                    std::to_string(kMaxN) + "], got " + std::to_string(n));
}

long long pair_sum(std::span<const int> blocks) {
    // sum_{h<k} n_h n_k = (n^2 - sum n_h^2) / 2
    long long total = 0, squares = 0;
    for (int b : blocks) {
        total += b;
        squares += static_cast<long long>(b) * b;
    }
    return (total * total - squares) / 2;
}

long long adjacent_sum(std::span<const int> blocks) {
    long long s = 0;
    for (std::size_t h = 0; h + 1 < blocks.size(); ++h)
        s += static_cast<long long>(blocks[h]) * blocks[h + 1];
    return s;
}

long long equation_count_span(std::span<const int> blocks) {
    return pair_sum(blocks) - adjacent_sum(blocks);
}

long long ambient_dim_span(std::span<const int> blocks) { return 2 * pair_sum(blocks); }

long long nt_bound_span(std::span<const int> blocks) {
    const long long direct = ambient_dim_span(blocks) - equation_count_span(blocks);
    const long long closed = pair_sum(blocks) + adjacent_sum(blocks);
    if (direct != closed)
        throw std::logic_error("nt_bound: the two computation routes disagree");
    return direct;
}

struct Verdicts {
    Verdict ct;
    Verdict nt;
};

Verdicts verdicts_for(std::span<const int> blocks, int n, long long bound) {
    const long long ct0 = dim_ct0(n);
    const long long nt0 = dim_nt0(n);
    const bool proper = static_cast<int>(blocks.size()) < n;

    Verdict ct = Verdict::none;
    if (bound + 2 > ct0 || bound > ct0)
        ct = Verdict::not_complete_intersection;
    else if (proper && bound + 2 >= ct0)
        ct = Verdict::reducible;

    Verdict nt = Verdict::none;
    if (bound > nt0)
        nt = Verdict::not_complete_intersection;
    else if (proper && bound >= nt0)
        nt = Verdict::reducible;

    return {ct, nt};
}

// Decodes a cut mask (bit i set = cut after position i+1) into block sizes.
int blocks_from_mask(int n, std::uint32_t mask, std::array<int, kMaxN>& out) {
    int s = 0;
    int run = 1;
    for (int i = 0; i < n - 1; ++i) {
        if (mask & (1u << i)) {
            out[s++] = run;
            run = 1;
        } else {
            ++run;
        }
    }
    out[s++] = run;
    return s;
}

bool lex_less(std::span<const int> a, std::span<const int> b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

} // namespace

Composition::Composition(std::vector<int> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.empty()) throw std::invalid_argument("Composition: no blocks");
    long long sum = 0;
    for (int b : blocks_) {
        if (b < 1) throw std::invalid_argument("Composition: block sizes must be positive");
        sum += b;
    }
    if (sum > kMaxN)
        throw std::invalid_argument("Composition: order exceeds " + std::to_string(kMaxN));
    n_ = static_cast<int>(sum);
}

Composition Composition::singletons(int n) {
    check_n(n);
    return Composition(std::vector<int>(static_cast<std::size_t>(n), 1));
}

Composition Composition::whole(int n) {
    check_n(n);
    return Composition({n});
}

Composition Composition::reversed() const {
    std::vector<int> r(blocks_.rbegin(), blocks_.rend());
    return Composition(std::move(r));
}

std::string Composition::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (i) os << ',';
        os << blocks_[i];
    }
    return os.str();
}

CompositionStream::CompositionStream(int n) : n_(n), done_(false), started_(false) {
    check_n(n);
    cur_.assign(static_cast<std::size_t>(n), 1);
}

bool CompositionStream::next(std::vector<int>& out) {
    if (done_) return false;
    if (!started_) {
        started_ = true;
        out = cur_;
        return true;
    }
    // Lexicographic successor: drop the last block, add 1 to the new last
    // block, then pad the remainder with unit blocks.
    if (cur_.size() == 1) {
        done_ = true;
        return false;
    }
    const int dropped = cur_.back();
    cur_.pop_back();
    cur_.back() += 1;
    cur_.insert(cur_.end(), static_cast<std::size_t>(dropped - 1), 1);
    out = cur_;
    return true;
}

std::vector<Composition> enumerate_compositions(int n) {
    check_n(n);
    std::vector<Composition> all;
    all.reserve(n <= 20 ? (1u << (n - 1)) : 0);
    CompositionStream stream(n);
    std::vector<int> blocks;
    while (stream.next(blocks)) all.emplace_back(blocks);
    return all;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::none: return "none";
        case Verdict::reducible: return "reducible";
        case Verdict::not_complete_intersection: return "not_complete_intersection";
    }
    return "none";
}

long long dim_ct0(int n) { return static_cast<long long>(n) * (n + 3) / 2; }

long long dim_nt0(int n) { return static_cast<long long>(n) * (n + 1) / 2 - 1; }

long long equation_count(const Composition& j) { return equation_count_span(j.blocks()); }

long long ambient_dim(const Composition& j) { return ambient_dim_span(j.blocks()); }

long long nt_bound(const Composition& j) { return nt_bound_span(j.blocks()); }

BoundCertificate classify(const Composition& j) {
    BoundCertificate cert{j};
    const int n = j.n();
    cert.equation_count = equation_count(j);
    cert.ambient_dim = ambient_dim(j);
    cert.nt_bound = nt_bound(j);
    cert.ct_orbit_bound = cert.nt_bound + 2;
    cert.dim_ct0 = dim_ct0(n);
    cert.dim_nt0 = dim_nt0(n);
    const Verdicts v = verdicts_for(j.blocks(), n, cert.nt_bound);
    cert.verdict_ct = v.ct;
    cert.verdict_nt = v.nt;
    return cert;
}

namespace {

// Per-thread running bests, kept as masks so the scan stays allocation-free.
struct ChunkBest {
    bool has = false;
    std::uint32_t bound_mask = 0;
    long long bound = -1;
    std::uint32_t ct_mask = 0;
    int ct_rank = -1;
    long long ct_bound = -1;
    std::uint32_t nt_mask = 0;
    int nt_rank = -1;
    long long nt_bound2 = -1;
    std::array<std::uint64_t, 3> ct_counts{};
    std::array<std::uint64_t, 3> nt_counts{};
};

int rank_of(Verdict v) { return static_cast<int>(v); }

// Prefer larger (rank, bound); break ties toward the lexicographically least
// block sequence so the result is independent of scan order.
bool better(int n, int rank_a, long long bound_a, std::uint32_t mask_a, int rank_b,
            long long bound_b, std::uint32_t mask_b) {
    if (rank_a != rank_b) return rank_a > rank_b;
    if (bound_a != bound_b) return bound_a > bound_b;
    std::array<int, kMaxN> ba{}, bb{};
    const int sa = blocks_from_mask(n, mask_a, ba);
    const int sb = blocks_from_mask(n, mask_b, bb);
    return lex_less({ba.data(), static_cast<std::size_t>(sa)},
                    {bb.data(), static_cast<std::size_t>(sb)});
}

void scan_range(int n, std::uint32_t begin, std::uint32_t end, ChunkBest& best) {
    std::array<int, kMaxN> blocks{};
    for (std::uint32_t mask = begin; mask < end; ++mask) {
        const int s = blocks_from_mask(n, mask, blocks);
        const std::span<const int> span{blocks.data(), static_cast<std::size_t>(s)};
        const long long bound = nt_bound_span(span);
        const Verdicts v = verdicts_for(span, n, bound);
        best.ct_counts[static_cast<std::size_t>(rank_of(v.ct))]++;
        best.nt_counts[static_cast<std::size_t>(rank_of(v.nt))]++;

        if (!best.has || better(n, 0, bound, mask, 0, best.bound, best.bound_mask)) {
            best.bound = bound;
            best.bound_mask = mask;
        }
        if (!best.has ||
            better(n, rank_of(v.ct), bound, mask, best.ct_rank, best.ct_bound, best.ct_mask)) {
            best.ct_rank = rank_of(v.ct);
            best.ct_bound = bound;
            best.ct_mask = mask;
        }
        if (!best.has ||
            better(n, rank_of(v.nt), bound, mask, best.nt_rank, best.nt_bound2, best.nt_mask)) {
            best.nt_rank = rank_of(v.nt);
            best.nt_bound2 = bound;
            best.nt_mask = mask;
        }
        best.has = true;
    }
}

Composition composition_from_mask(int n, std::uint32_t mask) {
    std::array<int, kMaxN> blocks{};
    const int s = blocks_from_mask(n, mask, blocks);
    return Composition(std::vector<int>(blocks.begin(), blocks.begin() + s));
}

} // namespace

SearchResult search(int n, int threads) {
    check_n(n);
    const std::uint64_t total = 1ull << (n - 1);
    if (threads <= 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        threads = static_cast<int>(hw == 0 ? 1 : hw);
    }
    const std::uint64_t min_chunk = 1u << 12;
    const int workers =
        static_cast<int>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(1, total / min_chunk)));

    std::vector<ChunkBest> bests(static_cast<std::size_t>(workers));
    if (workers == 1) {
        scan_range(n, 0, static_cast<std::uint32_t>(total), bests[0]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        const std::uint64_t chunk = (total + workers - 1) / workers;
        for (int t = 0; t < workers; ++t) {
            const std::uint64_t lo = chunk * static_cast<std::uint64_t>(t);
            const std::uint64_t hi = std::min(total, lo + chunk);
            pool.emplace_back([n, lo, hi, &bests, t] {
                scan_range(n, static_cast<std::uint32_t>(lo), static_cast<std::uint32_t>(hi),
                           bests[static_cast<std::size_t>(t)]);
            });
        }
        for (auto& th : pool) th.join();
    }

    ChunkBest merged;
    for (const ChunkBest& b : bests) {
        if (!b.has) continue;
        for (int k = 0; k < 3; ++k) {
            merged.ct_counts[static_cast<std::size_t>(k)] += b.ct_counts[static_cast<std::size_t>(k)];
            merged.nt_counts[static_cast<std::size_t>(k)] += b.nt_counts[static_cast<std::size_t>(k)];
        }
        if (!merged.has || better(n, 0, b.bound, b.bound_mask, 0, merged.bound, merged.bound_mask)) {
            merged.bound = b.bound;
            merged.bound_mask = b.bound_mask;
        }
        if (!merged.has ||
            better(n, b.ct_rank, b.ct_bound, b.ct_mask, merged.ct_rank, merged.ct_bound, merged.ct_mask)) {
            merged.ct_rank = b.ct_rank;
            merged.ct_bound = b.ct_bound;
            merged.ct_mask = b.ct_mask;
        }
        if (!merged.has ||
            better(n, b.nt_rank, b.nt_bound2, b.nt_mask, merged.nt_rank, merged.nt_bound2, merged.nt_mask)) {
            merged.nt_rank = b.nt_rank;
            merged.nt_bound2 = b.nt_bound2;
            merged.nt_mask = b.nt_mask;
        }
        merged.has = true;
    }

    SearchResult result;
    result.n = n;
    result.compositions_scanned = total;
    result.max_nt_bound = classify(composition_from_mask(n, merged.bound_mask));
    result.best_ct = classify(composition_from_mask(n, merged.ct_mask));
    result.best_nt = classify(composition_from_mask(n, merged.nt_mask));
    result.ct_verdict_counts = merged.ct_counts;
    result.nt_verdict_counts = merged.nt_counts;
    return result;
}

long long vmpq_component_dim(int m, int p, int q, int a, int b) {
    return static_cast<long long>(a) * (p + m - a) + static_cast<long long>(b) * (p + q - b) -
           static_cast<long long>(a) * b;
}

VmpqReport vmpq_report(int m, int p, int q) {
    if (m < 1 || p < 1 || q < 1)
        throw std::invalid_argument("vmpq_report: m, p, q must be positive");
    VmpqReport report;
    report.m = m;
    report.p = p;
    report.q = q;
    report.is_complete_intersection = p >= m + q - 1;
    const int bmax = std::min(p, q);
    // a_cap(b) = min(p - b, m) is non-increasing in b, so (a_cap(b), b) is
    // maximal exactly when b = bmax or a_cap drops at b + 1.
    for (int b = 0; b <= bmax; ++b) {
        const int a = std::min(p - b, m);
        const bool maximal = (b == bmax) || std::min(p - b - 1, m) < a;
        if (maximal) report.components.push_back({a, b, vmpq_component_dim(m, p, q, a, b)});
    }
    return report;
}

} // namespace comvar::bounds
