#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "comvar/bounds.hpp"

namespace comvar::pointcount {

/// Exact point counts; q^24-scale values overflow 64 bits, so counts are
/// 128-bit with overflow checks on every multiply.
using count_t = unsigned __int128;

std::string to_decimal(count_t v);

/// Raised when an enumeration would evaluate more candidates than allowed.
/// `required` saturates at the 128-bit maximum for astronomically large jobs.
class budget_exceeded : public std::runtime_error {
public:
    budget_exceeded(count_t required_candidates, std::uint64_t budget, bool saturated);

    count_t required;
    std::uint64_t budget;
    bool required_saturated;
};

struct EnumerationOptions {
    std::uint64_t budget = 1'000'000'000; // candidates evaluated after factoring
    int threads = 0;                      // 0 = hardware default
    bool factor_free = true;              // factor out coordinates in no equation
};

/// Exact counts per prime for one variety, plus the number of affine
/// coordinates of its ambient space (so count <= q^free always).
struct PointCountTable {
    std::string variety;
    long long free_coordinate_count = 0;
    std::vector<std::pair<std::uint32_t, count_t>> counts; // sorted by prime
};

struct PairSlope {
    std::uint32_t q1 = 0, q2 = 0;
    double slope = 0.0;
    long long rounded = 0;
    double residual = 0.0; // |slope - rounded|
};

struct DimensionEstimate {
    long long estimated_dim = 0;
    bool consistent = false; // all prime pairs round to the same integer
    std::vector<PairSlope> pairs;
};

/// Pairs of strictly upper triangular n x n matrices over F_q with XY = YX.
count_t count_nt(int n, std::uint32_t q, const EnumerationOptions& opts = {});

/// Same restricted to pairs supported outside the blocks of j.
count_t count_nt_composition(const bounds::Composition& j, std::uint32_t q,
                             const EnumerationOptions& opts = {});

/// Pairs (A, B) in M(m,p) x M(p,q) over F_q with AB = 0, optionally
/// restricted to rank A <= rank_cap_a and rank B <= rank_cap_b.
count_t count_vmpq(int m, int p, int q_dims, std::uint32_t field_q,
                   std::optional<int> rank_cap_a = std::nullopt,
                   std::optional<int> rank_cap_b = std::nullopt,
                   const EnumerationOptions& opts = {});

/// Log-slope dimension estimate across >= 2 primes with nonzero counts:
/// each pair contributes round(ln(N2/N1) / ln(q2/q1)); agreement of all
/// pairs makes the estimate consistent, otherwise the median is reported.
DimensionEstimate estimate_dimension(const PointCountTable& table);

PointCountTable table_nt(int n, const std::vector<std::uint32_t>& primes,
                         const EnumerationOptions& opts = {});
PointCountTable table_nt_composition(const bounds::Composition& j,
                                     const std::vector<std::uint32_t>& primes,
                                     const EnumerationOptions& opts = {});
PointCountTable table_vmpq(int m, int p, int q_dims, const std::vector<std::uint32_t>& primes,
                           std::optional<int> rank_cap_a = std::nullopt,
                           std::optional<int> rank_cap_b = std::nullopt,
                           const EnumerationOptions& opts = {});

/// Exhaustive decomposition check for 4 x 4 nilpotent commuting pairs:
/// every point must lie in the x23 = y23 = 0 locus or in the locus where
/// the 2 x 3 matrix of columns (1,2), (2,3), (3,4) has rank <= 1.
struct ExampleAReport {
    std::uint32_t q = 0;
    count_t total = 0;
    count_t in_nt4_1 = 0;
    count_t in_nt4_0 = 0;
    count_t in_both = 0;
    count_t uncovered = 0;
};

ExampleAReport verify_example_a(std::uint32_t q, const EnumerationOptions& opts = {});

/// Checks that z_{i,j} -> z_{n+1-j,n+1-i} applied to both matrices maps
/// commuting pairs to commuting pairs. Exhaustive for n <= 4, otherwise
/// sampled from pairs (X, h(X)) with random X and random h, h(0) = 0.
struct InvolutionReport {
    int n = 0;
    std::uint32_t q = 0;
    bool exhaustive = false;
    count_t tested = 0;
    bool holds = false;
};

InvolutionReport verify_involution(int n, std::uint32_t q, std::uint64_t samples = 200,
                                   std::uint64_t seed = 1,
                                   const EnumerationOptions& opts = {});

} // namespace comvar::pointcount
