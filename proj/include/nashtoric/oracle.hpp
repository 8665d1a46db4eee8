#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nashtoric/nashfan.hpp"

namespace nashtoric {

/// Thrown when an exhaustive run is requested above the default size ceiling
/// without an explicit override; carries the printed cost estimate.
class CostRefusal : public std::runtime_error {
  public:
    explicit CostRefusal(const std::string& what) : std::runtime_error(what) {}
};

/// Exhaustive enumeration summary: every lambda_{2,n}-subset of Lambda_{3,n}
/// tested for a nonvanishing minor, minimizing exponents deduplicated.
struct OracleResult {
    unsigned n = 0;
    unsigned long long candidates = 0;
    unsigned long long s_count = 0;
    PointCloud points;
};

/// Number of candidate subsets C(lambda_{3,n}, lambda_{2,n}).
BigInt oracle_candidate_count(unsigned n);

/// Streams every subset in S with its exponent m_J to `sink`. Throws
/// CostRefusal for n > 3 unless override_cost is set. `jobs` splits the
/// colex-ordered candidate range into chunks evaluated in parallel; results
/// are merged deterministically.
OracleResult enumerate_S(
    unsigned n, bool override_cost = false, unsigned jobs = 1,
    const std::function<void(const std::vector<MultiIndex>&, const LatticePoint&)>&
        sink = nullptr);

/// As enumerate_S but consulting/filling a JSON cache file in cache_dir.
OracleResult run_oracle(unsigned n, bool override_cost = false,
                        unsigned jobs = 1, const std::string& cache_dir = "");

/// Normal fan of the exhaustive point cloud.
Fan2D oracle_fan(const OracleResult& result);

/// Reconciliation of the constructed family against the exhaustive oracle.
struct CrossCheckReport {
    struct PerK {
        unsigned k = 0;
        long long family_ord = 0;  // f_k at the constructed minimizer
        long long oracle_ord = 0;
        bool ord_match = false;
        bool minimizers_contain_family = false;  // m_{eta_k} and the twin's m
    };

    unsigned n = 0;
    std::vector<PerK> per_k;
    bool fan_refines_resolution = false;
    bool family_subset_of_oracle = false;

    bool pass() const;
};

CrossCheckReport cross_check(const OracleResult& result);

}  // namespace nashtoric
