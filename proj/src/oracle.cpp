#include "nashtoric/oracle.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "nashtoric/etak.hpp"

namespace nashtoric {

namespace {

constexpr int kCacheVersion = 2;

// Colex rank/unrank over K-subsets of {0..N-1} via the combinatorial number
// system: rank(c) = sum_i C(c[i], i+1).
std::vector<std::size_t> unrank_colex(BigInt rank, std::size_t nn, std::size_t kk) {
    std::vector<std::size_t> c(kk);
    std::size_t hi = nn;
    for (std::size_t i = kk; i-- > 0;) {
        std::size_t m = hi;
        while (m > 0 && binom(static_cast<unsigned long>(m - 1),
                              static_cast<unsigned long>(i + 1)) > rank)
            --m;
        // m - 1 is the largest value with C(m-1, i+1) <= rank.
        c[i] = m - 1;
        rank -= binom(static_cast<unsigned long>(m - 1),
                      static_cast<unsigned long>(i + 1));
        hi = m - 1;
    }
    return c;
}

// Advance c to the colex successor; returns false past the last subset.
bool next_colex(std::vector<std::size_t>& c, std::size_t nn) {
    const std::size_t kk = c.size();
    for (std::size_t i = 0; i < kk; ++i) {
        const std::size_t cap = (i + 1 < kk) ? c[i + 1] : nn;
        if (c[i] + 1 < cap) {
            ++c[i];
            for (std::size_t j = 0; j < i; ++j) c[j] = j;
            return true;
        }
    }
    return false;
}

struct ChunkResult {
    unsigned long long s_count = 0;
    // m_J -> witness count, deterministic by point order.
    std::map<LatticePoint, unsigned long long> hits;
};

}  // namespace

BigInt oracle_candidate_count(unsigned n) {
    return binom(lambda_count(3, n), lambda_count(2, n));
}

OracleResult enumerate_S(
    unsigned n, bool override_cost, unsigned jobs,
    const std::function<void(const std::vector<MultiIndex>&, const LatticePoint&)>&
        sink) {
    if (n == 0) throw std::invalid_argument("n must be positive");
    const BigInt total = oracle_candidate_count(n);
    if (n > 3 && !override_cost) {
        std::ostringstream os;
        os << "exhaustive enumeration at n=" << n << " needs "
           << to_string(total)
           << " exact determinants; pass the cost override to proceed";
        throw CostRefusal(os.str());
    }

    const LambdaSet lam3 = enumerate_lambda(3, n);
    const std::size_t nn = lam3.size();
    const std::size_t kk = lambda_count(2, n);

    if (jobs == 0) jobs = 1;
    // Streaming sinks need the single in-order pass.
    if (sink) jobs = 1;
    if (BigInt(jobs) > total) jobs = static_cast<unsigned>(total.get_ui());

    std::vector<ChunkResult> parts(jobs);
    auto work = [&](unsigned job) {
        const BigInt lo = total * job / jobs;
        const BigInt hi = total * (job + 1) / jobs;
        if (lo >= hi) return;
        BigInt count = hi - lo;
        std::vector<std::size_t> c = unrank_colex(lo, nn, kk);
        std::vector<MultiIndex> J(kk);
        ChunkResult& out = parts[job];
        for (BigInt i = 0; i < count; ++i) {
            for (std::size_t q = 0; q < kk; ++q) J[q] = lam3.elements[c[q]];
            if (is_in_S(n, J, /*filter=*/true)) {
                ++out.s_count;
                const LatticePoint m = m_of(n, J);
                ++out.hits[m];
                if (sink) sink(J, m);
            }
            if (!next_colex(c, nn)) break;
        }
    };

    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work, j);
        for (std::thread& t : pool) t.join();
    }

    OracleResult result;
    result.n = n;
    result.candidates = total.get_ui();
    result.points.n = n;
    std::map<LatticePoint, unsigned long long> merged;
    for (const ChunkResult& part : parts) {
        result.s_count += part.s_count;
        for (const auto& [p, cnt] : part.hits) merged[p] += cnt;
    }
    for (const auto& [p, cnt] : merged)
        result.points.points.push_back(PointCloud::Entry{p, {}, cnt});
    return result;
}

OracleResult run_oracle(unsigned n, bool override_cost, unsigned jobs,
                        const std::string& cache_dir) {
    namespace fs = std::filesystem;
    fs::path cache_file;
    if (!cache_dir.empty()) {
        cache_file = fs::path(cache_dir) /
                     ("oracle-n" + std::to_string(n) + "-v" +
                      std::to_string(kCacheVersion) + ".json");
        std::ifstream in(cache_file);
        if (in) {
            nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
            if (!j.is_discarded() && j.value("n", 0u) == n &&
                j.value("cache_version", 0) == kCacheVersion) {
                OracleResult r;
                r.n = n;
                r.candidates = j.at("candidates").get<unsigned long long>();
                r.s_count = j.at("s_count").get<unsigned long long>();
                r.points.n = n;
                for (const auto& e : j.at("points")) {
                    PointCloud::Entry entry;
                    entry.p = {e.at("point")[0].get<long long>(),
                               e.at("point")[1].get<long long>()};
                    entry.witness_count = e.at("witness_count").get<unsigned long long>();
                    r.points.points.push_back(std::move(entry));
                }
                return r;
            }
        }
    }

    OracleResult r = enumerate_S(n, override_cost, jobs);

    if (!cache_file.empty()) {
        nlohmann::ordered_json j;
        j["cache_version"] = kCacheVersion;
        j["n"] = n;
        j["candidates"] = r.candidates;
        j["s_count"] = r.s_count;
        j["points"] = nlohmann::ordered_json::array();
        for (const PointCloud::Entry& e : r.points.points) {
            nlohmann::ordered_json pe;
            pe["point"] = {e.p.x, e.p.y};
            pe["witness_count"] = e.witness_count;
            j["points"].push_back(std::move(pe));
        }
        std::error_code ec;
        fs::create_directories(cache_file.parent_path(), ec);
        std::ofstream out(cache_file);
        if (out) out << j.dump(2) << '\n';
    }
    return r;
}

Fan2D oracle_fan(const OracleResult& result) { return newton_fan(result.points); }

bool CrossCheckReport::pass() const {
    if (!fan_refines_resolution || !family_subset_of_oracle) return false;
    for (const PerK& e : per_k)
        if (!e.ord_match || !e.minimizers_contain_family) return false;
    return true;
}

CrossCheckReport cross_check(const OracleResult& result) {
    const unsigned n = result.n;
    CrossCheckReport report;
    report.n = n;

    for (unsigned k = 1; k <= n; ++k) {
        const EtaKReport ek = verify_main(n, k);
        CrossCheckReport::PerK entry;
        entry.k = k;
        entry.family_ord = ek.f_value;
        std::vector<LatticePoint> minimizers;
        const LatticePoint dir{static_cast<long long>(k),
                               1 - static_cast<long long>(k)};
        entry.oracle_ord = ord_value(result.points, dir, &minimizers);
        entry.ord_match = entry.oracle_ord == entry.family_ord;
        auto has = [&](const LatticePoint& p) {
            return std::find(minimizers.begin(), minimizers.end(), p) !=
                   minimizers.end();
        };
        entry.minimizers_contain_family = has(ek.m_k) && has(ek.m_twin);
        report.per_k.push_back(entry);
    }

    report.fan_refines_resolution =
        refines(oracle_fan(result), minimal_resolution_fan(n));

    report.family_subset_of_oracle = true;
    const std::vector<LatticePoint> oracle_pts = result.points.coordinates();
    for (const PointCloud::Entry& e : family_points(n).points) {
        if (!std::binary_search(oracle_pts.begin(), oracle_pts.end(), e.p)) {
            report.family_subset_of_oracle = false;
            break;
        }
    }
    return report;
}

}  // namespace nashtoric
