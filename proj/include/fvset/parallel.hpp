#pragma once

#include "fvset/exact.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace fvset {

/// Shard count for sweeps: FVSET_SHARDS if set and positive, else the
/// hardware concurrency (at least 1).
inline unsigned shard_count() {
    if (const char* env = std::getenv("FVSET_SHARDS")) {
        try {
            long v = std::stol(env);
            if (v > 0) return static_cast<unsigned>(std::min(v, 256L));
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/**
 * Runs `work(lo, hi, out)` on contiguous slices of [first, last] and returns
 * the per-slice results in slice order, so merged output is independent of
 * the shard count.
 */
template <typename Result>
std::vector<Result> sharded(const Integer& first, const Integer& last, unsigned shards,
                            const std::function<void(const Integer&, const Integer&, Result&)>& work) {
    std::vector<Result> results;
    if (last < first) return results;
    const Integer span = last - first + 1;
    if (Integer(shards) > span) shards = span.convert_to<unsigned>();
    shards = std::max(1u, shards);
    results.resize(shards);
    if (shards == 1) {
        work(first, last, results[0]);
        return results;
    }
    std::vector<std::thread> pool;
    pool.reserve(shards);
    std::vector<std::exception_ptr> errors(shards);
    for (unsigned s = 0; s < shards; ++s) {
        Integer lo = first + span * s / shards;
        Integer hi = first + span * (s + 1) / shards - 1;
        pool.emplace_back([&, s, lo, hi] {
            try {
                work(lo, hi, results[s]);
            } catch (...) {
                errors[s] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

}  // namespace fvset
