/*
   Copyright 2026 The mrdcodes Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef MRD_PARALLEL_HPP
#define MRD_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace mrd {

template <class Hit>
struct ChunkOutcome {
    std::optional<Hit> hit;
    std::uint64_t count = 0;
};

/// Number of workers to use when the caller passes 0.
inline unsigned default_workers() noexcept { return std::max(1u, std::thread::hardware_concurrency()); }

/**
 * Runs fn(chunk, best) for chunk = 0 .. nchunks-1 on a pool of workers and
 * returns the hit from the lowest-numbered chunk that produced one, so the
 * answer does not depend on scheduling. best holds the lowest chunk with a
 * hit seen so far; chunks above it are skipped, and fn may poll it to stop
 * early. count sums the per-chunk counts of the chunks that ran.
 */
template <class Hit, class Fn>
ChunkOutcome<Hit> run_chunks(std::size_t nchunks, unsigned workers, Fn&& fn) {
    if (workers == 0) workers = default_workers();
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(nchunks, 1)));

    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{nchunks};
    std::vector<ChunkOutcome<Hit>> results(nchunks);
    std::mutex err_mu;
    std::exception_ptr err;

    auto work = [&] {
        try {
            for (std::size_t c = next++; c < nchunks; c = next++) {
                if (c > best.load(std::memory_order_relaxed)) continue;
                results[c] = fn(c, static_cast<const std::atomic<std::size_t>&>(best));
                if (results[c].hit) {
                    std::size_t cur = best.load();
                    while (c < cur && !best.compare_exchange_weak(cur, c)) {
                    }
                }
            }
        } catch (...) {
            std::lock_guard lock(err_mu);
            if (!err) err = std::current_exception();
            best = 0;
        }
    };

    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    if (err) std::rethrow_exception(err);

    ChunkOutcome<Hit> out;
    for (std::size_t c = 0; c < nchunks; ++c) {
        out.count += results[c].count;
        if (results[c].hit && !out.hit) out.hit = std::move(results[c].hit);
    }
    return out;
}

}  // namespace mrd

#endif  // MRD_PARALLEL_HPP
