#pragma once

#include <algorithm>
#include <thread>
#include <vector>

namespace cliquepoly::detail
{
    // Runs work(i) for i in [0, count), striding indices across up to `threads` workers.
    // Callers write results into per-index slots and reduce them in index order afterwards,
    // which keeps the outcome independent of the thread count.
    template <typename F>
    auto parallel_for(int count, unsigned threads, F && work) -> void
    {
        threads = std::clamp<unsigned>(threads, 1, unsigned(std::max(count, 1)));
        if (threads == 1) {
            for (int i = 0; i < count; ++i)
                work(i);
            return;
        }

        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                for (int i = int(t); i < count; i += int(threads))
                    work(i);
            });
        for (auto & th : pool)
            th.join();
    }
}
