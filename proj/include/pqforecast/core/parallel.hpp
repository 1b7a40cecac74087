#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace pqf::core {

/// Calls fn(i) for i in [0, n) on up to `jobs` threads. Work is claimed from a
/// shared counter, so callers must write results by index. The first exception
/// thrown (lowest index) is rethrown after all workers finish.
template <typename Fn>
void parallel_for(std::size_t n, int jobs, Fn&& fn) {
	const auto workers = static_cast<std::size_t>(std::clamp<std::size_t>(jobs < 1 ? 1 : jobs, 1, n == 0 ? 1 : n));
	if (workers <= 1) {
		for (std::size_t i = 0; i < n; ++i) {
			fn(i);
		}
		return;
	}
	std::atomic<std::size_t> next{0};
	std::mutex error_mutex;
	std::exception_ptr error;
	std::size_t error_index = n;
	auto work = [&] {
		for (;;) {
			const std::size_t i = next.fetch_add(1);
			if (i >= n) {
				return;
			}
			try {
				fn(i);
			} catch (...) {
				std::lock_guard lock(error_mutex);
				if (i < error_index) {
					error_index = i;
					error = std::current_exception();
				}
			}
		}
	};
	std::vector<std::thread> pool;
	pool.reserve(workers - 1);
	for (std::size_t t = 1; t < workers; ++t) {
		pool.emplace_back(work);
	}
	work();
	for (auto& t : pool) {
		t.join();
	}
	if (error) {
		std::rethrow_exception(error);
	}
}

} // namespace pqf::core
