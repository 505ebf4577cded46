#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace demchar {

enum class Execution { serial, parallel };

/// Runs fn(k) for k in [0, n). In parallel mode indices are dealt round-robin
/// to hardware threads; callers write results into
/// preallocated slots so the outcome does not depend on scheduling. The
/// first exception thrown by any worker is rethrown.
template <class Fn>
void for_each_index(std::size_t n, Execution exec, Fn &&fn)
{
	const std::size_t hw = std::max<std::size_t>(1, std::thread::hardware_concurrency());
	if (exec == Execution::serial || n < 2 || hw == 1)
	{
		for (std::size_t k = 0; k < n; ++k)
			fn(k);
		return;
	}

	const std::size_t workers = std::min(hw, n);
	std::exception_ptr error;
	std::mutex error_mutex;
	{
		std::vector<std::jthread> pool;
		pool.reserve(workers);
		for (std::size_t t = 0; t < workers; ++t)
		{
			pool.emplace_back([&, t] {
				try
				{
					for (std::size_t k = t; k < n; k += workers)
						fn(k);
				}
				catch (...)
				{
					std::lock_guard lock(error_mutex);
					if (!error)
						error = std::current_exception();
				}
			});
		}
	}
	if (error)
		std::rethrow_exception(error);
}

} // namespace demchar
