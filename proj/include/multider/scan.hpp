#pragma once

#include <functional>
#include <vector>

#include "multider/serialize.hpp"

namespace multider {

/// Worker-pool parallelism to use when the caller does not say: the
/// MULTIDER_JOBS environment variable if set, else the hardware concurrency.
int default_parallelism();

/// Runs independent pure tasks on a bounded worker pool and returns their
/// results in task order, so the aggregate is deterministic regardless of
/// the parallelism. A task that throws contributes {"error": message}.
std::vector<Json> scan_parallel(const std::vector<std::function<Json()>>& tasks,
                                int parallelism);

} // namespace multider
