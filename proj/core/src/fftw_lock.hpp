#pragma once

#include <mutex>

namespace hsu {

std::mutex& fftw_planner_mutex();

}  // namespace hsu
