#include "cyberins/threads.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>

namespace cyberins {

int solver_thread_count() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw <= 0) hw = 1;
    if (const char* env = std::getenv("SOLVER_THREADS")) {
        try {
            const int cap = std::stoi(env);
            if (cap >= 1) return std::min(hw, cap);
        } catch (const std::exception&) {
            // malformed value: fall through to machine parallelism
        }
    }
    return hw;
}

}  // namespace cyberins
