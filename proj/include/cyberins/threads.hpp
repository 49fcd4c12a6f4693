#ifndef CYBERINS_THREADS_HPP
#define CYBERINS_THREADS_HPP

namespace cyberins {

// Worker cap: SOLVER_THREADS if set, otherwise the machine parallelism.
int solver_thread_count();

}  // namespace cyberins

#endif
