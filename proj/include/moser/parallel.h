// Serial and OpenMP evaluation of candidate sets.
//
// Both paths produce the same result: the maximum value and the smallest
// index attaining it. The serial loop is the reference used by the tests.

#ifndef MOSER_PARALLEL_H_
#define MOSER_PARALLEL_H_

#include <cstddef>
#include <cstdint>
#include <exception>
#include <utility>

namespace moser {

enum class Exec { kSerial, kParallel };

struct ArgMax {
  int64_t value = -1;
  size_t index = 0;
  bool found = false;
};

inline bool better(int64_t value, size_t index, const ArgMax& cur) {
  if (!cur.found) return true;
  if (value != cur.value) return value > cur.value;
  return index < cur.index;
}

// eval(i) returns a count, or a negative value to skip candidate i.
template <class F>
ArgMax argmax_serial(size_t n, F&& eval) {
  ArgMax best;
  for (size_t i = 0; i < n; ++i) {
    int64_t v = eval(i);
    if (v < 0) continue;
    if (better(v, i, best)) best = {v, i, true};
  }
  return best;
}

template <class F>
ArgMax argmax_parallel(size_t n, F&& eval) {
  ArgMax best;
  std::exception_ptr failure;
#pragma omp parallel
  {
    ArgMax local;
#pragma omp for schedule(dynamic, 8) nowait
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      try {
        int64_t v = eval(static_cast<size_t>(i));
        if (v >= 0 && better(v, static_cast<size_t>(i), local)) {
          local = {v, static_cast<size_t>(i), true};
        }
      } catch (...) {
#pragma omp critical(moser_argmax_error)
        if (!failure) failure = std::current_exception();
      }
    }
#pragma omp critical(moser_argmax_merge)
    if (local.found && better(local.value, local.index, best)) best = local;
  }
  if (failure) std::rethrow_exception(failure);
  return best;
}

template <class F>
ArgMax argmax(size_t n, Exec exec, F&& eval) {
  if (exec == Exec::kSerial) return argmax_serial(n, std::forward<F>(eval));
  return argmax_parallel(n, std::forward<F>(eval));
}

// Runs body(i) for every i; exceptions are rethrown after the loop.
template <class F>
void parallel_for(size_t n, Exec exec, F&& body) {
  if (exec == Exec::kSerial) {
    for (size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 4)
  for (long long i = 0; i < static_cast<long long>(n); ++i) {
    try {
      body(static_cast<size_t>(i));
    } catch (...) {
#pragma omp critical(moser_for_error)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace moser

#endif  // MOSER_PARALLEL_H_
