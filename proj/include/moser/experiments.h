// Experiment drivers behind the result tables. Every row carries the
// witness it was measured with, so it can be re-checked.

#ifndef MOSER_EXPERIMENTS_H_
#define MOSER_EXPERIMENTS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "moser/io.h"
#include "moser/parallel.h"

namespace moser {

struct ExperimentParams {
  int n_min = 6;
  int n_max = 40;
  std::vector<int> sizes = {100, 1000, 10000};  // sweep-bound
  int seeds = 3;                                // sweep-bound, per size
  int k = 5;                                    // sweep-bound
  int instances = 20;                           // random polytopes
  int pn_max = 20;                              // lemma33, theorem55: P_6 .. P_pn_max
  int rotation_budget = 200;                    // theorem64
  int rotations = 5;                            // theorem64, extra sampled rotations
  uint64_t seed = 1;
  bool runtime = false;  // adds wall-clock columns; breaks byte-identity
  Exec exec = Exec::kParallel;
};

struct ExperimentReport {
  std::string id;
  Json params;
  std::vector<std::string> columns;
  std::vector<Json> rows;  // objects keyed by column, plus "witness"
  bool pass = true;

  Json to_json() const;
  std::string to_csv() const;
};

std::vector<std::string> experiment_names();

// Throws kInvalidArgument for an unknown name.
ExperimentReport run_experiment(const std::string& name, const ExperimentParams& params);

}  // namespace moser

#endif  // MOSER_EXPERIMENTS_H_
