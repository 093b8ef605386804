#ifndef CREDEQ_STATS_HPP
#define CREDEQ_STATS_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace credeq {

// A Monte-Carlo estimate with its standard error.
struct MeanSe {
  double value = 0.0;
  double se = 0.0;
};

MeanSe mean_se(std::span<const double> samples);

// Combined standard error of two (assumed independent) estimates.
double combined_se(double se_a, double se_b);

// Accumulates per-sample component vectors and applies the delta method to a
// smooth functional of the component means. The gradient is taken by central
// differences on the functional itself, which is accurate to far better than
// the ~1% needed for a standard error.
class MomentAccumulator {
public:
  explicit MomentAccumulator(std::size_t dim);

  void add(std::span<const double> components);
  void merge(const MomentAccumulator& other);

  std::size_t count() const { return n_; }
  std::size_t dim() const { return dim_; }
  std::vector<double> means() const;

  // Covariance of the MEAN vector (sample covariance / n).
  std::vector<double> mean_covariance() const;

  MeanSe apply(const std::function<double(std::span<const double>)>& f) const;

private:
  std::size_t dim_;
  std::size_t n_ = 0;
  std::vector<double> sum_;
  std::vector<double> cross_; // upper triangle of sum of outer products
};

// Deterministic parallel partition of [0, n) into fixed-size blocks. Block
// boundaries do not depend on the worker count, callers write to disjoint
// slots or merge per-block results in block order, so results are identical
// for any number of workers.
void parallel_blocks(std::size_t n, std::size_t n_workers,
                     const std::function<void(std::size_t block_index, std::size_t begin,
                                              std::size_t end)>& body);

std::size_t block_count(std::size_t n);
std::size_t resolve_workers(std::size_t configured);

} // namespace credeq

#endif
