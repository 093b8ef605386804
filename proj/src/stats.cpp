#include "stats.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace credeq {

MeanSe mean_se(std::span<const double> samples) {
  if (samples.empty()) {
    throw std::invalid_argument("mean_se: empty sample");
  }
  double sum = 0.0;
  for (double v : samples) sum += v;
  const double n = static_cast<double>(samples.size());
  const double mean = sum / n;
  double ss = 0.0;
  for (double v : samples) {
    const double d = v - mean;
    ss += d * d;
  }
  const double var = samples.size() > 1 ? ss / (n - 1.0) : 0.0;
  return {mean, std::sqrt(var / n)};
}

double combined_se(double se_a, double se_b) {
  return std::sqrt(se_a * se_a + se_b * se_b);
}

MomentAccumulator::MomentAccumulator(std::size_t dim)
    : dim_(dim), sum_(dim, 0.0), cross_(dim * (dim + 1) / 2, 0.0) {}

void MomentAccumulator::add(std::span<const double> components) {
  std::size_t k = 0;
  for (std::size_t i = 0; i < dim_; ++i) {
    sum_[i] += components[i];
    for (std::size_t j = i; j < dim_; ++j) {
      cross_[k++] += components[i] * components[j];
    }
  }
  ++n_;
}

void MomentAccumulator::merge(const MomentAccumulator& other) {
  if (other.dim_ != dim_) {
    throw std::invalid_argument("MomentAccumulator::merge: dimension mismatch");
  }
  for (std::size_t i = 0; i < sum_.size(); ++i) sum_[i] += other.sum_[i];
  for (std::size_t i = 0; i < cross_.size(); ++i) cross_[i] += other.cross_[i];
  n_ += other.n_;
}

std::vector<double> MomentAccumulator::means() const {
  if (n_ == 0) {
    throw std::runtime_error("MomentAccumulator: no samples");
  }
  std::vector<double> m(dim_);
  for (std::size_t i = 0; i < dim_; ++i) m[i] = sum_[i] / static_cast<double>(n_);
  return m;
}

std::vector<double> MomentAccumulator::mean_covariance() const {
  const auto m = means();
  const double n = static_cast<double>(n_);
  std::vector<double> cov(dim_ * dim_, 0.0);
  if (n_ < 2) return cov;
  std::size_t k = 0;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i; j < dim_; ++j) {
      const double cij = (cross_[k++] - n * m[i] * m[j]) / (n - 1.0);
      cov[i * dim_ + j] = cij / n;
      cov[j * dim_ + i] = cij / n;
    }
  }
  return cov;
}

MeanSe MomentAccumulator::apply(const std::function<double(std::span<const double>)>& f) const {
  const auto m = means();
  const auto cov = mean_covariance();
  const double value = f(m);

  std::vector<double> grad(dim_);
  std::vector<double> probe = m;
  for (std::size_t i = 0; i < dim_; ++i) {
    const double scale = std::max(std::abs(m[i]), 1e-12);
    const double h = 1e-6 * scale;
    probe[i] = m[i] + h;
    const double up = f(probe);
    probe[i] = m[i] - h;
    const double dn = f(probe);
    probe[i] = m[i];
    grad[i] = (up - dn) / (2.0 * h);
  }

  double var = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      var += grad[i] * cov[i * dim_ + j] * grad[j];
    }
  }
  return {value, std::sqrt(std::max(var, 0.0))};
}

namespace {
constexpr std::size_t kBlockSize = 4096;
}

std::size_t block_count(std::size_t n) {
  return (n + kBlockSize - 1) / kBlockSize;
}

std::size_t resolve_workers(std::size_t configured) {
  if (configured > 0) return configured;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

void parallel_blocks(std::size_t n, std::size_t n_workers,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& body) {
  const std::size_t blocks = block_count(n);
  if (blocks == 0) return;
  const std::size_t workers = std::min(std::max<std::size_t>(n_workers, 1), blocks);

  if (workers == 1) {
    for (std::size_t b = 0; b < blocks; ++b) {
      body(b, b * kBlockSize, std::min(n, (b + 1) * kBlockSize));
    }
    return;
  }

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (;;) {
      const std::size_t b = next.fetch_add(1);
      if (b >= blocks) break;
      body(b, b * kBlockSize, std::min(n, (b + 1) * kBlockSize));
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
}

} // namespace credeq
