#include "renyi/sampling.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "renyi/bounds.hpp"
#include "renyi/entropy.hpp"
#include "renyi/errors.hpp"
#include "renyi/extrapolate.hpp"

namespace renyi {
namespace {

constexpr std::uint64_t kChunkSize = 512;
constexpr double kSandwichTol = 1e-9;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

struct Sample {
  double d1;
  double d2;
  double dhd;
};

struct ChunkTally {
  std::uint64_t sandwich = 0;
  std::uint64_t outside = 0;
  std::uint64_t dominance = 0;
};

DeviationChannel make_channel(std::string name, const std::vector<double>& d,
                              const std::vector<double>& edges) {
  DeviationChannel ch;
  ch.name = std::move(name);
  const std::size_t bins = edges.size() - 1;
  ch.counts.assign(bins, 0);
  const double lo = edges.front();
  const double span = edges.back() - lo;
  double sum = 0.0;
  double sum_abs = 0.0;
  ch.min = d.front();
  ch.max = d.front();
  for (double v : d) {
    auto idx = static_cast<std::ptrdiff_t>(std::floor((v - lo) / span * bins));
    idx = std::clamp<std::ptrdiff_t>(idx, 0, static_cast<std::ptrdiff_t>(bins) - 1);
    ++ch.counts[static_cast<std::size_t>(idx)];
    sum += v;
    sum_abs += std::abs(v);
    ch.min = std::min(ch.min, v);
    ch.max = std::max(ch.max, v);
  }
  const double n = static_cast<double>(d.size());
  ch.mean = sum / n;
  ch.mean_abs = sum_abs / n;
  double ss = 0.0;
  for (double v : d) ss += (v - ch.mean) * (v - ch.mean);
  ch.stddev = d.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
  ch.density.resize(bins);
  for (std::size_t b = 0; b < bins; ++b) {
    ch.density[b] = static_cast<double>(ch.counts[b]) / (n * (edges[b + 1] - edges[b]));
  }
  return ch;
}

}  // namespace

RngHandle::RngHandle(std::uint64_t seed) : seed_(seed), engine_(seed) {}

double RngHandle::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RngHandle::normal() {
  if (spare_) {
    const double v = *spare_;
    spare_.reset();
    return v;
  }
  double u, v, s;
  do {
    u = 2.0 * uniform() - 1.0;
    v = 2.0 * uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double m = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * m;
  return u * m;
}

RngHandle RngHandle::substream(std::uint64_t index) const {
  return RngHandle(splitmix64(splitmix64(seed_) ^ splitmix64(index + 1)));
}

ProbVec sample_fisher_rao(int n, RngHandle& rng) {
  if (n < 1) throw EntropyError(ErrorCode::OutOfRange, "N must be >= 1");
  std::vector<double> x(static_cast<std::size_t>(n));
  double norm2 = 0.0;
  for (auto& v : x) {
    const double t = rng.normal();
    v = t * t;
    norm2 += v;
  }
  for (auto& v : x) v /= norm2;
  return ProbVec::make(std::move(x), NormalizeMode::Strict);
}

DeviationStats deviation_study(int n, std::uint64_t count, std::uint64_t seed,
                               const DeviationOptions& options) {
  if (n < 1) throw EntropyError(ErrorCode::OutOfRange, "N must be >= 1");
  if (count < 1) throw EntropyError(ErrorCode::BadCount, "count must be >= 1");
  if (options.bins < 2) throw EntropyError(ErrorCode::BadBins, "bins must be >= 2");

  const std::uint64_t chunks = (count + kChunkSize - 1) / kChunkSize;
  std::vector<Sample> samples(count);
  std::vector<ChunkTally> tallies(chunks);
  const RngHandle root(seed);

  auto run_chunk = [&](std::uint64_t c) {
    RngHandle rng = root.substream(c);
    const std::uint64_t begin = c * kChunkSize;
    const std::uint64_t end = std::min(count, begin + kChunkSize);
    ChunkTally& tally = tallies[c];
    for (std::uint64_t i = begin; i < end; ++i) {
      const ProbVec p = sample_fisher_rao(n, rng);
      const double h1 = shannon(p).nats;
      const double h2 = renyi(p, 2.0).nats;
      const double h3 = renyi(p, 3.0).nats;
      const auto b2 = shannon_bounds_from_H2(h2, n);
      const auto b3 = shannon_bounds_from_H3(h3, n);
      const double star = estimate_star(h2, h3, n).value();
      const double hd = 2.0 * b2.lower.value - b3.lower.value;
      samples[i] = {star - h1, lower_extrap_H2_H3(h2, h3).value() - h1, hd - h1};
      if (h1 < b2.lower.value - kSandwichTol || h1 > b2.upper.value + kSandwichTol ||
          h1 < b3.lower.value - kSandwichTol || h1 > b3.upper.value + kSandwichTol) {
        ++tally.sandwich;
      }
      if (star < b3.lower.value || star > b2.upper.value) ++tally.outside;
      if (b2.upper.value > b3.upper.value + kSandwichTol ||
          b3.lower.value > b2.lower.value + kSandwichTol) {
        ++tally.dominance;
      }
    }
  };

  unsigned threads = options.threads ? options.threads
                                     : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, chunks));
  if (threads <= 1) {
    for (std::uint64_t c = 0; c < chunks; ++c) run_chunk(c);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    {
      std::vector<std::jthread> pool;
      pool.reserve(threads);
      for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
          try {
            for (std::uint64_t c = next++; c < chunks; c = next++) run_chunk(c);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
            next = chunks;
          }
        });
      }
    }
    if (error) std::rethrow_exception(error);
  }

  std::vector<double> d1(count), d2(count), dhd(count);
  double extent = 0.0;
  for (std::uint64_t i = 0; i < count; ++i) {
    d1[i] = samples[i].d1;
    d2[i] = samples[i].d2;
    dhd[i] = samples[i].dhd;
    extent = std::max({extent, std::abs(d1[i]), std::abs(d2[i])});
    if (options.include_hd) extent = std::max(extent, std::abs(dhd[i]));
  }
  if (!(extent > 0.0)) extent = 1.0;

  DeviationStats stats;
  stats.n = n;
  stats.sample_count = count;
  stats.seed = seed;
  stats.algorithm = std::string(RngHandle::kAlgorithm);
  stats.bin_edges.resize(static_cast<std::size_t>(options.bins) + 1);
  for (int b = 0; b <= options.bins; ++b) {
    stats.bin_edges[static_cast<std::size_t>(b)] =
        -extent + 2.0 * extent * b / options.bins;
  }
  stats.bin_edges.back() = extent;
  stats.delta1 = make_channel("delta1", d1, stats.bin_edges);
  stats.delta2 = make_channel("delta2", d2, stats.bin_edges);
  if (options.include_hd) {
    stats.delta_hd = make_channel("delta_hd", dhd, stats.bin_edges);
  }
  for (const auto& t : tallies) {
    stats.sandwich_violations += t.sandwich;
    stats.star_outside_sandwich += t.outside;
    stats.dominance_violations += t.dominance;
  }
  return stats;
}

}  // namespace renyi
