#pragma once

#include <atomic>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <thread>
#include <vector>

namespace hypoly {

// Integer powers by repeated squaring; exact and deterministic (std::pow
// routes complex arguments through pow(z, double)).
inline double ipow(double base, int exp) {
  double r = 1.0, b = base;
  for (int e = exp; e > 0; e >>= 1) {
    if (e & 1) r *= b;
    b *= b;
  }
  return r;
}

inline std::complex<double> ipow(std::complex<double> base, int exp) {
  std::complex<double> r = 1.0, b = base;
  for (int e = exp; e > 0; e >>= 1) {
    if (e & 1) r *= b;
    b *= b;
  }
  return r;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t root, std::uint64_t stream) {
  return splitmix64(root ^ splitmix64(stream + 0x632be59bd9b4e019ull));
}

// mt19937_64 engine with hand-rolled output maps so that sampled values do
// not depend on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(splitmix64(seed)) {}

  std::uint64_t next_u64() { return eng_(); }

  double uniform01() {  // [0, 1)
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  double gaussian() {
    // Box-Muller; one value per call keeps the stream position predictable.
    double u1 = uniform01(), u2 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
  }

  int uniform_int(int lo, int hi) {  // inclusive range
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(eng_() % span);
  }

  std::complex<double> unit_circle() {
    const double a = 6.283185307179586477 * uniform01();
    return {std::cos(a), std::sin(a)};
  }

 private:
  std::mt19937_64 eng_;
};

namespace detail {

// Fixed-chunk parallel reduction. The index range is split into a constant
// number of chunks reduced in chunk order, so the result is independent of
// the thread count and of scheduling.
template <class T, class ChunkSum>
T chunked_sum(std::uint64_t total, const ChunkSum& chunk_sum,
              std::uint64_t serial_threshold = (1ull << 14)) {
  if (total == 0) return T{};
  const unsigned hw = std::thread::hardware_concurrency();
  if (total <= serial_threshold || hw <= 1) return chunk_sum(0, total);

  constexpr std::uint64_t kChunks = 64;
  const std::uint64_t nchunks = total < kChunks ? total : kChunks;
  std::vector<T> partial(nchunks);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::uint64_t c = next.fetch_add(1);
      if (c >= nchunks) return;
      const std::uint64_t b = total * c / nchunks;
      const std::uint64_t e = total * (c + 1) / nchunks;
      partial[c] = chunk_sum(b, e);
    }
  };
  const unsigned nthreads = hw < nchunks ? hw : static_cast<unsigned>(nchunks);
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  T acc{};
  for (const T& p : partial) acc += p;
  return acc;
}

}  // namespace detail
}  // namespace hypoly
