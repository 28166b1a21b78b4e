#include <atomic>
#include <iterator>

#include <omp.h>

#include "orbispec/kernels.hpp"

namespace orbispec::kernels::parallel {

Terms convolve(const Signature& sig, const Terms& x, const Terms& y) {
  // Random access into the left operand; each thread accumulates a private
  // map and the maps are merged afterwards. Integer addition is exact and
  // commutative, so the merged map does not depend on the schedule.
  std::vector<Terms::const_iterator> left;
  left.reserve(x.size());
  for (auto it = x.begin(); it != x.end(); ++it) left.push_back(it);

  const int threads = omp_get_max_threads();
  std::vector<Terms> partial(static_cast<std::size_t>(threads));

#pragma omp parallel num_threads(threads)
  {
    Terms& local = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(left.size()); ++i) {
      const auto& [a, ka] = *left[static_cast<std::size_t>(i)];
      for (const auto& [b, kb] : y) local[sig.add(a, b)] += ka * kb;
    }
  }

  Terms out;
  for (auto& part : partial) {
    for (auto& [key, k] : part) out[key] += k;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::vector<Terms> series_product(const Signature& sig, std::span<const Terms> a, std::span<const Terms> b,
                                  std::size_t order) {
  std::vector<Terms> c(order + 1);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t sn = 0; sn <= static_cast<std::ptrdiff_t>(order); ++sn) {
    const auto n = static_cast<std::size_t>(sn);
    Terms acc;
    for (std::size_t i = 0; i <= n; ++i) {
      if (i >= a.size() || n - i >= b.size() || a[i].empty() || b[n - i].empty()) continue;
      for (const auto& [key, k] : serial::convolve(sig, a[i], b[n - i])) acc[key] += k;
    }
    std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
    c[n] = std::move(acc);
  }
  return c;
}

std::vector<std::uint32_t> conjugation_labels(std::size_t order, std::span<const std::uint32_t> table,
                                              std::span<const std::uint32_t> inverse) {
  // Same orbit walk as the serial kernel, with each orbit computed in parallel.
  // Classes are disjoint, so every store in one walk writes the same seed.
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  std::vector<std::uint32_t> label(order, kUnset);
  for (std::size_t x = 0; x < order; ++x) {
    if (label[x] != kUnset) continue;
    const auto seed = static_cast<std::uint32_t>(x);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t sg = 0; sg < static_cast<std::ptrdiff_t>(order); ++sg) {
      const auto g = static_cast<std::size_t>(sg);
      std::uint32_t conj = table[table[g * order + x] * order + inverse[g]];
      std::atomic_ref<std::uint32_t>(label[conj]).store(seed, std::memory_order_relaxed);
    }
  }
  return label;
}

}  // namespace orbispec::kernels::parallel
