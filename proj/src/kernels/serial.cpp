#include <atomic>

#include "orbispec/kernels.hpp"

namespace orbispec::kernels {
namespace {

std::atomic<bool> g_parallel{true};

// Below these sizes the thread start-up cost dominates.
constexpr std::size_t kConvolveThreshold = 4096;
constexpr std::size_t kSeriesThreshold = 8;
constexpr std::size_t kConjugationThreshold = 256;

void drop_zeros(Terms& t) {
  std::erase_if(t, [](const auto& kv) { return kv.second == 0; });
}

}  // namespace

namespace serial {

Terms convolve(const Signature& sig, const Terms& x, const Terms& y) {
  Terms out;
  for (const auto& [a, ka] : x) {
    for (const auto& [b, kb] : y) {
      out[sig.add(a, b)] += ka * kb;
    }
  }
  drop_zeros(out);
  return out;
}

std::vector<Terms> series_product(const Signature& sig, std::span<const Terms> a, std::span<const Terms> b,
                                  std::size_t order) {
  std::vector<Terms> c(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    for (std::size_t i = 0; i <= n; ++i) {
      if (i >= a.size() || n - i >= b.size() || a[i].empty() || b[n - i].empty()) continue;
      for (const auto& [key, k] : serial::convolve(sig, a[i], b[n - i])) c[n][key] += k;
    }
    drop_zeros(c[n]);
  }
  return c;
}

std::vector<std::uint32_t> conjugation_labels(std::size_t order, std::span<const std::uint32_t> table,
                                              std::span<const std::uint32_t> inverse) {
  // Orbit walk: each unlabelled element seeds its class, labelled by the smallest member.
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  std::vector<std::uint32_t> label(order, kUnset);
  for (std::size_t x = 0; x < order; ++x) {
    if (label[x] != kUnset) continue;
    // x is the smallest unlabelled index, hence the smallest member of its orbit.
    for (std::size_t g = 0; g < order; ++g) {
      std::uint32_t conj = table[table[g * order + x] * order + inverse[g]];
      if (label[conj] == kUnset) label[conj] = static_cast<std::uint32_t>(x);
    }
  }
  return label;
}

}  // namespace serial

Terms convolve(const Signature& sig, const Terms& x, const Terms& y) {
  if (g_parallel.load(std::memory_order_relaxed) && x.size() * y.size() >= kConvolveThreshold) {
    return parallel::convolve(sig, x, y);
  }
  return serial::convolve(sig, x, y);
}

std::vector<Terms> series_product(const Signature& sig, std::span<const Terms> a, std::span<const Terms> b,
                                  std::size_t order) {
  if (g_parallel.load(std::memory_order_relaxed) && order >= kSeriesThreshold) {
    return parallel::series_product(sig, a, b, order);
  }
  return serial::series_product(sig, a, b, order);
}

std::vector<std::uint32_t> conjugation_labels(std::size_t order, std::span<const std::uint32_t> table,
                                              std::span<const std::uint32_t> inverse) {
  if (g_parallel.load(std::memory_order_relaxed) && order >= kConjugationThreshold) {
    return parallel::conjugation_labels(order, table, inverse);
  }
  return serial::conjugation_labels(order, table, inverse);
}

void set_parallel_enabled(bool enabled) { g_parallel.store(enabled, std::memory_order_relaxed); }
bool parallel_enabled() { return g_parallel.load(std::memory_order_relaxed); }

}  // namespace orbispec::kernels
