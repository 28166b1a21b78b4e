#pragma once

// Hot loops of the library, each in two flavours:
//
//   kernels::serial    straightforward single-threaded reference
//   kernels::parallel  OpenMP version, must return identical results
//
// The unqualified entry points dispatch to the parallel flavour once the
// amount of work crosses a threshold and parallelism is enabled.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "orbispec/grading.hpp"

namespace orbispec::kernels {

/// Cauchy-style convolution of two term maps: sum k_a k'_b {a+b}.
using ConvolveFn = Terms (*)(const Signature&, const Terms&, const Terms&);

/// c_n = sum_{i+j=n} a_i b_j for n = 0..order.
using SeriesProductFn = std::vector<Terms> (*)(const Signature&, std::span<const Terms>, std::span<const Terms>,
                                               std::size_t order);

/// label[x] = min over g of g x g^-1, for a group given by its flattened table.
using ConjugationLabelsFn = std::vector<std::uint32_t> (*)(std::size_t order, std::span<const std::uint32_t> table,
                                                           std::span<const std::uint32_t> inverse);

namespace serial {
Terms convolve(const Signature& sig, const Terms& x, const Terms& y);
std::vector<Terms> series_product(const Signature& sig, std::span<const Terms> a, std::span<const Terms> b,
                                  std::size_t order);
std::vector<std::uint32_t> conjugation_labels(std::size_t order, std::span<const std::uint32_t> table,
                                              std::span<const std::uint32_t> inverse);
}  // namespace serial

namespace parallel {
Terms convolve(const Signature& sig, const Terms& x, const Terms& y);
std::vector<Terms> series_product(const Signature& sig, std::span<const Terms> a, std::span<const Terms> b,
                                  std::size_t order);
std::vector<std::uint32_t> conjugation_labels(std::size_t order, std::span<const std::uint32_t> table,
                                              std::span<const std::uint32_t> inverse);
}  // namespace parallel

Terms convolve(const Signature& sig, const Terms& x, const Terms& y);
std::vector<Terms> series_product(const Signature& sig, std::span<const Terms> a, std::span<const Terms> b,
                                  std::size_t order);
std::vector<std::uint32_t> conjugation_labels(std::size_t order, std::span<const std::uint32_t> table,
                                              std::span<const std::uint32_t> inverse);

/// Global switch, on by default. Results never depend on it.
void set_parallel_enabled(bool enabled);
bool parallel_enabled();

}  // namespace orbispec::kernels
