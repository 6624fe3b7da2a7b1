#pragma once

// Euler-characteristic shadows of the stratified constructions: strata of
// symmetric powers indexed by partition vectors, the direct expansion of
// (A(t))^m over Z, and the stratified categorical symmetric power.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "powstr/ring.hpp"
#include "powstr/series.hpp"

namespace powstr {

/// (k_1, k_2, ..., k_r): k_i points of multiplicity i. Trailing zeros are
/// trimmed on construction.
class PartitionVector {
public:
  PartitionVector() = default;
  explicit PartitionVector(std::vector<std::uint32_t> parts);

  std::span<const std::uint32_t> parts() const noexcept { return parts_; }
  /// k_i, zero beyond the stored length.
  std::uint32_t count(std::size_t multiplicity) const noexcept;
  /// sum i * k_i
  std::uint64_t weight() const noexcept;
  /// sum k_i
  std::uint64_t support() const noexcept;

  std::string to_string() const;

  friend bool operator==(const PartitionVector &, const PartitionVector &) = default;

private:
  std::vector<std::uint32_t> parts_;
};

/// All partition vectors of weight k, lexicographically descending by parts:
/// k=2 gives (2), (0,1).
std::vector<PartitionVector> partition_vectors(std::int64_t k);

/// Number of partitions of n.
Integer partition_count(std::uint64_t n);

/// m (m-1) ... (m-K+1) / prod k_i!, K = support.
Integer stratum_chi_unordered(const Integer &m, const PartitionVector &kvec);

/// (k! / prod (i!)^{k_i} k_i!) * m (m-1) ... (m-K+1); k must equal the weight.
Integer stratum_chi_ordered(const Integer &m, std::uint64_t k,
                            const PartitionVector &kvec);

/// (1 + sum a_i t^i)^m over Z by summing strata; a_i beyond the list are 0.
TruncatedSeries power_geometric_chi(std::span<const Integer> a,
                                    const Integer &m, std::size_t order);

/// sum over partition vectors of weight k of
/// stratum_chi_unordered(m, kvec) * prod p(i)^{k_i}.
Integer cat_sym_strata_chi(const Integer &m, std::int64_t k);

/// Coefficient k is binom(m, k).
TruncatedSeries config_classes_chi(const Integer &m, std::size_t order);

} // namespace powstr
