#include "powstr/strata.hpp"

#include <numeric>
#include <stdexcept>

namespace powstr {

PartitionVector::PartitionVector(std::vector<std::uint32_t> parts)
    : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0)
    parts_.pop_back();
}

std::uint32_t PartitionVector::count(std::size_t multiplicity) const noexcept {
  if (multiplicity == 0 || multiplicity > parts_.size())
    return 0;
  return parts_[multiplicity - 1];
}

std::uint64_t PartitionVector::weight() const noexcept {
  std::uint64_t w = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i)
    w += (i + 1) * std::uint64_t{parts_[i]};
  return w;
}

std::uint64_t PartitionVector::support() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), std::uint64_t{0});
}

std::string PartitionVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i)
      s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

namespace {

// Fills parts[pos..] so that sum_{i>=pos} (i+1) parts[i] == remaining,
// larger leading entries first.
void enumerate(std::vector<std::uint32_t> &parts, std::size_t pos,
               std::uint64_t remaining, std::vector<PartitionVector> &out) {
  if (remaining == 0) {
    out.emplace_back(parts);
    return;
  }
  if (pos >= parts.size())
    return;
  const std::uint64_t size = pos + 1;
  for (std::uint64_t c = remaining / size + 1; c-- > 0;) {
    parts[pos] = static_cast<std::uint32_t>(c);
    enumerate(parts, pos + 1, remaining - c * size, out);
  }
  parts[pos] = 0;
}

Integer falling_factorial(const Integer &m, std::uint64_t n) {
  Integer r = 1;
  for (std::uint64_t i = 0; i < n; ++i)
    r *= m - i;
  return r;
}

Integer factorial(std::uint64_t n) {
  Integer r = 1;
  for (std::uint64_t i = 2; i <= n; ++i)
    r *= i;
  return r;
}

Integer exact_div(const Integer &num, const Integer &den, const char *where) {
  Integer q, rem;
  boost::multiprecision::divide_qr(num, den, q, rem);
  if (!rem.is_zero())
    throw std::logic_error(std::string(where) + ": inexact division");
  return q;
}

} // namespace

std::vector<PartitionVector> partition_vectors(std::int64_t k) {
  if (k < 0)
    throw std::invalid_argument("partition_vectors: k must be >= 0");
  std::vector<PartitionVector> out;
  std::vector<std::uint32_t> parts(static_cast<std::size_t>(k), 0);
  enumerate(parts, 0, static_cast<std::uint64_t>(k), out);
  return out;
}

Integer partition_count(std::uint64_t n) {
  // Coin-change recurrence over part sizes 1..n.
  std::vector<Integer> p(n + 1, Integer(0));
  p[0] = 1;
  for (std::uint64_t part = 1; part <= n; ++part)
    for (std::uint64_t j = part; j <= n; ++j)
      p[j] += p[j - part];
  return p[n];
}

Integer stratum_chi_unordered(const Integer &m, const PartitionVector &kvec) {
  Integer den = 1;
  for (auto k : kvec.parts())
    den *= factorial(k);
  return exact_div(falling_factorial(m, kvec.support()), den,
                   "stratum_chi_unordered");
}

Integer stratum_chi_ordered(const Integer &m, std::uint64_t k,
                            const PartitionVector &kvec) {
  if (kvec.weight() != k)
    throw std::invalid_argument("stratum_chi_ordered: partition vector " +
                                kvec.to_string() + " has weight " +
                                std::to_string(kvec.weight()) + ", expected " +
                                std::to_string(k));
  Integer den = 1;
  for (std::size_t i = 1; i <= kvec.parts().size(); ++i) {
    auto ki = kvec.count(i);
    den *= boost::multiprecision::pow(factorial(i), ki) * factorial(ki);
  }
  Integer set_partitions = exact_div(factorial(k), den, "stratum_chi_ordered");
  return set_partitions * falling_factorial(m, kvec.support());
}

TruncatedSeries power_geometric_chi(std::span<const Integer> a,
                                    const Integer &m, std::size_t order) {
  const RingModel z = RingModel::integers();
  std::vector<RingElement> c;
  c.reserve(order + 1);
  c.push_back(RingElement::one(z));
  for (std::size_t k = 1; k <= order; ++k) {
    Integer total = 0;
    for (const auto &kvec : partition_vectors(static_cast<std::int64_t>(k))) {
      Integer weight = 1;
      for (std::size_t i = 1; i <= kvec.parts().size() && !weight.is_zero(); ++i) {
        auto ki = kvec.count(i);
        if (ki == 0)
          continue;
        const Integer ai = i <= a.size() ? a[i - 1] : Integer(0);
        weight *= boost::multiprecision::pow(ai, ki);
      }
      if (!weight.is_zero())
        total += stratum_chi_unordered(m, kvec) * weight;
    }
    c.push_back(RingElement::constant(z, total));
  }
  return TruncatedSeries(z, std::move(c));
}

Integer cat_sym_strata_chi(const Integer &m, std::int64_t k) {
  if (k < 0)
    throw std::invalid_argument("cat_sym_strata_chi: k must be >= 0");
  Integer total = 0;
  for (const auto &kvec : partition_vectors(k)) {
    Integer mult = 1;
    for (std::size_t i = 1; i <= kvec.parts().size(); ++i)
      mult *= boost::multiprecision::pow(partition_count(i), kvec.count(i));
    total += stratum_chi_unordered(m, kvec) * mult;
  }
  return total;
}

TruncatedSeries config_classes_chi(const Integer &m, std::size_t order) {
  const RingModel z = RingModel::integers();
  std::vector<RingElement> c;
  c.reserve(order + 1);
  for (std::size_t k = 0; k <= order; ++k)
    c.push_back(RingElement::constant(z, generalized_binomial(m, k)));
  return TruncatedSeries(z, std::move(c));
}

} // namespace powstr
