#include "hdv/core.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>

namespace hdv {

namespace detail {

namespace {

constexpr std::uint64_t kFnvOffsetBasis = 14695981396914018466ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;
constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

}  // namespace

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t hash = kFnvOffsetBasis;
  for (unsigned char c : bytes) {
    hash ^= static_cast<std::uint64_t>(c);
    hash *= kFnvPrime;
  }
  return hash;
}

std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += kGoldenGamma;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double splitmix64_unit(std::uint64_t& state) {
  return static_cast<double>(splitmix64_next(state) >> 11) * 0x1.0p-53;
}

}  // namespace detail

Hypervector Hypervector::from_components(std::vector<std::int8_t> components) {
  if (components.size() < 2) {
    throw std::invalid_argument("hypervector dimension must be >= 2");
  }
  for (std::int8_t c : components) {
    if (c != 1 && c != -1) {
      throw std::invalid_argument("hypervector components must be -1 or +1");
    }
  }
  return Hypervector(std::move(components));
}

Hypervector generate(std::string_view name, Seed seed, std::size_t dimension) {
  if (name.empty()) {
    throw std::invalid_argument("generate: name must be non-empty");
  }
  if (dimension < 2) {
    throw std::invalid_argument("generate: dimension must be >= 2");
  }
  std::uint64_t state = detail::fnv1a64(name) ^ seed.value;
  std::vector<std::int8_t> components(dimension);
  std::size_t i = 0;
  while (i < dimension) {
    const std::uint64_t word = detail::splitmix64_next(state);
    const std::size_t take = std::min<std::size_t>(64, dimension - i);
    for (std::size_t bit = 0; bit < take; ++bit) {
      components[i + bit] =
          ((word >> (63 - bit)) & 1ULL) != 0 ? std::int8_t{1} : std::int8_t{-1};
    }
    i += take;
  }
  return Hypervector(std::move(components));
}

namespace {

void require_same_dimension(std::size_t a, std::size_t b, const char* op) {
  if (a != b) {
    throw std::invalid_argument(std::string(op) + ": dimension mismatch (" +
                                std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

Hypervector bind(const Hypervector& a, const Hypervector& b) {
  require_same_dimension(a.dimension(), b.dimension(), "bind");
  std::vector<std::int8_t> out(a.dimension());
  const auto& ac = a.components_;
  const auto& bc = b.components_;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<std::int8_t>(ac[i] * bc[i]);
  }
  return Hypervector(std::move(out));
}

Hypervector permute(const Hypervector& a, long long k) {
  const auto d = static_cast<long long>(a.dimension());
  const std::size_t shift = static_cast<std::size_t>(((k % d) + d) % d);
  if (shift == 0) {
    return a;
  }
  std::vector<std::int8_t> out(a.components_);
  std::rotate(out.begin(), out.end() - static_cast<std::ptrdiff_t>(shift), out.end());
  return Hypervector(std::move(out));
}

std::int64_t dot(const Hypervector& a, const Hypervector& b) {
  require_same_dimension(a.dimension(), b.dimension(), "dot");
  const auto& ac = a.components();
  const auto& bc = b.components();
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < ac.size(); ++i) {
    sum += static_cast<std::int32_t>(ac[i]) * static_cast<std::int32_t>(bc[i]);
  }
  return sum;
}

double similarity(const Hypervector& a, const Hypervector& b) {
  return static_cast<double>(dot(a, b)) / static_cast<double>(a.dimension());
}

Accumulator::Accumulator(std::size_t dimension) : sums_(dimension, 0) {
  if (dimension < 2) {
    throw std::invalid_argument("accumulator dimension must be >= 2");
  }
}

Accumulator Accumulator::from_sums(std::vector<std::int32_t> sums, std::int64_t count) {
  if (sums.size() < 2) {
    throw std::invalid_argument("accumulator dimension must be >= 2");
  }
  if (count < 0 || count > std::numeric_limits<std::int32_t>::max()) {
    throw std::invalid_argument("accumulator count out of range");
  }
  for (std::int32_t s : sums) {
    const std::int64_t mag = s < 0 ? -static_cast<std::int64_t>(s) : s;
    if (mag > count || ((static_cast<std::int64_t>(s) - count) % 2) != 0) {
      throw std::invalid_argument("accumulator sums violate count/parity invariant");
    }
  }
  Accumulator acc(sums.size());
  acc.sums_ = std::move(sums);
  acc.count_ = count;
  return acc;
}

void Accumulator::add(const Hypervector& v) {
  require_same_dimension(dimension(), v.dimension(), "accumulate");
  if (count_ >= std::numeric_limits<std::int32_t>::max()) {
    throw std::overflow_error("accumulate: count would exceed 32-bit sum range");
  }
  const auto& vc = v.components_;
  for (std::size_t i = 0; i < sums_.size(); ++i) {
    sums_[i] += vc[i];
  }
  ++count_;
}

void Accumulator::merge(const Accumulator& other) {
  require_same_dimension(dimension(), other.dimension(), "merge");
  if (count_ > std::numeric_limits<std::int32_t>::max() - other.count_) {
    throw std::overflow_error("merge: count would exceed 32-bit sum range");
  }
  for (std::size_t i = 0; i < sums_.size(); ++i) {
    sums_[i] += other.sums_[i];
  }
  count_ += other.count_;
}

Hypervector normalize(const Accumulator& acc, Seed seed) {
  if (acc.count() == 0) {
    throw std::invalid_argument("normalize: empty accumulator");
  }
  const auto sums = acc.sums();
  std::vector<std::int8_t> out(sums.size());
  bool any_tie = false;
  for (std::size_t i = 0; i < sums.size(); ++i) {
    if (sums[i] > 0) {
      out[i] = 1;
    } else if (sums[i] < 0) {
      out[i] = -1;
    } else {
      any_tie = true;
      out[i] = 0;
    }
  }
  if (any_tie) {
    const Hypervector tiebreak = generate(detail::tiebreak_name(acc), seed, sums.size());
    for (std::size_t i = 0; i < sums.size(); ++i) {
      if (out[i] == 0) {
        out[i] = tiebreak[i];
      }
    }
  }
  return Hypervector(std::move(out));
}

std::string detail::tiebreak_name(const Accumulator& acc) {
  std::string bytes;
  bytes.reserve(8 + 4 * acc.dimension());
  const auto count = static_cast<std::uint64_t>(acc.count());
  for (int b = 0; b < 8; ++b) {
    bytes.push_back(static_cast<char>((count >> (8 * b)) & 0xff));
  }
  for (std::int32_t sum : acc.sums()) {
    const auto u = static_cast<std::uint32_t>(sum);
    for (int b = 0; b < 4; ++b) {
      bytes.push_back(static_cast<char>((u >> (8 * b)) & 0xff));
    }
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(detail::fnv1a64(bytes)));
  return std::string(kTiebreakName) + ":" + buf;
}

}  // namespace hdv
