#include "kcycles/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <stdexcept>

namespace kcycles {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw std::invalid_argument("partition part must be >= 1, got " + std::to_string(p));
    weight_ += p;
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  if (text.empty()) return Partition();
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    int value = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size()) {
      throw std::invalid_argument("malformed partition: '" + text + "'");
    }
    parts.push_back(value);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return Partition(std::move(parts));
}

Partition Partition::merged(const Partition& other) const {
  std::vector<int> all = parts_;
  all.insert(all.end(), other.parts_.begin(), other.parts_.end());
  return Partition(std::move(all));
}

Partition Partition::without(int part) const {
  std::vector<int> rest = parts_;
  auto it = std::find(rest.begin(), rest.end(), part);
  if (it == rest.end()) throw std::invalid_argument("partition has no part " + std::to_string(part));
  rest.erase(it);
  return Partition(std::move(rest));
}

std::string Partition::key() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

PaddedPartition::PaddedPartition(Partition base_partition, int zero_count)
    : base(std::move(base_partition)), zeros(zero_count) {
  if (zeros < 0) throw std::invalid_argument("negative number of zero parts");
}

namespace {

void partitions_with_length(int n, int length, int max_part, std::vector<int>& prefix,
                            std::vector<Partition>& out) {
  if (length == 0) {
    if (n == 0) out.emplace_back(prefix);
    return;
  }
  // Parts are weakly decreasing, so each remaining part is at least 1 and at
  // most the previous one.
  for (int p = std::min(max_part, n - (length - 1)); p >= 1; --p) {
    if (p * length < n) break;
    prefix.push_back(p);
    partitions_with_length(n - p, length - 1, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n, std::optional<int> max_parts) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative weight");
  std::vector<Partition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  const int longest = max_parts ? std::min(*max_parts, n) : n;
  std::vector<int> prefix;
  for (int length = 1; length <= longest; ++length) {
    partitions_with_length(n, length, n, prefix, out);
  }
  return out;
}

long sym_count(const std::vector<int>& values) {
  std::map<int, long> counts;
  for (int v : values) ++counts[v];
  long result = 1;
  for (const auto& [value, count] : counts) {
    for (long i = 2; i <= count; ++i) result *= i;
  }
  return result;
}

Compositions::Compositions(int m, int slots) : m_(m), slots_(slots) {
  if (m < 0) throw std::invalid_argument("compositions: negative total");
  if (slots < 1) throw std::invalid_argument("compositions: need at least one slot");
}

Compositions::iterator Compositions::begin() const {
  std::vector<int> first(static_cast<std::size_t>(slots_), 0);
  first[0] = m_;
  return iterator(std::move(first));
}

Compositions::iterator& Compositions::iterator::operator++() {
  const std::size_t s = current_.size();
  const int last = current_[s - 1];
  current_[s - 1] = 0;
  for (std::size_t i = s - 1; i-- > 0;) {
    if (current_[i] > 0) {
      --current_[i];
      current_[i + 1] = last + 1;
      return *this;
    }
  }
  done_ = true;
  current_.clear();
  return *this;
}

std::vector<std::vector<int>> compositions(int m, int slots) {
  std::vector<std::vector<int>> out;
  for (const auto& c : Compositions(m, slots)) out.push_back(c);
  return out;
}

}  // namespace kcycles
