#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

namespace kcycles {

// Integer partition: weakly decreasing positive parts. The empty partition
// (weight 0) is valid.
class Partition {
 public:
  Partition() = default;
  // Sorts the parts; throws std::invalid_argument on a part < 1.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  // Parses "3,1,1"; the empty string is the empty partition.
  static Partition parse(const std::string& text);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return weight_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  // Union of multisets.
  Partition merged(const Partition& other) const;
  // Removes one copy of `part`; throws if absent.
  Partition without(int part) const;

  // Comma-joined descending parts, "" for the empty partition.
  std::string key() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

// A partition with `zeros` appended zero parts.
struct PaddedPartition {
  Partition base;
  int zeros = 0;

  PaddedPartition(Partition base_partition, int zero_count);

  friend bool operator==(const PaddedPartition&, const PaddedPartition&) = default;
};

// All partitions of n, ordered by number of parts ascending and then
// lexicographically descending. With `max_parts`, longer ones are dropped.
std::vector<Partition> partitions_of(int n, std::optional<int> max_parts = std::nullopt);

// Product over distinct values of (multiplicity)!.
long sym_count(const std::vector<int>& values);
inline long sym_count(const Partition& p) { return sym_count(p.parts()); }

// Ordered tuples of `slots` nonnegative integers summing to m, in
// lexicographically descending order: (m,0,..,0) first, (0,..,0,m) last.
class Compositions {
 public:
  class iterator {
   public:
    using value_type = std::vector<int>;
    using difference_type = std::ptrdiff_t;
    using reference = const std::vector<int>&;
    using pointer = const std::vector<int>*;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_; }

   private:
    friend class Compositions;
    explicit iterator(std::vector<int> first) : current_(std::move(first)), done_(false) {}

    std::vector<int> current_;
    bool done_ = true;
  };

  // Throws std::invalid_argument unless m >= 0 and slots >= 1.
  Compositions(int m, int slots);

  iterator begin() const;
  iterator end() const { return iterator(); }

  int total() const { return m_; }
  int slots() const { return slots_; }

 private:
  int m_;
  int slots_;
};

std::vector<std::vector<int>> compositions(int m, int slots);

}  // namespace kcycles
