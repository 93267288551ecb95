#include "kcycles/cyclic_shuffle.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "kcycles/errors.hpp"

namespace kcycles {

namespace {

void validate_kinds(const std::vector<int>& kinds) {
  if (kinds.size() % 2 == 0) throw std::invalid_argument("need an odd number of kinds");
  for (int n : kinds) {
    if (n < 1 || n % 2 == 0) {
      throw std::invalid_argument("kind sizes must be positive odd integers, got " + std::to_string(n));
    }
  }
}

bool odd_inversions(const int* values, std::size_t n) {
  bool odd = false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (values[i] > values[j]) odd = !odd;
    }
  }
  return odd;
}

}  // namespace

CyclicShuffle::CyclicShuffle(std::vector<Letter> word, std::vector<int> kinds)
    : word_(std::move(word)), kinds_(std::move(kinds)) {
  const int total = std::accumulate(kinds_.begin(), kinds_.end(), 0);
  if (static_cast<int>(word_.size()) != total) throw std::invalid_argument("word length differs from kind sizes");
  for (const Letter& l : word_) {
    if (l.kind < 0 || l.kind >= static_cast<int>(kinds_.size()) || l.index < 1 ||
        l.index > kinds_[static_cast<std::size_t>(l.kind)]) {
      throw std::invalid_argument("letter outside the alphabet");
    }
  }
}

CyclicShuffles::CyclicShuffles(std::vector<int> kinds, const EnumCaps& caps) : kinds_(std::move(kinds)) {
  validate_kinds(kinds_);
  const int total = std::accumulate(kinds_.begin(), kinds_.end(), 0);
  if (total > caps.max_letters) throw CapExceeded("letters", caps.max_letters, total);
}

Integer CyclicShuffles::expected_count() const {
  Integer count = 1;
  long prefix = 0;
  for (std::size_t i = 0; i + 1 < kinds_.size(); ++i) {
    prefix += kinds_[i];
    count *= prefix;
  }
  return count;
}

CyclicShuffles::iterator::iterator(const std::vector<int>* kinds)
    : kinds_(kinds), choices_(kinds->size(), 0), done_(false) {
  rebuild();
}

void CyclicShuffles::iterator::rebuild() {
  const std::vector<int>& kinds = *kinds_;
  std::vector<Letter> word;
  for (int i = 1; i <= kinds[0]; ++i) word.push_back({0, i});
  for (std::size_t kind = 1; kind < kinds.size(); ++kind) {
    std::vector<Letter> block;
    for (int i = 1; i <= kinds[kind]; ++i) block.push_back({static_cast<int>(kind), i});
    word.insert(word.begin() + choices_[kind] + 1, block.begin(), block.end());
  }
  current_ = CyclicShuffle(std::move(word), kinds);
}

CyclicShuffles::iterator& CyclicShuffles::iterator::operator++() {
  const std::vector<int>& kinds = *kinds_;
  // Block `kind` may follow any of the n_0 + .. + n_{kind-1} letters placed
  // before it.
  int prefix = std::accumulate(kinds.begin(), kinds.end() - 1, 0);
  for (std::size_t kind = kinds.size(); kind-- > 1;) {
    if (choices_[kind] + 1 < prefix) {
      ++choices_[kind];
      rebuild();
      return *this;
    }
    choices_[kind] = 0;
    prefix -= kinds[kind - 1];
  }
  done_ = true;
  return *this;
}

Integer oriented_sign_sum(const CyclicShuffle& shuffle) {
  const std::vector<int>& kinds = shuffle.kinds();
  const std::vector<Letter>& word = shuffle.word();
  std::vector<int> offset(kinds.size(), 0);
  for (std::size_t i = 1; i < kinds.size(); ++i) offset[i] = offset[i - 1] + kinds[i - 1];

  std::vector<int> ranks(word.size());
  std::vector<std::vector<int>> positions(kinds.size());
  for (std::size_t p = 0; p < word.size(); ++p) {
    const Letter& l = word[p];
    ranks[p] = offset[static_cast<std::size_t>(l.kind)] + l.index - 1;
    auto& slot = positions[static_cast<std::size_t>(l.kind)];
    slot.resize(static_cast<std::size_t>(kinds[static_cast<std::size_t>(l.kind)]));
    slot[static_cast<std::size_t>(l.index - 1)] = static_cast<int>(p);
  }
  const bool orientation_odd = odd_inversions(ranks.data(), ranks.size());

  // Odometer over one chosen letter per kind.
  std::vector<int> pick(kinds.size(), 0);
  std::vector<int> chosen(kinds.size());
  long total = 0;
  while (true) {
    for (std::size_t kind = 0; kind < kinds.size(); ++kind) chosen[kind] = positions[kind][pick[kind]];
    total += odd_inversions(chosen.data(), chosen.size()) ? -1 : 1;
    std::size_t kind = kinds.size();
    while (kind-- > 0) {
      if (++pick[kind] < kinds[kind]) break;
      pick[kind] = 0;
    }
    if (kind == static_cast<std::size_t>(-1)) break;
  }
  return Integer(orientation_odd ? -total : total);
}

Integer tree_poly_bruteforce(const std::vector<int>& kinds, const EnumCaps& caps) {
  Integer total = 0;
  for (const CyclicShuffle& s : CyclicShuffles(kinds, caps)) total += oriented_sign_sum(s);
  return total;
}

}  // namespace kcycles
