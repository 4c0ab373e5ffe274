#include "sidon2d/search.hpp"

#include <stdexcept>

namespace sidon2d {
namespace {

class Backtracker {
 public:
  Backtracker(const SubtractionTable& sub, std::int64_t target)
      : sub_(sub), n_(static_cast<std::int32_t>(sub.size())), target_(target), used_(sub.size(), 0) {}

  bool run() {
    chosen_.assign(1, 0);
    return extend(1);
  }

  const std::vector<std::int32_t>& chosen() const { return chosen_; }

 private:
  bool try_add(std::int32_t c, std::vector<std::int32_t>& marked) {
    for (std::int32_t a : chosen_) {
      const std::int32_t d1 = sub_[c][a];
      const std::int32_t d2 = sub_[a][c];
      if (d1 == d2 || used_[d1] || used_[d2]) return false;
      used_[d1] = used_[d2] = 1;
      marked.push_back(d1);
      marked.push_back(d2);
    }
    return true;
  }

  bool extend(std::int32_t next) {
    if (static_cast<std::int64_t>(chosen_.size()) == target_) return true;
    const std::int64_t need = target_ - static_cast<std::int64_t>(chosen_.size());
    std::vector<std::int32_t> marked;
    for (std::int32_t c = next; n_ - c >= need; ++c) {
      marked.clear();
      if (try_add(c, marked)) {
        chosen_.push_back(c);
        if (extend(c + 1)) return true;
        chosen_.pop_back();
      }
      for (std::int32_t d : marked) used_[d] = 0;
    }
    return false;
  }

  const SubtractionTable& sub_;
  std::int32_t n_;
  std::int64_t target_;
  std::vector<char> used_;
  std::vector<std::int32_t> chosen_;
};

}  // namespace

std::int64_t sidon_counting_bound(std::int64_t n) {
  std::int64_t m = 1;
  while ((m + 1) * m <= n - 1) ++m;
  return m;
}

SidonSearchResult max_sidon_by_table(const SubtractionTable& sub) {
  const auto n = static_cast<std::int64_t>(sub.size());
  if (n == 0) throw std::invalid_argument("empty group");
  for (const auto& row : sub) {
    if (static_cast<std::int64_t>(row.size()) != n) throw std::invalid_argument("subtraction table is not square");
  }
  SidonSearchResult best{1, {0}};
  const std::int64_t bound = sidon_counting_bound(n);
  for (std::int64_t m = 2; m <= bound; ++m) {
    Backtracker bt(sub, m);
    if (!bt.run()) break;
    best = {m, bt.chosen()};
  }
  return best;
}

}  // namespace sidon2d
