#include "sidon2d/group.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "sidon2d/numeric.hpp"

namespace sidon2d {

GroupSpec::GroupSpec(std::vector<std::int64_t> moduli) : moduli_(std::move(moduli)) {
  if (moduli_.empty()) throw std::invalid_argument("group needs at least one cyclic factor");
  for (std::int64_t m : moduli_) {
    if (m < 2) throw std::invalid_argument("cyclic factor order " + std::to_string(m) + " is below 2");
    if (order_ > std::numeric_limits<std::int64_t>::max() / m) {
      throw std::invalid_argument("group order overflows");
    }
    order_ *= m;
  }
}

bool GroupSpec::contains(const GroupElement& a) const {
  if (a.residues.size() != moduli_.size()) return false;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (a.residues[i] < 0 || a.residues[i] >= moduli_[i]) return false;
  }
  return true;
}

void GroupSpec::validate(const GroupElement& a) const {
  if (a.residues.size() != moduli_.size()) {
    throw std::invalid_argument("element has " + std::to_string(a.residues.size()) +
                                " components, group has " + std::to_string(moduli_.size()));
  }
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (a.residues[i] < 0 || a.residues[i] >= moduli_[i]) {
      throw std::invalid_argument("residue " + std::to_string(a.residues[i]) + " out of range for Z_" +
                                  std::to_string(moduli_[i]));
    }
  }
}

GroupElement GroupSpec::identity() const { return GroupElement{std::vector<std::int64_t>(moduli_.size(), 0)}; }

GroupElement GroupSpec::element(std::int64_t index) const {
  GroupElement a{std::vector<std::int64_t>(moduli_.size(), 0)};
  index = floor_mod(index, order_);
  for (std::size_t i = moduli_.size(); i-- > 0;) {
    a.residues[i] = index % moduli_[i];
    index /= moduli_[i];
  }
  return a;
}

std::int64_t GroupSpec::index(const GroupElement& a) const {
  std::int64_t v = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i) v = v * moduli_[i] + a.residues[i];
  return v;
}

GroupElement group_op(const GroupSpec& g, const GroupElement& a, const GroupElement& b, GroupOp op) {
  g.validate(a);
  if (op != GroupOp::neg) g.validate(b);
  GroupElement r{std::vector<std::int64_t>(g.rank(), 0)};
  for (std::size_t i = 0; i < g.rank(); ++i) {
    const std::int64_t m = g.moduli()[i];
    switch (op) {
      case GroupOp::add: r.residues[i] = (a.residues[i] + b.residues[i]) % m; break;
      case GroupOp::sub: r.residues[i] = floor_mod(a.residues[i] - b.residues[i], m); break;
      case GroupOp::neg: r.residues[i] = floor_mod(-a.residues[i], m); break;
    }
  }
  return r;
}

GroupElement group_add(const GroupSpec& g, const GroupElement& a, const GroupElement& b) {
  return group_op(g, a, b, GroupOp::add);
}
GroupElement group_sub(const GroupSpec& g, const GroupElement& a, const GroupElement& b) {
  return group_op(g, a, b, GroupOp::sub);
}
GroupElement group_neg(const GroupSpec& g, const GroupElement& a) { return group_op(g, a, a, GroupOp::neg); }

SidonSequence SidonSequence::cyclic(std::int64_t n, const std::vector<std::int64_t>& residues) {
  SidonSequence s{GroupSpec::cyclic(n), {}};
  s.elements.reserve(residues.size());
  for (std::int64_t r : residues) s.elements.push_back(GroupElement{{r}});
  return s;
}

void SidonSequence::validate() const {
  std::vector<std::int64_t> idx;
  idx.reserve(elements.size());
  for (const auto& e : elements) {
    group.validate(e);
    idx.push_back(group.index(e));
  }
  std::sort(idx.begin(), idx.end());
  if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) {
    throw std::invalid_argument("sequence contains a repeated element");
  }
}

std::vector<std::int64_t> SidonSequence::cyclic_residues() const {
  if (!group.is_cyclic_form()) throw std::invalid_argument("sequence is not over a cyclic group");
  std::vector<std::int64_t> out;
  out.reserve(elements.size());
  for (const auto& e : elements) out.push_back(e.residues.front());
  return out;
}

namespace {

// Index arithmetic on the packed representation, avoiding per-pair allocation.
class PackedGroup {
 public:
  explicit PackedGroup(const GroupSpec& g) : g_(g) {}

  std::int64_t combine(std::int64_t a, std::int64_t b, bool subtract) const {
    std::int64_t result = 0, place = 1;
    for (std::size_t i = g_.rank(); i-- > 0;) {
      const std::int64_t m = g_.moduli()[i];
      const std::int64_t x = a % m, y = b % m;
      result += (subtract ? floor_mod(x - y, m) : (x + y) % m) * place;
      place *= m;
      a /= m;
      b /= m;
    }
    return result;
  }

 private:
  const GroupSpec& g_;
};

// Records the first pair producing each value; flat table when small.
class FirstSeen {
 public:
  explicit FirstSeen(std::int64_t order) {
    if (order <= (1 << 24)) flat_.assign(static_cast<std::size_t>(order), -1);
  }

  // Returns the previous pair code for value, or -1 after recording code.
  std::int64_t record(std::int64_t value, std::int64_t code) {
    if (!flat_.empty()) {
      std::int64_t& slot = flat_[static_cast<std::size_t>(value)];
      if (slot >= 0) return slot;
      slot = code;
      return -1;
    }
    auto [it, inserted] = map_.emplace(value, code);
    return inserted ? -1 : it->second;
  }

 private:
  std::vector<std::int64_t> flat_;
  std::unordered_map<std::int64_t, std::int64_t> map_;
};

enum class PairKind { ordered_distinct, unordered_with_repeat, unordered_distinct };

std::optional<SidonViolation> find_collision(const SidonSequence& s, PairKind kind) {
  s.validate();
  const GroupSpec& g = s.group;
  const PackedGroup packed(g);
  const auto m = static_cast<std::int64_t>(s.elements.size());
  std::vector<std::int64_t> idx;
  idx.reserve(s.elements.size());
  for (const auto& e : s.elements) idx.push_back(g.index(e));

  FirstSeen seen(g.order());
  const bool subtract = kind == PairKind::ordered_distinct;
  for (std::int64_t i = 0; i < m; ++i) {
    const std::int64_t j_begin = kind == PairKind::ordered_distinct ? 0
                                 : kind == PairKind::unordered_with_repeat ? i
                                                                           : i + 1;
    for (std::int64_t j = j_begin; j < m; ++j) {
      if (kind == PairKind::ordered_distinct && i == j) continue;
      const std::int64_t value = packed.combine(idx[i], idx[j], subtract);
      const std::int64_t prev = seen.record(value, i * m + j);
      if (prev >= 0) {
        const auto pi = prev / m, pj = prev % m;
        return SidonViolation{{s.elements[pi], s.elements[pj]}, {s.elements[i], s.elements[j]}, g.element(value)};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<SidonViolation> verify_sidon(const SidonSequence& s) {
  return find_collision(s, PairKind::ordered_distinct);
}

std::optional<SidonViolation> verify_sidon_sums(const SidonSequence& s) {
  return find_collision(s, PairKind::unordered_with_repeat);
}

std::optional<SidonViolation> verify_weak_sidon(const SidonSequence& s) {
  return find_collision(s, PairKind::unordered_distinct);
}

CrtFlattening::CrtFlattening(GroupSpec g) : source_(std::move(g)) {
  const auto& mods = source_.moduli();
  for (std::size_t i = 0; i < mods.size(); ++i) {
    for (std::size_t j = i + 1; j < mods.size(); ++j) {
      if (std::gcd(mods[i], mods[j]) != 1) {
        throw std::invalid_argument("moduli " + std::to_string(mods[i]) + " and " + std::to_string(mods[j]) +
                                    " are not coprime");
      }
    }
  }
  const std::int64_t n = source_.order();
  for (std::int64_t m : mods) {
    const std::int64_t rest = n / m;
    basis_.push_back(rest * mod_inverse(rest % m, m) % n);
  }
}

std::int64_t CrtFlattening::to_cyclic(const GroupElement& a) const {
  source_.validate(a);
  const std::int64_t n = modulus();
  std::int64_t x = 0;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    // basis_[i] < n and residues < m_i; use 128-bit to stay safe for large n.
    x = static_cast<std::int64_t>((static_cast<__int128>(basis_[i]) * a.residues[i] + x) % n);
  }
  return x;
}

GroupElement CrtFlattening::from_cyclic(std::int64_t x) const {
  GroupElement a;
  for (std::int64_t m : source_.moduli()) a.residues.push_back(floor_mod(x, m));
  return a;
}

SidonSequence CrtFlattening::apply(const SidonSequence& s) const {
  if (!(s.group == source_)) throw std::invalid_argument("sequence group does not match the flattening");
  std::vector<std::int64_t> xs;
  xs.reserve(s.elements.size());
  for (const auto& e : s.elements) xs.push_back(to_cyclic(e));
  std::sort(xs.begin(), xs.end());
  return SidonSequence::cyclic(modulus(), xs);
}

CrtFlattening crt_flatten(const GroupSpec& g) { return CrtFlattening(g); }

}  // namespace sidon2d
