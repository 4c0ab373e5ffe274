#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace sidon2d {

struct GroupElement {
  std::vector<std::int64_t> residues;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// A finite abelian group Z_{m_1} x ... x Z_{m_r}, every m_i >= 2.
class GroupSpec {
 public:
  explicit GroupSpec(std::vector<std::int64_t> moduli);
  static GroupSpec cyclic(std::int64_t n) { return GroupSpec({n}); }

  const std::vector<std::int64_t>& moduli() const { return moduli_; }
  std::size_t rank() const { return moduli_.size(); }
  std::int64_t order() const { return order_; }
  bool is_cyclic_form() const { return moduli_.size() == 1; }

  bool contains(const GroupElement& a) const;
  /// Throws std::invalid_argument unless a belongs to the group.
  void validate(const GroupElement& a) const;

  GroupElement identity() const;
  GroupElement element(std::int64_t index) const;
  /// Mixed-radix index with the first coordinate most significant, so index
  /// order is lexicographic order on residue vectors.
  std::int64_t index(const GroupElement& a) const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  std::vector<std::int64_t> moduli_;
  std::int64_t order_ = 1;
};

enum class GroupOp { add, sub, neg };

/// neg ignores b.
GroupElement group_op(const GroupSpec& g, const GroupElement& a, const GroupElement& b, GroupOp op);
GroupElement group_add(const GroupSpec& g, const GroupElement& a, const GroupElement& b);
GroupElement group_sub(const GroupSpec& g, const GroupElement& a, const GroupElement& b);
GroupElement group_neg(const GroupSpec& g, const GroupElement& a);

struct SidonSequence {
  GroupSpec group;
  std::vector<GroupElement> elements;

  /// Elements given as plain residues of a cyclic group.
  static SidonSequence cyclic(std::int64_t n, const std::vector<std::int64_t>& residues);

  /// Throws unless every element lies in the group and all are distinct.
  void validate() const;
  std::size_t size() const { return elements.size(); }
  /// Residues of a cyclic sequence; throws for multi-factor groups.
  std::vector<std::int64_t> cyclic_residues() const;
};

/// Two distinct ordered pairs sharing the same difference (or sum).
struct SidonViolation {
  std::array<GroupElement, 2> first;
  std::array<GroupElement, 2> second;
  GroupElement value;
};

/// All m(m-1) differences a - b, a != b, distinct. nullopt means ok.
std::optional<SidonViolation> verify_sidon(const SidonSequence& s);
/// All m(m+1)/2 sums a + b over unordered pairs with repetition distinct.
std::optional<SidonViolation> verify_sidon_sums(const SidonSequence& s);
/// Sums over pairs of distinct elements distinct.
std::optional<SidonViolation> verify_weak_sidon(const SidonSequence& s);

/// Chinese-remainder isomorphism Z_{m_1} x ... x Z_{m_r} -> Z_n for pairwise
/// coprime moduli.
class CrtFlattening {
 public:
  explicit CrtFlattening(GroupSpec g);

  const GroupSpec& source() const { return source_; }
  std::int64_t modulus() const { return source_.order(); }
  std::int64_t to_cyclic(const GroupElement& a) const;
  GroupElement from_cyclic(std::int64_t x) const;
  /// Image of a whole sequence, elements sorted.
  SidonSequence apply(const SidonSequence& s) const;

 private:
  GroupSpec source_;
  std::vector<std::int64_t> basis_;  // basis_[i] = 1 mod m_i, 0 mod m_j
};

CrtFlattening crt_flatten(const GroupSpec& g);

}  // namespace sidon2d
