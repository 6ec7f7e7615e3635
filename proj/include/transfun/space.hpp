#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace transfun {

/// A discrete measurable space: a finite, ordered set of labeled atoms whose
/// sigma-algebra is the full power set.
///
/// Spaces are cheap to copy (shared immutable storage). Two spaces are equal
/// when they have the same id and the same atoms in the same order.
class Space {
 public:
  Space(std::string id, std::vector<std::string> atoms);

  const std::string& id() const noexcept;
  std::size_t size() const noexcept;
  std::span<const std::string> atoms() const noexcept;
  const std::string& label(std::size_t index) const;

  std::optional<std::size_t> find(std::string_view label) const;
  /// Throws Errc::unknown_atom when the label is not an atom of this space.
  std::size_t index_of(std::string_view label) const;
  bool contains(std::string_view label) const { return find(label).has_value(); }

  friend bool operator==(const Space& a, const Space& b);

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

/// Throws Errc::space_mismatch naming both ids when the spaces differ.
void require_same_space(const Space& a, const Space& b, std::string_view what);

/// Finite product space; atoms are the pairs (x, y) in row-major order.
/// Pair labels are "(x,y)" with ',', '(', ')' and '\' escaped inside
/// components, so every label decodes to exactly one pair.
class ProductSpace {
 public:
  ProductSpace(Space left, Space right);

  const Space& left() const noexcept { return left_; }
  const Space& right() const noexcept { return right_; }
  const Space& space() const noexcept { return flat_; }

  std::size_t index(std::size_t i, std::size_t j) const noexcept {
    return i * right_.size() + j;
  }
  std::pair<std::size_t, std::size_t> pair_of(std::size_t index) const noexcept {
    return {index / right_.size(), index % right_.size()};
  }
  std::pair<std::string, std::string> decode(std::string_view label) const;

 private:
  Space left_;
  Space right_;
  Space flat_;
};

std::string pair_label(std::string_view left, std::string_view right);

}  // namespace transfun
