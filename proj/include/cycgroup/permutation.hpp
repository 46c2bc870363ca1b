#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace cycgroup {

using Point = std::uint32_t;

/// A bijection on {0, ..., degree-1}. Products act on the right: (a * b)(x) = b(a(x)).
class Permutation {
public:
  Permutation() = default;

  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Parses disjoint-cycle notation such as "(0 1)(2 3 4)" or "(0,1,2)".
  /// Points missing from the cycles are fixed; "()" is the identity.
  static Permutation from_cycles(const std::string& text, std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  std::vector<std::size_t> cycle_lengths() const;
  std::uint64_t order() const;
  bool is_even() const;

  std::string to_cycles() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace cycgroup
