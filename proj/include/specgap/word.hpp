#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "specgap/errors.hpp"

namespace specgap {

/// Element of a direct product of free and free-abelian factors, stored in
/// normal form: a reduced letter sequence per free factor (letter +k / -k is
/// generator k-1 / its inverse, k >= 1) and an exponent vector per abelian
/// factor. Normal forms are canonical: equal group elements compare equal.
struct Word {
  std::vector<std::vector<std::int32_t>> free_parts;
  std::vector<std::vector<std::int64_t>> abelian_parts;

  bool operator==(const Word&) const = default;
  friend bool operator<(const Word& a, const Word& b) {
    if (a.free_parts != b.free_parts) return a.free_parts < b.free_parts;
    return a.abelian_parts < b.abelian_parts;
  }
};

struct WordHash {
  std::size_t operator()(const Word& w) const;
};

/// Finitely generated group from the supported families: free groups F_k,
/// free abelian Z^d, and direct products thereof. Generators are indexed
/// globally in component order.
class WordGroup {
 public:
  using Elem = Word;

  enum class Kind { kFree, kAbelian };
  struct Component {
    Kind kind;
    int rank;
  };

  static WordGroup free_group(int rank);
  static WordGroup free_abelian(int rank);
  static WordGroup direct_product(const WordGroup& a, const WordGroup& b);

  const std::vector<Component>& components() const { return components_; }
  int generator_count() const { return generator_count_; }

  Word identity() const;
  /// sign is +1 or -1.
  Word generator(int index, int sign = 1) const;
  Word mul(const Word& a, const Word& b) const;
  Word inv(const Word& a) const;
  bool contains(const Word& w) const;  // shape matches and free parts reduced
  bool is_identity(const Word& w) const;
  /// Word norm with respect to the union of the component generating sets.
  std::int64_t length(const Word& w) const;

  /// Letters a, b, c, ... across components; uppercase marks an inverse.
  /// The identity prints as "e".
  std::string to_string(const Word& w) const;
  /// Inverse of to_string: parses concatenated letters, e.g. "abA".
  Word parse(const std::string& text) const;

  std::string name() const;

  bool operator==(const WordGroup& other) const { return components_ == other.components_; }

 private:
  std::vector<Component> components_;
  int generator_count_ = 0;

  std::pair<int, int> locate_generator(int index) const;  // (component, local index)
};

inline bool operator==(const WordGroup::Component& a, const WordGroup::Component& b) {
  return a.kind == b.kind && a.rank == b.rank;
}

}  // namespace specgap
