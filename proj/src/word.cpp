#include "specgap/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

namespace specgap {

std::size_t WordHash::operator()(const Word& w) const {
  std::size_t h = 0xcbf29ce484222325ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  for (const auto& part : w.free_parts) {
    mix(0x517cc1b727220a95ull);
    for (auto letter : part) mix(static_cast<std::uint64_t>(static_cast<std::int64_t>(letter)));
  }
  for (const auto& part : w.abelian_parts) {
    mix(0x2545f4914f6cdd1dull);
    for (auto e : part) mix(static_cast<std::uint64_t>(e));
  }
  return h;
}

WordGroup WordGroup::free_group(int rank) {
  if (rank < 1) throw ConfigError("free group needs rank >= 1");
  WordGroup g;
  g.components_ = {{Kind::kFree, rank}};
  g.generator_count_ = rank;
  return g;
}

WordGroup WordGroup::free_abelian(int rank) {
  if (rank < 1) throw ConfigError("free abelian group needs rank >= 1");
  WordGroup g;
  g.components_ = {{Kind::kAbelian, rank}};
  g.generator_count_ = rank;
  return g;
}

WordGroup WordGroup::direct_product(const WordGroup& a, const WordGroup& b) {
  WordGroup g;
  g.components_ = a.components_;
  g.components_.insert(g.components_.end(), b.components_.begin(), b.components_.end());
  g.generator_count_ = a.generator_count_ + b.generator_count_;
  return g;
}

Word WordGroup::identity() const {
  Word w;
  for (const auto& c : components_) {
    if (c.kind == Kind::kFree)
      w.free_parts.emplace_back();
    else
      w.abelian_parts.emplace_back(c.rank, 0);
  }
  return w;
}

std::pair<int, int> WordGroup::locate_generator(int index) const {
  if (index < 0 || index >= generator_count_) throw ConfigError("generator index out of range");
  for (int c = 0; c < static_cast<int>(components_.size()); ++c) {
    if (index < components_[c].rank) return {c, index};
    index -= components_[c].rank;
  }
  throw ConfigError("generator index out of range");
}

Word WordGroup::generator(int index, int sign) const {
  if (sign != 1 && sign != -1) throw ConfigError("generator sign must be +1 or -1");
  auto [comp, local] = locate_generator(index);
  Word w = identity();
  int free_seen = 0, abelian_seen = 0;
  for (int c = 0; c < static_cast<int>(components_.size()); ++c) {
    if (components_[c].kind == Kind::kFree) {
      if (c == comp) w.free_parts[free_seen].push_back(sign * (local + 1));
      ++free_seen;
    } else {
      if (c == comp) w.abelian_parts[abelian_seen][local] = sign;
      ++abelian_seen;
    }
  }
  return w;
}

bool WordGroup::contains(const Word& w) const {
  std::size_t nf = 0, na = 0;
  for (const auto& c : components_)
    (c.kind == Kind::kFree ? nf : na) += 1;
  if (w.free_parts.size() != nf || w.abelian_parts.size() != na) return false;
  std::size_t fi = 0, ai = 0;
  for (const auto& c : components_) {
    if (c.kind == Kind::kFree) {
      const auto& part = w.free_parts[fi++];
      for (std::size_t i = 0; i < part.size(); ++i) {
        int letter = part[i];
        if (letter == 0 || std::abs(letter) > c.rank) return false;
        if (i > 0 && part[i - 1] == -letter) return false;  // not reduced
      }
    } else {
      if (static_cast<int>(w.abelian_parts[ai++].size()) != c.rank) return false;
    }
  }
  return true;
}

Word WordGroup::mul(const Word& a, const Word& b) const {
  Word out = a;
  for (std::size_t i = 0; i < out.free_parts.size(); ++i) {
    auto& word = out.free_parts[i];
    for (int letter : b.free_parts[i]) {
      if (!word.empty() && word.back() == -letter)
        word.pop_back();  // free cancellation
      else
        word.push_back(letter);
    }
  }
  for (std::size_t i = 0; i < out.abelian_parts.size(); ++i)
    for (std::size_t j = 0; j < out.abelian_parts[i].size(); ++j)
      out.abelian_parts[i][j] += b.abelian_parts[i][j];
  return out;
}

Word WordGroup::inv(const Word& a) const {
  Word out = a;
  for (auto& word : out.free_parts) {
    std::reverse(word.begin(), word.end());
    for (auto& letter : word) letter = -letter;
  }
  for (auto& part : out.abelian_parts)
    for (auto& e : part) e = -e;
  return out;
}

bool WordGroup::is_identity(const Word& w) const {
  for (const auto& part : w.free_parts)
    if (!part.empty()) return false;
  for (const auto& part : w.abelian_parts)
    for (auto e : part)
      if (e != 0) return false;
  return true;
}

std::int64_t WordGroup::length(const Word& w) const {
  std::int64_t len = 0;
  for (const auto& part : w.free_parts) len += static_cast<std::int64_t>(part.size());
  for (const auto& part : w.abelian_parts)
    for (auto e : part) len += std::llabs(e);
  return len;
}

namespace {
char generator_letter(int global_index) {
  if (global_index >= 26) throw ConfigError("letter names support at most 26 generators");
  return static_cast<char>('a' + global_index);
}
}  // namespace

std::string WordGroup::to_string(const Word& w) const {
  std::string out;
  int base = 0;
  std::size_t fi = 0, ai = 0;
  for (const auto& c : components_) {
    if (c.kind == Kind::kFree) {
      for (int letter : w.free_parts[fi]) {
        char ch = generator_letter(base + std::abs(letter) - 1);
        out += letter > 0 ? ch : static_cast<char>(std::toupper(ch));
      }
      ++fi;
    } else {
      for (int j = 0; j < c.rank; ++j) {
        auto e = w.abelian_parts[ai][j];
        char ch = generator_letter(base + j);
        for (std::int64_t k = 0; k < std::llabs(e); ++k)
          out += e > 0 ? ch : static_cast<char>(std::toupper(ch));
      }
      ++ai;
    }
    base += c.rank;
  }
  return out.empty() ? "e" : out;
}

Word WordGroup::parse(const std::string& text) const {
  Word w = identity();
  if (text == "e" || text.empty()) return w;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    bool upper = std::isupper(static_cast<unsigned char>(ch)) != 0;
    char low = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (low < 'a' || low > 'z') throw ConfigError(std::string("bad word letter: '") + ch + "'");
    int index = low - 'a';
    if (index >= generator_count_)
      throw ConfigError(std::string("letter '") + ch + "' exceeds the generator count");
    w = mul(w, generator(index, upper ? -1 : 1));
  }
  return w;
}

std::string WordGroup::name() const {
  std::string out;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) out += "x";
    const auto& c = components_[i];
    out += (c.kind == Kind::kFree ? "free:" : "zd:") + std::to_string(c.rank);
  }
  return out;
}

}  // namespace specgap
