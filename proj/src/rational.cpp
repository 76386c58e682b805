#include "specgap/rational.hpp"

#include <cctype>

#include "specgap/errors.hpp"

namespace specgap {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ConfigError("empty rational literal");
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/' && c != '-' && c != '+')
      throw ConfigError("bad rational literal: '" + text + "'");
  }
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw ConfigError("bad rational literal: '" + text + "'");
  if (q.get_den() == 0) throw ConfigError("zero denominator in rational literal: '" + text + "'");
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace specgap
