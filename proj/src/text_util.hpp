#pragma once

#include <string>
#include <vector>

#include "vklab/errors.hpp"
#include "vklab/word.hpp"

namespace vklab::detail {

/* Parses "p3 p1^-2" style letter lists, prefix 'x' for free-group words and
 * 's' for braid words.  Exponents expand into repeated +/-1 letters.
 * max_index <= 0 means "no upper bound".  "1" denotes the empty word. */
inline std::vector<Letter> parse_letters(const std::string& text, char prefix,
                                         int max_index, const char* what) {
  std::vector<Letter> out;
  size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw ParseError(std::string(what) + ": " + why + " in \"" + text + "\"");
  };
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  if (i < text.size() && text[i] == '1' &&
      (i + 1 == text.size() || text[i + 1] == ' ' || text[i + 1] == '\t')) {
    size_t j = i + 1;
    while (j < text.size() && (text[j] == ' ' || text[j] == '\t')) ++j;
    if (j == text.size()) return out;  // lone "1" = identity
  }
  while (i < text.size()) {
    if (text[i] != prefix) fail(std::string("expected '") + prefix + "'");
    ++i;
    if (i >= text.size() || !isdigit(static_cast<unsigned char>(text[i])))
      fail("expected generator index");
    int gen = 0;
    while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) {
      gen = gen * 10 + (text[i] - '0');
      if (gen > 1000000) fail("index out of range");
      ++i;
    }
    if (gen < 1) fail("index out of range");
    if (max_index > 0 && gen > max_index) fail("index out of range");
    long long exp = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      bool neg = false;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
      }
      if (i >= text.size() || !isdigit(static_cast<unsigned char>(text[i])))
        fail("expected exponent");
      exp = 0;
      while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) {
        exp = exp * 10 + (text[i] - '0');
        if (exp > 100000) fail("exponent out of range");
        ++i;
      }
      if (neg) exp = -exp;
    }
    int sign = exp >= 0 ? 1 : -1;
    for (long long k = 0; k < (exp >= 0 ? exp : -exp); ++k)
      out.push_back({gen, sign});
    skip_ws();
  }
  return out;
}

inline std::string print_letters(const std::vector<Letter>& letters,
                                 char prefix) {
  if (letters.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < letters.size(); ++i) {
    if (i) out += ' ';
    out += prefix;
    out += std::to_string(letters[i].gen);
    if (letters[i].sign < 0) out += "^-1";
  }
  return out;
}

}  // namespace vklab::detail
