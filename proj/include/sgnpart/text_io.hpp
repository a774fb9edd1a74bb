#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

#include "sgnpart/error.hpp"
#include "sgnpart/partition.hpp"

namespace sgnpart {

namespace detail {

// Whitespace-insensitive scanner over the partition grammar.
class scanner {
 public:
  explicit scanner(std::string_view text) : text_(text) {}

  std::size_t pos() const { return pos_; }

  void skip_ws() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r' ||
            text_[pos_] == '\n'))
      ++pos_;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      fail(errc::syntax_error,
           std::string("expected '") + c + "' at offset " +
               std::to_string(pos_),
           pos_);
    ++pos_;
  }

  int integer() {
    skip_ws();
    std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= text_.size() || text_[pos_] < '0' || text_[pos_] > '9')
      fail(errc::syntax_error,
           "expected integer at offset " + std::to_string(start), start);
    long value = 0;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1000000)
        fail(errc::syntax_error,
             "integer too large at offset " + std::to_string(start), start);
      ++pos_;
    }
    return static_cast<int>(negative ? -value : value);
  }

  // [i1,i2,...] possibly empty
  std::vector<int> int_list() {
    std::vector<int> out;
    expect('[');
    if (peek_is(']')) {
      ++pos_;
      return out;
    }
    out.push_back(integer());
    while (peek_is(',')) {
      ++pos_;
      out.push_back(integer());
    }
    expect(']');
    return out;
  }

  void expect_end() {
    skip_ws();
    if (pos_ != text_.size())
      fail(errc::syntax_error,
           "trailing input at offset " + std::to_string(pos_), pos_);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

// Parses the line format `z:[i1,...];p:[[e,...],...]`. The ground-set size
// n is the largest magnitude mentioned (a complete partition of [±n] always
// mentions ±n), and the result is validated and canonical.
inline signed_partition parse_partition(std::string_view text) {
  detail::scanner sc(text);
  sc.expect('z');
  sc.expect(':');
  std::vector<int> zero = sc.int_list();
  sc.expect(';');
  sc.expect('p');
  sc.expect(':');
  std::vector<std::vector<int>> blocks;
  sc.expect('[');
  if (sc.peek_is(']')) {
    sc.expect(']');
  } else {
    blocks.push_back(sc.int_list());
    while (sc.peek_is(',')) {
      sc.expect(',');
      blocks.push_back(sc.int_list());
    }
    sc.expect(']');
  }
  sc.expect_end();

  int n = 0;
  for (int i : zero) n = std::max(n, i);
  for (const auto& b : blocks)
    for (int e : b) n = std::max(n, std::abs(e));
  return validate(n, std::move(zero), std::move(blocks));
}

// Canonical text form; with expanded=true the mirrored block of each pair
// is written out after its representative (display form, not re-parseable
// since the mirrors double-cover the ground set).
inline std::string format_partition(const signed_partition& p,
                                    bool expanded = false) {
  std::string out = "z:[";
  for (std::size_t i = 0; i < p.zero.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.zero[i]);
  }
  out += "];p:[";
  bool first_block = true;
  auto emit = [&](const std::vector<int>& block, bool mirrored) {
    if (!first_block) out += ',';
    first_block = false;
    out += '[';
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(mirrored ? -block[i] : block[i]);
    }
    out += ']';
  };
  for (const auto& block : p.pairs) {
    emit(block, false);
    if (expanded) emit(block, true);
  }
  out += ']';
  return out;
}

// Comma-separated integers ("4,7"); the empty string is the empty list.
inline std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  detail::scanner sc(text);
  sc.skip_ws();
  if (sc.pos() == text.size()) return out;
  out.push_back(sc.integer());
  while (sc.peek_is(',')) {
    sc.expect(',');
    out.push_back(sc.integer());
  }
  sc.expect_end();
  return out;
}

inline std::string format_int_list(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace sgnpart
