#pragma once

// Small cursor over element text forms; every failure carries a byte offset.

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "clonal/errors.hpp"

namespace clonal::detail {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  std::size_t pos() const { return pos_; }
  std::string_view rest() const { return text_.substr(pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool consume(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  bool consume_word(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }

  void expect_end() {
    if (!at_end()) fail("trailing characters");
  }

  long integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected an integer");
    }
    if (pos_ - digits > 18) {
      pos_ = start;
      fail("integer too large");
    }
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  /// Integer-or-fraction token such as "-3/4", returned verbatim.
  std::string rational_token() {
    skip_ws();
    std::size_t start = pos_;
    auto digits = [&] {
      std::size_t d = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return pos_ > d;
    };
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    if (!digits()) {
      pos_ = start;
      fail("expected a rational number");
    }
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      if (!digits()) fail("expected a denominator");
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  std::vector<long> int_list(char open, char close) {
    std::vector<long> out;
    expect(open);
    if (consume(close)) return out;
    do {
      out.push_back(integer());
    } while (consume(','));
    expect(close);
    return out;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace clonal::detail
