#include "tstar/index.hpp"

#include <charconv>

namespace tstar {

Index::Index(std::vector<int> e) : entries(std::move(e)) {
  for (int v : entries)
    if (v < 1) throw std::domain_error("Index: entries must be positive");
}

SignedIndex::SignedIndex(std::vector<int> e, std::vector<int> s)
    : entries(std::move(e)), signs(std::move(s)) {
  if (entries.size() != signs.size()) throw std::domain_error("SignedIndex: length mismatch");
  for (int v : entries)
    if (v < 1) throw std::domain_error("SignedIndex: entries must be positive");
  for (int v : signs)
    if (v != 1 && v != -1) throw std::domain_error("SignedIndex: signs must be +1 or -1");
}

SignedIndex SignedIndex::all_plus(const Index& ix) {
  return SignedIndex(ix.entries, std::vector<int>(ix.entries.size(), 1));
}

BlockForm::BlockForm(std::vector<int> a_, std::vector<int> c_) : a(std::move(a_)), c(std::move(c_)) {
  if (a.size() != c.size() + 1) throw std::domain_error("BlockForm: need d+1 run lengths for d separators");
  for (int v : a)
    if (v < 0) throw std::domain_error("BlockForm: run lengths must be nonnegative");
  for (int v : c) {
    if (v < 1) throw std::domain_error("BlockForm: separators must be positive");
    if (v == 2) throw std::domain_error("BlockForm: separator 2 is not allowed");
  }
}

int delta_weight(int c) {
  if (c == 0) return 2;
  if (c == 1) return 1;
  if (c >= 3) return 0;
  throw std::domain_error("delta_weight: undefined for c = 2 (and negative c)");
}

int triangle(long k, long m) { return k == m ? 0 : 1; }

Index expand_blocks(const BlockForm& b) {
  Index ix;
  ix.entries.reserve(static_cast<std::size_t>(b.d()) + 16);
  for (int i = 0; i <= b.d(); ++i) {
    for (int j = 0; j < b.a[static_cast<std::size_t>(i)]; ++j) ix.entries.push_back(2);
    if (i < b.d()) ix.entries.push_back(b.c[static_cast<std::size_t>(i)]);
  }
  return ix;
}

ConvergenceCheck validate_convergent_star(const BlockForm& b) {
  Index flat = expand_blocks(b);
  if (flat.empty() || flat.entries[0] > 1) return {true, ""};
  return {false, "first entry 1"};
}

namespace {

long parse_positive_int(std::string_view text, std::size_t& pos, std::size_t limit) {
  std::size_t start = pos;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
  if (pos == start) throw ParseError("expected a digit", start);
  long value = 0;
  auto res = std::from_chars(text.data() + start, text.data() + pos, value);
  if (res.ec != std::errc() || value < 1 || value > static_cast<long>(limit))
    throw ParseError("integer out of range", start);
  return value;
}

void skip_spaces(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && text[pos] == ' ') ++pos;
}

}  // namespace

ParsedIndex parse_index(std::string_view text) {
  std::vector<int> entries;
  std::vector<int> signs;
  bool any_bar = false;
  std::size_t pos = 0;
  skip_spaces(text, pos);
  if (pos == text.size()) return Index{};
  for (;;) {
    skip_spaces(text, pos);
    int sign = 1;
    if (pos < text.size() && text[pos] == '~') {
      sign = -1;
      any_bar = true;
      ++pos;
    }
    entries.push_back(static_cast<int>(parse_positive_int(text, pos, 1000000)));
    signs.push_back(sign);
    skip_spaces(text, pos);
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError("expected ','", pos);
    ++pos;
  }
  if (any_bar) return SignedIndex(std::move(entries), std::move(signs));
  return Index(std::move(entries));
}

BlockForm parse_blocks(std::string_view text) {
  std::vector<long> fields;
  std::size_t pos = 0;
  for (;;) {
    skip_spaces(text, pos);
    std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == start) throw ParseError("expected a digit", start);
    long value = 0;
    std::from_chars(text.data() + start, text.data() + pos, value);
    fields.push_back(value);
    skip_spaces(text, pos);
    if (pos == text.size()) break;
    if (text[pos] != ':') throw ParseError("expected ':'", pos);
    ++pos;
  }
  if (fields.size() % 2 == 0) throw ParseError("block form needs 2d+1 fields", text.size());
  std::vector<int> a, c;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i % 2 == 0)
      a.push_back(static_cast<int>(fields[i]));
    else
      c.push_back(static_cast<int>(fields[i]));
  }
  return BlockForm(std::move(a), std::move(c));
}

std::string to_string(const Index& ix) {
  std::string s;
  for (std::size_t i = 0; i < ix.entries.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(ix.entries[i]);
  }
  return s;
}

std::string to_string(const SignedIndex& ix) {
  std::string s;
  for (std::size_t i = 0; i < ix.entries.size(); ++i) {
    if (i) s += ',';
    if (ix.signs[i] < 0) s += '~';
    s += std::to_string(ix.entries[i]);
  }
  return s;
}

std::string to_string(const BlockForm& b) {
  std::string s = std::to_string(b.a[0]);
  for (int i = 1; i <= b.d(); ++i) {
    s += ':';
    s += std::to_string(b.c[static_cast<std::size_t>(i - 1)]);
    s += ':';
    s += std::to_string(b.a[static_cast<std::size_t>(i)]);
  }
  return s;
}

}  // namespace tstar
