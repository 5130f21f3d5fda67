#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace tstar {

/// Finite sequence of positive integers; empty is a valid index.
struct Index {
  std::vector<int> entries;

  Index() = default;
  explicit Index(std::vector<int> e);

  std::size_t size() const { return entries.size(); }
  bool empty() const { return entries.empty(); }
  bool operator==(const Index&) const = default;
};

/// Index with one sign in {+1, -1} per entry. Summation is admissible
/// unless the leading pair is (1, +1).
struct SignedIndex {
  std::vector<int> entries;
  std::vector<int> signs;

  SignedIndex() = default;
  SignedIndex(std::vector<int> e, std::vector<int> s);

  static SignedIndex all_plus(const Index& ix);

  std::size_t size() const { return entries.size(); }
  bool empty() const { return entries.empty(); }
  bool admissible() const { return empty() || !(entries[0] == 1 && signs[0] == 1); }
  bool operator==(const SignedIndex&) const = default;
};

/// Block shape ({2}^{a_0}, c_1, {2}^{a_1}, ..., c_d, {2}^{a_d}).
/// Every c_i must differ from 2 (the block separators are the non-2 entries).
struct BlockForm {
  std::vector<int> a;  // a_0..a_d, nonnegative
  std::vector<int> c;  // c_1..c_d, positive, != 2

  BlockForm() : a{0} {}
  BlockForm(std::vector<int> a_, std::vector<int> c_);

  int d() const { return static_cast<int>(c.size()); }
  bool operator==(const BlockForm&) const = default;
};

/// delta(0) = 2, delta(1) = 1, delta(c) = 0 for c >= 3; delta(2) is undefined.
int delta_weight(int c);

/// 0 iff k = m, else 1.
int triangle(long k, long m);

/// Flattens a block form to its index, in order.
Index expand_blocks(const BlockForm& b);

struct ConvergenceCheck {
  bool ok;
  std::string reason;  // empty when ok
};

/// True iff the flattened index is empty or starts with an entry > 1,
/// i.e. the star value it denotes converges.
ConvergenceCheck validate_convergent_star(const BlockForm& b);

struct ParseError : std::runtime_error {
  std::size_t offset;
  ParseError(const std::string& what, std::size_t off) : std::runtime_error(what), offset(off) {}
};

using ParsedIndex = std::variant<Index, SignedIndex>;

/// Grammar: comma-separated base-10 positive integers, each optionally
/// prefixed with '~' for sign -1. Any '~' makes the result a SignedIndex.
/// Empty input is the empty Index. Throws ParseError with a byte offset.
ParsedIndex parse_index(std::string_view text);

/// Grammar: "a_0 : c_1 : a_1 : ... : c_d : a_d" (2d+1 colon-separated fields).
BlockForm parse_blocks(std::string_view text);

std::string to_string(const Index& ix);
std::string to_string(const SignedIndex& ix);
std::string to_string(const BlockForm& b);

}  // namespace tstar
