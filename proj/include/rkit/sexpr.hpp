#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rkit {

struct SourceSpan {
  std::string file;
  int line = 1;
  int column = 1;
};

std::string to_string(const SourceSpan& span);

/// Error raised by the readers. `kind` distinguishes malformed text from
/// well-formed text that refers to unknown things.
class ParseError : public std::runtime_error {
 public:
  enum class Kind { Syntax, Semantic };

  ParseError(Kind kind, SourceSpan span, const std::string& message)
      : std::runtime_error(to_string(span) + ": " + message), kind_(kind), span_(std::move(span)) {}

  Kind kind() const { return kind_; }
  const SourceSpan& span() const { return span_; }

 private:
  Kind kind_;
  SourceSpan span_;
};

/// Node of a parsed s-expression: either a symbol or a list.
struct SExpr {
  bool is_list = false;
  std::string symbol;  // lower-cased
  std::vector<SExpr> items;
  SourceSpan span;

  bool is_symbol() const { return !is_list; }
  bool is_symbol(std::string_view s) const { return !is_list && symbol == s; }
  /// True for a list whose first item is the symbol `head`.
  bool has_head(std::string_view head) const {
    return is_list && !items.empty() && items.front().is_symbol(head);
  }
};

/// Reads every top-level expression. `;` starts a comment running to the
/// end of the line. Symbols are canonicalized to lower case.
std::vector<SExpr> read_sexprs(std::string_view text, const std::string& file = "<input>");

}  // namespace rkit
