#include "rkit/sexpr.hpp"

#include <cctype>

namespace rkit {

std::string to_string(const SourceSpan& span) {
  return span.file + ":" + std::to_string(span.line) + ":" + std::to_string(span.column);
}

namespace {

class Reader {
 public:
  Reader(std::string_view text, const std::string& file) : text_(text), file_(file) {}

  std::vector<SExpr> read_all() {
    std::vector<SExpr> out;
    skip_space();
    while (pos_ < text_.size()) {
      out.push_back(read_one(0));
      skip_space();
    }
    return out;
  }

 private:
  SourceSpan here() const { return {file_, line_, col_}; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  SExpr read_one(int depth) {
    SExpr node;
    if (depth > kMaxDepth) throw ParseError(ParseError::Kind::Syntax, here(), "nesting too deep");
    node.span = here();
    char c = text_[pos_];
    if (c == ')') throw ParseError(ParseError::Kind::Syntax, here(), "unexpected ')'");
    if (c == '(') {
      node.is_list = true;
      advance();
      skip_space();
      while (true) {
        if (pos_ >= text_.size())
          throw ParseError(ParseError::Kind::Syntax, node.span, "unterminated list");
        if (text_[pos_] == ')') {
          advance();
          break;
        }
        node.items.push_back(read_one(depth + 1));
        skip_space();
      }
      return node;
    }
    std::string symbol;
    while (pos_ < text_.size()) {
      char d = text_[pos_];
      if (d == '(' || d == ')' || d == ';' || std::isspace(static_cast<unsigned char>(d))) break;
      if (static_cast<unsigned char>(d) < 0x20)
        throw ParseError(ParseError::Kind::Syntax, here(), "control character in symbol");
      symbol.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(d))));
      advance();
    }
    node.symbol = std::move(symbol);
    return node;
  }

  static constexpr int kMaxDepth = 256;

  std::string_view text_;
  std::string file_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

std::vector<SExpr> read_sexprs(std::string_view text, const std::string& file) {
  return Reader(text, file).read_all();
}

}  // namespace rkit
