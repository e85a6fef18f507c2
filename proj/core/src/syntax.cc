// Copyright 2026 The Level01 Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "level01/syntax.h"

#include <cctype>
#include <optional>
#include <utility>

#include "level01/errors.h"
#include "level01/formula.h"

namespace level01 {
namespace {

enum class Tok {
  kIdent,
  kString,
  kLParen,
  kRParen,
  kBackslash,
  kDot,
  kAnd,  // '&' or ','
  kOr,
  kImp,
  kEq,
  kDefine,
  kArrow,  // only inside kind/type declarations
  kEnd,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t col;
};

bool IsIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> Run() {
    std::vector<Token> out;
    while (true) {
      SkipSpace();
      const std::size_t line = line_, col = col_;
      if (pos_ >= text_.size()) {
        out.push_back({Tok::kEnd, "", line, col});
        return out;
      }
      const char c = text_[pos_];
      if (IsIdentChar(c)) {
        std::string word;
        while (pos_ < text_.size() && IsIdentChar(text_[pos_])) {
          word += text_[pos_];
          Advance();
        }
        out.push_back({Tok::kIdent, std::move(word), line, col});
        continue;
      }
      if (c == '"') {
        out.push_back({Tok::kString, ReadString(), line, col});
        continue;
      }
      Tok kind;
      std::size_t width = 1;
      switch (c) {
        case '(': kind = Tok::kLParen; break;
        case ')': kind = Tok::kRParen; break;
        case '\\': kind = Tok::kBackslash; break;
        case '.': kind = Tok::kDot; break;
        case '&':
        case ',': kind = Tok::kAnd; break;
        case ';': kind = Tok::kOr; break;
        case '-':
          if (Peek(1) != '>') throw SyntaxError("expected '->'", line, col);
          kind = Tok::kArrow;
          width = 2;
          break;
        case '=':
          if (Peek(1) == '>') {
            kind = Tok::kImp;
            width = 2;
          } else {
            kind = Tok::kEq;
          }
          break;
        case ':':
          if (Peek(1) != '=') throw SyntaxError("expected ':='", line, col);
          kind = Tok::kDefine;
          width = 2;
          break;
        default:
          throw SyntaxError(std::string("unexpected character '") + c + "'",
                            line, col);
      }
      std::string spelled(text_.substr(pos_, width));
      for (std::size_t i = 0; i < width; ++i) Advance();
      out.push_back({kind, std::move(spelled), line, col});
    }
  }

 private:
  char Peek(std::size_t ahead) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  void Advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void SkipSpace() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') Advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        Advance();
      } else {
        return;
      }
    }
  }

  std::string ReadString() {
    const std::size_t line = line_, col = col_;
    Advance();  // opening quote
    std::string out;
    while (true) {
      if (pos_ >= text_.size() || text_[pos_] == '\n') {
        throw SyntaxError("unterminated string", line, col);
      }
      const char c = text_[pos_];
      Advance();
      if (c == '"') return out;
      if (c == '\\') {
        if (pos_ >= text_.size()) throw SyntaxError("unterminated string", line, col);
        const char e = text_[pos_];
        Advance();
        switch (e) {
          case 'n': out += '\n'; break;
          case 't': out += '\t'; break;
          case '"': out += '"'; break;
          case '\\': out += '\\'; break;
          default:
            throw SyntaxError(std::string("unknown escape '\\") + e + "'",
                              line_, col_ - 1);
        }
        continue;
      }
      out += c;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

// Parse tree before names are resolved.
struct Ast {
  enum Kind { kName, kString, kApp, kAbs } kind;
  std::string text;       // name, string text, or binder name
  std::vector<Ast> kids;  // kApp: head then args; kAbs: body
};

Ast Name(std::string text) { return Ast{Ast::kName, std::move(text), {}}; }

Ast Binary(std::string_view op, Ast a, Ast b) {
  Ast out{Ast::kApp, "", {}};
  out.kids.push_back(Name(std::string(op)));
  out.kids.push_back(std::move(a));
  out.kids.push_back(std::move(b));
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  bool AtEnd() const { return Cur().kind == Tok::kEnd; }
  const Token& Cur() const { return tokens_[pos_]; }
  const Token& Next() const {
    return tokens_[std::min(pos_ + 1, tokens_.size() - 1)];
  }

  bool Accept(Tok kind) {
    if (Cur().kind != kind) return false;
    ++pos_;
    return true;
  }

  void Expect(Tok kind, const char* what) {
    if (!Accept(kind)) Fail(std::string("expected ") + what);
  }

  [[noreturn]] void Fail(const std::string& message) const {
    const Token& t = Cur();
    std::string found = t.kind == Tok::kEnd ? "end of input" : "'" + t.text + "'";
    throw SyntaxError(message + ", found " + found, t.line, t.col);
  }

  // Skips a 'kind'/'type' declaration through its terminating '.'.
  bool SkipDeclaration() {
    if (Cur().kind != Tok::kIdent ||
        (Cur().text != "kind" && Cur().text != "type")) {
      return false;
    }
    while (!AtEnd() && Cur().kind != Tok::kDot) ++pos_;
    Expect(Tok::kDot, "'.'");
    return true;
  }

  Ast Expr() { return Imp(); }

  Ast Imp() {
    Ast left = Or();
    if (Accept(Tok::kImp)) return Binary(logic::kImp, std::move(left), Imp());
    return left;
  }

  Ast Or() {
    Ast left = And();
    if (Accept(Tok::kOr)) return Binary(logic::kOr, std::move(left), Or());
    return left;
  }

  Ast And() {
    Ast left = Eq();
    if (Accept(Tok::kAnd)) return Binary(logic::kAnd, std::move(left), And());
    return left;
  }

  Ast Eq() {
    Ast left = App();
    if (Accept(Tok::kEq)) {
      Ast right = App();
      if (Cur().kind == Tok::kEq) Fail("'=' is not associative");
      return Binary(logic::kEq, std::move(left), std::move(right));
    }
    return left;
  }

  // One or more primaries; an abstraction ends the application.
  Ast App() {
    std::vector<Ast> items;
    while (true) {
      const Tok k = Cur().kind;
      if (k == Tok::kIdent && Next().kind == Tok::kBackslash) {
        std::string binder = Cur().text;
        pos_ += 2;
        Ast abs{Ast::kAbs, std::move(binder), {}};
        abs.kids.push_back(Expr());
        items.push_back(std::move(abs));
        break;
      }
      if (k == Tok::kIdent) {
        items.push_back(Name(Cur().text));
        ++pos_;
      } else if (k == Tok::kString) {
        items.push_back(Ast{Ast::kString, Cur().text, {}});
        ++pos_;
      } else if (k == Tok::kLParen) {
        ++pos_;
        items.push_back(Expr());
        Expect(Tok::kRParen, "')'");
      } else {
        break;
      }
    }
    if (items.empty()) Fail("expected a term");
    if (items.size() == 1) return std::move(items.front());
    return Ast{Ast::kApp, "", std::move(items)};
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// Resolves names: bound names become indices, capitalized free names
// become loose indices, everything else is a constant.
class Resolver {
 public:
  // Gives each '_' a distinct name before collection.
  void RenameAnonymous(Ast& ast) {
    if (ast.kind == Ast::kName && ast.text == "_") {
      ast.text = "_" + std::to_string(++anonymous_);
    }
    for (auto& k : ast.kids) RenameAnonymous(k);
  }

  void Collect(const Ast& ast) {
    switch (ast.kind) {
      case Ast::kName:
        if (Lookup(ast.text)) return;
        if (!IsVariableName(ast.text)) return;
        for (const auto& f : free_) {
          if (f == ast.text) return;
        }
        free_.push_back(ast.text);
        return;
      case Ast::kString:
        return;
      case Ast::kAbs:
        bound_.push_back(ast.text);
        Collect(ast.kids[0]);
        bound_.pop_back();
        return;
      case Ast::kApp:
        for (const auto& k : ast.kids) Collect(k);
        return;
    }
  }

  TermPtr Build(const Ast& ast) {
    const auto depth = static_cast<std::uint32_t>(bound_.size());
    switch (ast.kind) {
      case Ast::kName: {
        if (auto p = Lookup(ast.text)) {
          return Term::Bound(static_cast<std::uint32_t>(depth - 1 - *p));
        }
        if (IsVariableName(ast.text)) {
          const std::size_t n = free_.size();
          for (std::size_t i = 0; i < n; ++i) {
            if (free_[i] == ast.text) {
              return Term::Bound(static_cast<std::uint32_t>(depth + n - 1 - i));
            }
          }
        }
        return Term::Const(ast.text);
      }
      case Ast::kString:
        return Term::String(ast.text);
      case Ast::kAbs: {
        bound_.push_back(ast.text);
        TermPtr body = Build(ast.kids[0]);
        bound_.pop_back();
        return Term::Abs(ast.text, std::move(body));
      }
      case Ast::kApp: {
        TermPtr head = Build(ast.kids[0]);
        std::vector<TermPtr> args;
        for (std::size_t i = 1; i < ast.kids.size(); ++i) {
          args.push_back(Build(ast.kids[i]));
        }
        return Term::App(std::move(head), std::move(args));
      }
    }
    return nullptr;
  }

  std::vector<std::string>& free_names() { return free_; }

 private:
  std::optional<std::size_t> Lookup(const std::string& name) const {
    for (std::size_t i = bound_.size(); i-- > 0;) {
      if (bound_[i] == name) return i;
    }
    return std::nullopt;
  }

  std::vector<std::string> bound_;
  std::vector<std::string> free_;
  int anonymous_ = 0;
};

// Operator precedence for printing; higher binds tighter.
constexpr int kPrecAbs = 0;
constexpr int kPrecImp = 1;
constexpr int kPrecOr = 2;
constexpr int kPrecAnd = 3;
constexpr int kPrecEq = 4;
constexpr int kPrecApp = 5;
constexpr int kPrecAtom = 6;

class Printer {
 public:
  explicit Printer(const PrintOptions& options) : options_(options) {}

  void Print(const TermPtr& t, int context, bool rightmost) {
    switch (t->kind()) {
      case TermKind::kConst:
        out_ += t->name();
        return;
      case TermKind::kString:
        PrintString(t->name());
        return;
      case TermKind::kLocal:
        out_ += "n" + std::to_string(t->id());
        return;
      case TermKind::kEigen:
      case TermKind::kLogic:
        PrintVar(t);
        return;
      case TermKind::kBound:
        PrintBound(t->index());
        return;
      case TermKind::kAbs: {
        const bool parens = !rightmost;
        if (parens) out_ += '(';
        ++depth_;
        out_ += "x" + std::to_string(depth_) + "\\";
        Print(t->body(), kPrecAbs, true);
        --depth_;
        if (parens) out_ += ')';
        return;
      }
      case TermKind::kApp:
        PrintApp(t, context, rightmost);
        return;
    }
  }

  std::string Take() { return std::move(out_); }

 private:
  void PrintApp(const TermPtr& t, int context, bool rightmost) {
    const TermPtr& head = t->head();
    auto args = t->args();
    if (head->kind() == TermKind::kConst && args.size() == 2) {
      const std::string& op = head->name();
      int prec = -1;
      if (op == logic::kImp) prec = kPrecImp;
      else if (op == logic::kOr) prec = kPrecOr;
      else if (op == logic::kAnd) prec = kPrecAnd;
      else if (op == logic::kEq) prec = kPrecEq;
      if (prec >= 0) {
        const bool parens = prec < context;
        if (parens) {
          out_ += '(';
          rightmost = true;
        }
        if (prec == kPrecEq) {
          Print(args[0], kPrecApp, false);
          out_ += " = ";
          Print(args[1], kPrecApp, rightmost);
        } else {
          Print(args[0], prec + 1, false);
          out_ += op == logic::kAnd ? " & " : " " + op + " ";
          Print(args[1], prec, rightmost);
        }
        if (parens) out_ += ')';
        return;
      }
    }
    const bool parens = kPrecApp < context;
    if (parens) {
      out_ += '(';
      rightmost = true;
    }
    Print(head, kPrecAtom, false);
    for (std::size_t i = 0; i < args.size(); ++i) {
      out_ += ' ';
      Print(args[i], kPrecAtom, rightmost && i + 1 == args.size());
    }
    if (parens) out_ += ')';
  }

  void PrintVar(const TermPtr& t) {
    if (options_.var_names != nullptr) {
      auto it = options_.var_names->find(t->id());
      if (it != options_.var_names->end()) {
        out_ += it->second;
        return;
      }
    }
    out_ += "_" + std::to_string(t->id());
  }

  void PrintBound(std::uint32_t index) {
    if (index < depth_) {
      out_ += "x" + std::to_string(depth_ - index);
      return;
    }
    const std::size_t j = index - depth_;
    const std::size_t n = options_.free_names.size();
    if (j < n) {
      out_ += options_.free_names[n - 1 - j];
      return;
    }
    out_ += "#" + std::to_string(j);
  }

  void PrintString(const std::string& text) {
    out_ += '"';
    for (char c : text) {
      switch (c) {
        case '"': out_ += "\\\""; break;
        case '\\': out_ += "\\\\"; break;
        case '\n': out_ += "\\n"; break;
        case '\t': out_ += "\\t"; break;
        default: out_ += c;
      }
    }
    out_ += '"';
  }

  const PrintOptions& options_;
  std::string out_;
  std::uint32_t depth_ = 0;
};

TermPtr Resolve(Ast& ast, Resolver& resolver) {
  resolver.RenameAnonymous(ast);
  resolver.Collect(ast);
  return resolver.Build(ast);
}

}  // namespace

bool IsVariableName(std::string_view name) {
  return !name.empty() &&
         (std::isupper(static_cast<unsigned char>(name[0])) || name[0] == '_');
}

std::vector<SourceClause> ParseProgram(std::string_view text) {
  Parser parser(Lexer(text).Run());
  std::vector<SourceClause> clauses;
  while (!parser.AtEnd()) {
    if (parser.SkipDeclaration()) continue;
    const std::size_t line = parser.Cur().line;
    Ast head = parser.App();
    std::optional<Ast> body;
    if (parser.Accept(Tok::kDefine)) body = parser.Expr();
    parser.Expect(Tok::kDot, body ? "'.'" : "':=' or '.'");

    // Head and body share one set of free names.
    Ast whole = Binary("clause", std::move(head),
                       body ? std::move(*body) : Name(std::string(logic::kTrue)));
    Resolver resolver;
    TermPtr t = Resolve(whole, resolver);
    SourceClause clause;
    clause.head = t->args()[0];
    clause.body = t->args()[1];
    clause.free_names = std::move(resolver.free_names());
    clause.line = line;
    clauses.push_back(std::move(clause));
  }
  return clauses;
}

SourceGoal ParseGoal(std::string_view text) {
  Parser parser(Lexer(text).Run());
  Ast ast = parser.Expr();
  parser.Accept(Tok::kDot);
  if (!parser.AtEnd()) parser.Fail("expected end of goal");
  Resolver resolver;
  SourceGoal goal;
  goal.formula = Resolve(ast, resolver);
  goal.free_names = std::move(resolver.free_names());
  return goal;
}

std::string PrintTerm(const TermPtr& t, const PrintOptions& options) {
  Printer printer(options);
  printer.Print(t, kPrecAbs, true);
  return printer.Take();
}

std::string PrintGoal(const SourceGoal& goal) {
  PrintOptions options;
  options.free_names = goal.free_names;
  return PrintTerm(goal.formula, options);
}

std::string PrintClause(const SourceClause& clause) {
  PrintOptions options;
  options.free_names = clause.free_names;
  std::string out = PrintTerm(clause.head, options);
  const TermPtr& body = clause.body;
  if (!(body->kind() == TermKind::kConst && body->name() == logic::kTrue)) {
    out += " := " + PrintTerm(body, options);
  }
  return out + ".";
}

}  // namespace level01
