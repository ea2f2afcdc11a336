#include "dioph/parse.hpp"

#include <cctype>
#include <memory>

#include "dioph/error.hpp"

namespace dioph {

namespace {

struct Node {
  enum Kind { Int, Var, Sqrt, Neg, Add, Sub, Mul, Div, Pow } kind;
  std::size_t pos = 0;
  mpz_class value;  // Int literal, Sqrt radicand, Pow exponent
  std::unique_ptr<Node> lhs, rhs;
};

using NodePtr = std::unique_ptr<Node>;

NodePtr make(Node::Kind k, std::size_t pos, NodePtr l = nullptr, NodePtr r = nullptr) {
  auto n = std::make_unique<Node>();
  n->kind = k;
  n->pos = pos;
  n->lhs = std::move(l);
  n->rhs = std::move(r);
  return n;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parse() {
    NodePtr e = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected character");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(pos_, what); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  mpz_class uint_literal() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an unsigned integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      skip();
      const std::size_t at = pos_;
      if (eat('+')) {
        lhs = make(Node::Add, at, std::move(lhs), term());
      } else if (eat('-')) {
        lhs = make(Node::Sub, at, std::move(lhs), term());
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    for (;;) {
      skip();
      const std::size_t at = pos_;
      if (eat('*')) {
        lhs = make(Node::Mul, at, std::move(lhs), unary());
      } else if (eat('/')) {
        lhs = make(Node::Div, at, std::move(lhs), unary());
      } else {
        return lhs;
      }
    }
  }

  NodePtr unary() {
    skip();
    const std::size_t at = pos_;
    if (eat('-')) return make(Node::Neg, at, unary());
    NodePtr base = atom();
    skip();
    const std::size_t caret = pos_;
    if (eat('^')) {
      auto p = make(Node::Pow, caret, std::move(base));
      p->value = uint_literal();
      return p;
    }
    return base;
  }

  NodePtr atom() {
    skip();
    const std::size_t at = pos_;
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto n = make(Node::Int, at);
      n->value = uint_literal();
      return n;
    }
    if (c == 'X' || c == 'x') {
      ++pos_;
      return make(Node::Var, at);
    }
    if (text_.substr(pos_, 4) == "sqrt") {
      pos_ += 4;
      if (!eat('(')) fail("expected '('");
      const bool neg = eat('-');
      auto n = make(Node::Sqrt, at);
      n->value = uint_literal();
      if (neg) n->value = -n->value;
      if (!eat(')')) fail("expected ')'");
      return n;
    }
    if (eat('(')) {
      NodePtr e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    fail("unexpected character");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// k = m^2 * f with f squarefree.
void square_split(const mpz_class& k, mpz_class& m, mpz_class& f) {
  mpz_class rest = abs(k);
  m = 1;
  f = 1;
  for (mpz_class p = 2; p * p <= rest; ++p) {
    while (rest % (p * p) == 0) {
      rest /= p * p;
      m *= p;
    }
    if (rest % p == 0) {
      rest /= p;
      f *= p;
    }
  }
  f *= rest;
  if (k < 0) f = -f;
}

void collect_radicands(const Node& n, std::optional<long>& found) {
  if (n.kind == Node::Sqrt && n.value != 0) {
    mpz_class m, f;
    square_split(n.value, m, f);
    if (f != 1) {
      if (!f.fits_slong_p()) throw SyntaxError(n.pos, "radicand too large");
      const long r = f.get_si();
      if (found && *found != r)
        throw Error(Errc::MixedRadicands, "sqrt(" + std::to_string(*found) + ") and sqrt(" + std::to_string(r) + ")");
      found = r;
    }
  }
  if (n.lhs) collect_radicands(*n.lhs, found);
  if (n.rhs) collect_radicands(*n.rhs, found);
}

Poly eval(const Node& n, const FieldSpec& spec) {
  switch (n.kind) {
    case Node::Int: return Poly(FieldElem(mpq_class(n.value), spec));
    case Node::Var: return Poly::x(spec);
    case Node::Sqrt: {
      if (n.value == 0) return Poly(spec);
      mpz_class m, f;
      square_split(n.value, m, f);
      if (f == 1) return Poly(FieldElem(mpq_class(m), spec));
      return Poly(FieldElem(mpq_class(0), mpq_class(m), spec));
    }
    case Node::Neg: return -eval(*n.lhs, spec);
    case Node::Add: return eval(*n.lhs, spec) + eval(*n.rhs, spec);
    case Node::Sub: return eval(*n.lhs, spec) - eval(*n.rhs, spec);
    case Node::Mul: return eval(*n.lhs, spec) * eval(*n.rhs, spec);
    case Node::Div: {
      const Poly den = eval(*n.rhs, spec);
      if (!den.is_constant()) throw SyntaxError(n.pos, "division by a non-constant");
      if (den.is_zero()) throw Error(Errc::DivisionByZero, "division by zero at offset " + std::to_string(n.pos));
      return eval(*n.lhs, spec) * Poly(den.coeff(0).inverse());
    }
    case Node::Pow: {
      if (!n.value.fits_uint_p() || n.value > 4096) throw SyntaxError(n.pos, "exponent too large");
      return power(eval(*n.lhs, spec), static_cast<unsigned>(n.value.get_ui()));
    }
  }
  return Poly(spec);
}

FieldSpec merge(const std::optional<FieldSpec>& forced, std::optional<long> radicand) {
  if (forced) {
    if (radicand && (forced->is_rational() || forced->radicand() != *radicand))
      throw Error(Errc::MixedRadicands, "expression uses sqrt(" + std::to_string(*radicand) + ") but the field is " +
                                            forced->name());
    return *forced;
  }
  return radicand ? FieldSpec::quadratic(*radicand) : FieldSpec::rational();
}

}  // namespace

Poly parse_poly(std::string_view text, std::optional<FieldSpec> field) {
  NodePtr tree = Parser(text).parse();
  std::optional<long> radicand;
  collect_radicands(*tree, radicand);
  return eval(*tree, merge(field, radicand));
}

std::vector<Poly> unify_fields(std::vector<Poly> polys, std::optional<FieldSpec> field) {
  std::optional<long> radicand;
  for (const Poly& p : polys) {
    if (p.spec().is_rational()) continue;
    const long r = p.spec().radicand();
    if (radicand && *radicand != r)
      throw Error(Errc::MixedRadicands, "sqrt(" + std::to_string(*radicand) + ") and sqrt(" + std::to_string(r) + ")");
    radicand = r;
  }
  const FieldSpec target = merge(field, radicand);
  for (Poly& p : polys) p = p.promoted(target);
  return polys;
}

std::vector<Poly> parse_polys(const std::vector<std::string>& texts, std::optional<FieldSpec> field) {
  std::vector<Poly> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(parse_poly(t, field));
  return unify_fields(std::move(out), field);
}

FieldSpec parse_field(std::string_view text) {
  if (text == "Q" || text == "rational") return FieldSpec::rational();
  std::string_view body = text;
  if (body.substr(0, 2) == "Q(" && body.back() == ')') body = body.substr(2, body.size() - 3);
  if (body.substr(0, 4) != "sqrt") throw Error(Errc::InvalidField, std::string(text));
  body.remove_prefix(4);
  if (!body.empty() && body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
  try {
    std::size_t used = 0;
    const long n = std::stol(std::string(body), &used);
    if (used != body.size()) throw Error(Errc::InvalidField, std::string(text));
    return FieldSpec::quadratic(n);
  } catch (const std::logic_error&) {
    throw Error(Errc::InvalidField, std::string(text));
  }
}

}  // namespace dioph
