// The classification tables, transcribed entry by entry.  Slot fractions
// are written exactly as printed (with explicit '*'); no algebraic
// simplification is applied.  Entry ids are positional in the printed
// lists: 10 families for multiplicity 3, 39 for multiplicity 4.
#include <cctype>
#include <initializer_list>

#include "pdr/classify.hpp"
#include "pdr/classify_expr.hpp"

namespace pdr {

namespace detail {

long long Expr::eval(const std::vector<long long>& params) const {
  switch (kind) {
    case Kind::constant:
      return value;
    case Kind::param:
      return params.at(param_index);
    case Kind::add:
      return checked_add(lhs->eval(params), rhs->eval(params));
    case Kind::sub:
      return checked_add(lhs->eval(params), -rhs->eval(params));
    case Kind::mul:
      return checked_mul(lhs->eval(params), rhs->eval(params));
  }
  throw internal_error("Expr::eval: bad node");
}

void Expr::collect_params(std::set<int>& out) const {
  if (kind == Kind::param) out.insert(param_index);
  if (lhs) lhs->collect_params(out);
  if (rhs) rhs->collect_params(out);
}

namespace {

struct ExprParser {
  const std::string& src;
  const std::vector<std::string>& params;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < src.size() && src[pos] == c) { ++pos; return true; }
    return false;
  }

  std::unique_ptr<Expr> parse_expr() {
    auto lhs = parse_term();
    for (;;) {
      if (eat('+')) {
        auto node = std::make_unique<Expr>();
        node->kind = Expr::Kind::add;
        node->lhs = std::move(lhs);
        node->rhs = parse_term();
        lhs = std::move(node);
      } else if (eat('-')) {
        auto node = std::make_unique<Expr>();
        node->kind = Expr::Kind::sub;
        node->lhs = std::move(lhs);
        node->rhs = parse_term();
        lhs = std::move(node);
      } else {
        return lhs;
      }
    }
  }

  std::unique_ptr<Expr> parse_term() {
    auto lhs = parse_factor();
    while (eat('*')) {
      auto node = std::make_unique<Expr>();
      node->kind = Expr::Kind::mul;
      node->lhs = std::move(lhs);
      node->rhs = parse_factor();
      lhs = std::move(node);
    }
    return lhs;
  }

  std::unique_ptr<Expr> parse_factor() {
    skip_ws();
    if (eat('(')) {
      auto inner = parse_expr();
      if (!eat(')')) throw internal_error("slot expression: missing ')' in " + src);
      return inner;
    }
    if (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
      long long v = 0;
      while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos])))
        v = v * 10 + (src[pos++] - '0');
      auto node = std::make_unique<Expr>();
      node->kind = Expr::Kind::constant;
      node->value = v;
      return node;
    }
    if (pos < src.size() && std::isalpha(static_cast<unsigned char>(src[pos]))) {
      std::string name;
      while (pos < src.size() && std::isalpha(static_cast<unsigned char>(src[pos])))
        name += src[pos++];
      for (int i = 0; i < static_cast<int>(params.size()); ++i) {
        if (params[i] == name) {
          auto node = std::make_unique<Expr>();
          node->kind = Expr::Kind::param;
          node->param_index = i;
          return node;
        }
      }
      throw internal_error("slot expression: unknown parameter '" + name + "' in " + src);
    }
    throw internal_error("slot expression: parse failure in " + src);
  }
};

}  // namespace

std::unique_ptr<Expr> parse_expr(const std::string& text, const std::vector<std::string>& params) {
  ExprParser p{text, params};
  auto e = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) throw internal_error("slot expression: trailing input in " + text);
  return e;
}

}  // namespace detail

namespace {

// Splits "num/den" at the top-level slash (absent slash: integer slot).
Slot make_slot(const std::string& text, const std::vector<std::string>& params) {
  int depth = 0;
  std::size_t slash = std::string::npos;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == '/' && depth == 0) {
      slash = i;
      break;
    }
  }
  Slot slot;
  slot.text = text;
  if (slash == std::string::npos) {
    slot.num = detail::parse_expr(text, params);
    slot.den = detail::parse_expr("1", params);
  } else {
    slot.num = detail::parse_expr(text.substr(0, slash), params);
    slot.den = detail::parse_expr(text.substr(slash + 1), params);
  }
  std::set<int> used;
  slot.num->collect_params(used);
  slot.den->collect_params(used);
  slot.param_indices.assign(used.begin(), used.end());
  return slot;
}

struct RawFamily {
  const char* id;
  long long s;
  std::vector<std::string> params;
  std::vector<long long> mins;  // empty = all zero
  std::vector<const char*> slots;
};

std::vector<Family> build(int table, const std::vector<RawFamily>& raw) {
  std::vector<Family> out;
  out.reserve(raw.size());
  for (const auto& rf : raw) {
    Family f;
    f.id = rf.id;
    f.table = table;
    f.s = rf.s;
    f.params = rf.params;
    f.param_min = rf.mins.empty() ? std::vector<long long>(rf.params.size(), 0) : rf.mins;
    if (f.param_min.size() != f.params.size())
      throw internal_error("family " + f.id + ": parameter bound count mismatch");
    for (const char* s : rf.slots) f.slots.push_back(make_slot(s, f.params));
    // Each parameter must belong to exactly one slot; the matcher depends
    // on slots being independently enumerable.
    std::vector<int> owner(f.params.size(), -1);
    for (std::size_t si = 0; si < f.slots.size(); ++si) {
      for (int p : f.slots[si].param_indices) {
        if (owner[p] != -1) throw internal_error("family " + f.id + ": shared parameter");
        owner[p] = static_cast<int>(si);
      }
    }
    for (std::size_t p = 0; p < f.params.size(); ++p)
      if (owner[p] == -1) throw internal_error("family " + f.id + ": unused parameter");
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

const std::vector<Family>& e3_families() {
  static const std::vector<Family> table = build(3, {
      {"e3.1", 3, {"a", "b", "c"}, {}, {"a/(a+1)", "b/(b+1)", "c/(c+1)"}},
      {"e3.2", 2, {"n", "a", "b"}, {},
       {"0", "n/(n+1)", "((a+1)*b+2*a+1)/((a+2)*b+2*a+3)"}},
      {"e3.3", 2, {"n", "b"}, {}, {"1/2", "(n+1)/(n+2)", "(b+1)/(2*b+3)"}},
      {"e3.4", 2, {"a", "b"}, {},
       {"1/2", "1/2", "((a+2)*b+2*a+3)/((a+3)*b+2*a+5)"}},
      {"e3.5", 2, {"b"}, {}, {"1/2", "2/3", "(2*b+3)/(3*b+5)"}},
      {"e3.6", 2, {"b"}, {}, {"1/2", "2/3", "(3*b+5)/(4*b+7)"}},
      {"e3.7", 2, {}, {}, {"1/2", "2/3", "7/9"}},
      {"e3.8", 2, {}, {}, {"1/2", "3/4", "3/5"}},
      {"e3.9", 2, {}, {}, {"1/2", "4/5", "3/5"}},
      {"e3.10", 2, {"n"}, {}, {"2/3", "(n+2)/(n+3)", "1/3"}},
  });
  return table;
}

const std::vector<Family>& e4_families() {
  static const std::vector<Family> table = build(4, {
      // The first slot pair requires c,d >= 1: with c = 0 or d = 0 the
      // divisor degenerates to a multiplicity-3 configuration.
      {"e4.1", 3, {"c", "d"}, {1, 1}, {"1/2", "1/2", "c/(c+1)", "d/(d+1)"}},
      {"e4.2", 2, {"b"}, {}, {"1/2", "2/3", "(4*b+11)/(5*b+14)"}},
      {"e4.3", 2, {"b"}, {}, {"1/2", "3/4", "(2*b+5)/(3*b+8)"}},
      {"e4.4", 2, {"b"}, {}, {"1/2", "4/5", "(2*b+5)/(3*b+8)"}},
      {"e4.5", 2, {}, {}, {"1/2", "5/6", "3/5"}},
      {"e4.6", 2, {}, {}, {"1/2", "6/7", "3/5"}},
      {"e4.7", 2, {"b"}, {}, {"2/3", "2/3", "(b+2)/(2*b+5)"}},
      {"e4.8", 2, {"b"}, {}, {"2/3", "3/4", "(b+2)/(2*b+5)"}},
      {"e4.9", 2, {}, {}, {"2/3", "4/5", "2/5"}},
      {"e4.10", 2, {}, {}, {"3/4", "3/4", "1/3"}},
      {"e4.11", 2, {}, {}, {"3/4", "4/5", "1/3"}},
      {"e4.12", 2, {}, {}, {"3/4", "5/6", "1/3"}},
      {"e4.13", 4, {"a", "b", "c", "d"}, {},
       {"a/(a+1)", "b/(b+1)", "c/(c+1)", "d/(d+1)"}},
      {"e4.14", 2, {"n", "a", "b"}, {},
       {"0", "n/(n+1)", "((2*a+1)*b+3*a+1)/((2*a+3)*b+3*a+4)"}},
      {"e4.15", 2, {"n", "b"}, {}, {"1/2", "(n+1)/(n+2)", "(b+1)/(3*b+4)"}},
      {"e4.16", 2, {"a", "b"}, {},
       {"1/2", "1/2", "((2*a+3)*b+3*a+4)/((2*a+5)*b+3*a+7)"}},
      {"e4.17", 2, {"b"}, {}, {"1/2", "2/3", "(3*b+4)/(5*b+7)"}},
      {"e4.18", 2, {"b"}, {}, {"1/2", "2/3", "(5*b+7)/(7*b+10)"}},
      {"e4.19", 2, {"b"}, {}, {"1/2", "2/3", "(7*b+10)/(9*b+13)"}},
      {"e4.20", 2, {"b"}, {}, {"1/2", "3/4", "(3*b+4)/(5*b+7)"}},
      {"e4.21", 2, {"b"}, {}, {"1/2", "4/5", "(3*b+4)/(5*b+7)"}},
      {"e4.22", 2, {}, {}, {"1/2", "5/6", "4/7"}},
      {"e4.23", 2, {}, {}, {"1/2", "6/7", "4/7"}},
      {"e4.24", 2, {"n", "b"}, {}, {"2/3", "(n+2)/(n+3)", "(b+1)/(3*b+4)"}},
      {"e4.25", 2, {"n"}, {}, {"3/4", "(n+3)/(n+4)", "1/4"}},
      {"e4.26", 3, {"m", "n", "a", "b"}, {},
       {"m/(m+1)", "n/(n+1)", "((a+1)*b+2*a+1)/((a+2)*b+2*a+3)"}},
      {"e4.27", 2, {"n", "a", "b", "c"}, {},
       {"0", "n/(n+1)",
        "(((a+1)*b+3*a+2)*c+(2*a+2)*b+5*a+3)/(((a+2)*b+3*a+5)*c+(2*a+4)*b+5*a+8)"}},
      {"e4.28", 2, {"n", "b", "c"}, {},
       {"1/2", "(n+1)/(n+2)", "((b+2)*c+2*b+3)/((2*b+5)*c+4*b+8)"}},
      {"e4.29", 2, {"a", "b", "c"}, {},
       {"1/2", "1/2",
        "(((a+2)*b+3*a+5)*c+(2*a+4)*b+5*a+8)/(((a+3)*b+3*a+8)*c+(2*a+6)*b+5*a+13)"}},
      {"e4.30", 2, {"b", "c"}, {},
       {"1/2", "2/3", "((2*b+5)*c+4*b+8)/((3*b+8)*c+6*b+13)"}},
      {"e4.31", 2, {"b", "c"}, {},
       {"1/2", "2/3", "((3*b+8)*c+6*b+13)/((4*b+11)*c+8*b+18)"}},
      {"e4.32", 2, {"a", "b", "c", "d"}, {},
       {"0", "((a+1)*b+2*a+1)/((a+2)*b+2*a+3)", "((c+1)*d+2*c+1)/((c+2)*d+2*c+3)"}},
      {"e4.33", 2, {"m", "b", "d"}, {},
       {"(m+1)/(m+2)", "(b+1)/(2*b+3)", "(d+1)/(2*d+3)"}},
      {"e4.34", 2, {"b", "c", "d"}, {},
       {"1/2", "(b+1)/(2*b+3)", "((c+2)*d+2*c+3)/((c+3)*d+2*c+5)"}},
      {"e4.35", 2, {"b", "d"}, {}, {"1/2", "(2*b+3)/(3*b+5)", "(2*d+3)/(3*d+5)"}},
      {"e4.36", 2, {"d"}, {}, {"1/2", "3/5", "(3*d+5)/(4*d+7)"}},
      {"e4.37", 2, {"d"}, {}, {"1/2", "3/5", "(4*d+7)/(5*d+9)"}},
      {"e4.38", 2, {"c", "d"}, {}, {"2/3", "1/3", "((c+2)*d+2*c+3)/((c+3)*d+2*c+5)"}},
      {"e4.39", 2, {"m", "d"}, {}, {"(m+1)/(m+2)", "1/3", "(2*d+3)/(3*d+5)"}},
  });
  return table;
}

const std::vector<Family>& families(int table) {
  if (table == 3) return e3_families();
  if (table == 4) return e4_families();
  throw domain_error("families: table must be 3 or 4");
}

}  // namespace pdr
