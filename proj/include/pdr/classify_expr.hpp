// Tiny integer expression AST for the table slots.
#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "pdr/errors.hpp"
#include "pdr/rational.hpp"

namespace pdr::detail {

struct Expr {
  enum class Kind { constant, param, add, sub, mul };
  Kind kind = Kind::constant;
  long long value = 0;
  int param_index = -1;
  std::unique_ptr<Expr> lhs, rhs;

  long long eval(const std::vector<long long>& params) const;
  void collect_params(std::set<int>& out) const;
};

std::unique_ptr<Expr> parse_expr(const std::string& text, const std::vector<std::string>& params);

}  // namespace pdr::detail
