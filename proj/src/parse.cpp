#include "pdr/parse.hpp"

#include <json.hpp>

#include <cctype>
#include <set>
#include <vector>

namespace pdr {

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  mpz_class integer() {
    skip_ws();
    std::size_t start = pos;
    std::string digits;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      digits += text[pos++];
    if (digits.empty()) throw parse_error("expected integer", start);
    return mpz_class(digits);
  }

  std::string label() {
    skip_ws();
    std::size_t start = pos;
    std::string name;
    auto ok = [&](char c, bool first) {
      return std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
             (!first && std::isdigit(static_cast<unsigned char>(c)));
    };
    while (pos < text.size() && ok(text[pos], name.empty())) name += text[pos++];
    if (name.empty()) throw parse_error("expected label after '@'", start);
    return name;
  }
};

struct Term {
  Rational coeff;
  std::string label;  // empty = auto
};

QDivisor from_json_object(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
  }
  if (!j.is_object()) throw parse_error("JSON divisor must be an object", 0);
  QDivisor d;
  for (const auto& [label, value] : j.items()) {
    if (value.is_string()) {
      try {
        d.add(label, Rational::parse(value.get<std::string>()));
      } catch (const std::domain_error& e) {
        throw parse_error(std::string(e.what()) + " for label '" + label + "'", 0);
      }
    } else if (value.is_number_integer()) {
      d.add(label, Rational(value.get<long long>(), 1));
    } else {
      throw parse_error("coefficient of '" + label + "' must be a \"num/den\" string", 0);
    }
  }
  return d;
}

}  // namespace

QDivisor parse_divisor(const std::string& text) {
  Cursor c{text};
  if (c.done()) throw parse_error("empty divisor", 0);
  if (c.peek() == '{') return from_json_object(text);

  std::vector<Term> terms;
  bool first = true;
  while (!c.done()) {
    int sign = 1;
    if (first) {
      if (c.peek() == '-') {
        sign = -1;
        ++c.pos;
      } else if (c.peek() == '+') {
        ++c.pos;
      }
    } else {
      char op = c.peek();
      if (op == '+' || op == '-') {
        sign = op == '-' ? -1 : 1;
        ++c.pos;
      } else {
        throw parse_error(std::string("expected '+' or '-', got '") + op + "'", c.pos);
      }
    }
    mpz_class num = c.integer();
    mpz_class den = 1;
    if (c.peek() == '/') {
      ++c.pos;
      std::size_t den_pos = c.pos;
      den = c.integer();
      if (den == 0) throw parse_error("zero denominator", den_pos);
    }
    std::string label;
    if (c.peek() == '@') {
      ++c.pos;
      label = c.label();
    }
    terms.push_back(Term{Rational(sign * num, den), label});
    first = false;
  }

  std::set<std::string> explicit_labels;
  for (const auto& t : terms)
    if (!t.label.empty()) explicit_labels.insert(t.label);

  QDivisor d;
  long long auto_index = 0;
  for (auto& t : terms) {
    std::string label = t.label;
    if (label.empty()) {
      do {
        label = "P" + std::to_string(auto_index++);
      } while (explicit_labels.count(label));
    }
    d.add(label, t.coeff);
  }
  return d;
}

}  // namespace pdr
