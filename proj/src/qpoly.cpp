#include "orbh/qpoly.hpp"

#include <cctype>
#include <stdexcept>

namespace orbh {

QPoly QPoly::monomial(int exponent, const Rational& c) {
  QPoly p;
  p.set(exponent, c);
  return p;
}

Rational QPoly::coefficient(int exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void QPoly::set(int exponent, const Rational& c) {
  if (exponent < 0) throw std::invalid_argument("QPoly: negative exponent");
  if (c == 0) {
    coeffs_.erase(exponent);
  } else {
    auto& slot = coeffs_[exponent];
    slot = c;
    slot.canonicalize();
  }
}

void QPoly::add(int exponent, const Rational& c) {
  if (c == 0) return;
  if (exponent < 0) throw std::invalid_argument("QPoly: negative exponent");
  auto [it, inserted] = coeffs_.try_emplace(exponent, c);
  if (inserted) {
    it->second.canonicalize();
  } else {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

bool QPoly::is_constant() const { return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0); }

Rational QPoly::at_one() const {
  Rational s = 0;
  for (const auto& [e, c] : coeffs_) s += c;
  return s;
}

bool QPoly::is_nonnegative() const { return !first_negative().has_value(); }

bool QPoly::has_integer_coefficients() const {
  for (const auto& [e, c] : coeffs_) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

std::optional<int> QPoly::first_negative() const {
  for (const auto& [e, c] : coeffs_) {
    if (c < 0) return e;
  }
  return std::nullopt;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  for (const auto& [e, c] : o.coeffs_) add(e, c);
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  for (const auto& [e, c] : o.coeffs_) add(e, -c);
  return *this;
}

QPoly& QPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
  } else {
    Rational k = c;
    k.canonicalize();
    for (auto& [e, v] : coeffs_) v *= k;
  }
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  QPoly out;
  for (const auto& [ea, ca] : a.coeffs_) {
    for (const auto& [eb, cb] : b.coeffs_) out.add(ea + eb, ca * cb);
  }
  return out;
}

std::string QPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : coeffs_) {
    Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (e == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "q";
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

QPoly QPoly::parse(std::string_view text) {
  QPoly out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_number = [&]() -> std::string {
    std::size_t start = i;
    while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/')) ++i;
    return std::string(text.substr(start, i - start));
  };
  skip();
  if (i == text.size()) throw std::invalid_argument("QPoly::parse: empty input");
  bool first = true;
  while (true) {
    skip();
    if (i == text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      throw std::invalid_argument("QPoly::parse: expected '+' or '-'");
    }
    first = false;
    Rational coef = 1;
    int exponent = 0;
    std::string num = read_number();
    if (!num.empty()) coef = parse_rational(num);
    skip();
    if (!num.empty() && i < text.size() && text[i] == '*') {
      ++i;
      skip();
    }
    if (i < text.size() && text[i] == 'q') {
      ++i;
      exponent = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        std::string e = read_number();
        if (e.empty()) throw std::invalid_argument("QPoly::parse: missing exponent");
        exponent = std::stoi(e);
      }
    } else if (num.empty()) {
      throw std::invalid_argument("QPoly::parse: unexpected character");
    }
    out.add(exponent, coef * sign);
  }
  return out;
}

}  // namespace orbh
