#include "neralign/monoid.hpp"

#include <numeric>
#include <sstream>

namespace neralign {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnitLabel: return "UnitLabel";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kUnknownGenerator: return "UnknownGenerator";
    case ErrorCode::kUnknownVertex: return "UnknownVertex";
    case ErrorCode::kNotConnected: return "NotConnected";
    case ErrorCode::kNotAligned: return "NotAligned";
    case ErrorCode::kNotCartier: return "NotCartier";
    case ErrorCode::kNoZeroVertex: return "NoZeroVertex";
    case ErrorCode::kZeroThicknessEdge: return "ZeroThicknessEdge";
    case ErrorCode::kDegenerateTrait: return "DegenerateTrait";
    case ErrorCode::kNoCorner: return "NoCorner";
    case ErrorCode::kNoExactExpansion: return "NoExactExpansion";
    case ErrorCode::kEmptySide: return "EmptySide";
    case ErrorCode::kNotInA: return "NotInA";
    case ErrorCode::kWindowTooSmall: return "WindowTooSmall";
    case ErrorCode::kZeroWidth: return "ZeroWidth";
    case ErrorCode::kBadInput: return "BadInput";
  }
  return "Unknown";
}

Label::Label(std::map<std::string, int> exponents)
    : exponents_(std::move(exponents)) {
  for (auto it = exponents_.begin(); it != exponents_.end();) {
    if (it->second == 0) {
      it = exponents_.erase(it);
    } else if (it->second < 0) {
      throw DomainError(ErrorCode::kBadInput,
                        "label exponents must be positive, got " +
                            std::to_string(it->second) + " for '" + it->first +
                            "'");
    } else {
      ++it;
    }
  }
}

Label Label::generator(const std::string& name, int exponent) {
  return Label({{name, exponent}});
}

int Label::exponent_of(const std::string& name) const {
  auto it = exponents_.find(name);
  return it == exponents_.end() ? 0 : it->second;
}

int Label::total_degree() const {
  int degree = 0;
  for (const auto& [name, exponent] : exponents_) degree += exponent;
  return degree;
}

Label Label::times(const Label& other) const {
  std::map<std::string, int> result = exponents_;
  for (const auto& [name, exponent] : other.exponents_) {
    result[name] += exponent;
  }
  return Label(std::move(result));
}

Label Label::pow(int k) const {
  if (k < 0) {
    throw DomainError(ErrorCode::kBadInput, "label power must be nonnegative");
  }
  std::map<std::string, int> result;
  if (k > 0) {
    for (const auto& [name, exponent] : exponents_) {
      result[name] = exponent * k;
    }
  }
  return Label(std::move(result));
}

std::pair<Label, int> Label::primitive_decomposition() const {
  if (is_identity()) return {Label(), 0};
  int g = 0;
  for (const auto& [name, exponent] : exponents_) g = std::gcd(g, exponent);
  std::map<std::string, int> primitive;
  for (const auto& [name, exponent] : exponents_) {
    primitive[name] = exponent / g;
  }
  return {Label(std::move(primitive)), g};
}

std::string Label::to_string() const {
  if (is_identity()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto& [name, exponent] : exponents_) {
    if (!first) out << "*";
    first = false;
    out << name;
    if (exponent != 1) out << "^" << exponent;
  }
  return out.str();
}

Label label_mul(const Label& a, const Label& b) { return a.times(b); }

std::optional<ProportionalityWitness> proportional(const Label& a,
                                                   const Label& b) {
  if (a.is_identity() || b.is_identity()) {
    throw DomainError(ErrorCode::kUnitLabel,
                      "proportionality is only defined for non-unit labels");
  }
  const auto& ea = a.exponents();
  const auto& eb = b.exponents();
  if (ea.size() != eb.size()) return std::nullopt;
  auto ita = ea.begin();
  auto itb = eb.begin();
  // Candidate ratio n'/n = a_g/b_g must be the same for every generator.
  int p = ita->second;
  int q = itb->second;
  int g = std::gcd(p, q);
  p /= g;
  q /= g;
  for (; ita != ea.end(); ++ita, ++itb) {
    if (ita->first != itb->first) return std::nullopt;
    if (static_cast<long long>(ita->second) * q !=
        static_cast<long long>(itb->second) * p) {
      return std::nullopt;
    }
  }
  // a^q = b^p holds and gcd(p, q) = 1.
  return ProportionalityWitness{q, p};
}

bool CyclicMonoidN2::contains(std::int64_t a, std::int64_t b) const {
  if (a == 0 && b == 0) return true;
  if (is_zero()) return false;
  std::int64_t k = 0;
  if (m != 0) {
    if (a % m != 0) return false;
    k = a / m;
  } else if (a != 0) {
    return false;
  }
  if (n != 0) {
    if (b % n != 0) return false;
    if (m != 0) return k == b / n;
    k = b / n;
  } else if (b != 0) {
    return false;
  }
  return k > 0;
}

CyclicMonoidN2 saturation(const CyclicMonoidN2& monoid) {
  std::int64_t g = std::gcd(monoid.m, monoid.n);
  if (g == 0) return monoid;
  return CyclicMonoidN2{monoid.m / g, monoid.n / g};
}

std::optional<std::pair<std::int64_t, std::int64_t>> common_relation(
    const std::vector<CyclicMonoidN2>& monoids) {
  if (monoids.empty()) {
    throw DomainError(ErrorCode::kEmptyInput,
                      "common_relation needs at least one monoid");
  }
  CyclicMonoidN2 base = saturation(monoids.front());
  if (base.is_zero()) return std::nullopt;
  std::int64_t multiple = 1;
  for (const auto& monoid : monoids) {
    if (saturation(monoid) != base) return std::nullopt;
    std::int64_t g = std::gcd(monoid.m, monoid.n);
    multiple = std::lcm(multiple, g);
  }
  return std::make_pair(base.m * multiple, base.n * multiple);
}

TraitSpec::TraitSpec(std::map<std::string, int> orders)
    : orders_(std::move(orders)) {
  for (const auto& [name, order] : orders_) {
    if (order < 0) {
      throw DomainError(ErrorCode::kBadInput,
                        "trait order of '" + name + "' must be nonnegative");
    }
  }
}

int TraitSpec::order_of(const std::string& name) const {
  auto it = orders_.find(name);
  return it == orders_.end() ? 0 : it->second;
}

long long TraitSpec::order_of_label(const Label& label) const {
  long long total = 0;
  for (const auto& [name, exponent] : label.exponents()) {
    total += static_cast<long long>(exponent) * order_of(name);
  }
  return total;
}

}  // namespace neralign
