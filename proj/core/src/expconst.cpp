#include "blues/expconst.hpp"

#include <sstream>
#include <stdexcept>

namespace blues {

void ExpConst::add(Rational c, Rational q) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(q));
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

bool ExpConst::is_rational() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == 0;
}

Rational ExpConst::rational_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_rational()) throw std::logic_error("ExpConst is not a plain rational");
  return terms_.begin()->second;
}

ExpConst ExpConst::operator+(const ExpConst& o) const {
  ExpConst r = *this;
  for (const auto& [q, c] : o.terms_) r.add(c, q);
  return r;
}

ExpConst ExpConst::operator-() const {
  ExpConst r;
  for (const auto& [q, c] : terms_) r.terms_.emplace(q, -c);
  return r;
}

ExpConst ExpConst::operator-(const ExpConst& o) const { return *this + (-o); }

ExpConst ExpConst::operator*(const ExpConst& o) const {
  ExpConst r;
  for (const auto& [qa, ca] : terms_)
    for (const auto& [qb, cb] : o.terms_) r.add(ca * cb, qa + qb);
  return r;
}

ExpConst ExpConst::operator*(const Rational& c) const {
  ExpConst r;
  if (c == 0) return r;
  for (const auto& [q, v] : terms_) r.terms_.emplace(q, v * c);
  return r;
}

Real ExpConst::eval(int digits) const {
  Real sum(digits);
  for (const auto& [q, c] : terms_) sum += Real(c, digits) * exp(Real(q, digits));
  return sum;
}

std::string ExpConst::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [q, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    if (q == 0) {
      out << to_string(c);
    } else {
      out << to_string(c) << "*e^(" << to_string(q) << ")";
    }
  }
  return out.str();
}

}  // namespace blues
