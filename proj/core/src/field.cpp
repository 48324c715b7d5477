#include "blues/field.hpp"

#include <sstream>
#include <stdexcept>

namespace blues {

Field Field::term(ParamSet ps, int channel, Rational rate, unsigned tpow, ParamPoly coeff) {
  if (channel < 1) throw std::invalid_argument("channel must be >= 1");
  Field f(ps);
  Exponomial e = Exponomial::monomial(ps, std::move(rate), tpow, std::move(coeff));
  if (!e.is_zero()) f.channels_.emplace(channel, std::move(e));
  return f;
}

Field Field::term(ParamSet ps, int channel, Rational rate, unsigned tpow, Rational coeff) {
  ParamPoly c = ParamPoly::constant(ps, std::move(coeff));
  return term(ps, channel, std::move(rate), tpow, std::move(c));
}

Exponomial Field::channel(int k) const {
  auto it = channels_.find(k);
  return it == channels_.end() ? Exponomial(params_) : it->second;
}

void Field::set_channel(int k, Exponomial f) {
  if (k < 1) throw std::invalid_argument("channel must be >= 1");
  if (f.is_zero()) channels_.erase(k);
  else channels_.insert_or_assign(k, std::move(f));
}

namespace {
ParamSet field_aligned(const Field& a, const Field& b) {
  if (same_params(a.params(), b.params())) return a.params();
  if (a.params()->empty()) return b.params();
  if (b.params()->empty()) return a.params();
  throw std::invalid_argument("mismatched parameter sets");
}
}  // namespace

Field Field::operator+(const Field& o) const {
  ParamSet ps = field_aligned(*this, o);
  Field a = with_params(ps);
  const Field b = o.with_params(ps);
  for (const auto& [k, e] : b.channels_) a.set_channel(k, a.channel(k) + e);
  return a;
}

Field Field::operator-() const {
  Field r(params_);
  for (const auto& [k, e] : channels_) r.channels_.emplace(k, -e);
  return r;
}

Field Field::operator-(const Field& o) const { return *this + (-o); }

Field Field::operator*(const Field& o) const {
  ParamSet ps = field_aligned(*this, o);
  Field a = with_params(ps);
  const Field b = o.with_params(ps);
  Field r(ps);
  for (const auto& [ka, ea] : a.channels_)
    for (const auto& [kb, eb] : b.channels_) r.set_channel(ka + kb, r.channel(ka + kb) + ea * eb);
  return r;
}

Field Field::scaled(const ParamPoly& c) const {
  Field r(params_);
  if (!same_params(params_, c.params()) && params_->empty()) r = with_params(c.params());
  else r = *this;
  Field out(r.params_);
  for (const auto& [k, e] : r.channels_) out.set_channel(k, e.scaled(c));
  return out;
}

Field Field::scaled(const Rational& c) const {
  return scaled(ParamPoly::constant(params_, c));
}

bool Field::operator==(const Field& o) const { return (*this - o).is_zero(); }

template <typename F>
Field Field::map_channels(F&& f) const {
  Field r(params_);
  for (const auto& [k, e] : channels_) r.set_channel(k, f(k, e));
  return r;
}

Field Field::diff_t() const {
  return map_channels([](int, const Exponomial& e) { return e.diff_t(); });
}

Field Field::diff_x() const {
  return map_channels([](int k, const Exponomial& e) { return e.scaled(Rational(-k)); });
}

Field Field::integrate_0t() const {
  return map_channels([](int, const Exponomial& e) { return e.integrate_0t(); });
}

Field Field::convolve_green(const Rational& a) const {
  return map_channels([&a](int, const Exponomial& e) { return e.convolve_green(a); });
}

Field Field::substitute(const std::map<std::string, Rational>& bindings) const {
  return map_channels([&bindings](int, const Exponomial& e) { return e.substitute(bindings); });
}

unsigned Field::degree_in(const std::string& name) const {
  unsigned deg = 0;
  for (const auto& [k, e] : channels_) deg = std::max(deg, e.degree_in(name));
  return deg;
}

Field Field::with_params(const ParamSet& superset) const {
  if (same_params(params_, superset)) return *this;
  Field r(superset);
  for (const auto& [k, e] : channels_) r.channels_.emplace(k, e.with_params(superset));
  return r;
}

Real Field::eval_numeric(const Real& x, const Real& t, int digits) const {
  Real sum(digits);
  for (const auto& [k, e] : channels_)
    sum += exp(Real(Rational(-k), digits) * x) * e.eval(t, digits);
  return sum;
}

Real Field::eval_numeric(const Rational& x, const Rational& t, int digits) const {
  return eval_numeric(Real(x, digits), Real(t, digits), digits);
}

Field Field::at_t0() const {
  Field r(params_);
  for (const auto& [k, e] : channels_) {
    ParamPoly c0(params_);
    for (const auto& term : e.terms())
      if (!term.coeffs.empty()) c0 = c0 + term.coeffs[0];
    r.set_channel(k, Exponomial::monomial(params_, Rational(0), 0, c0));
  }
  return r;
}

std::string Field::str() const {
  if (channels_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, e] : channels_) {
    std::string xpart = k == 1 ? "exp(-x)" : "exp(-" + std::to_string(k) + "*x)";
    for (const auto& term : e.terms()) {
      std::string poly = poly_to_string(term.coeffs);
      bool negative = false;
      if (poly.size() > 1 && poly[0] == '-' && poly.find(' ') == std::string::npos) {
        negative = true;
        poly = poly.substr(1);
      }
      if (first) {
        if (negative) out << "-";
        first = false;
      } else {
        out << (negative ? " - " : " + ");
      }
      out << xpart;
      if (term.rate == 1) out << "*exp(t)";
      else if (term.rate == -1) out << "*exp(-t)";
      else if (term.rate != 0) out << "*exp(" << to_string(term.rate) << "*t)";
      if (poly != "1") {
        bool multi = poly.find(' ') != std::string::npos;
        out << "*" << (multi ? "(" + poly + ")" : poly);
      }
    }
  }
  return out.str();
}

}  // namespace blues
