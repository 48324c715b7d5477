#include "blues/exponomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace blues {

namespace {

// Trailing zero coefficients are stripped so the last entry is nonzero.
void trim(std::vector<ParamPoly>& coeffs) {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
}

Rational factorial(unsigned n) {
  Rational r(1);
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

// Antiderivative polynomial P with d/dt [e^{mu t} P(t)] = e^{mu t} t^m,
// for mu != 0: P(t) = sum_{j=0}^{m} (-1)^j m!/((m-j)! mu^{j+1}) t^{m-j}.
std::vector<Rational> antiderivative_poly(const Rational& mu, unsigned m) {
  std::vector<Rational> p(m + 1);  // p[i] multiplies t^i
  Rational mf = factorial(m);
  for (unsigned j = 0; j <= m; ++j) {
    Rational c = mf / factorial(m - j);
    for (unsigned e = 0; e <= j; ++e) c /= mu;
    if (j % 2 == 1) c = -c;
    p[m - j] = c;
  }
  return p;
}

}  // namespace

Exponomial Exponomial::constant(ParamSet ps, Rational c) {
  return monomial(std::move(ps), Rational(0), 0, std::move(c));
}

Exponomial Exponomial::monomial(ParamSet ps, Rational rate, unsigned tpow, ParamPoly coeff) {
  Exponomial r(ps);
  if (coeff.is_zero()) return r;
  ExpTerm term{std::move(rate), std::vector<ParamPoly>(tpow + 1, ParamPoly(ps))};
  term.coeffs[tpow] = std::move(coeff);
  r.terms_.push_back(std::move(term));
  return r;
}

Exponomial Exponomial::monomial(ParamSet ps, Rational rate, unsigned tpow, Rational coeff) {
  ParamPoly c = ParamPoly::constant(ps, std::move(coeff));
  return monomial(ps, std::move(rate), tpow, std::move(c));
}

void Exponomial::add_term(const ExpTerm& term) {
  for (auto& t : terms_) {
    if (t.rate == term.rate) {
      if (t.coeffs.size() < term.coeffs.size()) t.coeffs.resize(term.coeffs.size(), ParamPoly(params_));
      for (std::size_t i = 0; i < term.coeffs.size(); ++i) t.coeffs[i] = t.coeffs[i] + term.coeffs[i];
      return;
    }
  }
  terms_.push_back(term);
}

void Exponomial::canonicalize() {
  for (auto& t : terms_) trim(t.coeffs);
  terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                              [](const ExpTerm& t) { return t.coeffs.empty(); }),
               terms_.end());
  std::sort(terms_.begin(), terms_.end(),
            [](const ExpTerm& a, const ExpTerm& b) { return a.rate > b.rate; });
}

namespace {
std::pair<ParamSet, ParamSet> aligned_sets(const Exponomial& a, const Exponomial& b) {
  if (same_params(a.params(), b.params())) return {a.params(), b.params()};
  if (a.params()->empty()) return {b.params(), b.params()};
  if (b.params()->empty()) return {a.params(), a.params()};
  throw std::invalid_argument("mismatched parameter sets");
}
}  // namespace

Exponomial Exponomial::operator+(const Exponomial& o) const {
  auto [ps, ps2] = aligned_sets(*this, o);
  Exponomial a = with_params(ps);
  Exponomial b = o.with_params(ps);
  Exponomial r(ps);
  r.terms_ = a.terms_;
  for (const auto& t : b.terms_) r.add_term(t);
  r.canonicalize();
  return r;
}

Exponomial Exponomial::operator-() const {
  Exponomial r(params_);
  r.terms_ = terms_;
  for (auto& t : r.terms_)
    for (auto& c : t.coeffs) c = -c;
  return r;
}

Exponomial Exponomial::operator-(const Exponomial& o) const { return *this + (-o); }

Exponomial Exponomial::operator*(const Exponomial& o) const {
  auto [ps, ps2] = aligned_sets(*this, o);
  Exponomial a = with_params(ps);
  Exponomial b = o.with_params(ps);
  Exponomial r(ps);
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      ExpTerm prod{ta.rate + tb.rate,
                   std::vector<ParamPoly>(ta.coeffs.size() + tb.coeffs.size() - 1, ParamPoly(ps))};
      for (std::size_t i = 0; i < ta.coeffs.size(); ++i)
        for (std::size_t j = 0; j < tb.coeffs.size(); ++j)
          prod.coeffs[i + j] = prod.coeffs[i + j] + ta.coeffs[i] * tb.coeffs[j];
      r.add_term(prod);
    }
  }
  r.canonicalize();
  return r;
}

Exponomial Exponomial::scaled(const ParamPoly& c) const {
  if (c.is_zero()) return Exponomial(params_);
  ParamSet ps = params_;
  ParamPoly cc = c;
  if (!same_params(ps, c.params())) {
    if (ps->empty()) ps = c.params();
    else cc = c.rebased(ps);
  }
  Exponomial r = with_params(ps);
  for (auto& t : r.terms_)
    for (auto& coeff : t.coeffs) coeff = coeff * cc;
  r.canonicalize();
  return r;
}

Exponomial Exponomial::scaled(const Rational& c) const {
  return scaled(ParamPoly::constant(params_, c));
}

bool Exponomial::operator==(const Exponomial& o) const {
  Exponomial d = *this - o;
  return d.is_zero();
}

Exponomial Exponomial::diff_t() const {
  Exponomial r(params_);
  for (const auto& t : terms_) {
    ExpTerm d{t.rate, std::vector<ParamPoly>(t.coeffs.size(), ParamPoly(params_))};
    for (std::size_t m = 0; m < t.coeffs.size(); ++m) {
      d.coeffs[m] = d.coeffs[m] + t.coeffs[m] * t.rate;
      if (m + 1 < t.coeffs.size())
        d.coeffs[m] = d.coeffs[m] + t.coeffs[m + 1] * Rational(static_cast<long>(m + 1));
    }
    r.add_term(d);
  }
  r.canonicalize();
  return r;
}

Exponomial Exponomial::integrate_0t() const {
  Exponomial r(params_);
  for (const auto& t : terms_) {
    if (t.rate == 0) {
      ExpTerm anti{Rational(0), std::vector<ParamPoly>(t.coeffs.size() + 1, ParamPoly(params_))};
      for (std::size_t m = 0; m < t.coeffs.size(); ++m)
        anti.coeffs[m + 1] = t.coeffs[m] * Rational(1, static_cast<long>(m + 1));
      r.add_term(anti);
      continue;
    }
    ExpTerm expo{t.rate, std::vector<ParamPoly>(t.coeffs.size(), ParamPoly(params_))};
    ParamPoly constant_part(params_);
    for (std::size_t m = 0; m < t.coeffs.size(); ++m) {
      if (t.coeffs[m].is_zero()) continue;
      auto p = antiderivative_poly(t.rate, static_cast<unsigned>(m));
      for (std::size_t i = 0; i < p.size(); ++i)
        expo.coeffs[i] = expo.coeffs[i] + t.coeffs[m] * p[i];
      constant_part = constant_part - t.coeffs[m] * p[0];  // -P(0)
    }
    r.add_term(expo);
    ExpTerm c0{Rational(0), {constant_part}};
    r.add_term(c0);
  }
  r.canonicalize();
  return r;
}

Exponomial Exponomial::rate_shift(const Rational& delta) const {
  Exponomial r(params_);
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.rate += delta;
  r.canonicalize();
  return r;
}

Exponomial Exponomial::convolve_green(const Rational& a) const {
  return rate_shift(a).integrate_0t().rate_shift(-a);
}

Exponomial Exponomial::substitute(const std::map<std::string, Rational>& bindings) const {
  Exponomial r(params_);
  for (const auto& t : terms_) {
    ExpTerm s{t.rate, {}};
    s.coeffs.reserve(t.coeffs.size());
    for (const auto& c : t.coeffs) s.coeffs.push_back(c.substitute(bindings));
    r.add_term(s);
  }
  r.canonicalize();
  return r;
}

unsigned Exponomial::degree_in(const std::string& name) const {
  unsigned deg = 0;
  for (const auto& t : terms_)
    for (const auto& c : t.coeffs) deg = std::max(deg, c.degree_in(name));
  return deg;
}

Exponomial Exponomial::with_params(const ParamSet& superset) const {
  if (same_params(params_, superset)) return *this;
  Exponomial r(superset);
  for (const auto& t : terms_) {
    ExpTerm s{t.rate, {}};
    s.coeffs.reserve(t.coeffs.size());
    for (const auto& c : t.coeffs) s.coeffs.push_back(c.rebased(superset));
    r.terms_.push_back(std::move(s));
  }
  return r;
}

std::map<ParamPoly::Multidegree, ExpConst> Exponomial::definite_integral(const Rational& T) const {
  std::map<ParamPoly::Multidegree, ExpConst> out;
  for (const auto& t : terms_) {
    for (std::size_t m = 0; m < t.coeffs.size(); ++m) {
      if (t.coeffs[m].is_zero()) continue;
      // I = int_0^T e^{mu t} t^m dt
      ExpConst integral;
      if (t.rate == 0) {
        Rational v(1, static_cast<long>(m + 1));
        Rational Tp = T;
        for (std::size_t e = 0; e < m; ++e) Tp *= T;  // T^{m+1}
        integral = ExpConst(v * Tp);                  // T^{m+1}/(m+1)
      } else {
        auto p = antiderivative_poly(t.rate, static_cast<unsigned>(m));
        Rational pT(0), Tp(1);
        for (std::size_t i = 0; i < p.size(); ++i) {
          pT += p[i] * Tp;
          Tp *= T;
        }
        integral = ExpConst::exp_term(pT, t.rate * T) - ExpConst(p[0]);
      }
      for (const auto& [deg, c] : t.coeffs[m].terms()) {
        auto [it, inserted] = out.emplace(deg, integral * c);
        if (!inserted) it->second = it->second + integral * c;
      }
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

Real Exponomial::eval(const Real& t, int digits) const {
  Real sum(digits);
  for (const auto& term : terms_) {
    Real poly(digits);
    for (std::size_t m = term.coeffs.size(); m-- > 0;) {
      const ParamPoly& c = term.coeffs[m];
      if (!c.is_constant())
        throw std::domain_error("eval with unbound parameter in coefficient");
      poly = poly * t + Real(c.constant_value(), digits);
    }
    sum += exp(Real(term.rate, digits) * t) * poly;
  }
  return sum;
}

std::string poly_to_string(const std::vector<ParamPoly>& coeffs) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t m = 0; m < coeffs.size(); ++m) {
    const ParamPoly& c = coeffs[m];
    if (c.is_zero()) continue;
    bool negative = false;
    std::string body;
    if (c.is_constant()) {
      Rational v = c.constant_value();
      negative = v < 0;
      Rational mag = abs(v);
      if (mag == 1 && m > 0) body = "";
      else body = to_string(mag);
    } else if (c.terms().size() == 1) {
      Rational v = c.terms().begin()->second;
      negative = v < 0;
      ParamPoly mag = negative ? -c : c;
      body = mag.str();
    } else {
      body = "(" + c.str() + ")";
    }
    if (first) {
      if (negative) out << "-";
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    out << body;
    if (m > 0) {
      if (!body.empty()) out << "*";
      out << "t";
      if (m > 1) out << "^" << m;
    }
  }
  return first ? "0" : out.str();
}

std::string Exponomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) out << " + ";
    first = false;
    std::string poly = poly_to_string(t.coeffs);
    if (t.rate == 0) {
      out << poly;
    } else {
      out << "exp(" << to_string(t.rate) << "*t)";
      if (poly != "1") {
        bool multi = t.coeffs.size() > 1 || poly.find(' ') != std::string::npos;
        out << "*" << (multi ? "(" + poly + ")" : poly);
      }
    }
  }
  return out.str();
}

}  // namespace blues
