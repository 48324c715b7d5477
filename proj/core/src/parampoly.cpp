#include "blues/parampoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace blues {

ParamSet no_params() {
  static const ParamSet empty = std::make_shared<const std::vector<std::string>>();
  return empty;
}

ParamSet make_params(std::vector<std::string> names) {
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j])
        throw std::invalid_argument("duplicate parameter name: " + names[i]);
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

bool same_params(const ParamSet& a, const ParamSet& b) {
  if (a == b) return true;
  return *a == *b;
}

ParamPoly ParamPoly::constant(ParamSet ps, Rational c) {
  ParamPoly p(std::move(ps));
  if (c != 0) p.terms_.emplace(Multidegree(p.params_->size(), 0), std::move(c));
  return p;
}

ParamPoly ParamPoly::variable(ParamSet ps, const std::string& name) {
  ParamPoly p(std::move(ps));
  Multidegree d(p.params_->size(), 0);
  d[p.index_of(name)] = 1;
  p.terms_.emplace(std::move(d), Rational(1));
  return p;
}

std::size_t ParamPoly::index_of(const std::string& name) const {
  auto it = std::find(params_->begin(), params_->end(), name);
  if (it == params_->end())
    throw std::invalid_argument("undeclared parameter: " + name);
  return static_cast<std::size_t>(it - params_->begin());
}

bool ParamPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& d = terms_.begin()->first;
  return std::all_of(d.begin(), d.end(), [](unsigned e) { return e == 0; });
}

Rational ParamPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant())
    throw std::logic_error("constant_value on non-constant polynomial");
  return terms_.begin()->second;
}

void ParamPoly::add_term(Multidegree deg, const Rational& c) {
  auto [it, inserted] = terms_.emplace(std::move(deg), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::pair<ParamPoly, ParamPoly> align(const ParamPoly& a, const ParamPoly& b) {
  if (same_params(a.params(), b.params())) return {a, b};
  if (a.params()->empty()) return {a.rebased(b.params()), b};
  if (b.params()->empty()) return {a, b.rebased(a.params())};
  throw std::invalid_argument("mismatched parameter sets");
}

ParamPoly ParamPoly::operator+(const ParamPoly& o) const {
  auto [a, b] = align(*this, o);
  ParamPoly r = a;
  for (const auto& [d, c] : b.terms_) r.add_term(d, c);
  return r;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly r(params_);
  for (const auto& [d, c] : terms_) r.terms_.emplace(d, -c);
  return r;
}

ParamPoly ParamPoly::operator-(const ParamPoly& o) const { return *this + (-o); }

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
  auto [a, b] = align(*this, o);
  ParamPoly r(a.params_);
  for (const auto& [da, ca] : a.terms_) {
    for (const auto& [db, cb] : b.terms_) {
      Multidegree d(da.size());
      for (std::size_t i = 0; i < d.size(); ++i) d[i] = da[i] + db[i];
      r.add_term(std::move(d), ca * cb);
    }
  }
  return r;
}

ParamPoly ParamPoly::operator*(const Rational& c) const {
  ParamPoly r(params_);
  if (c == 0) return r;
  for (const auto& [d, v] : terms_) r.terms_.emplace(d, v * c);
  return r;
}

bool ParamPoly::operator==(const ParamPoly& o) const {
  if (is_zero() && o.is_zero()) return true;
  auto [a, b] = align(*this, o);
  return a.terms_ == b.terms_;
}

ParamPoly ParamPoly::substitute(const std::map<std::string, Rational>& bindings) const {
  std::vector<std::pair<std::size_t, Rational>> bound;
  bound.reserve(bindings.size());
  for (const auto& [name, value] : bindings) bound.emplace_back(index_of(name), value);
  ParamPoly r(params_);
  for (const auto& [d, c] : terms_) {
    Rational coeff = c;
    Multidegree nd = d;
    for (const auto& [idx, value] : bound) {
      for (unsigned e = 0; e < d[idx]; ++e) coeff *= value;
      nd[idx] = 0;
    }
    if (coeff != 0) r.add_term(std::move(nd), coeff);
  }
  return r;
}

unsigned ParamPoly::degree_in(const std::string& name) const {
  std::size_t idx = index_of(name);
  unsigned deg = 0;
  for (const auto& [d, c] : terms_) deg = std::max(deg, d[idx]);
  return deg;
}

ParamPoly ParamPoly::rebased(const ParamSet& superset) const {
  if (same_params(params_, superset)) return *this;
  std::vector<std::size_t> where(params_->size());
  for (std::size_t i = 0; i < params_->size(); ++i) {
    auto it = std::find(superset->begin(), superset->end(), (*params_)[i]);
    if (it == superset->end())
      throw std::invalid_argument("rebased: target set lacks parameter " + (*params_)[i]);
    where[i] = static_cast<std::size_t>(it - superset->begin());
  }
  ParamPoly r(superset);
  for (const auto& [d, c] : terms_) {
    Multidegree nd(superset->size(), 0);
    for (std::size_t i = 0; i < d.size(); ++i) nd[where[i]] = d[i];
    r.add_term(std::move(nd), c);
  }
  return r;
}

std::string ParamPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [d, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool has_vars = false;
    std::ostringstream vars;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i] == 0) continue;
      if (has_vars) vars << "*";
      vars << (*params_)[i];
      if (d[i] > 1) vars << "^" << d[i];
      has_vars = true;
    }
    if (!has_vars) {
      out << to_string(mag);
    } else if (mag == 1) {
      out << vars.str();
    } else {
      out << to_string(mag) << "*" << vars.str();
    }
  }
  return out.str();
}

}  // namespace blues
