#pragma once

#include <map>
#include <string>

#include "blues/exponomial.hpp"

namespace blues {

// Spatially separable function sum_k e^{-k x} f_k(t) with positive integer
// channels k and Exponomial t-parts. The value type every iterate lives in.
class Field {
 public:
  Field() : params_(no_params()) {}
  explicit Field(ParamSet ps) : params_(std::move(ps)) {}

  // coeff * e^{-channel*x} * e^{rate*t} * t^tpow
  static Field term(ParamSet ps, int channel, Rational rate, unsigned tpow, Rational coeff);
  static Field term(ParamSet ps, int channel, Rational rate, unsigned tpow, ParamPoly coeff);

  bool is_zero() const { return channels_.empty(); }
  const ParamSet& params() const { return params_; }
  const std::map<int, Exponomial>& channels() const { return channels_; }
  // Zero exponomial for an absent channel.
  Exponomial channel(int k) const;
  void set_channel(int k, Exponomial f);

  Field operator+(const Field& o) const;
  Field operator-(const Field& o) const;
  Field operator*(const Field& o) const;
  Field operator-() const;
  Field scaled(const ParamPoly& c) const;
  Field scaled(const Rational& c) const;
  bool operator==(const Field& o) const;

  Field diff_t() const;
  Field diff_x() const;
  Field integrate_0t() const;
  Field convolve_green(const Rational& a) const;

  Field substitute(const std::map<std::string, Rational>& bindings) const;
  unsigned degree_in(const std::string& name) const;
  Field with_params(const ParamSet& superset) const;

  // All parameters must be bound; throws std::domain_error otherwise.
  Real eval_numeric(const Real& x, const Real& t, int digits) const;
  Real eval_numeric(const Rational& x, const Rational& t, int digits) const;

  // Exact structural substitute of t = 0 (per channel).
  Field at_t0() const;

  std::string str() const;

 private:
  template <typename F>
  Field map_channels(F&& f) const;
  ParamSet params_;
  std::map<int, Exponomial> channels_;  // k >= 1 -> nonzero exponomial
};

}  // namespace blues
