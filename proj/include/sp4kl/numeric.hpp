#pragma once

#include <mpfr.h>

#include <string>

#include "sp4kl/rational.hpp"

namespace sp4kl {

// Fixed working precision for all numeric fallbacks. 192 mantissa bits so
// that comparisons against exact values are reliable well below 1e-20.
constexpr mpfr_prec_t kNumericPrecision = 192;

// Small RAII wrapper around mpfr_t at the fixed precision above.
class BigFloat {
 public:
  BigFloat() { mpfr_init2(v_, kNumericPrecision); mpfr_set_zero(v_, 1); }
  explicit BigFloat(const Rational& q) : BigFloat() {
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
  }
  explicit BigFloat(double d) : BigFloat() { mpfr_set_d(v_, d, MPFR_RNDN); }
  BigFloat(const BigFloat& o) : BigFloat() { mpfr_set(v_, o.v_, MPFR_RNDN); }
  BigFloat(BigFloat&& o) noexcept : BigFloat() { mpfr_swap(v_, o.v_); }
  BigFloat& operator=(BigFloat o) {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  static BigFloat pi() {
    BigFloat r;
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }

  BigFloat operator+(const BigFloat& o) const {
    BigFloat r;
    mpfr_add(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
  }
  BigFloat operator-(const BigFloat& o) const {
    BigFloat r;
    mpfr_sub(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
  }
  BigFloat operator*(const BigFloat& o) const {
    BigFloat r;
    mpfr_mul(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
  }
  BigFloat& operator+=(const BigFloat& o) {
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }

  BigFloat mul_int(const Integer& z) const {
    BigFloat r;
    mpfr_mul_z(r.v_, v_, z.get_mpz_t(), MPFR_RNDN);
    return r;
  }

  BigFloat cos() const {
    BigFloat r;
    mpfr_cos(r.v_, v_, MPFR_RNDN);
    return r;
  }
  BigFloat sin() const {
    BigFloat r;
    mpfr_sin(r.v_, v_, MPFR_RNDN);
    return r;
  }
  BigFloat abs() const {
    BigFloat r;
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
  }
  BigFloat sqrt() const {
    BigFloat r;
    mpfr_sqrt(r.v_, v_, MPFR_RNDN);
    return r;
  }

  int cmp(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
  bool operator<(const BigFloat& o) const { return cmp(o) < 0; }
  bool operator<=(const BigFloat& o) const { return cmp(o) <= 0; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  // Fixed-format decimal string; deterministic for identical values.
  std::string str(int digits = 40) const;

 private:
  mpfr_t v_;
};

struct ComplexValue {
  BigFloat re, im;

  BigFloat magnitude() const { return (re * re + im * im).sqrt(); }
};

}  // namespace sp4kl
