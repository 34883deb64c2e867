#pragma once

#include <complex>

namespace adp {

// Kahan compensated accumulator. Additions must happen in a fixed order
// (ascending index everywhere in this codebase) so that repeated runs and
// runs with different thread counts produce bit-identical sums.
class KahanSum {
public:
  void add(double x) {
    double y = x - comp_;
    double t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }

  // Folds another accumulator in. Merging in a fixed block order keeps the
  // result independent of how many threads produced the partials.
  void merge(const KahanSum& other) {
    add(other.sum_);
    add(-other.comp_);
  }

  double value() const { return sum_ - comp_; }

private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

class KahanComplexSum {
public:
  void add(std::complex<double> z) {
    re_.add(z.real());
    im_.add(z.imag());
  }

  void merge(const KahanComplexSum& other) {
    re_.merge(other.re_);
    im_.merge(other.im_);
  }

  std::complex<double> value() const { return {re_.value(), im_.value()}; }

private:
  KahanSum re_;
  KahanSum im_;
};

}  // namespace adp
