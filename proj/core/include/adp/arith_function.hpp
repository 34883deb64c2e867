#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "adp/factor_table.hpp"
#include "adp/hecke.hpp"

namespace adp {

// A named multiplicative (or multiplicative-derived) function with point
// evaluation and bulk tabulation. Recognized names:
//   one | tau | tau4 | tau_k:<k> | mu | mobius | phi | omega |
//   vonmangoldt | Lambda | lambda | lambda2 | lambda^<l> | mu_lambda |
//   coeffs:<path>
// lambda kinds refer to the weight-12 form's normalized eigenvalues and need
// an attached HeckeEigenvalues table; coeffs:<path> loads "n value" lines.
class ArithFunction {
public:
  enum class Kind {
    One,
    Tau,
    TauK,
    Tau4,
    Mobius,
    Phi,
    Omega,
    VonMangoldt,
    LambdaPow,
    MuLambda,
    Coeffs,
  };

  static ArithFunction parse(const std::string& name);

  const std::string& name() const { return name_; }
  Kind kind() const { return kind_; }
  bool integer_valued() const;
  bool needs_hecke() const { return kind_ == Kind::LambdaPow || kind_ == Kind::MuLambda; }
  void attach_hecke(std::shared_ptr<const HeckeEigenvalues> h) { hecke_ = std::move(h); }
  const HeckeEigenvalues* hecke() const { return hecke_.get(); }

  double eval(uint64_t n, const FactorTable& t) const;
  std::vector<double> tabulate_real(const FactorTable& t, uint64_t X) const;
  // Exact integer tabulation; throws DomainError for non-integer functions.
  std::vector<int64_t> tabulate_int(const FactorTable& t, uint64_t X) const;

private:
  std::string name_;
  Kind kind_ = Kind::One;
  unsigned k_ = 0;  // tau_k order or lambda power
  std::shared_ptr<const HeckeEigenvalues> hecke_;
  std::shared_ptr<const std::vector<double>> coeffs_;
};

}  // namespace adp
