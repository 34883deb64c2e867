#include "adp/arith_function.hpp"

#include <fstream>
#include <sstream>

#include "adp/arith.hpp"
#include "adp/errors.hpp"

namespace adp {

namespace {

std::shared_ptr<const std::vector<double>> load_coeffs(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("coeffs: cannot open " + path);
  auto vals = std::make_shared<std::vector<double>>();
  vals->push_back(0.0);
  std::string line;
  uint64_t expect = 1;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    uint64_t n;
    double v;
    if (!(ls >> n >> v)) throw std::runtime_error("coeffs: bad line '" + line + "'");
    if (n != expect) throw std::runtime_error("coeffs: lines must run n = 1, 2, ...");
    vals->push_back(v);
    ++expect;
  }
  if (vals->size() < 2) throw std::runtime_error("coeffs: empty file " + path);
  return vals;
}

}  // namespace

ArithFunction ArithFunction::parse(const std::string& name) {
  ArithFunction f;
  f.name_ = name;
  if (name == "one" || name == "1") {
    f.kind_ = Kind::One;
  } else if (name == "tau") {
    f.kind_ = Kind::Tau;
  } else if (name == "tau4") {
    f.kind_ = Kind::Tau4;
  } else if (name.rfind("tau_k:", 0) == 0) {
    f.kind_ = Kind::TauK;
    f.k_ = static_cast<unsigned>(std::stoul(name.substr(6)));
    if (f.k_ < 1 || f.k_ > 64) throw DomainError("ArithFunction: tau_k order out of range");
  } else if (name == "mu" || name == "mobius") {
    f.kind_ = Kind::Mobius;
  } else if (name == "phi") {
    f.kind_ = Kind::Phi;
  } else if (name == "omega") {
    f.kind_ = Kind::Omega;
  } else if (name == "vonmangoldt" || name == "Lambda") {
    f.kind_ = Kind::VonMangoldt;
  } else if (name == "lambda") {
    f.kind_ = Kind::LambdaPow;
    f.k_ = 1;
  } else if (name == "lambda2") {
    f.kind_ = Kind::LambdaPow;
    f.k_ = 2;
  } else if (name.rfind("lambda^", 0) == 0) {
    f.kind_ = Kind::LambdaPow;
    f.k_ = static_cast<unsigned>(std::stoul(name.substr(7)));
    if (f.k_ < 1 || f.k_ > 24) throw DomainError("ArithFunction: lambda power out of range");
  } else if (name == "mu_lambda") {
    f.kind_ = Kind::MuLambda;
  } else if (name.rfind("coeffs:", 0) == 0) {
    f.kind_ = Kind::Coeffs;
    f.coeffs_ = load_coeffs(name.substr(7));
  } else {
    throw DomainError("ArithFunction: unknown function '" + name + "'");
  }
  return f;
}

bool ArithFunction::integer_valued() const {
  switch (kind_) {
    case Kind::One:
    case Kind::Tau:
    case Kind::TauK:
    case Kind::Tau4:
    case Kind::Mobius:
    case Kind::Phi:
    case Kind::Omega:
      return true;
    default:
      return false;
  }
}

double ArithFunction::eval(uint64_t n, const FactorTable& t) const {
  switch (kind_) {
    case Kind::One:
      return 1.0;
    case Kind::Tau:
      return static_cast<double>(tau(n, t));
    case Kind::TauK:
      return static_cast<double>(tau_k(k_, n, t));
    case Kind::Tau4:
      return static_cast<double>(tau4(n, t));
    case Kind::Mobius:
      return static_cast<double>(mobius(n, t));
    case Kind::Phi:
      return static_cast<double>(euler_phi(n, t));
    case Kind::Omega:
      return static_cast<double>(omega(n, t));
    case Kind::VonMangoldt:
      return von_mangoldt(n, t);
    case Kind::LambdaPow:
      if (!hecke_) throw DomainError("ArithFunction: lambda requires an attached eigenvalue table");
      return hecke_->lambda_power(n, k_);
    case Kind::MuLambda: {
      if (!hecke_) throw DomainError("ArithFunction: mu_lambda requires an attached eigenvalue table");
      int m = mobius(n, t);
      return m == 0 ? 0.0 : static_cast<double>(m) * hecke_->lambda(n);
    }
    case Kind::Coeffs: {
      if (n >= coeffs_->size()) throw DomainError("ArithFunction: n beyond coefficient file");
      return (*coeffs_)[n];
    }
  }
  throw std::logic_error("ArithFunction::eval: unreachable");
}

std::vector<double> ArithFunction::tabulate_real(const FactorTable& t, uint64_t X) const {
  std::vector<double> v(X + 1, 0.0);
  switch (kind_) {
    case Kind::One:
      for (uint64_t n = 1; n <= X; ++n) v[n] = 1.0;
      return v;
    case Kind::Tau: {
      auto w = tabulate_tau(t, X);
      for (uint64_t n = 1; n <= X; ++n) v[n] = w[n];
      return v;
    }
    case Kind::Tau4: {
      auto w = tabulate_tau4(t, X);
      for (uint64_t n = 1; n <= X; ++n) v[n] = w[n];
      return v;
    }
    case Kind::Mobius: {
      auto w = tabulate_mobius(t, X);
      for (uint64_t n = 1; n <= X; ++n) v[n] = w[n];
      return v;
    }
    case Kind::Phi: {
      auto w = tabulate_phi(t, X);
      for (uint64_t n = 1; n <= X; ++n) v[n] = w[n];
      return v;
    }
    case Kind::VonMangoldt:
      return tabulate_von_mangoldt(t, X);
    case Kind::LambdaPow: {
      if (!hecke_ || hecke_->bound() < X)
        throw DomainError("ArithFunction: eigenvalue table smaller than X");
      const auto& lam = hecke_->lambda_table();
      for (uint64_t n = 1; n <= X; ++n) {
        double b = lam[n];
        double r = 1.0;
        for (unsigned i = 0; i < k_; ++i) r *= b;
        v[n] = r;
      }
      return v;
    }
    case Kind::MuLambda: {
      if (!hecke_ || hecke_->bound() < X)
        throw DomainError("ArithFunction: eigenvalue table smaller than X");
      auto mu = tabulate_mobius(t, X);
      const auto& lam = hecke_->lambda_table();
      for (uint64_t n = 1; n <= X; ++n) v[n] = mu[n] == 0 ? 0.0 : mu[n] * lam[n];
      return v;
    }
    case Kind::Coeffs: {
      if (coeffs_->size() <= X) throw DomainError("ArithFunction: coefficient file smaller than X");
      for (uint64_t n = 1; n <= X; ++n) v[n] = (*coeffs_)[n];
      return v;
    }
    default: {
      for (uint64_t n = 1; n <= X; ++n) v[n] = eval(n, t);
      return v;
    }
  }
}

std::vector<int64_t> ArithFunction::tabulate_int(const FactorTable& t, uint64_t X) const {
  if (!integer_valued())
    throw DomainError("ArithFunction: " + name_ + " is not integer-valued");
  std::vector<int64_t> v(X + 1, 0);
  switch (kind_) {
    case Kind::One:
      for (uint64_t n = 1; n <= X; ++n) v[n] = 1;
      return v;
    case Kind::Tau: {
      auto w = tabulate_tau(t, X);
      for (uint64_t n = 1; n <= X; ++n) v[n] = w[n];
      return v;
    }
    case Kind::Tau4: {
      auto w = tabulate_tau4(t, X);
      for (uint64_t n = 1; n <= X; ++n) v[n] = w[n];
      return v;
    }
    case Kind::Mobius: {
      auto w = tabulate_mobius(t, X);
      for (uint64_t n = 1; n <= X; ++n) v[n] = w[n];
      return v;
    }
    case Kind::Phi: {
      auto w = tabulate_phi(t, X);
      for (uint64_t n = 1; n <= X; ++n) v[n] = w[n];
      return v;
    }
    case Kind::Omega:
      for (uint64_t n = 1; n <= X; ++n) v[n] = omega(n, t);
      return v;
    case Kind::TauK:
      for (uint64_t n = 1; n <= X; ++n) v[n] = tau_k(k_, n, t);
      return v;
    default:
      throw std::logic_error("ArithFunction::tabulate_int: unreachable");
  }
}

}  // namespace adp
