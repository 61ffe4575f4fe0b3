#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "abhy/matrix.hpp"

namespace abhy {

/// Sparse multivariate Laurent polynomial with exact integer coefficients.
/// Terms are kept in a map ordered lexicographically on exponent vectors,
/// which doubles as the canonical form for equality and ordering.
class LaurentPoly {
 public:
  using Exp = std::vector<int>;
  using TermMap = std::map<Exp, Int>;

  LaurentPoly() = default;
  explicit LaurentPoly(int nvars) : nvars_(nvars) {}

  static LaurentPoly zero(int nvars) { return LaurentPoly(nvars); }
  static LaurentPoly constant(int nvars, const Int& c);
  static LaurentPoly variable(int nvars, int i, int power = 1);
  static LaurentPoly monomial(Exp e, const Int& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  /// Coefficient of an exponent vector (0 if absent).
  Int coeff(const Exp& e) const;

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  LaurentPoly pow(unsigned e) const;

  /// Exact division in the Laurent ring; nullopt if the quotient does not
  /// exist as a Laurent polynomial with integer coefficients.
  std::optional<LaurentPoly> exact_div(const LaurentPoly& d) const;

  /// Substitute 1 for the first k variables; result lives on the remaining ones.
  LaurentPoly set_first_vars_to_one(int k) const;

  /// Substitute images[i] for variable i.  Negative powers are resolved by
  /// exact division, so the result must again be Laurent; nullopt otherwise.
  std::optional<LaurentPoly> substitute(const std::vector<LaurentPoly>& images) const;

  bool operator==(const LaurentPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
  bool operator<(const LaurentPoly& o) const;  // canonical total order

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void insert(const Exp& e, const Int& c);

  int nvars_ = 0;
  TermMap terms_;
};

}  // namespace abhy
