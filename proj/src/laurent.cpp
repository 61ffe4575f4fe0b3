#include "abhy/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace abhy {

LaurentPoly LaurentPoly::constant(int nvars, const Int& c) {
  LaurentPoly p(nvars);
  if (c != 0) p.terms_[Exp(nvars, 0)] = c;
  return p;
}

LaurentPoly LaurentPoly::variable(int nvars, int i, int power) {
  if (i < 0 || i >= nvars) throw std::invalid_argument("variable index out of range");
  LaurentPoly p(nvars);
  Exp e(nvars, 0);
  e[i] = power;
  p.terms_[e] = 1;
  return p;
}

LaurentPoly LaurentPoly::monomial(Exp e, const Int& c) {
  LaurentPoly p(static_cast<int>(e.size()));
  if (c != 0) p.terms_[std::move(e)] = c;
  return p;
}

Int LaurentPoly::coeff(const Exp& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly::insert(const Exp& e, const Int& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p(nvars_);
  for (const auto& [e, c] : terms_) p.terms_[e] = -c;
  return p;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("poly arity mismatch");
  LaurentPoly p = *this;
  for (const auto& [e, c] : o.terms_) p.insert(e, c);
  return p;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("poly arity mismatch");
  LaurentPoly p = *this;
  for (const auto& [e, c] : o.terms_) p.insert(e, -c);
  return p;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("poly arity mismatch");
  LaurentPoly p(nvars_);
  Exp e(nvars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
      p.insert(e, c1 * c2);
    }
  return p;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly r = constant(nvars_, 1);
  LaurentPoly b = *this;
  while (e) {
    if (e & 1u) r = r * b;
    b = b * b;
    e >>= 1u;
  }
  return r;
}

std::optional<LaurentPoly> LaurentPoly::exact_div(const LaurentPoly& d) const {
  if (d.is_zero()) return std::nullopt;
  if (nvars_ != d.nvars_) throw std::invalid_argument("poly arity mismatch");
  LaurentPoly q(nvars_);
  LaurentPoly r = *this;
  const auto& dlead = *d.terms_.rbegin();  // lex-greatest term
  // Each step strips one term of the true quotient, so exact division
  // terminates; the cap only trips on non-exact input, where the remainder
  // can otherwise wander forever in the Laurent ring.
  long guard = 100000;
  while (!r.is_zero()) {
    if (--guard < 0) return std::nullopt;
    const auto& rlead = *r.terms_.rbegin();
    Int qc;
    if (!mpz_divisible_p(rlead.second.get_mpz_t(), dlead.second.get_mpz_t()))
      return std::nullopt;
    qc = rlead.second / dlead.second;
    Exp qe(nvars_);
    for (int i = 0; i < nvars_; ++i) qe[i] = rlead.first[i] - dlead.first[i];
    LaurentPoly t = monomial(qe, qc);
    q = q + t;
    r = r - t * d;
  }
  return q;
}

LaurentPoly LaurentPoly::set_first_vars_to_one(int k) const {
  if (k < 0 || k > nvars_) throw std::invalid_argument("bad variable split");
  LaurentPoly p(nvars_ - k);
  for (const auto& [e, c] : terms_)
    p.insert(Exp(e.begin() + k, e.end()), c);
  return p;
}

std::optional<LaurentPoly> LaurentPoly::substitute(
    const std::vector<LaurentPoly>& images) const {
  if (static_cast<int>(images.size()) != nvars_)
    throw std::invalid_argument("substitute: wrong image count");
  if (nvars_ == 0) return *this;
  int target = images[0].nvars();
  for (const auto& im : images)
    if (im.nvars() != target) throw std::invalid_argument("substitute: mixed arities");
  // Clear denominators first: p = N / prod(x_i^{d_i}) with d_i >= 0.
  std::vector<int> shift(nvars_, 0);
  for (const auto& [e, c] : terms_)
    for (int i = 0; i < nvars_; ++i) shift[i] = std::max(shift[i], -e[i]);
  LaurentPoly num(target);
  for (const auto& [e, c] : terms_) {
    LaurentPoly t = constant(target, c);
    for (int i = 0; i < nvars_; ++i) {
      int p = e[i] + shift[i];
      if (p > 0) t = t * images[i].pow(static_cast<unsigned>(p));
    }
    num = num + t;
  }
  LaurentPoly den = constant(target, 1);
  for (int i = 0; i < nvars_; ++i)
    if (shift[i] > 0) den = den * images[i].pow(static_cast<unsigned>(shift[i]));
  return num.exact_div(den);
}

bool LaurentPoly::operator<(const LaurentPoly& o) const {
  if (nvars_ != o.nvars_) return nvars_ < o.nvars_;
  return terms_ < o.terms_;
}

std::string LaurentPoly::to_string(const std::vector<std::string>& names) const {
  if (static_cast<int>(names.size()) != nvars_)
    throw std::invalid_argument("to_string: wrong name count");
  if (terms_.empty()) return "0";
  std::ostringstream s;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Int ac = abs(c);
    if (first) {
      if (c < 0) s << "-";
      first = false;
    } else {
      s << (c < 0 ? " - " : " + ");
    }
    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      s << ac.get_str();
    } else {
      if (ac != 1) s << ac.get_str() << "*";
      s << mono;
    }
  }
  return s.str();
}

}  // namespace abhy
