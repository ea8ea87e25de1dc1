#include "ffh/holomorphic.hpp"

namespace ffh {

HolomorphicInput HolomorphicInput::exact(std::vector<GaussianRational> coeffs) {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  HolomorphicInput out;
  out.kind_ = Kind::Exact;
  out.coeffs_ = std::move(coeffs);
  return out;
}

HolomorphicInput HolomorphicInput::numeric(
    std::function<std::complex<double>(std::complex<double>)> f,
    std::function<bool(double, double)> validity, std::string label) {
  HolomorphicInput out;
  out.kind_ = Kind::Numeric;
  out.f_ = std::move(f);
  out.validity_ = std::move(validity);
  out.label_ = std::move(label);
  return out;
}

const std::vector<GaussianRational>& HolomorphicInput::coeffs() const {
  if (kind_ != Kind::Exact)
    throw DomainError("numeric holomorphic input has no coefficient list");
  return coeffs_;
}

std::complex<double> HolomorphicInput::eval(std::complex<double> z) const {
  if (kind_ == Kind::Numeric) return f_(z);
  std::complex<double> out(0.0, 0.0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    out = out * z + std::complex<double>(to_double(it->re), to_double(it->im));
  return out;
}

bool HolomorphicInput::valid_at(double theta, double rho) const {
  if (kind_ == Kind::Exact) return true;
  return validity_(theta, rho);
}

std::pair<LaurentBi, LaurentBi> extract_uv(const HolomorphicInput& h) {
  if (!h.is_exact()) throw DomainError("u, v extraction needs an exact input");
  LaurentBi u("theta", "rho"), v("theta", "rho");
  const auto& coeffs = h.coeffs();
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    const GaussianRational& c = coeffs[n];
    if (c.is_zero()) continue;
    // (theta + i rho)^n: the j-th binomial term carries i^j.
    for (std::size_t j = 0; j <= n; ++j) {
      Rational w = binomial(static_cast<int>(n), static_cast<int>(j));
      int a = static_cast<int>(n - j), b = static_cast<int>(j);
      switch (j % 4) {
        case 0:  // +1
          u.add_term(a, b, ScalarExt(c.re * w));
          v.add_term(a, b, ScalarExt(c.im * w));
          break;
        case 1:  // +i
          u.add_term(a, b, ScalarExt(-c.im * w));
          v.add_term(a, b, ScalarExt(c.re * w));
          break;
        case 2:  // -1
          u.add_term(a, b, ScalarExt(-c.re * w));
          v.add_term(a, b, ScalarExt(-c.im * w));
          break;
        case 3:  // -i
          u.add_term(a, b, ScalarExt(c.im * w));
          v.add_term(a, b, ScalarExt(-c.re * w));
          break;
      }
    }
  }
  return {std::move(u), std::move(v)};
}

LaurentBi renamed(const LaurentBi& f, std::string var1, std::string var2) {
  LaurentBi out(std::move(var1), std::move(var2));
  for (const auto& [e, c] : f.terms()) out.add_term(e.first, e.second, c);
  return out;
}

std::string to_string(const HolomorphicInput& h) {
  if (!h.is_exact()) return h.label();

  std::string out;
  auto append = [&out](const Rational& c, bool imaginary, int power) {
    Rational mag = c;
    bool neg = mag < 0;
    if (neg) mag = -mag;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string z = power == 0   ? ""
                    : power == 1 ? "z"
                                 : "z^" + std::to_string(power);
    if (imaginary) {
      if (mag != 1) out += to_string(mag) + "*";
      out += z.empty() ? "i" : "i*" + z;
    } else if (z.empty()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + "*";
      out += z;
    }
  };

  const auto& coeffs = h.coeffs();
  for (int n = static_cast<int>(coeffs.size()) - 1; n >= 0; --n) {
    if (coeffs[n].re != 0) append(coeffs[n].re, false, n);
    if (coeffs[n].im != 0) append(coeffs[n].im, true, n);
  }
  return out.empty() ? "0" : out;
}

}  // namespace ffh
