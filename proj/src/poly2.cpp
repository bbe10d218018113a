#include "gscale/poly2.hpp"

#include <bit>
#include <charconv>

#include "gscale/error.hpp"

namespace gscale {

  Poly2::Poly2(std::vector<std::uint64_t> limbs) : limbs_(std::move(limbs)) {
    normalize();
  }

  void Poly2::normalize() {
    while (!limbs_.empty() && limbs_.back() == 0) {
      limbs_.pop_back();
    }
  }

  Poly2 Poly2::monomial(unsigned k) {
    std::vector<std::uint64_t> l(k / 64 + 1, 0);
    l[k / 64] = std::uint64_t{1} << (k % 64);
    return Poly2(std::move(l));
  }

  Poly2 Poly2::from_exponents(std::vector<unsigned> const& exps) {
    Poly2 out;
    for (auto e : exps) {
      out = out + monomial(e);
    }
    return out;
  }

  std::vector<unsigned> Poly2::exponents() const {
    std::vector<unsigned> out;
    for (int i = 0; i <= degree(); ++i) {
      if (coeff(static_cast<unsigned>(i))) {
        out.push_back(static_cast<unsigned>(i));
      }
    }
    return out;
  }

  int Poly2::degree() const noexcept {
    if (limbs_.empty()) {
      return -1;
    }
    return static_cast<int>(64 * (limbs_.size() - 1))
           + (63 - std::countl_zero(limbs_.back()));
  }

  bool Poly2::coeff(unsigned i) const noexcept {
    if (i / 64 >= limbs_.size()) {
      return false;
    }
    return (limbs_[i / 64] >> (i % 64)) & 1U;
  }

  Poly2 operator+(Poly2 const& a, Poly2 const& b) {
    auto const& big   = a.limbs_.size() >= b.limbs_.size() ? a.limbs_ : b.limbs_;
    auto const& small = a.limbs_.size() >= b.limbs_.size() ? b.limbs_ : a.limbs_;
    auto        out   = big;
    for (std::size_t i = 0; i < small.size(); ++i) {
      out[i] ^= small[i];
    }
    return Poly2(std::move(out));
  }

  Poly2 operator*(Poly2 const& a, Poly2 const& b) {
    if (a.is_zero() || b.is_zero()) {
      return {};
    }
    std::vector<std::uint64_t> out(a.limbs_.size() + b.limbs_.size(), 0);
    for (int i = 0; i <= a.degree(); ++i) {
      if (!a.coeff(static_cast<unsigned>(i))) {
        continue;
      }
      unsigned const word = static_cast<unsigned>(i) / 64, shift = static_cast<unsigned>(i) % 64;
      for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
        out[word + j] ^= b.limbs_[j] << shift;
        if (shift != 0) {
          out[word + j + 1] ^= b.limbs_[j] >> (64 - shift);
        }
      }
    }
    return Poly2(std::move(out));
  }

  std::pair<Poly2, Poly2> Poly2::divmod(Poly2 const& a, Poly2 const& b) {
    if (b.is_zero()) {
      throw PreconditionError("poly2: division by zero");
    }
    Poly2     q;
    Poly2     r  = a;
    int const db = b.degree();
    while (r.degree() >= db) {
      auto  shift = static_cast<unsigned>(r.degree() - db);
      Poly2 m     = monomial(shift);
      q           = q + m;
      r           = r + m * b;
    }
    return {q, r};
  }

  Poly2 Poly2::exact_div(Poly2 const& a, Poly2 const& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) {
      throw ContractViolation("poly2: " + b.to_string() + " does not divide "
                              + a.to_string());
    }
    return q;
  }

  Poly2 Poly2::gcd(Poly2 a, Poly2 b) {
    while (!b.is_zero()) {
      auto r = a.mod(b);
      a      = std::move(b);
      b      = std::move(r);
    }
    return a;
  }

  Poly2 Poly2::inverse_mod(Poly2 const& a, Poly2 const& m) {
    // Invariant: r0 ≡ s0·a, r1 ≡ s1·a (mod m).
    Poly2 r0 = m, r1 = a.mod(m);
    Poly2 s0, s1 = monomial(0);
    while (!r1.is_zero()) {
      auto [q, r] = divmod(r0, r1);
      Poly2 s     = s0 + q * s1;
      r0          = std::move(r1);
      r1          = std::move(r);
      s0          = std::move(s1);
      s1          = std::move(s);
    }
    if (r0.degree() != 0) {
      throw PreconditionError("poly2: " + a.to_string() + " is not invertible mod "
                              + m.to_string());
    }
    return s0.mod(m);
  }

  std::string Poly2::to_string() const {
    if (is_zero()) {
      return "0";
    }
    std::string out;
    for (auto e : exponents()) {
      if (!out.empty()) {
        out += "+";
      }
      out += e == 0 ? "1" : e == 1 ? "t" : "t^" + std::to_string(e);
    }
    return out;
  }

  Poly2 Poly2::parse(std::string_view text) {
    Poly2 out;
    auto  rest = text;
    auto  bad  = [&] {
      return ParseError("poly2: bad polynomial \"" + std::string(text) + "\"");
    };
    while (true) {
      auto plus = rest.find('+');
      auto term = rest.substr(0, plus);
      while (!term.empty() && term.front() == ' ') {
        term.remove_prefix(1);
      }
      while (!term.empty() && term.back() == ' ') {
        term.remove_suffix(1);
      }
      if (term == "0") {
        // contributes nothing
      } else if (term == "1") {
        out = out + monomial(0);
      } else if (term == "t") {
        out = out + monomial(1);
      } else if (term.size() > 2 && term.substr(0, 2) == "t^") {
        unsigned e     = 0;
        auto     digits = term.substr(2);
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), e);
        if (ec != std::errc() || ptr != digits.data() + digits.size() || e > 4096) {
          throw bad();
        }
        out = out + monomial(e);
      } else {
        throw bad();
      }
      if (plus == std::string_view::npos) {
        return out;
      }
      rest = rest.substr(plus + 1);
    }
  }

}  // namespace gscale
