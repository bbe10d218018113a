#ifndef GSCALE_POLY2_HPP_
#define GSCALE_POLY2_HPP_

// Polynomials over 𝔽₂, bit i of the limb vector being the coefficient of t^i.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gscale {

  class Poly2 {
   public:
    Poly2() = default;
    explicit Poly2(std::vector<std::uint64_t> limbs);

    static Poly2 monomial(unsigned k);
    static Poly2 from_exponents(std::vector<unsigned> const& exps);

    std::vector<std::uint64_t> const& limbs() const noexcept {
      return limbs_;
    }
    std::vector<unsigned> exponents() const;

    bool is_zero() const noexcept {
      return limbs_.empty();
    }
    // -1 for the zero polynomial.
    int  degree() const noexcept;
    bool coeff(unsigned i) const noexcept;

    friend Poly2 operator+(Poly2 const& a, Poly2 const& b);
    friend Poly2 operator*(Poly2 const& a, Poly2 const& b);
    friend bool  operator==(Poly2 const&, Poly2 const&) = default;

    // (q, r) with a = q b + r, deg r < deg b. b must be nonzero.
    static std::pair<Poly2, Poly2> divmod(Poly2 const& a, Poly2 const& b);
    Poly2                          mod(Poly2 const& b) const {
      return divmod(*this, b).second;
    }
    // Quotient, throwing ContractViolation if b does not divide a.
    static Poly2 exact_div(Poly2 const& a, Poly2 const& b);
    static Poly2 gcd(Poly2 a, Poly2 b);
    // Inverse of a modulo m (gcd must be 1), reduced below deg m.
    static Poly2 inverse_mod(Poly2 const& a, Poly2 const& m);

    // "0", "1", "1+t+t^3".
    std::string  to_string() const;
    static Poly2 parse(std::string_view text);

   private:
    void normalize();

    std::vector<std::uint64_t> limbs_;
  };

}  // namespace gscale

#endif  // GSCALE_POLY2_HPP_
