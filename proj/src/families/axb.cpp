#include "gscale/families/axb.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "gscale/arith.hpp"
#include "gscale/error.hpp"

namespace gscale {

  namespace {
    std::int64_t parse_int(std::string_view s, std::string_view whole) {
      while (!s.empty() && s.front() == ' ') {
        s.remove_prefix(1);
      }
      while (!s.empty() && s.back() == ' ') {
        s.remove_suffix(1);
      }
      std::int64_t v   = 0;
      auto [ptr, ec]   = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw ParseError("axb: bad integer \"" + std::string(s) + "\" in \""
                         + std::string(whole) + "\"");
      }
      return v;
    }
  }  // namespace

  AxbMonoid::AxbMonoid(std::optional<std::vector<std::int64_t>> primes)
      : Monoid("axb"), primes_(std::move(primes)) {
    if (primes_) {
      std::sort(primes_->begin(), primes_->end());
      primes_->erase(std::unique(primes_->begin(), primes_->end()), primes_->end());
    }
  }

  std::optional<std::int64_t> AxbMonoid::prime_at(std::size_t i) const {
    if (primes_) {
      if (i < primes_->size()) {
        return (*primes_)[i];
      }
      return std::nullopt;
    }
    return arith::nth_prime(i);
  }

  bool AxbMonoid::allowed_multiplier(std::int64_t p) const {
    if (p < 1) {
      return false;
    }
    if (!primes_) {
      return true;
    }
    for (auto f : arith::prime_factors(p)) {
      if (!std::binary_search(primes_->begin(), primes_->end(), f)) {
        return false;
      }
    }
    return true;
  }

  Element AxbMonoid::pair(std::int64_t m, std::int64_t p) const {
    if (m < 0 || !allowed_multiplier(p)) {
      throw PreconditionError("axb: (" + std::to_string(m) + ","
                              + std::to_string(p) + ") is not an element");
    }
    return make({m, p});
  }

  Element AxbMonoid::identity() const {
    return make({0, 1});
  }

  Element AxbMonoid::multiply(Element const& s, Element const& t) const {
    auto const& a = s.payload();
    auto const& b = t.payload();
    return make({arith::add(a[0], arith::mul(a[1], b[0])), arith::mul(a[1], b[1])});
  }

  // Smallest common element x ≥ max(m, n) of m + pℕ and n + qℕ, paired with
  // lcm(p, q).
  LcmOutcome AxbMonoid::right_lcm(Element const& s, Element const& t) const {
    std::int64_t const m = s.payload()[0], p = s.payload()[1];
    std::int64_t const n = t.payload()[0], q = t.payload()[1];
    std::int64_t const g = arith::gcd(p, q);
    if ((m - n) % g != 0) {
      return LcmOutcome::orthogonal();
    }
    std::int64_t const l  = arith::mul(p / g, q);
    std::int64_t const qg = q / g;
    std::int64_t       k  = 0;
    if (qg > 1) {
      auto         eg  = arith::extended_gcd(arith::mod(p / g, qg), qg);
      __int128     rhs = static_cast<__int128>((n - m) / g) % qg;
      __int128     kk  = (rhs * eg.x) % qg;
      k                = arith::mod(static_cast<std::int64_t>(kk), qg);
    }
    __int128 x = static_cast<__int128>(m) + static_cast<__int128>(p) * k;
    __int128 lo = std::max(m, n);
    if (x < lo) {
      x += ((lo - x + l - 1) / l) * l;
    }
    std::int64_t const x0 = arith::narrow(x);
    return LcmOutcome(Meet{make({x0, l}),
                           make({(x0 - m) / p, l / p}),
                           make({(x0 - n) / q, l / q})});
  }

  bool AxbMonoid::is_core(Element const& s) const {
    return s.payload()[1] == 1;
  }

  bool AxbMonoid::is_unit(Element const& s) const {
    return s.payload()[0] == 0 && s.payload()[1] == 1;
  }

  std::optional<Element> AxbMonoid::inverse(Element const& s) const {
    if (is_unit(s)) {
      return s;
    }
    return std::nullopt;
  }

  bool AxbMonoid::is_noncore_irreducible(Element const& s) const {
    return arith::is_prime(s.payload()[1]);
  }

  // (m, p₁⋯p_k) = (m, p₁)(0, p₂)⋯(0, p_k) with ascending primes.
  std::optional<IrreducibleFactorization>
  AxbMonoid::factor_noncore(Element const& s) const {
    if (is_core(s)) {
      throw PreconditionError("axb: factor_noncore of core element " + format(s));
    }
    IrreducibleFactorization f;
    f.source     = s;
    f.left_core  = identity();
    f.right_core = identity();
    auto primes  = arith::prime_factors(s.payload()[1]);
    for (std::size_t i = 0; i < primes.size(); ++i) {
      f.letters.push_back(make({i == 0 ? s.payload()[0] : 0, primes[i]}));
    }
    return f;
  }

  ClassEnumeration AxbMonoid::enumerate_irreducible_classes(std::size_t cap) const {
    ClassEnumeration out;
    for (std::size_t i = 0;; ++i) {
      auto p = prime_at(i);
      if (!p) {
        out.exhaustive = true;
        return out;
      }
      for (std::int64_t k = 0; k < *p; ++k) {
        if (out.classes.size() >= cap) {
          return out;
        }
        out.classes.push_back(make({k, *p}));
      }
    }
  }

  std::vector<Element> AxbMonoid::enumerate_core_generators() const {
    return {make({1, 1})};
  }

  ClassEnumeration AxbMonoid::enumerate_atoms(std::size_t cap) const {
    ClassEnumeration out;
    if (cap == 0) {
      return out;
    }
    out.classes.push_back(make({1, 1}));
    for (std::size_t i = 0;; ++i) {
      auto p = prime_at(i);
      if (!p) {
        out.exhaustive = true;
        return out;
      }
      if (out.classes.size() >= cap) {
        return out;
      }
      out.classes.push_back(make({0, *p}));
    }
  }

  bool AxbMonoid::is_atom(Element const& x) const {
    auto const& a = x.payload();
    return (a[0] == 1 && a[1] == 1) || (a[0] == 0 && arith::is_prime(a[1]));
  }

  std::vector<Element> AxbMonoid::factor_atoms(Element const& x) const {
    std::vector<Element> out(static_cast<std::size_t>(x.payload()[0]),
                             make({1, 1}));
    for (auto p : arith::prime_factors(x.payload()[1])) {
      out.push_back(make({0, p}));
    }
    return out;
  }

  Element AxbMonoid::random_element(std::mt19937_64& rng, unsigned size) const {
    std::int64_t p = 1;
    std::size_t  n_primes
        = primes_ ? primes_->size() : std::size_t{6};
    if (n_primes > 0) {
      std::uniform_int_distribution<unsigned>    len(0, size);
      std::uniform_int_distribution<std::size_t> pick(0, n_primes - 1);
      for (unsigned i = len(rng); i > 0; --i) {
        p = arith::mul(p, *prime_at(pick(rng)));
      }
    }
    std::uniform_int_distribution<std::int64_t> mm(0, 3 * p + 10);
    return make({mm(rng), p});
  }

  std::vector<Element> AxbMonoid::enumerate_elements(unsigned bound) const {
    std::vector<Element> out;
    for (std::int64_t p = 1; p <= bound; ++p) {
      if (!allowed_multiplier(p)) {
        continue;
      }
      for (std::int64_t m = 0; m <= bound; ++m) {
        out.push_back(make({m, p}));
      }
    }
    return out;
  }

  std::vector<Element> AxbMonoid::spot_elements() const {
    std::vector<Element> out{make({0, 1}), make({1, 1}), make({7, 1})};
    if (auto p = prime_at(0)) {
      out.push_back(make({*p + 1, *p * *p}));
    }
    return out;
  }

  std::string AxbMonoid::format(Element const& s) const {
    std::ostringstream os;
    os << '(' << s.payload()[0] << ',' << s.payload()[1] << ')';
    return os.str();
  }

  Element AxbMonoid::parse(std::string_view text) const {
    auto t = text;
    while (!t.empty() && t.front() == ' ') {
      t.remove_prefix(1);
    }
    while (!t.empty() && t.back() == ' ') {
      t.remove_suffix(1);
    }
    if (t.size() < 5 || t.front() != '(' || t.back() != ')') {
      throw ParseError("axb: expected \"(m,p)\", got \"" + std::string(text) + "\"");
    }
    t = t.substr(1, t.size() - 2);
    auto comma = t.find(',');
    if (comma == std::string_view::npos) {
      throw ParseError("axb: expected \"(m,p)\", got \"" + std::string(text) + "\"");
    }
    std::int64_t m = parse_int(t.substr(0, comma), text);
    std::int64_t p = parse_int(t.substr(comma + 1), text);
    if (m < 0 || !allowed_multiplier(p)) {
      throw ParseError("axb: \"" + std::string(text) + "\" is not an element");
    }
    return make({m, p});
  }

  std::optional<std::uint64_t> AxbMonoid::closed_form_scale(Element const& s) const {
    return static_cast<std::uint64_t>(s.payload()[1]);
  }

}  // namespace gscale
