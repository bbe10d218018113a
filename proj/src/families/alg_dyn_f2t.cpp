#include "gscale/families/alg_dyn_f2t.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "gscale/arith.hpp"
#include "gscale/error.hpp"

namespace gscale {

  namespace {
    std::string_view trim(std::string_view s) {
      while (!s.empty() && s.front() == ' ') {
        s.remove_prefix(1);
      }
      while (!s.empty() && s.back() == ' ') {
        s.remove_suffix(1);
      }
      return s;
    }
  }  // namespace

  std::vector<PolyGenerator> AlgDynF2tMonoid::ledrappier() {
    return {{"sigma", Poly2::from_exponents({1})},
            {"id+sigma", Poly2::from_exponents({0, 1})}};
  }

  AlgDynF2tMonoid::AlgDynF2tMonoid(std::vector<PolyGenerator> generators)
      : Monoid("alg_dyn_f2t"), gens_(std::move(generators)) {
    if (gens_.empty()) {
      throw ConfigError("generators", "at least one generator required");
    }
    std::set<std::string> names;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      auto const field = "generators[" + std::to_string(i) + "]";
      auto const& name = gens_[i].name;
      if (name.empty() || name == "1" || name.find_first_of("*,() ") != std::string::npos) {
        throw ConfigError(field + ".name", "invalid generator name \"" + name + "\"");
      }
      if (!names.insert(name).second) {
        throw ConfigError(field + ".name", "duplicate generator name \"" + name + "\"");
      }
      if (gens_[i].poly.degree() < 1) {
        throw ConfigError(field + ".poly", "degree must be at least 1");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (Poly2::gcd(gens_[i].poly, gens_[j].poly).degree() != 0) {
          throw ConfigError("generators", "polynomials of " + gens_[j].name + " and "
                                              + name + " are not coprime");
        }
      }
    }
  }

  Element AlgDynF2tMonoid::pair(Poly2 const& g, std::vector<std::int64_t> const& n) const {
    Payload p = n;
    for (auto l : g.limbs()) {
      p.push_back(std::bit_cast<std::int64_t>(l));
    }
    return make(std::move(p));
  }

  Poly2 AlgDynF2tMonoid::poly_part(Element const& s) const {
    std::vector<std::uint64_t> l;
    auto const&                p = s.payload();
    for (std::size_t i = gens_.size(); i < p.size(); ++i) {
      l.push_back(std::bit_cast<std::uint64_t>(p[i]));
    }
    return Poly2(std::move(l));
  }

  std::vector<std::int64_t> AlgDynF2tMonoid::exponents(Element const& s) const {
    auto const& p = s.payload();
    return {p.begin(), p.begin() + static_cast<std::ptrdiff_t>(gens_.size())};
  }

  Poly2 AlgDynF2tMonoid::power_product(std::vector<std::int64_t> const& n) const {
    Poly2 out = Poly2::monomial(0);
    for (std::size_t i = 0; i < n.size(); ++i) {
      for (std::int64_t k = 0; k < n[i]; ++k) {
        out = out * gens_[i].poly;
      }
    }
    return out;
  }

  Element AlgDynF2tMonoid::identity() const {
    return pair(Poly2(), std::vector<std::int64_t>(gens_.size(), 0));
  }

  Element AlgDynF2tMonoid::multiply(Element const& s, Element const& t) const {
    auto n = exponents(s), m = exponents(t);
    auto g = poly_part(s) + power_product(n) * poly_part(t);
    for (std::size_t i = 0; i < n.size(); ++i) {
      n[i] += m[i];
    }
    return pair(g, n);
  }

  // CRT in 𝔽₂[t]: x ≡ g mod f^n, x ≡ h mod f^m, reduced mod lcm = f^{max}.
  LcmOutcome AlgDynF2tMonoid::right_lcm(Element const& s, Element const& t) const {
    auto const n = exponents(s), m = exponents(t);
    auto const g = poly_part(s), h = poly_part(t);
    std::vector<std::int64_t> lo(n.size()), r(n.size());
    for (std::size_t i = 0; i < n.size(); ++i) {
      lo[i] = std::min(n[i], m[i]);
      r[i]  = std::max(n[i], m[i]);
    }
    auto const fn = power_product(n), fm = power_product(m);
    auto const d  = power_product(lo);
    auto const diff = g + h;
    if (!diff.mod(d).is_zero()) {
      return LcmOutcome::orthogonal();
    }
    auto const a   = Poly2::exact_div(fn, d);
    auto const mod = Poly2::exact_div(fm, d);
    Poly2      u;
    if (mod.degree() > 0) {
      u = (Poly2::inverse_mod(a, mod) * Poly2::exact_div(diff, d)).mod(mod);
    }
    auto const fr = power_product(r);
    auto const x  = (g + fn * u).mod(fr);
    std::vector<std::int64_t> cn(n.size()), cm(n.size());
    for (std::size_t i = 0; i < n.size(); ++i) {
      cn[i] = r[i] - n[i];
      cm[i] = r[i] - m[i];
    }
    return LcmOutcome(Meet{pair(x, r), pair(Poly2::exact_div(x + g, fn), cn),
                           pair(Poly2::exact_div(x + h, fm), cm)});
  }

  bool AlgDynF2tMonoid::is_core(Element const& s) const {
    auto n = exponents(s);
    return std::all_of(n.begin(), n.end(), [](auto e) { return e == 0; });
  }

  bool AlgDynF2tMonoid::is_unit(Element const& s) const {
    return is_core(s);
  }

  std::optional<Element> AlgDynF2tMonoid::inverse(Element const& s) const {
    if (!is_unit(s)) {
      return std::nullopt;
    }
    return s;  // characteristic 2
  }

  bool AlgDynF2tMonoid::is_noncore_irreducible(Element const& s) const {
    std::int64_t total = 0;
    for (auto e : exponents(s)) {
      total += e;
    }
    return total == 1;
  }

  // (g, n) = (g, e_{i₁})(0, e_{i₂})⋯ in generator order.
  std::optional<IrreducibleFactorization>
  AlgDynF2tMonoid::factor_noncore(Element const& s) const {
    if (is_core(s)) {
      throw PreconditionError("alg_dyn_f2t: factor_noncore of core element " + format(s));
    }
    IrreducibleFactorization f;
    f.source     = s;
    f.left_core  = identity();
    f.right_core = identity();
    auto const n = exponents(s);
    bool first = true;
    for (std::size_t i = 0; i < n.size(); ++i) {
      for (std::int64_t k = 0; k < n[i]; ++k) {
        std::vector<std::int64_t> e(n.size(), 0);
        e[i] = 1;
        f.letters.push_back(pair(first ? poly_part(s) : Poly2(), e));
        first = false;
      }
    }
    return f;
  }

  ClassEnumeration AlgDynF2tMonoid::enumerate_irreducible_classes(std::size_t cap) const {
    ClassEnumeration out;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      std::vector<std::int64_t> e(gens_.size(), 0);
      e[i]        = 1;
      auto const deg = static_cast<unsigned>(gens_[i].poly.degree());
      if (deg >= 63) {
        return out;
      }
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << deg); ++bits) {
        if (out.classes.size() >= cap) {
          return out;
        }
        out.classes.push_back(pair(Poly2(bits ? std::vector<std::uint64_t>{bits}
                                              : std::vector<std::uint64_t>{}),
                                   e));
      }
    }
    out.exhaustive = true;
    return out;
  }

  std::vector<Element> AlgDynF2tMonoid::enumerate_core_generators() const {
    int maxdeg = 1;
    for (auto const& g : gens_) {
      maxdeg = std::max(maxdeg, g.poly.degree());
    }
    std::vector<Element> out;
    for (int j = 0; j < maxdeg; ++j) {
      out.push_back(pair(Poly2::monomial(static_cast<unsigned>(j)),
                         std::vector<std::int64_t>(gens_.size(), 0)));
    }
    return out;
  }

  Element AlgDynF2tMonoid::random_element(std::mt19937_64& rng, unsigned size) const {
    std::uniform_int_distribution<unsigned>    len(0, size);
    std::uniform_int_distribution<std::size_t> pick(0, gens_.size() - 1);
    std::vector<std::int64_t>                  n(gens_.size(), 0);
    for (unsigned k = len(rng); k > 0; --k) {
      ++n[pick(rng)];
    }
    return pair(Poly2({rng() & 0xffU}), n);
  }

  std::vector<Element> AlgDynF2tMonoid::enumerate_elements(unsigned bound) const {
    std::vector<std::vector<std::int64_t>> exps{std::vector<std::int64_t>(gens_.size(), 0)};
    std::set<std::vector<std::int64_t>>    seen(exps.begin(), exps.end());
    auto                                   frontier = exps;
    for (unsigned len = 1; len <= bound; ++len) {
      std::vector<std::vector<std::int64_t>> next;
      for (auto const& f : frontier) {
        for (std::size_t i = 0; i < gens_.size(); ++i) {
          auto g = f;
          ++g[i];
          if (seen.insert(g).second) {
            next.push_back(g);
          }
        }
      }
      exps.insert(exps.end(), next.begin(), next.end());
      frontier = std::move(next);
    }
    std::vector<Element> out;
    auto const           nb = std::min(bound, 16U);
    for (auto const& e : exps) {
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << nb); ++bits) {
        out.push_back(pair(Poly2({bits}), e));
      }
    }
    return out;
  }

  std::vector<Element> AlgDynF2tMonoid::spot_elements() const {
    std::vector<std::int64_t> e(gens_.size(), 0), ef(gens_.size(), 0);
    e[0] = 1;
    ef[0]++;
    ef.back()++;
    return {identity(), pair(Poly2::monomial(0), e), pair(Poly2::from_exponents({0, 2}), ef)};
  }

  std::string AlgDynF2tMonoid::format(Element const& s) const {
    std::string word;
    auto const  n = exponents(s);
    for (std::size_t i = 0; i < n.size(); ++i) {
      for (std::int64_t k = 0; k < n[i]; ++k) {
        word += (word.empty() ? "" : "*") + gens_[i].name;
      }
    }
    return "(" + poly_part(s).to_string() + "," + (word.empty() ? "1" : word) + ")";
  }

  Element AlgDynF2tMonoid::parse(std::string_view text) const {
    auto t = trim(text);
    if (t.size() < 2 || t.front() != '(' || t.back() != ')') {
      throw ParseError("alg_dyn_f2t: expected \"(poly,word)\", got \"" + std::string(text)
                       + "\"");
    }
    t          = t.substr(1, t.size() - 2);
    auto comma = t.rfind(',');
    if (comma == std::string_view::npos) {
      throw ParseError("alg_dyn_f2t: expected \"(poly,word)\", got \"" + std::string(text)
                       + "\"");
    }
    auto                      g    = Poly2::parse(t.substr(0, comma));
    auto                      rest = trim(t.substr(comma + 1));
    std::vector<std::int64_t> n(gens_.size(), 0);
    if (!rest.empty() && rest != "1") {
      while (true) {
        auto star = rest.find('*');
        auto name = trim(rest.substr(0, star));
        auto it   = std::find_if(gens_.begin(), gens_.end(),
                                 [&](auto const& x) { return x.name == name; });
        if (it == gens_.end()) {
          throw ParseError("alg_dyn_f2t: unknown generator \"" + std::string(name) + "\"");
        }
        ++n[static_cast<std::size_t>(it - gens_.begin())];
        if (star == std::string_view::npos) {
          break;
        }
        rest = rest.substr(star + 1);
      }
    }
    return pair(g, n);
  }

  std::uint64_t AlgDynF2tMonoid::index_homomorphism(Element const& s) const {
    auto const  n    = exponents(s);
    std::int64_t bits = 0;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      bits = arith::add(bits, arith::mul(gens_[i].poly.degree(), n[i]));
    }
    if (bits >= 64) {
      throw OverflowError("alg_dyn_f2t: index exceeds 64 bits");
    }
    return std::uint64_t{1} << bits;
  }

  // A scale exists only with a single generator; it is then 2^{deg f · n}.
  std::optional<std::uint64_t>
  AlgDynF2tMonoid::closed_form_scale(Element const& s) const {
    if (gens_.size() != 1) {
      return std::nullopt;
    }
    return index_homomorphism(s);
  }

}  // namespace gscale
