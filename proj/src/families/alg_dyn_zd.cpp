#include "gscale/families/alg_dyn_zd.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <set>
#include <sstream>

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

    std::int64_t parse_int(std::string_view s, std::string_view whole) {
      s              = trim(s);
      std::int64_t v = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw ParseError("alg_dyn_zd: bad integer \"" + std::string(s) + "\" in \""
                         + std::string(whole) + "\"");
      }
      return v;
    }

    lattice::Mat power(lattice::Mat const& a, std::int64_t k) {
      auto out = lattice::identity(a.size());
      for (std::int64_t i = 0; i < k; ++i) {
        out = lattice::mul(out, a);
      }
      return out;
    }
  }  // namespace

  AlgDynZdSpec AlgDynZdSpec::flip(std::int64_t p) {
    AlgDynZdSpec s;
    s.dim    = 2;
    s.kind   = MatrixMonoidKind::Flip;
    s.flip_p = p;
    s.generators = {{"p0", {{p, 0}, {0, 1}}},
                    {"p1", {{1, 0}, {0, p}}},
                    {"x", {{0, 1}, {1, 0}}}};
    return s;
  }

  void AlgDynZdSpec::validate() const {
    if (dim == 0) {
      throw ConfigError("dim", "must be at least 1");
    }
    if (kind == MatrixMonoidKind::Flip) {
      if (dim != 2) {
        throw ConfigError("dim", "flip requires dim = 2");
      }
      if (flip_p > -2 && flip_p < 2) {
        throw ConfigError("p", "flip requires |p| >= 2");
      }
      return;
    }
    if (generators.empty()) {
      throw ConfigError("generators", "at least one generator required");
    }
    std::set<std::string> names;
    for (std::size_t i = 0; i < generators.size(); ++i) {
      auto const& g     = generators[i];
      auto const  field = "generators[" + std::to_string(i) + "]";
      if (g.name.empty() || g.name == "1"
          || g.name.find_first_of("*,() ") != std::string::npos) {
        throw ConfigError(field + ".name", "invalid generator name \"" + g.name + "\"");
      }
      if (!names.insert(g.name).second) {
        throw ConfigError(field + ".name", "duplicate generator name \"" + g.name + "\"");
      }
      if (g.matrix.size() != dim) {
        throw ConfigError(field + ".matrix", "expected " + std::to_string(dim) + " rows");
      }
      for (auto const& row : g.matrix) {
        if (row.size() != dim) {
          throw ConfigError(field + ".matrix",
                            "expected " + std::to_string(dim) + " columns");
        }
      }
      auto d = lattice::det(g.matrix);
      if (d == 0) {
        throw ConfigError(field + ".matrix", "determinant is zero (not injective)");
      }
      if (d == 1 || d == -1) {
        throw ConfigError(field + ".matrix",
                          "determinant is ±1 (automorphism, not a proper generator)");
      }
    }
    if (kind != MatrixMonoidKind::Commutative) {
      return;
    }
    for (std::size_t i = 0; i < generators.size(); ++i) {
      for (std::size_t j = i + 1; j < generators.size(); ++j) {
        auto const& a = generators[i].matrix;
        auto const& b = generators[j].matrix;
        auto const  where = generators[i].name + ", " + generators[j].name;
        if (lattice::mul(a, b) != lattice::mul(b, a)) {
          throw ConfigError("generators", "matrices do not commute (" + where + ")");
        }
        auto h = lattice::column_hnf(lattice::hcat(a, b));
        bool full = h.has_value();
        for (std::size_t k = 0; full && k < dim; ++k) {
          full = h->H[k][k] == 1;
        }
        if (!full) {
          throw ConfigError("generators",
                            "images are not independent, A_iℤ^d + A_jℤ^d ≠ ℤ^d (" + where + ")");
        }
      }
    }
  }

  AlgDynZdMonoid::AlgDynZdMonoid(AlgDynZdSpec spec)
      : Monoid("alg_dyn_zd"), spec_(std::move(spec)) {
    spec_.validate();
    for (auto const& g : spec_.generators) {
      gen_matrices_.push_back(g.matrix);
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // P
  ////////////////////////////////////////////////////////////////////////

  Payload AlgDynZdMonoid::p_identity() const {
    switch (spec_.kind) {
      case MatrixMonoidKind::Commutative:
        return Payload(spec_.generators.size(), 0);
      case MatrixMonoidKind::Free:
        return {};
      case MatrixMonoidKind::Flip:
        return {0, 0, 0};
    }
    return {};
  }

  Payload AlgDynZdMonoid::p_mul(Payload const& p, Payload const& q) const {
    switch (spec_.kind) {
      case MatrixMonoidKind::Commutative: {
        Payload out(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) {
          out[i] = arith::add(p[i], q[i]);
        }
        return out;
      }
      case MatrixMonoidKind::Free: {
        Payload out = p;
        out.insert(out.end(), q.begin(), q.end());
        return out;
      }
      case MatrixMonoidKind::Flip:
        // x p₀ = p₁ x
        if (p[2] == 0) {
          return {p[0] + q[0], p[1] + q[1], q[2]};
        }
        return {p[0] + q[1], p[1] + q[0], 1 - q[2]};
    }
    return {};
  }

  bool AlgDynZdMonoid::p_is_unit(Payload const& p) const {
    switch (spec_.kind) {
      case MatrixMonoidKind::Commutative:
        return std::all_of(p.begin(), p.end(), [](auto e) { return e == 0; });
      case MatrixMonoidKind::Free:
        return p.empty();
      case MatrixMonoidKind::Flip:
        return p[0] == 0 && p[1] == 0;
    }
    return false;
  }

  std::size_t AlgDynZdMonoid::p_length(Payload const& p) const {
    switch (spec_.kind) {
      case MatrixMonoidKind::Commutative: {
        std::int64_t s = 0;
        for (auto e : p) {
          s += e;
        }
        return static_cast<std::size_t>(s);
      }
      case MatrixMonoidKind::Free:
        return p.size();
      case MatrixMonoidKind::Flip:
        return static_cast<std::size_t>(p[0] + p[1]);
    }
    return 0;
  }

  bool AlgDynZdMonoid::p_is_atom(Payload const& p) const {
    return p_length(p) == 1;
  }

  std::optional<Payload> AlgDynZdMonoid::p_lcm(Payload const& p, Payload const& q) const {
    switch (spec_.kind) {
      case MatrixMonoidKind::Commutative: {
        Payload out(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) {
          out[i] = std::max(p[i], q[i]);
        }
        return out;
      }
      case MatrixMonoidKind::Free: {
        auto const& a = p.size() <= q.size() ? p : q;
        auto const& b = p.size() <= q.size() ? q : p;
        if (!std::equal(a.begin(), a.end(), b.begin())) {
          return std::nullopt;
        }
        return b;
      }
      case MatrixMonoidKind::Flip:
        return Payload{std::max(p[0], q[0]), std::max(p[1], q[1]), 0};
    }
    return std::nullopt;
  }

  Payload AlgDynZdMonoid::p_left_quotient(Payload const& p, Payload const& r) const {
    switch (spec_.kind) {
      case MatrixMonoidKind::Commutative: {
        Payload out(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) {
          out[i] = r[i] - p[i];
        }
        return out;
      }
      case MatrixMonoidKind::Free:
        return Payload(r.begin() + static_cast<std::ptrdiff_t>(p.size()), r.end());
      case MatrixMonoidKind::Flip:
        // p = p₀^a p₁^b x^ε, so p⁻¹r = x^ε p₀^{A-a} p₁^{B-b} x^δ.
        return p_mul({0, 0, p[2]}, {r[0] - p[0], r[1] - p[1], r[2]});
    }
    return {};
  }

  std::vector<Payload> AlgDynZdMonoid::p_atoms() const {
    switch (spec_.kind) {
      case MatrixMonoidKind::Commutative: {
        std::vector<Payload> out;
        for (std::size_t i = 0; i < spec_.generators.size(); ++i) {
          Payload e(spec_.generators.size(), 0);
          e[i] = 1;
          out.push_back(std::move(e));
        }
        return out;
      }
      case MatrixMonoidKind::Free: {
        std::vector<Payload> out;
        for (std::size_t i = 0; i < spec_.generators.size(); ++i) {
          out.push_back({static_cast<std::int64_t>(i)});
        }
        return out;
      }
      case MatrixMonoidKind::Flip:
        return {{1, 0, 0}, {0, 1, 0}};
    }
    return {};
  }

  std::pair<std::vector<Payload>, Payload>
  AlgDynZdMonoid::p_factor(Payload const& p) const {
    std::vector<Payload> atoms;
    switch (spec_.kind) {
      case MatrixMonoidKind::Commutative: {
        auto gens = p_atoms();
        for (std::size_t i = 0; i < p.size(); ++i) {
          for (std::int64_t k = 0; k < p[i]; ++k) {
            atoms.push_back(gens[i]);
          }
        }
        return {atoms, p_identity()};
      }
      case MatrixMonoidKind::Free:
        for (auto x : p) {
          atoms.push_back({x});
        }
        return {atoms, p_identity()};
      case MatrixMonoidKind::Flip:
        for (std::int64_t k = 0; k < p[0]; ++k) {
          atoms.push_back({1, 0, 0});
        }
        for (std::int64_t k = 0; k < p[1]; ++k) {
          atoms.push_back({0, 1, 0});
        }
        return {atoms, {0, 0, p[2]}};
    }
    return {atoms, p_identity()};
  }

  lattice::Mat AlgDynZdMonoid::matrix_of(Payload const& p) const {
    auto out = lattice::identity(spec_.dim);
    switch (spec_.kind) {
      case MatrixMonoidKind::Commutative:
        for (std::size_t i = 0; i < p.size(); ++i) {
          out = lattice::mul(out, power(gen_matrices_[i], p[i]));
        }
        return out;
      case MatrixMonoidKind::Free:
        for (auto x : p) {
          out = lattice::mul(out, gen_matrices_[static_cast<std::size_t>(x)]);
        }
        return out;
      case MatrixMonoidKind::Flip:
        out = lattice::mul(power(gen_matrices_[0], p[0]), power(gen_matrices_[1], p[1]));
        if (p[2] != 0) {
          out = lattice::mul(out, gen_matrices_[2]);
        }
        return out;
    }
    return out;
  }

  std::string AlgDynZdMonoid::p_format(Payload const& p) const {
    std::vector<std::string> names;
    auto [atoms, unit] = p_factor(p);
    if (spec_.kind == MatrixMonoidKind::Free) {
      for (auto x : p) {
        names.push_back(spec_.generators[static_cast<std::size_t>(x)].name);
      }
    } else if (spec_.kind == MatrixMonoidKind::Commutative) {
      for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::int64_t k = 0; k < p[i]; ++k) {
          names.push_back(spec_.generators[i].name);
        }
      }
    } else {
      for (auto const& a : atoms) {
        names.push_back(a[0] == 1 ? "p0" : "p1");
      }
      if (unit[2] != 0) {
        names.push_back("x");
      }
    }
    if (names.empty()) {
      return "1";
    }
    std::string out = names[0];
    for (std::size_t i = 1; i < names.size(); ++i) {
      out += "*" + names[i];
    }
    return out;
  }

  Payload AlgDynZdMonoid::p_parse(std::string_view text) const {
    auto    t   = trim(text);
    Payload acc = p_identity();
    if (t.empty() || t == "1") {
      return acc;
    }
    while (true) {
      auto star = t.find('*');
      auto name = trim(t.substr(0, star));
      auto it   = std::find_if(spec_.generators.begin(), spec_.generators.end(),
                               [&](auto const& g) { return g.name == name; });
      if (it == spec_.generators.end()) {
        throw ParseError("alg_dyn_zd: unknown generator \"" + std::string(name) + "\"");
      }
      auto    i = static_cast<std::size_t>(it - spec_.generators.begin());
      Payload g;
      switch (spec_.kind) {
        case MatrixMonoidKind::Commutative:
          g    = p_identity();
          g[i] = 1;
          break;
        case MatrixMonoidKind::Free:
          g = {static_cast<std::int64_t>(i)};
          break;
        case MatrixMonoidKind::Flip:
          g = i == 0 ? Payload{1, 0, 0} : i == 1 ? Payload{0, 1, 0} : Payload{0, 0, 1};
          break;
      }
      acc = p_mul(acc, g);
      if (star == std::string_view::npos) {
        return acc;
      }
      t = t.substr(star + 1);
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // S = ℤ^d ⋊ P
  ////////////////////////////////////////////////////////////////////////

  Element AlgDynZdMonoid::pair(lattice::Vec const& m, Payload const& p) const {
    Payload out = m;
    out.insert(out.end(), p.begin(), p.end());
    return make(std::move(out));
  }

  lattice::Vec AlgDynZdMonoid::translation(Element const& s) const {
    auto const& p = s.payload();
    return lattice::Vec(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(spec_.dim));
  }

  Payload AlgDynZdMonoid::p_part(Element const& s) const {
    auto const& p = s.payload();
    return Payload(p.begin() + static_cast<std::ptrdiff_t>(spec_.dim), p.end());
  }

  Element AlgDynZdMonoid::identity() const {
    return pair(lattice::Vec(spec_.dim, 0), p_identity());
  }

  Element AlgDynZdMonoid::multiply(Element const& s, Element const& t) const {
    auto p = p_part(s);
    auto m = lattice::add(translation(s), lattice::mul(matrix_of(p), translation(t)));
    return pair(m, p_mul(p, p_part(t)));
  }

  LcmOutcome AlgDynZdMonoid::right_lcm(Element const& s, Element const& t) const {
    auto const p = p_part(s), q = p_part(t);
    auto const r = p_lcm(p, q);
    if (!r) {
      return LcmOutcome::orthogonal();
    }
    auto const m = translation(s), n = translation(t);
    auto const ap = matrix_of(p), aq = matrix_of(q);
    auto       x = lattice::intersect_cosets(ap, m, aq, n);
    if (!x) {
      return LcmOutcome::orthogonal();
    }
    auto const hr = lattice::column_hnf(matrix_of(*r));
    *x            = lattice::reduce(hr->H, *x);
    auto const u  = lattice::solve(ap, lattice::sub(*x, m));
    auto const v  = lattice::solve(aq, lattice::sub(*x, n));
    if (!u || !v) {
      throw ContractViolation("alg_dyn_zd: lcm point not in both cosets");
    }
    return LcmOutcome(Meet{pair(*x, *r), pair(*u, p_left_quotient(p, *r)),
                           pair(*v, p_left_quotient(q, *r))});
  }

  bool AlgDynZdMonoid::is_core(Element const& s) const {
    return p_is_unit(p_part(s));
  }

  bool AlgDynZdMonoid::is_unit(Element const& s) const {
    return p_is_unit(p_part(s));
  }

  std::optional<Element> AlgDynZdMonoid::inverse(Element const& s) const {
    if (!is_unit(s)) {
      return std::nullopt;
    }
    // (m,u)(n,u⁻¹) = (m + A_u n, 1); units of P are involutions or trivial.
    auto u = p_part(s);
    auto n = lattice::solve(matrix_of(u), lattice::sub(lattice::Vec(spec_.dim, 0),
                                                       translation(s)));
    return pair(*n, u);
  }

  bool AlgDynZdMonoid::is_noncore_irreducible(Element const& s) const {
    return p_is_atom(p_part(s));
  }

  // (m, a₁⋯a_k u) = (m,a₁)(0,a₂)⋯(0,a_k u).
  std::optional<IrreducibleFactorization>
  AlgDynZdMonoid::factor_noncore(Element const& s) const {
    if (is_core(s)) {
      throw PreconditionError("alg_dyn_zd: factor_noncore of core element " + format(s));
    }
    auto [atoms, unit] = p_factor(p_part(s));
    IrreducibleFactorization f;
    f.source     = s;
    f.left_core  = identity();
    f.right_core = identity();
    lattice::Vec zero(spec_.dim, 0);
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      auto q = i + 1 == atoms.size() ? p_mul(atoms[i], unit) : atoms[i];
      f.letters.push_back(pair(i == 0 ? translation(s) : zero, q));
    }
    return f;
  }

  ClassEnumeration AlgDynZdMonoid::enumerate_irreducible_classes(std::size_t cap) const {
    ClassEnumeration out;
    for (auto const& a : p_atoms()) {
      auto h = lattice::column_hnf(matrix_of(a));
      for (auto const& rep : lattice::coset_reps(h->H)) {
        if (out.classes.size() >= cap) {
          return out;
        }
        out.classes.push_back(pair(rep, a));
      }
    }
    out.exhaustive = true;
    return out;
  }

  std::vector<Element> AlgDynZdMonoid::enumerate_core_generators() const {
    std::vector<Element> out;
    for (std::size_t i = 0; i < spec_.dim; ++i) {
      lattice::Vec e(spec_.dim, 0);
      e[i] = 1;
      out.push_back(pair(e, p_identity()));
    }
    if (spec_.kind == MatrixMonoidKind::Flip) {
      out.push_back(pair(lattice::Vec(spec_.dim, 0), {0, 0, 1}));
    }
    return out;
  }

  Element AlgDynZdMonoid::random_element(std::mt19937_64& rng, unsigned size) const {
    std::uniform_int_distribution<std::int64_t> coord(-6, 6);
    std::uniform_int_distribution<unsigned>     len(0, size);
    lattice::Vec                                m(spec_.dim);
    for (auto& c : m) {
      c = coord(rng);
    }
    auto                                       atoms = p_atoms();
    std::uniform_int_distribution<std::size_t> pick(0, atoms.size() - 1);
    Payload                                    p = p_identity();
    for (unsigned k = len(rng); k > 0; --k) {
      p = p_mul(p, atoms[pick(rng)]);
    }
    if (spec_.kind == MatrixMonoidKind::Flip && (rng() & 1U)) {
      p = p_mul(p, {0, 0, 1});
    }
    return pair(m, p);
  }

  std::vector<Element> AlgDynZdMonoid::enumerate_elements(unsigned bound) const {
    std::vector<Payload> ps{p_identity()};
    std::set<Payload>    seen{p_identity()};
    std::vector<Payload> frontier{p_identity()};
    std::vector<Payload> steps = p_atoms();
    if (spec_.kind == MatrixMonoidKind::Flip) {
      ps.push_back({0, 0, 1});
      seen.insert({0, 0, 1});
      frontier.push_back({0, 0, 1});
    }
    for (unsigned len = 1; len <= bound; ++len) {
      std::vector<Payload> next;
      for (auto const& f : frontier) {
        for (auto const& a : steps) {
          auto q = p_mul(f, a);
          if (seen.insert(q).second) {
            next.push_back(q);
          }
          if (spec_.kind == MatrixMonoidKind::Flip) {
            auto qx = p_mul(q, {0, 0, 1});
            if (seen.insert(qx).second) {
              next.push_back(qx);
            }
          }
        }
      }
      ps.insert(ps.end(), next.begin(), next.end());
      frontier = std::move(next);
    }
    std::vector<lattice::Vec> ms{lattice::Vec{}};
    auto const                b = static_cast<std::int64_t>(bound);
    for (std::size_t i = 0; i < spec_.dim; ++i) {
      std::vector<lattice::Vec> next;
      for (auto const& v : ms) {
        for (std::int64_t c = -b; c <= b; ++c) {
          auto w = v;
          w.push_back(c);
          next.push_back(std::move(w));
        }
      }
      ms = std::move(next);
    }
    std::vector<Element> out;
    for (auto const& p : ps) {
      for (auto const& m : ms) {
        out.push_back(pair(m, p));
      }
    }
    return out;
  }

  std::vector<Element> AlgDynZdMonoid::spot_elements() const {
    auto         atoms = p_atoms();
    lattice::Vec e(spec_.dim, 0);
    e[0]   = 1;
    auto f = e;
    f.back() += 2;
    return {identity(), pair(e, atoms.front()),
            pair(f, p_mul(atoms.front(), atoms.back()))};
  }

  std::string AlgDynZdMonoid::format(Element const& s) const {
    std::ostringstream os;
    auto               m = translation(s);
    os << '(';
    if (spec_.dim == 1) {
      os << m[0];
    } else {
      os << '(';
      for (std::size_t i = 0; i < m.size(); ++i) {
        os << (i ? "," : "") << m[i];
      }
      os << ')';
    }
    os << ',' << p_format(p_part(s)) << ')';
    return os.str();
  }

  Element AlgDynZdMonoid::parse(std::string_view text) const {
    auto t = trim(text);
    if (t.size() < 2 || t.front() != '(' || t.back() != ')') {
      throw ParseError("alg_dyn_zd: expected \"(m,word)\", got \"" + std::string(text) + "\"");
    }
    t          = t.substr(1, t.size() - 2);
    auto comma = t.rfind(',');
    if (comma == std::string_view::npos) {
      throw ParseError("alg_dyn_zd: expected \"(m,word)\", got \"" + std::string(text) + "\"");
    }
    auto         vec = trim(t.substr(0, comma));
    lattice::Vec m;
    if (!vec.empty() && vec.front() == '(') {
      if (vec.back() != ')') {
        throw ParseError("alg_dyn_zd: unbalanced vector in \"" + std::string(text) + "\"");
      }
      vec = vec.substr(1, vec.size() - 2);
      while (true) {
        auto c = vec.find(',');
        m.push_back(parse_int(vec.substr(0, c), text));
        if (c == std::string_view::npos) {
          break;
        }
        vec = vec.substr(c + 1);
      }
    } else {
      m.push_back(parse_int(vec, text));
    }
    if (m.size() != spec_.dim) {
      throw ParseError("alg_dyn_zd: expected a vector of length " + std::to_string(spec_.dim)
                       + " in \"" + std::string(text) + "\"");
    }
    return pair(m, p_parse(t.substr(comma + 1)));
  }

  std::optional<std::uint64_t>
  AlgDynZdMonoid::closed_form_scale(Element const& s) const {
    switch (spec_.kind) {
      case MatrixMonoidKind::Commutative:
        return static_cast<std::uint64_t>(std::llabs(lattice::det(matrix_of(p_part(s)))));
      case MatrixMonoidKind::Free: {
        // One coconnected component holding every class of every atom.
        std::uint64_t base = 0;
        for (auto const& g : gen_matrices_) {
          base += static_cast<std::uint64_t>(std::llabs(lattice::det(g)));
        }
        std::uint64_t r = 1;
        for (std::size_t i = 0; i < p_length(p_part(s)); ++i) {
          r = arith::umul(r, base);
        }
        return r;
      }
      case MatrixMonoidKind::Flip:
        return std::nullopt;
    }
    return std::nullopt;
  }

}  // namespace gscale
