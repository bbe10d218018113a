#include "gscale/families/self_similar.hpp"

#include <algorithm>
#include <set>

#include "gscale/arith.hpp"
#include "gscale/error.hpp"

namespace gscale {

  SelfSimilarAction SelfSimilarAction::free_monoid(std::string alphabet) {
    SelfSimilarAction a;
    a.alphabet    = std::move(alphabet);
    a.group_names = {"e"};
    a.mul         = {{0}};
    a.action      = {std::vector<int>(a.alphabet.size())};
    a.restriction = {std::vector<int>(a.alphabet.size(), 0)};
    for (std::size_t x = 0; x < a.alphabet.size(); ++x) {
      a.action[0][x] = static_cast<int>(x);
    }
    return a;
  }

  void SelfSimilarAction::validate() const {
    auto const nx = alphabet.size();
    auto const ng = group_names.size();
    if (nx < 2) {
      throw ConfigError("alphabet", "must contain at least two letters");
    }
    if (std::set<char>(alphabet.begin(), alphabet.end()).size() != nx) {
      throw ConfigError("alphabet", "letters must be distinct");
    }
    for (char c : alphabet) {
      if (c == ',' || c == '(' || c == ')' || c == '[' || c == ']' || c == ' ') {
        throw ConfigError("alphabet", std::string("reserved character '") + c + "'");
      }
    }
    if (ng == 0) {
      throw ConfigError("group.elements", "group must be nonempty");
    }
    if (std::set<std::string>(group_names.begin(), group_names.end()).size() != ng) {
      throw ConfigError("group.elements", "element names must be distinct");
    }
    auto check_table = [&](auto const& tab, std::string const& field,
                           std::size_t cols, std::size_t range) {
      if (tab.size() != ng) {
        throw ConfigError(field, "expected " + std::to_string(ng) + " rows");
      }
      for (std::size_t g = 0; g < ng; ++g) {
        if (tab[g].size() != cols) {
          throw ConfigError(field + "[" + std::to_string(g) + "]",
                            "expected " + std::to_string(cols) + " entries");
        }
        for (auto v : tab[g]) {
          if (v < 0 || static_cast<std::size_t>(v) >= range) {
            throw ConfigError(field + "[" + std::to_string(g) + "]",
                              "entry out of range");
          }
        }
      }
    };
    check_table(mul, "group.mul", ng, ng);
    check_table(action, "group.action", nx, nx);
    check_table(restriction, "group.restriction", nx, ng);

    int e = -1;
    for (std::size_t c = 0; c < ng && e < 0; ++c) {
      bool ok = true;
      for (std::size_t g = 0; g < ng && ok; ++g) {
        ok = mul[c][g] == static_cast<int>(g) && mul[g][c] == static_cast<int>(g);
      }
      if (ok) {
        e = static_cast<int>(c);
      }
    }
    if (e < 0) {
      throw ConfigError("group.mul", "no identity element");
    }
    for (std::size_t a = 0; a < ng; ++a) {
      bool has_inverse = false;
      for (std::size_t b = 0; b < ng; ++b) {
        has_inverse = has_inverse || mul[a][b] == e;
        for (std::size_t c = 0; c < ng; ++c) {
          if (mul[mul[a][b]][c] != mul[a][mul[b][c]]) {
            throw ConfigError("group.mul", "not associative");
          }
        }
      }
      if (!has_inverse) {
        throw ConfigError("group.mul", "element " + group_names[a] + " has no inverse");
      }
    }
    for (std::size_t g = 0; g < ng; ++g) {
      if (std::set<int>(action[g].begin(), action[g].end()).size() != nx) {
        throw ConfigError("group.action[" + std::to_string(g) + "]",
                          "not a permutation of the alphabet");
      }
    }
    for (std::size_t x = 0; x < nx; ++x) {
      if (action[e][x] != static_cast<int>(x) || restriction[e][x] != e) {
        throw ConfigError("group.action", "identity must act trivially with trivial restriction");
      }
    }
    // Self-similarity: (gh)(xw) = g(h(x)) · (g|_{h(x)} h|_x)(w) for all x.
    for (std::size_t g = 0; g < ng; ++g) {
      for (std::size_t h = 0; h < ng; ++h) {
        int gh = mul[g][h];
        for (std::size_t x = 0; x < nx; ++x) {
          int hx = action[h][x];
          if (action[gh][x] != action[g][hx]) {
            throw ConfigError("group.action", "not a group action (at " + group_names[g]
                                                  + "*" + group_names[h] + ")");
          }
          if (restriction[gh][x] != mul[restriction[g][hx]][restriction[h][x]]) {
            throw ConfigError("group.restriction",
                              "violates g(xw) = g(x) g|_x(w) (at " + group_names[g] + "*"
                                  + group_names[h] + ", letter "
                                  + std::string(1, alphabet[x]) + ")");
          }
        }
      }
    }
  }

  SelfSimilarMonoid::SelfSimilarMonoid(SelfSimilarAction action)
      : Monoid("self_similar"), act_(std::move(action)) {
    act_.validate();
    auto const ng = act_.group_names.size();
    for (std::size_t c = 0; c < ng; ++c) {
      if (act_.mul[c][c] == static_cast<int>(c)) {
        identity_ = static_cast<int>(c);
        break;
      }
    }
    inverse_.assign(ng, 0);
    for (std::size_t a = 0; a < ng; ++a) {
      for (std::size_t b = 0; b < ng; ++b) {
        if (act_.mul[a][b] == identity_) {
          inverse_[a] = static_cast<int>(b);
        }
      }
    }
  }

  Element SelfSimilarMonoid::pair(std::vector<int> const& word, int g) const {
    Payload p{g};
    p.insert(p.end(), word.begin(), word.end());
    return make(std::move(p));
  }

  Element SelfSimilarMonoid::pair(std::string_view word, std::string_view g) const {
    auto it = std::find(act_.group_names.begin(), act_.group_names.end(), g);
    if (it == act_.group_names.end()) {
      throw ParseError("self_similar: unknown group element \"" + std::string(g) + "\"");
    }
    Payload p{static_cast<std::int64_t>(it - act_.group_names.begin())};
    for (char c : word) {
      auto pos = act_.alphabet.find(c);
      if (pos == std::string::npos) {
        throw ParseError("self_similar: letter '" + std::string(1, c)
                         + "' not in alphabet \"" + act_.alphabet + "\"");
      }
      p.push_back(static_cast<std::int64_t>(pos));
    }
    return make(std::move(p));
  }

  int SelfSimilarMonoid::act_on(int g, std::vector<std::int64_t>::iterator first,
                                std::vector<std::int64_t>::iterator last) const {
    for (; first != last; ++first) {
      auto x = static_cast<std::size_t>(*first);
      *first = act_.action[g][x];
      g      = act_.restriction[g][x];
    }
    return g;
  }

  Element SelfSimilarMonoid::identity() const {
    return make({identity_});
  }

  Element SelfSimilarMonoid::multiply(Element const& s, Element const& t) const {
    Payload out = s.payload();
    auto const& w = t.payload();
    auto        n = out.size();
    out.insert(out.end(), w.begin() + 1, w.end());
    int g  = static_cast<int>(out[0]);
    int gw = act_on(g, out.begin() + static_cast<std::ptrdiff_t>(n), out.end());
    out[0] = act_.mul[gw][w[0]];
    return make(std::move(out));
  }

  LcmOutcome SelfSimilarMonoid::right_lcm(Element const& s, Element const& t) const {
    auto const& a = s.payload();
    auto const& b = t.payload();
    bool const  swap = a.size() > b.size();
    auto const& shorter = swap ? b : a;
    auto const& longer  = swap ? a : b;
    if (!std::equal(shorter.begin() + 1, shorter.end(), longer.begin() + 1)) {
      return LcmOutcome::orthogonal();
    }
    // shorter = (v, g), longer = (v u, h). Cofactor of the shorter side is
    // (g⁻¹(u), (g|_{g⁻¹(u)})⁻¹); the longer side needs (∅, h⁻¹).
    int const g = static_cast<int>(shorter[0]);
    Payload   c{0};
    c.insert(c.end(), longer.begin() + static_cast<std::ptrdiff_t>(shorter.size()),
             longer.end());
    act_on(inverse_[g], c.begin() + 1, c.end());
    Payload probe = c;
    int     g_c   = act_on(g, probe.begin() + 1, probe.end());
    c[0]          = inverse_[g_c];

    Payload lcm = longer;
    lcm[0]      = identity_;
    Element short_cof = make(std::move(c));
    Element long_cof  = make({inverse_[longer[0]]});
    if (swap) {
      return LcmOutcome(Meet{make(std::move(lcm)), long_cof, short_cof});
    }
    return LcmOutcome(Meet{make(std::move(lcm)), short_cof, long_cof});
  }

  bool SelfSimilarMonoid::is_core(Element const& s) const {
    return s.payload().size() == 1;
  }

  bool SelfSimilarMonoid::is_unit(Element const& s) const {
    return s.payload().size() == 1;
  }

  std::optional<Element> SelfSimilarMonoid::inverse(Element const& s) const {
    if (!is_unit(s)) {
      return std::nullopt;
    }
    return make({inverse_[s.payload()[0]]});
  }

  bool SelfSimilarMonoid::is_noncore_irreducible(Element const& s) const {
    return s.payload().size() == 2;
  }

  // (x₁⋯x_n, g) = (x₁,e)⋯(x_{n-1},e)(x_n,g).
  std::optional<IrreducibleFactorization>
  SelfSimilarMonoid::factor_noncore(Element const& s) const {
    if (is_core(s)) {
      throw PreconditionError("self_similar: factor_noncore of core element " + format(s));
    }
    IrreducibleFactorization f;
    f.source     = s;
    f.left_core  = identity();
    f.right_core = identity();
    auto const& p = s.payload();
    for (std::size_t i = 1; i < p.size(); ++i) {
      f.letters.push_back(make({i + 1 == p.size() ? p[0] : identity_, p[i]}));
    }
    return f;
  }

  ClassEnumeration SelfSimilarMonoid::enumerate_irreducible_classes(std::size_t cap) const {
    ClassEnumeration out;
    for (std::size_t x = 0; x < alphabet_size(); ++x) {
      if (out.classes.size() >= cap) {
        return out;
      }
      out.classes.push_back(make({identity_, static_cast<std::int64_t>(x)}));
    }
    out.exhaustive = true;
    return out;
  }

  std::vector<Element> SelfSimilarMonoid::enumerate_core_generators() const {
    std::vector<Element> out;
    for (std::size_t g = 0; g < group_order(); ++g) {
      if (static_cast<int>(g) != identity_) {
        out.push_back(make({static_cast<std::int64_t>(g)}));
      }
    }
    return out;
  }

  Element SelfSimilarMonoid::random_element(std::mt19937_64& rng, unsigned size) const {
    std::uniform_int_distribution<unsigned> len(0, size);
    std::uniform_int_distribution<int>      letter(0, static_cast<int>(alphabet_size()) - 1);
    std::uniform_int_distribution<int>      grp(0, static_cast<int>(group_order()) - 1);
    Payload                                 p{grp(rng)};
    for (unsigned i = len(rng); i > 0; --i) {
      p.push_back(letter(rng));
    }
    return make(std::move(p));
  }

  std::vector<Element> SelfSimilarMonoid::enumerate_elements(unsigned bound) const {
    std::vector<Payload> words{{}};
    std::vector<Payload> frontier{{}};
    for (unsigned len = 1; len <= bound; ++len) {
      std::vector<Payload> next;
      for (auto const& w : frontier) {
        for (std::size_t x = 0; x < alphabet_size(); ++x) {
          auto v = w;
          v.push_back(static_cast<std::int64_t>(x));
          next.push_back(v);
        }
      }
      words.insert(words.end(), next.begin(), next.end());
      frontier = std::move(next);
    }
    std::vector<Element> out;
    for (auto const& w : words) {
      for (std::size_t g = 0; g < group_order(); ++g) {
        Payload p{static_cast<std::int64_t>(g)};
        p.insert(p.end(), w.begin(), w.end());
        out.push_back(make(std::move(p)));
      }
    }
    return out;
  }

  std::vector<Element> SelfSimilarMonoid::spot_elements() const {
    auto last = static_cast<std::int64_t>(group_order() - 1);
    return {identity(), make({identity_, 0}), make({last, 0, static_cast<std::int64_t>(alphabet_size() - 1)})};
  }

  std::string SelfSimilarMonoid::format(Element const& s) const {
    std::string out = "(";
    auto const& p   = s.payload();
    for (std::size_t i = 1; i < p.size(); ++i) {
      out.push_back(act_.alphabet[static_cast<std::size_t>(p[i])]);
    }
    out += ",";
    out += act_.group_names[static_cast<std::size_t>(p[0])];
    out += ")";
    return out;
  }

  Element SelfSimilarMonoid::parse(std::string_view text) const {
    auto t = text;
    while (!t.empty() && t.front() == ' ') {
      t.remove_prefix(1);
    }
    while (!t.empty() && t.back() == ' ') {
      t.remove_suffix(1);
    }
    if (t.empty() || t.front() != '(') {
      // Bare word, identity group label.
      return pair(t, act_.group_names[static_cast<std::size_t>(identity_)]);
    }
    if (t.back() != ')') {
      throw ParseError("self_similar: expected \"(word,g)\", got \"" + std::string(text) + "\"");
    }
    t          = t.substr(1, t.size() - 2);
    auto comma = t.rfind(',');
    if (comma == std::string_view::npos) {
      throw ParseError("self_similar: expected \"(word,g)\", got \"" + std::string(text) + "\"");
    }
    return pair(t.substr(0, comma), t.substr(comma + 1));
  }

  std::optional<std::uint64_t>
  SelfSimilarMonoid::closed_form_scale(Element const& s) const {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < word_length(s); ++i) {
      r = arith::umul(r, alphabet_size());
    }
    return r;
  }

}  // namespace gscale
