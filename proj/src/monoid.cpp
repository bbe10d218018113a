#include "gscale/monoid.hpp"

#include <atomic>
#include <cctype>

#include "gscale/error.hpp"

namespace gscale {

  namespace {
    std::atomic<FamilyTag> next_tag{1};
  }  // namespace

  Monoid::Monoid(std::string kind)
      : tag_(next_tag.fetch_add(1)), kind_(std::move(kind)) {}

  Monoid::~Monoid() = default;

  ClassEnumeration Monoid::enumerate_atoms(std::size_t cap) const {
    return enumerate_irreducible_classes(cap);
  }

  bool Monoid::is_atom(Element const& x) const {
    return is_noncore_irreducible(x);
  }

  std::vector<Element> Monoid::factor_atoms(Element const& x) const {
    if (is_unit(x)) {
      if (x == identity()) {
        return {};
      }
      return {x};
    }
    auto f = factor_noncore(x);
    if (!f) {
      throw ContractViolation(kind() + ": element " + format(x)
                              + " has no atom factorization");
    }
    // x·a = L·b with a, b units, hence x = L·(b·a⁻¹).
    auto a_inv = inverse(f->left_core);
    if (!a_inv) {
      throw ContractViolation(kind()
                              + ": factor_atoms needs S_c = S^* (core "
                                "adjustment is not invertible)");
    }
    auto letters = std::move(f->letters);
    letters.back()
        = multiply(letters.back(), multiply(f->right_core, *a_inv));
    return letters;
  }

  std::vector<std::string> split_element_list(std::string_view text) {
    std::vector<std::string> out;
    std::size_t              i = 0;
    auto skip_ws = [&] {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
    };
    skip_ws();
    if (i < text.size() && text[i] != '(' && text[i] != '[') {
      std::string bare(text.substr(i));
      while (!bare.empty() && std::isspace(static_cast<unsigned char>(bare.back()))) {
        bare.pop_back();
      }
      out.push_back(bare);
      return out;
    }
    while (i < text.size()) {
      char open = text[i];
      if (open != '(' && open != '[') {
        throw ParseError("expected '(' or '[' at offset " + std::to_string(i)
                         + " in \"" + std::string(text) + "\"");
      }
      std::size_t start = i;
      int         depth = 0;
      for (; i < text.size(); ++i) {
        char c = text[i];
        if (c == '(' || c == '[') {
          ++depth;
        } else if (c == ')' || c == ']') {
          if (--depth == 0) {
            ++i;
            break;
          }
        }
      }
      if (depth != 0) {
        throw ParseError("unbalanced brackets in \"" + std::string(text) + "\"");
      }
      out.emplace_back(text.substr(start, i - start));
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_ws();
      }
    }
    return out;
  }

}  // namespace gscale
