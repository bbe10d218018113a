#ifndef GSCALE_ELEMENT_HPP_
#define GSCALE_ELEMENT_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace gscale {

  // Identifies the monoid instance an element belongs to. Every loaded family
  // gets a fresh tag, so elements of distinct handles never compare equal.
  using FamilyTag = std::uint64_t;

  using Payload = std::vector<std::int64_t>;

  // An element of some monoid, stored as the family's canonical encoding.
  // Equality is syntactic: each family keeps its payloads in normal form.
  class Element {
   public:
    Element() = default;
    Element(FamilyTag family, Payload payload)
        : family_(family), payload_(std::move(payload)) {}

    FamilyTag family() const noexcept {
      return family_;
    }

    Payload const& payload() const noexcept {
      return payload_;
    }

    friend bool operator==(Element const&, Element const&) = default;
    friend auto operator<=>(Element const&, Element const&) = default;

   private:
    FamilyTag family_ = 0;
    Payload   payload_;
  };

  struct ElementHash {
    std::size_t operator()(Element const& e) const noexcept {
      std::size_t h = std::hash<std::uint64_t>{}(e.family());
      for (auto v : e.payload()) {
        h ^= std::hash<std::int64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6)
             + (h >> 2);
      }
      return h;
    }
  };

  // Right LCM data for a pair (s, t): s * cofactor_left = t * cofactor_right
  // = lcm, and lcm S = sS ∩ tS.
  struct Meet {
    Element lcm;
    Element cofactor_left;
    Element cofactor_right;
  };

  // Either Orthogonal (no common right multiple) or a Meet.
  class LcmOutcome {
   public:
    LcmOutcome() = default;  // orthogonal
    explicit LcmOutcome(Meet m) : meet_(std::move(m)) {}

    static LcmOutcome orthogonal() {
      return LcmOutcome();
    }

    bool is_orthogonal() const noexcept {
      return !meet_.has_value();
    }
    bool is_meet() const noexcept {
      return meet_.has_value();
    }
    Meet const& meet() const {
      return meet_.value();
    }

   private:
    std::optional<Meet> meet_;
  };

}  // namespace gscale

#endif  // GSCALE_ELEMENT_HPP_
