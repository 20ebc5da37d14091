#pragma once

#include <map>
#include <string>

#include "lipcoh/bigint.hpp"
#include "lipcoh/group.hpp"

namespace lipcoh {

/**
 * Element of the integral group ring: a finite map group element -> nonzero
 * coefficient.  Zero coefficients are never stored, so equality is map
 * equality.
 */
class GroupRingElement {
  public:
    GroupRingElement() = default;
    explicit GroupRingElement(const GroupElement& g) { terms_[g] = 1; }
    GroupRingElement(const GroupElement& g, Int coeff) {
        if (coeff != 0) terms_[g] = std::move(coeff);
    }

    static GroupRingElement zero() { return {}; }
    static GroupRingElement unit(const GroupSpec& spec) {
        return GroupRingElement(GroupElement::identity(spec));
    }
    /// g - e, the canonical augmentation-ideal generator attached to g.
    static GroupRingElement aug_gen(const GroupSpec& spec, const GroupElement& g);

    const std::map<GroupElement, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t support_size() const { return terms_.size(); }
    Int coeff(const GroupElement& g) const {
        auto it = terms_.find(g);
        return it == terms_.end() ? Int(0) : it->second;
    }

    void add_term(const GroupElement& g, const Int& c);

    GroupRingElement& operator+=(const GroupRingElement& o);
    GroupRingElement& operator-=(const GroupRingElement& o);
    friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
    friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
    GroupRingElement operator-() const;
    friend GroupRingElement operator*(const Int& c, const GroupRingElement& x);
    friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);

    /// left translation x -> g.x
    GroupRingElement translated(const GroupElement& g) const;

    bool operator==(const GroupRingElement& o) const { return terms_ == o.terms_; }
    std::strong_ordering operator<=>(const GroupRingElement& o) const;

    std::string to_string(const GroupSpec& spec) const;

  private:
    std::map<GroupElement, Int> terms_;
};

/// epsilon: ZG -> Z, the sum of coefficients.  Ring homomorphism; its kernel
/// is the augmentation ideal.
Int augmentation(const GroupRingElement& x);

inline bool in_augmentation_ideal(const GroupRingElement& x) { return augmentation(x) == 0; }

} // namespace lipcoh
