#pragma once

#include <map>
#include <string>
#include <vector>

#include "lipcoh/group_ring.hpp"

namespace lipcoh {

/**
 * Tag identifying which coefficient module a value is asserted to live in.
 * All our modules are sub/quotient-free shapes of ZG^{x order} with the
 * diagonal action:
 *
 *   order 0, aug 0   : Z (trivial module)
 *   order 1, aug 0   : ZG
 *   order k, aug k   : I(G)^{x k}
 *   order l, aug l-1 : I(G)^{x l-1} (x) ZG   (middle of the l-th sequence)
 *
 * `aug_slots` counts the leading tensor slots required to be
 * augmentation-zero.
 */
struct ModuleTag {
    int order = 0;
    int aug_slots = 0;

    static ModuleTag Z() { return {0, 0}; }
    static ModuleTag ZG() { return {1, 0}; }
    static ModuleTag aug_power(int k) { return {k, k}; }
    static ModuleTag aug_power_tensor_zg(int l) { return {l, l - 1}; }

    bool operator==(const ModuleTag&) const = default;
    std::string name() const;
};

ModuleTag tensor(const ModuleTag& a, const ModuleTag& b);

class ModuleElement;

/// diagonal action of a group element on a tensor-power element
ModuleElement diagonal_act(const GroupElement& g, const ModuleElement& t);

/**
 * Canonicalized element of ZG^{x k} (k >= 0): a finite integer combination of
 * k-tuples of group elements.  Multilinearity is applied eagerly, so two
 * elements are equal iff their term maps are equal.  k = 0 encodes a plain
 * integer (single empty-tuple key).
 */
class ModuleElement {
  public:
    using Key = std::vector<GroupElement>;

    ModuleElement() = default;
    explicit ModuleElement(int order) : order_(order) {}

    static ModuleElement zero(int order) { return ModuleElement(order); }
    static ModuleElement from_int(const Int& n);
    static ModuleElement from_ring(const GroupRingElement& x);
    /// elementary tensor of ring elements, expanded to the canonical form
    static ModuleElement elementary(const std::vector<GroupRingElement>& factors);

    int order() const { return order_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Int>& terms() const { return terms_; }

    void add_term(const Key& k, const Int& c);

    ModuleElement& operator+=(const ModuleElement& o);
    ModuleElement& operator-=(const ModuleElement& o);
    friend ModuleElement operator+(ModuleElement a, const ModuleElement& b) { return a += b; }
    friend ModuleElement operator-(ModuleElement a, const ModuleElement& b) { return a -= b; }
    ModuleElement operator-() const;
    friend ModuleElement operator*(const Int& c, const ModuleElement& x);

    /// diagonal action: g applied to every tensor factor simultaneously
    ModuleElement translated(const GroupElement& g) const;
    /// ZG-linear extension of the diagonal action
    ModuleElement acted(const GroupRingElement& r) const;

    friend ModuleElement tensor(const ModuleElement& a, const ModuleElement& b);

    /// contract one slot with the augmentation (drops the slot, keeps coeffs)
    ModuleElement contract_augmentation(int slot) const;

    /// membership test for I^{x s} (x) ZG^{x (order-s)}: the first s partial
    /// augmentations vanish
    bool in_aug_power(int aug_slots) const;
    bool satisfies(const ModuleTag& tag) const {
        return order_ == tag.order && in_aug_power(tag.aug_slots);
    }

    /// order-1 only: Z-linear extension of g -> abelianized(g).  On I(G) this
    /// is the coinvariants projection I(G)_G = H_1(G).
    std::vector<Int> abelianized_image(const GroupSpec& spec) const;

    GroupRingElement as_ring() const;
    Int as_int() const;

    /// append a factor on the right: x -> x (x) g  (the section-chooser shape)
    ModuleElement append_factor(const GroupElement& g) const;

    bool operator==(const ModuleElement& o) const {
        return order_ == o.order_ && terms_ == o.terms_;
    }
    std::strong_ordering operator<=>(const ModuleElement& o) const;

    std::string to_string(const GroupSpec& spec) const;

  private:
    int order_ = 0;
    std::map<Key, Int> terms_;
};

} // namespace lipcoh
