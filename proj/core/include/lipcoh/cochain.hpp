#pragma once

#include <memory>

#include "lipcoh/free_complex.hpp"
#include "lipcoh/module_element.hpp"

namespace lipcoh {

/**
 * Equivariant cochain on a free resolution: a value per free generator of one
 * degree, extended to the whole degree by equivariance (ZG-linearity against
 * the module action).
 */
class CellCochain {
  public:
    CellCochain() = default;
    CellCochain(std::shared_ptr<const FreeZGComplex> complex, int degree, ModuleTag tag,
                std::vector<ModuleElement> values);

    static CellCochain zero(std::shared_ptr<const FreeZGComplex> complex, int degree, ModuleTag tag);

    const std::shared_ptr<const FreeZGComplex>& complex() const { return complex_; }
    int degree() const { return degree_; }
    const ModuleTag& tag() const { return tag_; }
    const std::vector<ModuleElement>& values() const { return values_; }
    const ModuleElement& value(int generator) const { return values_[generator]; }

    /// evaluation on a ZG-chain of matching degree
    ModuleElement eval(const std::vector<GroupRingElement>& chain) const;

    /// coboundary (zero cochain above the top degree of the resolution)
    CellCochain delta() const;
    bool is_cocycle() const;

    CellCochain operator+(const CellCochain& o) const;
    CellCochain operator-(const CellCochain& o) const;
    CellCochain scaled(const Int& c) const;
    bool operator==(const CellCochain& o) const {
        return degree_ == o.degree_ && tag_ == o.tag_ && values_ == o.values_;
    }

    /// valuewise module map on generators (sections, projections, ...)
    CellCochain mapped(ModuleTag target,
                       const std::function<ModuleElement(const ModuleElement&)>& f) const;
    /// reinterpret the values in a smaller module, validating membership
    CellCochain reinterpret(ModuleTag target) const;

    /// pairing with an integer cycle of the coinvariant complex (canonical
    /// lift); raw module value
    ModuleElement pairing(const std::vector<Int>& cycle) const;

  private:
    std::shared_ptr<const FreeZGComplex> complex_;
    int degree_ = 0;
    ModuleTag tag_;
    std::vector<ModuleElement> values_;
};

/**
 * The Berstein-Schwarz cocycle on an augmented resolution: lift the
 * augmentation class to a ZG-valued 0-cochain u0 (generator -> aug . e) and
 * return delta(u0), whose values land in the augmentation ideal.
 */
CellCochain berstein_schwarz(std::shared_ptr<const FreeZGComplex> complex);

} // namespace lipcoh
