#pragma once

#include "lipcoh/bar_complex.hpp"
#include "lipcoh/cochain.hpp"
#include "lipcoh/gamma_complex.hpp"

namespace lipcoh {

/**
 * The coefficient sequences the engine works with, indexed by ell >= 1:
 *
 *   0 -> I^{x ell} -> I^{x ell-1} (x) ZG -> I^{x ell-1} -> 0
 *
 * (ell = 1 is the augmentation sequence 0 -> I -> ZG -> Z -> 0.)  The
 * projection contracts the last tensor slot with the augmentation; the
 * inclusion is the identity on representations.  The section-chooser appends
 * a fixed group element as a new last factor; it is additive, which makes
 * the connecting homomorphisms below reproducible, and its choice only moves
 * the outputs by an explicit coboundary.
 */
struct ShortExactSeq {
    int ell = 1;
    GroupSpec spec;
    GroupElement section_base; // e by default

    static ShortExactSeq augmentation_seq(const GroupSpec& spec, int ell = 1);
    static ShortExactSeq with_section_base(const GroupSpec& spec, int ell, GroupElement base);

    ModuleTag K() const { return ModuleTag::aug_power(ell); }
    ModuleTag L() const {
        return ell == 1 ? ModuleTag::ZG() : ModuleTag::aug_power_tensor_zg(ell);
    }
    ModuleTag M() const { return ell == 1 ? ModuleTag::Z() : ModuleTag::aug_power(ell - 1); }

    ModuleElement project(const ModuleElement& l) const;  // L -> M
    ModuleElement include(const ModuleElement& k) const;  // K -> L (validates)
    ModuleElement section(const ModuleElement& m) const;  // M -> L, project . section = id
};

/// snake-lemma connecting homomorphism on cellular cochains: lift through the
/// section on generators, take the coboundary, land in K
CellCochain connecting_cohomology(const CellCochain& c, const ShortExactSeq& s);

/// same construction on evaluator-backed bar cochains; membership in K is
/// validated on the supplied generators
BarCochain connecting_cohomology(const BarCochain& c, const ShortExactSeq& s,
                                 const std::vector<BarTuple>& check_gens);

/// snake-lemma connecting homomorphism on invariant chains: lift the orbit
/// coefficients through the section, take the twisted boundary, land in K
InvariantChain connecting_homology(const InvariantChain& z, const ShortExactSeq& s);

/// lift of an invariant chain through the section (the intermediate chain of
/// the snake construction; not a cycle in general)
InvariantChain section_lift(const InvariantChain& z, const ShortExactSeq& s);

} // namespace lipcoh
