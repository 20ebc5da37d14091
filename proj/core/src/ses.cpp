#include "lipcoh/ses.hpp"

namespace lipcoh {

ShortExactSeq ShortExactSeq::augmentation_seq(const GroupSpec& spec, int ell) {
    if (ell < 1) throw ConfigError("sequence index must be >= 1");
    return ShortExactSeq{ell, spec, GroupElement::identity(spec)};
}

ShortExactSeq ShortExactSeq::with_section_base(const GroupSpec& spec, int ell, GroupElement base) {
    if (ell < 1) throw ConfigError("sequence index must be >= 1");
    return ShortExactSeq{ell, spec, std::move(base)};
}

ModuleElement ShortExactSeq::project(const ModuleElement& l) const {
    if (l.order() != ell) throw ValidationError("projection arity mismatch");
    return l.contract_augmentation(ell - 1);
}

ModuleElement ShortExactSeq::include(const ModuleElement& k) const {
    if (!k.satisfies(K())) throw ValidationError("element does not lie in " + K().name());
    return k;
}

ModuleElement ShortExactSeq::section(const ModuleElement& m) const {
    if (m.order() != ell - 1) throw ValidationError("section arity mismatch");
    return m.append_factor(section_base);
}

CellCochain connecting_cohomology(const CellCochain& c, const ShortExactSeq& s) {
    if (!(c.tag() == s.M()))
        throw ValidationError("cochain is not valued in the sequence quotient module");
    CellCochain lifted = c.mapped(s.L(), [&s](const ModuleElement& v) { return s.section(v); });
    return lifted.delta().reinterpret(s.K());
}

BarCochain connecting_cohomology(const BarCochain& c, const ShortExactSeq& s,
                                 const std::vector<BarTuple>& check_gens) {
    if (!(c.tag() == s.M()))
        throw ValidationError("cochain is not valued in the sequence quotient module");
    BarCochain lifted = c.lifted(s.L(), [s](const ModuleElement& v) { return s.section(v); });
    return lifted.delta().reinterpret(s.K(), check_gens);
}

InvariantChain section_lift(const InvariantChain& z, const ShortExactSeq& s) {
    if (!(z.tag == s.M()))
        throw ValidationError("chain is not valued in the sequence quotient module");
    return z.mapped(s.L(), [&s](const ModuleElement& v) { return s.section(v); });
}

InvariantChain connecting_homology(const InvariantChain& z, const ShortExactSeq& s) {
    InvariantChain lifted = section_lift(z, s);
    InvariantChain bd = invariant_boundary(lifted, /*validate=*/false);
    // land in K; for a cycle z this must hold exactly
    InvariantChain out{bd.complex, bd.degree, s.K(), {}};
    for (const auto& [orbit, v] : bd.coeffs) {
        if (!v.satisfies(s.K()))
            throw ValidationError("connecting image escapes " + s.K().name() +
                                  " (input was not a cycle?)");
        out.coeffs.emplace(orbit, v);
    }
    return out;
}

} // namespace lipcoh
