#include "lipcoh/cochain.hpp"

namespace lipcoh {

CellCochain::CellCochain(std::shared_ptr<const FreeZGComplex> complex, int degree, ModuleTag tag,
                         std::vector<ModuleElement> values)
    : complex_(std::move(complex)), degree_(degree), tag_(tag), values_(std::move(values)) {
    if (degree_ < 0 || degree_ > complex_->top_degree())
        throw ValidationError("cochain degree out of range");
    if (static_cast<int>(values_.size()) != complex_->rank(degree_))
        throw ValidationError("cochain value count does not match the generator count");
    for (const auto& v : values_)
        if (v.order() != tag_.order) throw ValidationError("cochain value order mismatch");
}

CellCochain CellCochain::zero(std::shared_ptr<const FreeZGComplex> complex, int degree, ModuleTag tag) {
    std::vector<ModuleElement> vals(complex->rank(degree), ModuleElement::zero(tag.order));
    return CellCochain(std::move(complex), degree, tag, std::move(vals));
}

ModuleElement CellCochain::eval(const std::vector<GroupRingElement>& chain) const {
    if (static_cast<int>(chain.size()) != complex_->rank(degree_))
        throw ValidationError("chain size mismatch in cochain evaluation");
    ModuleElement acc = ModuleElement::zero(tag_.order);
    for (std::size_t i = 0; i < chain.size(); ++i)
        if (!chain[i].is_zero()) acc += values_[i].acted(chain[i]);
    return acc;
}

CellCochain CellCochain::delta() const {
    int k = degree_ + 1;
    if (k > complex_->top_degree()) {
        // the resolution is truncated above; the coboundary lives in degree k
        // which has no generators
        return CellCochain(complex_, degree_, tag_,
                           std::vector<ModuleElement>(complex_->rank(degree_),
                                                      ModuleElement::zero(tag_.order)));
    }
    std::vector<ModuleElement> vals;
    vals.reserve(complex_->rank(k));
    const ZGMatrix& d = complex_->differentials[k];
    for (int j = 0; j < complex_->rank(k); ++j) {
        ModuleElement acc = ModuleElement::zero(tag_.order);
        for (int i = 0; i < complex_->rank(degree_); ++i)
            if (!d[i][j].is_zero()) acc += values_[i].acted(d[i][j]);
        vals.push_back(std::move(acc));
    }
    return CellCochain(complex_, k, tag_, std::move(vals));
}

bool CellCochain::is_cocycle() const {
    if (degree_ + 1 > complex_->top_degree()) return true;
    for (const auto& v : delta().values())
        if (!v.is_zero()) return false;
    return true;
}

CellCochain CellCochain::operator+(const CellCochain& o) const {
    if (degree_ != o.degree_ || !(tag_ == o.tag_))
        throw ValidationError("adding incompatible cochains");
    std::vector<ModuleElement> vals = values_;
    for (std::size_t i = 0; i < vals.size(); ++i) vals[i] += o.values_[i];
    return CellCochain(complex_, degree_, tag_, std::move(vals));
}

CellCochain CellCochain::operator-(const CellCochain& o) const {
    if (degree_ != o.degree_ || !(tag_ == o.tag_))
        throw ValidationError("subtracting incompatible cochains");
    std::vector<ModuleElement> vals = values_;
    for (std::size_t i = 0; i < vals.size(); ++i) vals[i] -= o.values_[i];
    return CellCochain(complex_, degree_, tag_, std::move(vals));
}

CellCochain CellCochain::scaled(const Int& c) const {
    std::vector<ModuleElement> vals;
    vals.reserve(values_.size());
    for (const auto& v : values_) vals.push_back(c * v);
    return CellCochain(complex_, degree_, tag_, std::move(vals));
}

CellCochain CellCochain::mapped(ModuleTag target,
                                const std::function<ModuleElement(const ModuleElement&)>& f) const {
    std::vector<ModuleElement> vals;
    vals.reserve(values_.size());
    for (const auto& v : values_) vals.push_back(f(v));
    return CellCochain(complex_, degree_, target, std::move(vals));
}

CellCochain CellCochain::reinterpret(ModuleTag target) const {
    if (target.order != tag_.order) throw ValidationError("reinterpret cannot change tensor order");
    for (const auto& v : values_)
        if (!v.satisfies(target))
            throw ValidationError("cochain value does not lie in " + target.name());
    return CellCochain(complex_, degree_, target, values_);
}

ModuleElement CellCochain::pairing(const std::vector<Int>& cycle) const {
    if (static_cast<int>(cycle.size()) != complex_->rank(degree_))
        throw ValidationError("pairing degree mismatch");
    ModuleElement acc = ModuleElement::zero(tag_.order);
    for (std::size_t i = 0; i < cycle.size(); ++i)
        if (cycle[i] != 0) acc += cycle[i] * values_[i];
    return acc;
}

CellCochain berstein_schwarz(std::shared_ptr<const FreeZGComplex> complex) {
    if (!complex->augmentation)
        throw ValidationError("Berstein-Schwarz construction requires augmentation data");
    const GroupSpec& spec = complex->spec;
    // u0(generator_i) = aug_i . e, a ZG-valued lift of the augmentation class
    std::vector<ModuleElement> lift;
    lift.reserve(complex->rank(0));
    for (int i = 0; i < complex->rank(0); ++i)
        lift.push_back(ModuleElement::from_ring(
            GroupRingElement(GroupElement::identity(spec), (*complex->augmentation)[i])));
    CellCochain u0(complex, 0, ModuleTag::ZG(), std::move(lift));
    CellCochain beta = u0.delta();
    return beta.reinterpret(ModuleTag::aug_power(1));
}

} // namespace lipcoh
