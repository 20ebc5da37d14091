#include "lipcoh/module_element.hpp"

#include <sstream>

namespace lipcoh {

std::string ModuleTag::name() const {
    if (order == 0) return "Z";
    if (order == 1 && aug_slots == 0) return "ZG";
    if (aug_slots == order) return order == 1 ? "I" : "I^(x" + std::to_string(order) + ")";
    std::string base = aug_slots == 1 ? "I" : "I^(x" + std::to_string(aug_slots) + ")";
    return base + "(x)ZG";
}

ModuleElement diagonal_act(const GroupElement& g, const ModuleElement& t) {
    return t.translated(g);
}

ModuleTag tensor(const ModuleTag& a, const ModuleTag& b) {
    // only shapes with all aug slots leading stay expressible; that is every
    // tensor the engine forms (L (x) M with M = Z, or I-powers on the left)
    if (a.aug_slots < a.order && b.order > 0 && b.aug_slots > 0)
        throw ValidationError("tensor of module tags would interleave aug slots");
    return {a.order + b.order, a.aug_slots + (a.aug_slots == a.order ? b.aug_slots : 0)};
}

ModuleElement ModuleElement::from_int(const Int& n) {
    ModuleElement x(0);
    x.add_term({}, n);
    return x;
}

ModuleElement ModuleElement::from_ring(const GroupRingElement& r) {
    ModuleElement x(1);
    for (const auto& [g, c] : r.terms()) x.add_term({g}, c);
    return x;
}

ModuleElement ModuleElement::elementary(const std::vector<GroupRingElement>& factors) {
    ModuleElement x(static_cast<int>(factors.size()));
    if (factors.empty()) {
        x.add_term({}, 1);
        return x;
    }
    // multilinear expansion
    std::vector<std::pair<Key, Int>> acc = {{Key{}, Int(1)}};
    for (const auto& f : factors) {
        std::vector<std::pair<Key, Int>> next;
        for (const auto& [key, c] : acc) {
            for (const auto& [g, cg] : f.terms()) {
                Key k = key;
                k.push_back(g);
                next.emplace_back(std::move(k), c * cg);
            }
        }
        acc = std::move(next);
    }
    for (auto& [k, c] : acc) x.add_term(k, c);
    return x;
}

void ModuleElement::add_term(const Key& k, const Int& c) {
    if (c == 0) return;
    if (static_cast<int>(k.size()) != order_)
        throw ValidationError("tensor key arity does not match module order");
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& o) {
    if (order_ != o.order_) throw ValidationError("adding module elements of different orders");
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

ModuleElement& ModuleElement::operator-=(const ModuleElement& o) {
    if (order_ != o.order_) throw ValidationError("subtracting module elements of different orders");
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

ModuleElement ModuleElement::operator-() const {
    ModuleElement out(order_);
    for (const auto& [k, c] : terms_) out.terms_[k] = -c;
    return out;
}

ModuleElement operator*(const Int& c, const ModuleElement& x) {
    ModuleElement out(x.order_);
    if (c == 0) return out;
    for (const auto& [k, v] : x.terms_) out.terms_[k] = c * v;
    return out;
}

ModuleElement ModuleElement::translated(const GroupElement& g) const {
    ModuleElement out(order_);
    for (const auto& [k, c] : terms_) {
        Key nk;
        nk.reserve(k.size());
        for (const auto& h : k) nk.push_back(mul(g, h));
        out.terms_[std::move(nk)] = c;
    }
    return out;
}

ModuleElement ModuleElement::acted(const GroupRingElement& r) const {
    ModuleElement out(order_);
    for (const auto& [g, c] : r.terms()) out += c * translated(g);
    return out;
}

ModuleElement tensor(const ModuleElement& a, const ModuleElement& b) {
    ModuleElement out(a.order_ + b.order_);
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            ModuleElement::Key k = ka;
            k.insert(k.end(), kb.begin(), kb.end());
            out.add_term(k, ca * cb);
        }
    return out;
}

ModuleElement ModuleElement::contract_augmentation(int slot) const {
    if (slot < 0 || slot >= order_) throw ValidationError("contraction slot out of range");
    ModuleElement out(order_ - 1);
    for (const auto& [k, c] : terms_) {
        Key nk;
        nk.reserve(k.size() - 1);
        for (int i = 0; i < order_; ++i)
            if (i != slot) nk.push_back(k[i]);
        out.add_term(nk, c);
    }
    return out;
}

bool ModuleElement::in_aug_power(int aug_slots) const {
    for (int s = 0; s < aug_slots; ++s)
        if (!contract_augmentation(s).is_zero()) return false;
    return true;
}

std::vector<Int> ModuleElement::abelianized_image(const GroupSpec& spec) const {
    if (order_ != 1) throw ValidationError("abelianized image requires an order-1 element");
    std::vector<Int> v(spec.rank, 0);
    for (const auto& [k, c] : terms_) {
        auto ab = k[0].abelianized();
        for (int i = 0; i < spec.rank; ++i) v[i] += c * ab[i];
    }
    return v;
}

GroupRingElement ModuleElement::as_ring() const {
    if (order_ != 1) throw ValidationError("as_ring requires an order-1 element");
    GroupRingElement r;
    for (const auto& [k, c] : terms_) r.add_term(k[0], c);
    return r;
}

Int ModuleElement::as_int() const {
    if (order_ != 0) throw ValidationError("as_int requires an order-0 element");
    return terms_.empty() ? Int(0) : terms_.begin()->second;
}

ModuleElement ModuleElement::append_factor(const GroupElement& g) const {
    ModuleElement out(order_ + 1);
    for (const auto& [k, c] : terms_) {
        Key nk = k;
        nk.push_back(g);
        out.terms_[std::move(nk)] = c;
    }
    return out;
}

std::strong_ordering ModuleElement::operator<=>(const ModuleElement& o) const {
    if (auto c = order_ <=> o.order_; c != 0) return c;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end() && jt != o.terms_.end(); ++it, ++jt) {
        if (it->first < jt->first) return std::strong_ordering::less;
        if (jt->first < it->first) return std::strong_ordering::greater;
        if (it->second < jt->second) return std::strong_ordering::less;
        if (it->second > jt->second) return std::strong_ordering::greater;
    }
    if (it != terms_.end()) return std::strong_ordering::greater;
    if (jt != o.terms_.end()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

std::string ModuleElement::to_string(const GroupSpec& spec) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (c > 0 && !first) out << "+";
        if (c == -1 && !k.empty())
            out << "-";
        else if (c != 1 || k.empty())
            out << c << (k.empty() ? "" : "*");
        for (std::size_t i = 0; i < k.size(); ++i) {
            if (i) out << "(x)";
            out << k[i].to_string(spec);
        }
        first = false;
    }
    return out.str();
}

} // namespace lipcoh
