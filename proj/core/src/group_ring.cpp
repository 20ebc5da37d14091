#include "lipcoh/group_ring.hpp"

#include <sstream>

namespace lipcoh {

GroupRingElement GroupRingElement::aug_gen(const GroupSpec& spec, const GroupElement& g) {
    GroupRingElement x(g);
    x.add_term(GroupElement::identity(spec), -1);
    return x;
}

void GroupRingElement::add_term(const GroupElement& g, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(g, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
    for (const auto& [g, c] : o.terms_) add_term(g, c);
    return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o) {
    for (const auto& [g, c] : o.terms_) add_term(g, -c);
    return *this;
}

GroupRingElement GroupRingElement::operator-() const {
    GroupRingElement out;
    for (const auto& [g, c] : terms_) out.terms_[g] = -c;
    return out;
}

GroupRingElement operator*(const Int& c, const GroupRingElement& x) {
    GroupRingElement out;
    if (c == 0) return out;
    for (const auto& [g, v] : x.terms_) out.terms_[g] = c * v;
    return out;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
    GroupRingElement out;
    for (const auto& [g, cg] : a.terms_)
        for (const auto& [h, ch] : b.terms_) out.add_term(mul(g, h), cg * ch);
    return out;
}

GroupRingElement GroupRingElement::translated(const GroupElement& g) const {
    GroupRingElement out;
    for (const auto& [h, c] : terms_) out.terms_[mul(g, h)] = c;
    return out;
}

std::strong_ordering GroupRingElement::operator<=>(const GroupRingElement& o) const {
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end() && jt != o.terms_.end(); ++it, ++jt) {
        if (auto c = it->first <=> jt->first; c != 0) return c;
        if (it->second < jt->second) return std::strong_ordering::less;
        if (it->second > jt->second) return std::strong_ordering::greater;
    }
    if (it != terms_.end()) return std::strong_ordering::greater;
    if (jt != o.terms_.end()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

std::string GroupRingElement::to_string(const GroupSpec& spec) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [g, c] : terms_) {
        if (c > 0 && !first) out << "+";
        if (c == -1)
            out << "-";
        else if (c != 1)
            out << c << "*";
        out << g.to_string(spec);
        first = false;
    }
    return out.str();
}

Int augmentation(const GroupRingElement& x) {
    Int s = 0;
    for (const auto& [g, c] : x.terms()) s += c;
    return s;
}

} // namespace lipcoh
