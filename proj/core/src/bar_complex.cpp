#include "lipcoh/bar_complex.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "lipcoh/int_matrix.hpp"

namespace lipcoh {

namespace {

// sorts in place, returns the parity of the sorting permutation
int sort_sign(BarTuple& v) {
    int sign = 1;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        std::size_t m = i;
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (v[j] < v[m]) m = j;
        if (m != i) {
            std::swap(v[i], v[m]);
            sign = -sign;
        }
    }
    return sign;
}

} // namespace

BarNormalization bar_normalize(const BarTuple& t) {
    BarNormalization out;
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j)
            if (t[i] == t[j]) {
                out.degenerate = true;
                return out;
            }

    BarTuple sorted = t;
    int sign0 = sort_sign(sorted);

    bool have = false;
    BarTuple best;
    GroupElement best_s;
    int best_sign = 1;
    for (const GroupElement& s : sorted) {
        GroupElement si = inverse(s);
        BarTuple cand;
        cand.reserve(sorted.size());
        for (const GroupElement& g : sorted) cand.push_back(mul(si, g));
        int s1 = sort_sign(cand);
        if (!have || std::lexicographical_compare(cand.begin(), cand.end(), best.begin(), best.end())) {
            have = true;
            best = cand;
            best_s = s;
            best_sign = s1;
        }
    }
    out.rep = std::move(best);
    out.translate = best_s;
    out.sign = sign0 * best_sign;
    return out;
}

bool bar_is_canonical(const BarTuple& t) {
    auto n = bar_normalize(t);
    return !n.degenerate && n.rep == t;
}

std::vector<std::pair<BarTuple, int>> bar_faces(const BarTuple& t) {
    std::vector<std::pair<BarTuple, int>> out;
    for (std::size_t i = 0; i < t.size(); ++i) {
        BarTuple face;
        face.reserve(t.size() - 1);
        for (std::size_t j = 0; j < t.size(); ++j)
            if (j != i) face.push_back(t[j]);
        out.emplace_back(std::move(face), (i % 2 == 0) ? 1 : -1);
    }
    return out;
}

std::vector<BarTuple> bar_generators(const GroupSpec& spec, int radius, int degree,
                                     std::uint64_t cap) {
    std::vector<GroupElement> b = ball(spec, radius, cap);
    // b is sorted and starts with e
    std::vector<BarTuple> out;
    BarTuple current{GroupElement::identity(spec)};
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (static_cast<int>(current.size()) == degree + 1) {
            if (bar_is_canonical(current)) out.push_back(current);
            return;
        }
        for (std::size_t i = start; i < b.size(); ++i) {
            current.push_back(b[i]);
            self(self, i + 1);
            current.pop_back();
        }
    };
    rec(rec, 1); // skip e itself (already the first vertex)
    return out;
}

std::string bar_tuple_to_string(const GroupSpec& spec, const BarTuple& t) {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) out << ",";
        out << t[i].to_string(spec);
    }
    out << "]";
    return out.str();
}

ModuleElement BarCochain::eval(const BarTuple& t) const {
    if (static_cast<int>(t.size()) != degree_ + 1) return ModuleElement::zero(tag_.order);
    BarNormalization n = bar_normalize(t);
    if (n.degenerate) return ModuleElement::zero(tag_.order);
    ModuleElement v = raw_(n.rep);
    v = v.translated(n.translate);
    return n.sign > 0 ? v : -v;
}

BarCochain BarCochain::delta() const {
    BarCochain self = *this;
    return BarCochain(spec_, degree_ + 1, tag_, [self](const BarTuple& t) {
        ModuleElement acc = ModuleElement::zero(self.tag().order);
        for (const auto& [face, sgn] : bar_faces(t)) {
            ModuleElement v = self.eval(face);
            acc += (sgn > 0) ? v : -v;
        }
        return acc;
    });
}

BarCochain BarCochain::operator+(const BarCochain& o) const {
    if (degree_ != o.degree_ || !(tag_ == o.tag_))
        throw ValidationError("adding incompatible bar cochains");
    BarCochain a = *this, b = o;
    return BarCochain(spec_, degree_, tag_,
                      [a, b](const BarTuple& t) { return a.raw_(t) + b.raw_(t); });
}

BarCochain BarCochain::operator-(const BarCochain& o) const {
    if (degree_ != o.degree_ || !(tag_ == o.tag_))
        throw ValidationError("subtracting incompatible bar cochains");
    BarCochain a = *this, b = o;
    return BarCochain(spec_, degree_, tag_,
                      [a, b](const BarTuple& t) { return a.raw_(t) - b.raw_(t); });
}

BarCochain BarCochain::scaled(const Int& c) const {
    BarCochain a = *this;
    Int cc = c;
    return BarCochain(spec_, degree_, tag_, [a, cc](const BarTuple& t) { return cc * a.raw_(t); });
}

BarCochain BarCochain::lifted(ModuleTag target,
                              std::function<ModuleElement(const ModuleElement&)> section) const {
    BarCochain a = *this;
    return BarCochain(spec_, degree_, target,
                      [a, section](const BarTuple& t) { return section(a.raw_(t)); });
}

BarCochain BarCochain::reinterpret(ModuleTag target, const std::vector<BarTuple>& check_gens) const {
    if (target.order != tag_.order)
        throw ValidationError("reinterpret cannot change tensor order");
    for (const auto& g : check_gens)
        if (!eval(g).satisfies(target))
            throw ValidationError("cochain value does not lie in " + target.name());
    BarCochain a = *this;
    return BarCochain(spec_, degree_, target, [a](const BarTuple& t) { return a.raw_(t); });
}

BarCochain BarCochain::memoized() const {
    auto cache = std::make_shared<std::map<BarTuple, ModuleElement>>();
    auto mtx = std::make_shared<std::mutex>();
    Raw inner = raw_;
    return BarCochain(spec_, degree_, tag_, [inner, cache, mtx](const BarTuple& t) {
        {
            std::lock_guard<std::mutex> lock(*mtx);
            auto it = cache->find(t);
            if (it != cache->end()) return it->second;
        }
        ModuleElement v = inner(t);
        std::lock_guard<std::mutex> lock(*mtx);
        return cache->emplace(t, std::move(v)).first->second;
    });
}

BarCochain BarCochain::constant(const GroupSpec& spec, const Int& value) {
    Int v = value;
    return BarCochain(spec, 0, ModuleTag::Z(),
                      [v](const BarTuple&) { return ModuleElement::from_int(v); });
}

BarCochain BarCochain::berstein_schwarz(const GroupSpec& spec) {
    return BarCochain(spec, 1, ModuleTag::aug_power(1), [](const BarTuple& t) {
        GroupRingElement r(t[1]);
        r.add_term(t[0], -1);
        return ModuleElement::from_ring(r);
    });
}

bool BarCochain::is_zero_on(const std::vector<BarTuple>& gens) const {
    return std::all_of(gens.begin(), gens.end(),
                       [&](const BarTuple& g) { return eval(g).is_zero(); });
}

ModuleElement bar_pairing(const BarCochain& c, const BarCycle& z) {
    if (c.degree() != z.degree) throw ValidationError("pairing degree mismatch");
    ModuleElement acc = ModuleElement::zero(c.tag().order);
    for (const auto& [t, coeff] : z.terms) acc += coeff * c.eval(t);
    return acc;
}

std::vector<BarCycle> bar_cycle_basis(const GroupSpec& spec, int radius, int degree,
                                      std::uint64_t cap) {
    std::vector<BarTuple> gens = bar_generators(spec, radius, degree, cap);
    if (degree == 0) {
        // every vertex orbit is a cycle; there is exactly one generator, [e]
        std::vector<BarCycle> out;
        for (const auto& g : gens) out.push_back(BarCycle{0, {{g, 1}}});
        return out;
    }
    // boundary matrix into the canonical reps of degree-1 faces
    std::map<BarTuple, int> face_index;
    std::vector<std::map<int, Int>> cols(gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j) {
        for (const auto& [face, sgn] : bar_faces(gens[j])) {
            BarNormalization n = bar_normalize(face);
            if (n.degenerate) continue;
            auto [it, fresh] = face_index.try_emplace(n.rep, static_cast<int>(face_index.size()));
            Int& slot = cols[j][it->second];
            slot += sgn * n.sign;
        }
    }
    IntMatrix m(static_cast<int>(face_index.size()), static_cast<int>(gens.size()));
    for (std::size_t j = 0; j < gens.size(); ++j)
        for (const auto& [row, v] : cols[j]) m.at(row, static_cast<int>(j)) = v;
    std::vector<BarCycle> out;
    for (const auto& v : integer_kernel(m)) {
        BarCycle z;
        z.degree = degree;
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (v[j] != 0) z.terms[gens[j]] = v[j];
        if (!z.terms.empty()) out.push_back(std::move(z));
    }
    return out;
}

} // namespace lipcoh
