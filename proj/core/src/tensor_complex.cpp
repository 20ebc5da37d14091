#include "lipcoh/tensor_complex.hpp"

namespace lipcoh {

void TensorChain::add(const TensorKey& key, const GroupRingElement& coeff) {
    if (coeff.is_zero()) return;
    if (key.p < 0 || key.p > complex_.C->top_degree() || degree_ - key.p < 0 ||
        degree_ - key.p > complex_.D->top_degree())
        throw ValidationError("tensor key degree out of range");
    if (key.i < 0 || key.i >= complex_.C->rank(key.p) || key.j < 0 ||
        key.j >= complex_.D->rank(degree_ - key.p))
        throw ValidationError("tensor key index out of range");
    auto [it, fresh] = terms_.try_emplace(key, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

namespace {

// boundary of a single basis symbol a_i (x) g b_j, canonicalized back to the
// (i, j, g) basis with diagonal ZG coefficients
TensorChain basis_boundary(const TensorComplex& cx, int degree, const TensorKey& key) {
    TensorChain out(cx, degree - 1);
    const int q = degree - key.p;
    if (key.p >= 1) {
        const ZGMatrix& dC = cx.C->differentials[key.p];
        for (int row = 0; row < cx.C->rank(key.p - 1); ++row) {
            const GroupRingElement& r = dC[row][key.i];
            for (const auto& [gamma, m] : r.terms()) {
                // (gamma a_row) (x) g b_j = gamma . (a_row (x) gamma^{-1} g b_j)
                TensorKey k{key.p - 1, row, key.j, mul(inverse(gamma), key.g)};
                out.add(k, GroupRingElement(gamma, m));
            }
        }
    }
    if (q >= 1) {
        const ZGMatrix& dD = cx.D->differentials[q];
        int sign = (key.p % 2 == 0) ? 1 : -1;
        for (int row = 0; row < cx.D->rank(q - 1); ++row) {
            const GroupRingElement& s = dD[row][key.j];
            for (const auto& [delta, m] : s.terms()) {
                TensorKey k{key.p, key.i, row, mul(key.g, delta)};
                out.add(k, GroupRingElement(GroupElement::identity(cx.C->spec), sign * m));
            }
        }
    }
    return out;
}

} // namespace

TensorChain TensorChain::boundary() const {
    if (degree_ < 1) throw ValidationError("tensor boundary requires degree >= 1");
    TensorChain out(complex_, degree_ - 1);
    for (const auto& [key, coeff] : terms_) {
        TensorChain b = basis_boundary(complex_, degree_, key);
        out += b.acted(coeff);
    }
    return out;
}

TensorChain TensorChain::acted(const GroupRingElement& r) const {
    TensorChain out(complex_, degree_);
    for (const auto& [key, coeff] : terms_) {
        GroupRingElement c = r * coeff;
        if (!c.is_zero()) out.add(key, c);
    }
    return out;
}

TensorChain& TensorChain::operator+=(const TensorChain& o) {
    if (degree_ != o.degree_) throw ValidationError("adding tensor chains of different degrees");
    for (const auto& [key, coeff] : o.terms_) add(key, coeff);
    return *this;
}

TensorChain TensorChain::trivialized() const {
    TensorChain out(complex_, degree_);
    const GroupElement e = GroupElement::identity(complex_.C->spec);
    for (const auto& [key, coeff] : terms_) {
        Int n = augmentation(coeff);
        if (n != 0) out.add(key, GroupRingElement(e, n));
    }
    return out;
}

ModuleElement TensorCochain::eval(const TensorChain& chain) const {
    if (chain.degree() != degree_) throw ValidationError("tensor evaluation degree mismatch");
    ModuleElement acc = ModuleElement::zero(tag_.order);
    for (const auto& [key, coeff] : chain.terms()) acc += eval_(key).acted(coeff);
    return acc;
}

TensorCochain TensorCochain::delta() const {
    TensorCochain self = *this;
    return TensorCochain(complex_, degree_ + 1, tag_, [self](const TensorKey& key) {
        TensorChain b = basis_boundary(self.complex(), self.degree() + 1, key);
        return self.eval(b);
    });
}

TensorCochain TensorCochain::operator-(const TensorCochain& o) const {
    if (degree_ != o.degree_ || !(tag_ == o.tag_))
        throw ValidationError("subtracting incompatible tensor cochains");
    TensorCochain a = *this, b = o;
    return TensorCochain(complex_, degree_, tag_,
                         [a, b](const TensorKey& k) { return a.eval_basis(k) - b.eval_basis(k); });
}

TensorCochain cup_product(const CellCochain& u, const CellCochain& v) {
    TensorComplex cx{u.complex(), v.complex()};
    int degree = u.degree() + v.degree();
    ModuleTag tag = tensor(u.tag(), v.tag());
    CellCochain uu = u, vv = v;
    return TensorCochain(cx, degree, tag, [uu, vv](const TensorKey& key) {
        if (key.p != uu.degree()) return ModuleElement::zero(uu.tag().order + vv.tag().order);
        return tensor(uu.value(key.i), vv.value(key.j).translated(key.g));
    });
}

std::vector<std::vector<TensorChain>> cubical_diagonal(std::shared_ptr<const FreeZGComplex> koszul) {
    const GroupSpec& spec = koszul->spec;
    if (spec.family != GroupFamily::FreeAbelian)
        throw ConfigError("cubical diagonal requires the cubical resolution of Z^d");
    const int d = spec.rank;
    TensorComplex cx{koszul, koszul};

    // rebuild the subset enumeration used by koszul_resolution
    std::vector<std::vector<std::vector<int>>> subsets(d + 1);
    {
        std::vector<int> cur;
        auto rec = [&](auto&& self, int start) -> void {
            subsets[cur.size()].push_back(cur);
            for (int i = start; i < d; ++i) {
                cur.push_back(i);
                self(self, i + 1);
                cur.pop_back();
            }
        };
        rec(rec, 0);
    }
    auto index_of = [&](const std::vector<int>& s) {
        const auto& list = subsets[s.size()];
        for (std::size_t i = 0; i < list.size(); ++i)
            if (list[i] == s) return static_cast<int>(i);
        throw ValidationError("subset lookup failed");
    };

    std::vector<std::vector<TensorChain>> out(koszul->top_degree() + 1);
    for (int k = 0; k <= koszul->top_degree(); ++k) {
        for (const auto& S : subsets[k]) {
            TensorChain image(cx, k);
            const int m = static_cast<int>(S.size());
            for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
                std::vector<int> A, B;
                for (int t = 0; t < m; ++t)
                    (mask & (1u << t) ? A : B).push_back(S[t]);
                int sign = 1;
                for (int a : A)
                    for (int b : B)
                        if (a > b) sign = -sign;
                GroupElement tA = GroupElement::identity(spec);
                for (int a : A) tA = mul(tA, GroupElement::generator(spec, a));
                TensorKey key{static_cast<int>(A.size()), index_of(A), index_of(B), tA};
                image.add(key, GroupRingElement(GroupElement::identity(spec), sign));
            }
            out[k].push_back(std::move(image));
        }
    }
    return out;
}

} // namespace lipcoh
