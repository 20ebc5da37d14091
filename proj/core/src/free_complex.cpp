#include "lipcoh/free_complex.hpp"

#include <sstream>

namespace lipcoh {

void FreeZGComplex::validate() const {
    if (static_cast<int>(differentials.size()) != top_degree() + 1)
        throw ValidationError("differential list does not match rank list");
    for (int k = 1; k <= top_degree(); ++k) {
        const ZGMatrix& d = differentials[k];
        if (static_cast<int>(d.size()) != rank(k - 1))
            throw ValidationError("differential row count mismatch in degree " + std::to_string(k));
        for (const auto& row : d)
            if (static_cast<int>(row.size()) != rank(k))
                throw ValidationError("differential column count mismatch in degree " + std::to_string(k));
    }
    for (int k = 1; k + 1 <= top_degree(); ++k) {
        // (d_k . d_{k+1})[i][j] = sum_m d_k[i][m] * d_{k+1}[m][j]
        for (int i = 0; i < rank(k - 1); ++i)
            for (int j = 0; j < rank(k + 1); ++j) {
                GroupRingElement acc;
                for (int m = 0; m < rank(k); ++m)
                    acc += differentials[k][i][m] * differentials[k + 1][m][j];
                if (!acc.is_zero())
                    throw ValidationError("d.d != 0 at degree " + std::to_string(k + 1));
            }
    }
    if (augmentation) {
        if (static_cast<int>(augmentation->size()) != rank(0))
            throw ValidationError("augmentation size mismatch");
        if (top_degree() >= 1) {
            for (int j = 0; j < rank(1); ++j) {
                Int acc = 0;
                for (int i = 0; i < rank(0); ++i)
                    acc += (*augmentation)[i] * lipcoh::augmentation(differentials[1][i][j]);
                if (acc != 0) throw ValidationError("augmentation does not kill d_1");
            }
        }
    }
}

std::vector<GroupRingElement> FreeZGComplex::boundary(int k, const std::vector<GroupRingElement>& chain) const {
    if (k < 1 || k > top_degree()) throw ValidationError("boundary degree out of range");
    if (static_cast<int>(chain.size()) != rank(k)) throw ValidationError("chain size mismatch");
    std::vector<GroupRingElement> out(rank(k - 1));
    for (int i = 0; i < rank(k - 1); ++i)
        for (int j = 0; j < rank(k); ++j)
            if (!chain[j].is_zero() && !differentials[k][i][j].is_zero())
                out[i] += differentials[k][i][j] * chain[j];
    return out;
}

IntMatrix FreeZGComplex::trivialized_differential(int k) const {
    IntMatrix m(rank(k - 1), rank(k));
    if (k < 1 || k > top_degree()) return m;
    for (int i = 0; i < rank(k - 1); ++i)
        for (int j = 0; j < rank(k); ++j) m.at(i, j) = lipcoh::augmentation(differentials[k][i][j]);
    return m;
}

std::vector<std::vector<Int>> FreeZGComplex::cycle_basis(int k) const {
    if (k == 0) {
        std::vector<std::vector<Int>> basis;
        for (int i = 0; i < rank(0); ++i) {
            std::vector<Int> v(rank(0), 0);
            v[i] = 1;
            basis.push_back(std::move(v));
        }
        return basis;
    }
    return integer_kernel(trivialized_differential(k));
}

FreeZGComplex koszul_resolution(const GroupSpec& spec) {
    if (spec.family != GroupFamily::FreeAbelian)
        throw ConfigError("cubical resolution requires a free abelian group");
    const int d = spec.rank;
    FreeZGComplex c;
    c.spec = spec;

    // generators in degree k: sorted k-subsets of {0..d-1}, enumerated in
    // lexicographic order; subset <-> bitmask index tables
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

    c.ranks.resize(d + 1);
    c.names.resize(d + 1);
    c.differentials.resize(d + 1);
    for (int k = 0; k <= d; ++k) {
        c.ranks[k] = static_cast<int>(subsets[k].size());
        for (const auto& s : subsets[k]) {
            std::ostringstream name;
            name << "e";
            if (s.empty()) name << "0";
            for (int i : s) name << "_" << spec.gen_names[i];
            c.names[k].push_back(name.str());
        }
    }
    for (int k = 1; k <= d; ++k) {
        ZGMatrix m(c.ranks[k - 1], std::vector<GroupRingElement>(c.ranks[k]));
        for (int j = 0; j < c.ranks[k]; ++j) {
            const auto& s = subsets[k][j];
            for (std::size_t pos = 0; pos < s.size(); ++pos) {
                std::vector<int> face = s;
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(pos));
                GroupRingElement coeff =
                    GroupRingElement::aug_gen(spec, GroupElement::generator(spec, s[pos]));
                if (pos % 2 == 1) coeff = -coeff;
                m[index_of(face)][j] += coeff;
            }
        }
        c.differentials[k] = std::move(m);
    }
    c.augmentation = std::vector<Int>{1};
    return c;
}

FreeZGComplex wedge_resolution(const GroupSpec& spec) {
    if (spec.family != GroupFamily::Free) throw ConfigError("wedge resolution requires a free group");
    FreeZGComplex c;
    c.spec = spec;
    c.ranks = {1, spec.rank};
    c.names.resize(2);
    c.names[0] = {"v"};
    c.differentials.resize(2);
    ZGMatrix m(1, std::vector<GroupRingElement>(spec.rank));
    for (int i = 0; i < spec.rank; ++i) {
        m[0][i] = GroupRingElement::aug_gen(spec, GroupElement::generator(spec, i));
        c.names[1].push_back("e_" + spec.gen_names[i]);
    }
    c.differentials[1] = std::move(m);
    c.augmentation = std::vector<Int>{1};
    return c;
}

FreeZGComplex cellular_resolution(const GroupSpec& spec) {
    return spec.family == GroupFamily::FreeAbelian ? koszul_resolution(spec) : wedge_resolution(spec);
}

} // namespace lipcoh
