#include "lipcoh/homology.hpp"

namespace lipcoh {

void IntChainComplex::validate() const {
    if (differentials.size() != ranks.size())
        throw ValidationError("differential list does not match rank list");
    for (int k = 1; k <= top_degree(); ++k) {
        if (differentials[k].rows() != rank(k - 1) || differentials[k].cols() != rank(k))
            throw ValidationError("differential shape mismatch in degree " + std::to_string(k));
        if (k + 1 <= top_degree()) {
            IntMatrix prod = differentials[k] * differentials[k + 1];
            if (!prod.is_zero()) throw ValidationError("d.d != 0 in degree " + std::to_string(k + 1));
        }
    }
}

std::vector<HomologyGroup> homology(const IntChainComplex& c) {
    c.validate();
    int top = c.top_degree();
    std::vector<int> boundary_rank(top + 2, 0);
    std::vector<std::vector<Int>> factors(top + 2);
    for (int k = 1; k <= top; ++k) {
        SmithResult s = smith_normal_form(c.differentials[k]);
        boundary_rank[k] = s.rank;
        factors[k] = s.invariant_factors();
    }
    std::vector<HomologyGroup> h(top + 1);
    for (int k = 0; k <= top; ++k) {
        h[k].betti = c.rank(k) - boundary_rank[k] - boundary_rank[k + 1];
        for (const Int& f : factors[k + 1])
            if (f > 1) h[k].torsion.push_back(f);
    }
    return h;
}

} // namespace lipcoh
