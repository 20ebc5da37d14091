#include "lipcoh/param_space.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "lipcoh/int_matrix.hpp"

namespace lipcoh {

std::vector<std::int64_t> mask_offset(std::uint32_t mask, int dim) {
    std::vector<std::int64_t> v(dim, 0);
    for (int i = 0; i < dim; ++i)
        if (mask & (1u << i)) v[i] = 1;
    return v;
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

// all flags of one factor, every dimension, deterministic order
std::vector<KuhnFlag> enumerate_flags(int dim) {
    std::vector<KuhnFlag> out;
    std::uint32_t full = (dim >= 31) ? 0x7fffffffu : ((1u << dim) - 1);
    KuhnFlag current;
    auto rec = [&](auto&& self, std::uint32_t last) -> void {
        out.push_back(current);
        for (std::uint32_t next = 1; next <= full; ++next) {
            if (last != 0 && ((last & next) != last || next == last)) continue;
            current.sets.push_back(next);
            self(self, next);
            current.sets.pop_back();
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(), [](const KuhnFlag& a, const KuhnFlag& b) {
        if (a.dim() != b.dim()) return a.dim() < b.dim();
        return a.sets < b.sets;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

ParamSpace::ParamSpace(GroupSpec spec, std::vector<KuhnFactor> factors, int line_factors)
    : spec_(std::move(spec)), factors_(std::move(factors)), lines_(line_factors) {
    if (lines_ < 0) throw ConfigError("negative line factor count");
    factor_offset_.resize(factors_.size());
    for (std::size_t f = 0; f < factors_.size(); ++f) {
        if (factors_[f].dim < 1 || factors_[f].dim > 20)
            throw ConfigError("Kuhn factor dimension out of range");
        if (static_cast<int>(factors_[f].rho.size()) != factors_[f].dim)
            throw ConfigError("rho row count must equal the factor dimension");
        for (const auto& row : factors_[f].rho)
            if (static_cast<int>(row.size()) != spec_.rank)
                throw ConfigError("rho column count must equal the generator count");
        factor_offset_[f] = lattice_dim_;
        lattice_dim_ += factors_[f].dim;
    }
    build_lattice();
    build_cells();
}

int ParamSpace::top_degree() const {
    int d = lines_;
    for (const auto& f : factors_) d += f.dim;
    return d;
}

void ParamSpace::build_lattice() {
    const int M = lattice_dim_;
    const int n = spec_.rank;

    IntMatrix rho(M, n);
    for (std::size_t f = 0; f < factors_.size(); ++f)
        for (int i = 0; i < factors_[f].dim; ++i)
            for (int j = 0; j < n; ++j) rho.at(factor_offset_[f] + i, j) = factors_[f].rho[i][j];

    if (matrix_rank(rho) != M)
        throw ConfigError("translation lattice does not have finite index; quotient is out of range");

    // column-style Hermite reduction; the resulting basis columns are lower
    // triangular with positive diagonal
    std::vector<std::vector<std::int64_t>> cols(n, std::vector<std::int64_t>(M));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < M; ++i) cols[j][i] = static_cast<std::int64_t>(rho.at(i, j));

    for (int row = 0; row < M; ++row) {
        for (;;) {
            int best = -1;
            for (int j = row; j < static_cast<int>(cols.size()); ++j) {
                if (cols[j][row] == 0) continue;
                if (best < 0 || std::llabs(cols[j][row]) < std::llabs(cols[best][row])) best = j;
            }
            if (best < 0) throw ConfigError("lattice rank collapsed during reduction");
            std::swap(cols[row], cols[best]);
            bool clean = true;
            for (int j = row + 1; j < static_cast<int>(cols.size()); ++j) {
                if (cols[j][row] == 0) continue;
                std::int64_t q = cols[j][row] / cols[row][row];
                for (int i = 0; i < M; ++i) cols[j][i] -= q * cols[row][i];
                if (cols[j][row] != 0) clean = false;
            }
            if (clean) break;
        }
        if (cols[row][row] < 0)
            for (int i = 0; i < M; ++i) cols[row][i] = -cols[row][i];
    }
    hnf_.assign(cols.begin(), cols.begin() + M);

    index_ = 1;
    for (int i = 0; i < M; ++i) index_ *= hnf_[i][i];
    if (index_ > 4096) throw ResourceError("quotient index too large: " + index_.str());

    {
        std::vector<std::int64_t> v(M, 0);
        auto rec = [&](auto&& self, int i) -> void {
            if (i == M) {
                residues_.push_back(canonical_residue(v));
                return;
            }
            for (std::int64_t x = 0; x < hnf_[i][i]; ++x) {
                v[i] = x;
                self(self, i + 1);
            }
            v[i] = 0;
        };
        rec(rec, 0);
    }
    std::sort(residues_.begin(), residues_.end());
    residues_.erase(std::unique(residues_.begin(), residues_.end()), residues_.end());
    if (Int(static_cast<long long>(residues_.size())) != index_)
        throw ValidationError("residue enumeration disagrees with the lattice index");

    // cell stabilizer = ker(rho . ab); exact basis for abelian groups, a
    // generating sample (lattice kernel words plus a commutator) for free ones
    for (const auto& k : integer_kernel(rho)) {
        std::vector<std::int64_t> exps;
        exps.reserve(k.size());
        for (const auto& x : k) exps.push_back(static_cast<std::int64_t>(x));
        if (spec_.family == GroupFamily::FreeAbelian) {
            stabilizer_.push_back(GroupElement::from_exponents(spec_, exps));
        } else {
            GroupElement w = GroupElement::identity(spec_);
            for (int i = 0; i < spec_.rank; ++i)
                w = mul(w, GroupElement::generator(spec_, i, static_cast<int>(exps[i])));
            stabilizer_.push_back(w);
        }
    }
    if (spec_.family == GroupFamily::Free && spec_.rank >= 2) {
        GroupElement a = GroupElement::generator(spec_, 0);
        GroupElement b = GroupElement::generator(spec_, 1);
        stabilizer_.push_back(mul(mul(a, b), mul(inverse(a), inverse(b))));
    }
}

std::vector<std::int64_t> ParamSpace::canonical_residue(std::vector<std::int64_t> v) const {
    const int M = lattice_dim_;
    if (static_cast<int>(v.size()) != M) throw ValidationError("residue dimension mismatch");
    for (int i = 0; i < M; ++i) {
        std::int64_t q = floor_div(v[i], hnf_[i][i]);
        if (q == 0) continue;
        for (int k = i; k < M; ++k) v[k] -= q * hnf_[i][k]; // column i vanishes before row i
    }
    return v;
}

bool ParamSpace::in_lattice(const std::vector<std::int64_t>& u) const {
    auto r = canonical_residue(u);
    return std::all_of(r.begin(), r.end(), [](std::int64_t x) { return x == 0; });
}

std::vector<std::int64_t> ParamSpace::translation_of(const GroupElement& g) const {
    auto ab = g.abelianized();
    std::vector<std::int64_t> v(lattice_dim_, 0);
    for (std::size_t f = 0; f < factors_.size(); ++f)
        for (int i = 0; i < factors_[f].dim; ++i) {
            std::int64_t acc = 0;
            for (int j = 0; j < spec_.rank; ++j) acc += factors_[f].rho[i][j] * ab[j];
            v[factor_offset_[f] + i] = acc;
        }
    return v;
}

GroupElement ParamSpace::lattice_preimage(const std::vector<std::int64_t>& u) const {
    {
        std::lock_guard<std::mutex> lock(preimage_mutex_);
        auto it = preimage_cache_.find(u);
        if (it != preimage_cache_.end()) return it->second;
    }
    const int M = lattice_dim_;
    IntMatrix rho(M, spec_.rank);
    for (std::size_t f = 0; f < factors_.size(); ++f)
        for (int i = 0; i < factors_[f].dim; ++i)
            for (int j = 0; j < spec_.rank; ++j)
                rho.at(factor_offset_[f] + i, j) = factors_[f].rho[i][j];
    std::vector<Int> b(u.begin(), u.end());
    auto part = solve_integer(rho, b);
    if (!part) throw ValidationError("translation vector is not in the lattice");
    auto kernel = integer_kernel(rho);

    auto l1 = [](const std::vector<Int>& x) {
        Int s = 0;
        for (const auto& v : x) s += int_abs(v);
        return s;
    };

    std::vector<Int> best = *part;
    if (!kernel.empty()) {
        long long B = 4;
        {
            Int n0 = l1(*part);
            if (n0 < 32) B = std::max<long long>(B, static_cast<long long>(n0) + 2);
        }
        std::vector<long long> c(kernel.size(), -B);
        for (;;) {
            std::vector<Int> x = *part;
            for (std::size_t k = 0; k < kernel.size(); ++k)
                for (std::size_t i = 0; i < x.size(); ++i) x[i] += Int(c[k]) * kernel[k][i];
            if (l1(x) < l1(best) || (l1(x) == l1(best) && x < best)) best = x;
            std::size_t k = 0;
            while (k < c.size() && c[k] == B) c[k++] = -B;
            if (k == c.size()) break;
            ++c[k];
        }
    }

    std::vector<std::int64_t> exps;
    exps.reserve(best.size());
    for (const auto& x : best) exps.push_back(static_cast<std::int64_t>(x));
    GroupElement result;
    if (spec_.family == GroupFamily::FreeAbelian) {
        result = GroupElement::from_exponents(spec_, exps);
    } else {
        result = GroupElement::identity(spec_);
        for (int i = 0; i < spec_.rank; ++i)
            result = mul(result, GroupElement::generator(spec_, i, static_cast<int>(exps[i])));
    }
    {
        std::lock_guard<std::mutex> lock(preimage_mutex_);
        preimage_cache_.emplace(u, result);
    }
    return result;
}

void ParamSpace::build_cells() {
    flags_by_dim_.resize(factors_.size());
    for (std::size_t f = 0; f < factors_.size(); ++f)
        flags_by_dim_[f] = enumerate_flags(factors_[f].dim);

    const int top = top_degree();
    cells_.resize(top + 1);
    cell_index_.resize(top + 1);

    std::vector<KuhnFlag> current(factors_.size());
    auto rec = [&](auto&& self, std::size_t f, int dim_so_far) -> void {
        if (f == factors_.size()) {
            int degree = dim_so_far + lines_;
            for (const auto& r : residues_) {
                ParamCellRef cell{current, r};
                cell_index_[degree].emplace(cell, static_cast<int>(cells_[degree].size()));
                cells_[degree].push_back(std::move(cell));
            }
            return;
        }
        for (const auto& flag : flags_by_dim_[f]) {
            current[f] = flag;
            self(self, f + 1, dim_so_far + flag.dim());
        }
        current[f] = KuhnFlag{};
    };
    rec(rec, 0, 0);

    auto cx = std::make_shared<OrbitCellComplex>();
    cx->spec = spec_;
    cx->cells.resize(top + 1);
    for (int degree = 0; degree <= top; ++degree) {
        for (const auto& cell : cells_[degree]) {
            OrbitCell oc;
            {
                std::ostringstream id;
                if (cell.flags.empty() && cell.residue.empty()) id << "pt";
                for (std::size_t f = 0; f < cell.flags.size(); ++f) {
                    if (f) id << "|";
                    id << "f" << f << ":";
                    if (cell.flags[f].sets.empty()) id << ".";
                    for (std::size_t s = 0; s < cell.flags[f].sets.size(); ++s) {
                        if (s) id << "<";
                        id << cell.flags[f].sets[s];
                    }
                }
                if (!cell.residue.empty()) {
                    id << "@";
                    for (std::size_t i = 0; i < cell.residue.size(); ++i) {
                        if (i) id << ".";
                        id << cell.residue[i];
                    }
                }
                if (lines_ > 0) id << "#L" << lines_;
                oc.id = id.str();
            }
            oc.stabilizer_gens = stabilizer_;
            if (degree >= 1 + lines_ || (degree >= 1 && lines_ == 0)) {
                int sign_prefix = 1;
                for (std::size_t f = 0; f < factors_.size(); ++f) {
                    const KuhnFlag& flag = cell.flags[f];
                    const int d = flag.dim();
                    for (int p = 0; p <= d && d > 0; ++p) {
                        KuhnFlag face_flag;
                        std::vector<std::int64_t> offset(lattice_dim_, 0);
                        if (p == 0) {
                            std::uint32_t b1 = flag.sets[0];
                            for (std::size_t s = 1; s < flag.sets.size(); ++s)
                                face_flag.sets.push_back(flag.sets[s] & ~b1);
                            auto off = mask_offset(b1, factors_[f].dim);
                            for (int i = 0; i < factors_[f].dim; ++i)
                                offset[factor_offset_[f] + i] = off[i];
                        } else {
                            for (int s = 0; s < d; ++s)
                                if (s != p - 1) face_flag.sets.push_back(flag.sets[s]);
                        }
                        ParamCellRef face;
                        face.flags = cell.flags;
                        face.flags[f] = face_flag;
                        std::vector<std::int64_t> base(cell.residue);
                        for (int i = 0; i < lattice_dim_; ++i) base[i] += offset[i];
                        face.residue = canonical_residue(base);
                        std::vector<std::int64_t> u(lattice_dim_);
                        for (int i = 0; i < lattice_dim_; ++i) u[i] = base[i] - face.residue[i];

                        OrbitCell::Face entry;
                        entry.orbit = cell_index_[degree - 1].at(face);
                        entry.translate = lattice_preimage(u);
                        entry.sign = sign_prefix * ((p % 2 == 0) ? 1 : -1);
                        oc.faces.push_back(std::move(entry));
                    }
                    if (d % 2 == 1) sign_prefix = -sign_prefix;
                }
            }
            cx->cells[degree].push_back(std::move(oc));
        }
    }
    cx->validate();
    complex_ = std::move(cx);
}

int ParamSpace::orbit_index(int degree, const ParamCellRef& cell) const {
    if (degree < 0 || degree > top_degree()) throw ValidationError("orbit degree out of range");
    auto it = cell_index_[degree].find(cell);
    if (it == cell_index_[degree].end()) throw ValidationError("unknown orbit cell");
    return it->second;
}

const ParamCellRef& ParamSpace::orbit_cell(int degree, int idx) const {
    return cells_[degree][idx];
}

InvariantChain ParamSpace::zero_chain(int degree, ModuleTag tag) const {
    return InvariantChain{complex_, degree, tag, {}};
}

InvariantChain ParamSpace::fundamental_cycle() const {
    InvariantChain z = zero_chain(top_degree(), ModuleTag::Z());
    for (std::size_t idx = 0; idx < cells_[top_degree()].size(); ++idx) {
        const ParamCellRef& cell = cells_[top_degree()][idx];
        int sign = 1;
        for (std::size_t f = 0; f < factors_.size(); ++f) {
            // parity of the coordinate insertion order along the full flag
            const KuhnFlag& flag = cell.flags[f];
            std::vector<int> order;
            std::uint32_t prev = 0;
            for (std::uint32_t s : flag.sets) {
                std::uint32_t fresh = s & ~prev;
                for (int i = 0; i < factors_[f].dim; ++i)
                    if (fresh & (1u << i)) order.push_back(i);
                prev = s;
            }
            for (std::size_t i = 0; i < order.size(); ++i)
                for (std::size_t j = i + 1; j < order.size(); ++j)
                    if (order[i] > order[j]) sign = -sign;
        }
        z.set(static_cast<int>(idx), ModuleElement::from_int(sign));
    }
    return z;
}

InvariantChain ParamSpace::generator_cycle(int factor, int coordinate) const {
    if (factor < 0 || factor >= static_cast<int>(factors_.size()))
        throw ConfigError("generator cycle factor out of range");
    if (coordinate < 0 || coordinate >= factors_[factor].dim)
        throw ConfigError("generator cycle coordinate out of range");
    InvariantChain z = zero_chain(1 + lines_, ModuleTag::Z());
    KuhnFlag edge;
    edge.sets.push_back(1u << coordinate);
    for (const auto& r : residues_) {
        ParamCellRef cell;
        cell.flags.assign(factors_.size(), KuhnFlag{});
        cell.flags[factor] = edge;
        cell.residue = r;
        z.set(orbit_index(1 + lines_, cell), ModuleElement::from_int(1));
    }
    return z;
}

InvariantChain ParamSpace::vertex_chain() const {
    InvariantChain z = zero_chain(lines_, ModuleTag::Z());
    for (const auto& r : residues_) {
        ParamCellRef cell;
        cell.flags.assign(factors_.size(), KuhnFlag{});
        cell.residue = r;
        z.set(orbit_index(lines_, cell), ModuleElement::from_int(1));
    }
    return z;
}

} // namespace lipcoh
