#include "lipcoh/gamma_complex.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace lipcoh {

int OrbitCellComplex::orbit_by_id(int degree, const std::string& id) const {
    for (int i = 0; i < orbit_count(degree); ++i)
        if (cells[degree][i].id == id) return i;
    throw ValidationError("no orbit cell with id \"" + id + "\" in degree " + std::to_string(degree));
}

bool OrbitCellComplex::all_stabilizers_trivial() const {
    for (const auto& layer : cells)
        for (const auto& c : layer)
            for (const auto& g : c.stabilizer_gens)
                if (!g.is_identity()) return false;
    return true;
}

namespace {

// raw twisted boundary on orbit data, no stabilizer validation
std::map<int, ModuleElement> raw_boundary(const OrbitCellComplex& cx, int degree,
                                          const std::map<int, ModuleElement>& coeffs, int order) {
    std::map<int, ModuleElement> out;
    for (const auto& [orbit, lambda] : coeffs) {
        for (const auto& face : cx.cell(degree, orbit).faces) {
            ModuleElement contrib = lambda.translated(inverse(face.translate));
            if (face.sign < 0) contrib = -contrib;
            auto [it, fresh] = out.try_emplace(face.orbit, ModuleElement::zero(order));
            it->second += contrib;
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

} // namespace

void OrbitCellComplex::validate() const {
    for (int k = 2; k <= dimension(); ++k) {
        for (int orbit = 0; orbit < orbit_count(k); ++orbit) {
            std::map<int, ModuleElement> z{
                {orbit, ModuleElement::from_ring(GroupRingElement::unit(spec))}};
            auto d1 = raw_boundary(*this, k, z, 1);
            auto d2 = raw_boundary(*this, k - 1, d1, 1);
            if (!d2.empty())
                throw ValidationError("face-of-face inconsistency at degree " + std::to_string(k) +
                                      " cell " + cell(k, orbit).id);
        }
    }
}

IntChainComplex OrbitCellComplex::quotient_complex() const {
    if (!all_stabilizers_trivial())
        throw ValidationError("quotient complex requires a free action");
    IntChainComplex q;
    q.ranks.resize(dimension() + 1);
    q.differentials.resize(dimension() + 1);
    for (int k = 0; k <= dimension(); ++k) q.ranks[k] = orbit_count(k);
    for (int k = 1; k <= dimension(); ++k) {
        IntMatrix m(orbit_count(k - 1), orbit_count(k));
        for (int j = 0; j < orbit_count(k); ++j)
            for (const auto& face : cell(k, j).faces) m.at(face.orbit, j) += face.sign;
        q.differentials[k] = std::move(m);
    }
    return q;
}

void InvariantChain::set(int orbit, ModuleElement v) {
    if (v.order() != tag.order) throw ValidationError("coefficient order does not match module tag");
    if (v.is_zero())
        coeffs.erase(orbit);
    else
        coeffs[orbit] = std::move(v);
}

ModuleElement InvariantChain::coeff(int orbit) const {
    auto it = coeffs.find(orbit);
    return it == coeffs.end() ? ModuleElement::zero(tag.order) : it->second;
}

ModuleElement InvariantChain::instance_coeff(int orbit, const GroupElement& gamma) const {
    return coeff(orbit).translated(gamma);
}

void InvariantChain::validate() const {
    for (const auto& [orbit, lambda] : coeffs) {
        if (!lambda.satisfies(tag))
            throw ValidationError("coefficient outside " + tag.name() + " at orbit " +
                                  complex->cell(degree, orbit).id);
        for (const auto& s : complex->cell(degree, orbit).stabilizer_gens)
            if (!(lambda.translated(s) == lambda))
                throw ValidationError("stabilizer-noninvariant coefficient at orbit " +
                                      complex->cell(degree, orbit).id);
    }
}

InvariantChain& InvariantChain::operator+=(const InvariantChain& o) {
    if (degree != o.degree || !(tag == o.tag)) throw ValidationError("adding incompatible chains");
    for (const auto& [orbit, v] : o.coeffs) set(orbit, coeff(orbit) + v);
    return *this;
}

InvariantChain InvariantChain::operator-() const {
    InvariantChain out = *this;
    for (auto& [orbit, v] : out.coeffs) v = -v;
    return out;
}

InvariantChain operator*(const Int& c, const InvariantChain& z) {
    InvariantChain out{z.complex, z.degree, z.tag, {}};
    if (c == 0) return out;
    for (const auto& [orbit, v] : z.coeffs) out.coeffs[orbit] = c * v;
    return out;
}

InvariantChain InvariantChain::mapped(ModuleTag target,
                                      const std::function<ModuleElement(const ModuleElement&)>& f) const {
    InvariantChain out{complex, degree, target, {}};
    for (const auto& [orbit, v] : coeffs) out.set(orbit, f(v));
    return out;
}

InvariantChain invariant_boundary(const InvariantChain& z, bool validate) {
    if (z.degree < 1) throw ValidationError("boundary requires degree >= 1");
    if (validate) z.validate();
    InvariantChain out{z.complex, z.degree - 1, z.tag, {}};
    out.coeffs = raw_boundary(*z.complex, z.degree, z.coeffs, z.tag.order);
    return out;
}

GroupElement parse_element(const GroupSpec& spec, const std::string& text) {
    if (text.empty()) throw ConfigError("empty group word");
    if (text == "e" || text == "1") return GroupElement::identity(spec);
    GroupElement out = GroupElement::identity(spec);
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find('*', pos);
        std::string part = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        pos = next == std::string::npos ? text.size() : next + 1;
        if (part.empty()) throw ConfigError("malformed group word \"" + text + "\"");
        std::string name = part;
        long long exp = 1;
        if (auto caret = part.find('^'); caret != std::string::npos) {
            name = part.substr(0, caret);
            exp = std::stoll(part.substr(caret + 1));
        }
        int idx = -1;
        for (int i = 0; i < spec.rank; ++i)
            if (spec.gen_names[i] == name) {
                idx = i;
                break;
            }
        if (idx < 0) throw ConfigError("unknown generator \"" + name + "\" in \"" + text + "\"");
        out = mul(out, GroupElement::generator(spec, idx, static_cast<int>(exp)));
    }
    return out;
}

OrbitCellComplex load_cell_complex(std::istream& in) {
    OrbitCellComplex cx;
    bool have_group = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        if (word == "group") {
            std::string g;
            ls >> g;
            cx.spec = GroupSpec::parse(g);
            have_group = true;
            continue;
        }
        if (word != "cell")
            throw ConfigError("line " + std::to_string(lineno) + ": expected 'group' or 'cell'");
        if (!have_group) throw ConfigError("cell listed before group declaration");
        int degree;
        std::string id;
        if (!(ls >> degree >> id)) throw ConfigError("line " + std::to_string(lineno) + ": malformed cell");
        if (degree < 0) throw ConfigError("negative cell degree");
        if (static_cast<int>(cx.cells.size()) <= degree) cx.cells.resize(degree + 1);
        OrbitCell cell;
        cell.id = id;
        std::string rest;
        std::getline(ls, rest);
        std::size_t p = 0;
        // optional stab=w1,w2 then (orbit, word, sign) triples
        while (p < rest.size()) {
            while (p < rest.size() && (rest[p] == ' ' || rest[p] == '\t')) ++p;
            if (p >= rest.size()) break;
            if (rest.compare(p, 5, "stab=") == 0) {
                std::size_t end = rest.find(' ', p);
                std::string lst = rest.substr(p + 5, end == std::string::npos ? std::string::npos : end - p - 5);
                std::istringstream ss(lst);
                std::string w;
                while (std::getline(ss, w, ','))
                    if (!w.empty()) cell.stabilizer_gens.push_back(parse_element(cx.spec, w));
                p = end == std::string::npos ? rest.size() : end;
                continue;
            }
            if (rest[p] != '(')
                throw ConfigError("line " + std::to_string(lineno) + ": expected face triple");
            std::size_t close = rest.find(')', p);
            if (close == std::string::npos) throw ConfigError("unterminated face triple");
            std::string triple = rest.substr(p + 1, close - p - 1);
            p = close + 1;
            std::string fid, wrd, sgn;
            std::istringstream ts(triple);
            if (!std::getline(ts, fid, ',') || !std::getline(ts, wrd, ',') || !std::getline(ts, sgn, ','))
                throw ConfigError("line " + std::to_string(lineno) + ": malformed face triple");
            auto strip = [](std::string s) {
                s.erase(0, s.find_first_not_of(" \t"));
                s.erase(s.find_last_not_of(" \t") + 1);
                return s;
            };
            fid = strip(fid);
            wrd = strip(wrd);
            sgn = strip(sgn);
            if (degree == 0) throw ConfigError("degree-0 cell cannot have faces");
            OrbitCell::Face face;
            face.orbit = cx.orbit_by_id(degree - 1, fid);
            face.translate = parse_element(cx.spec, wrd);
            if (sgn == "+1" || sgn == "+")
                face.sign = 1;
            else if (sgn == "-1" || sgn == "-")
                face.sign = -1;
            else
                throw ConfigError("face sign must be +1 or -1");
            cell.faces.push_back(std::move(face));
        }
        cx.cells[degree].push_back(std::move(cell));
    }
    if (!have_group) throw ConfigError("cell-list file missing group declaration");
    cx.validate();
    return cx;
}

OrbitCellComplex load_cell_complex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open cell-list file " + path);
    return load_cell_complex(in);
}

void save_cell_complex(std::ostream& out, const OrbitCellComplex& c) {
    out << "group " << c.spec.name() << "\n";
    for (int k = 0; k <= c.dimension(); ++k)
        for (const auto& cell : c.cells[k]) {
            out << "cell " << k << " " << cell.id;
            if (!cell.stabilizer_gens.empty()) {
                out << " stab=";
                for (std::size_t i = 0; i < cell.stabilizer_gens.size(); ++i) {
                    if (i) out << ",";
                    out << cell.stabilizer_gens[i].to_string(c.spec);
                }
            }
            for (const auto& f : cell.faces)
                out << " (" << c.cells[k - 1][f.orbit].id << ", " << f.translate.to_string(c.spec)
                    << ", " << (f.sign > 0 ? "+1" : "-1") << ")";
            out << "\n";
        }
}

} // namespace lipcoh
