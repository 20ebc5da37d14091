#include "lipcoh/module_map.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "lipcoh/gamma_complex.hpp"
#include "lipcoh/int_matrix.hpp"
#include "lipcoh/ses.hpp"

namespace lipcoh {

Int ModuleMap::evaluate(const ModuleElement& x) const {
    if (x.order() != order_) throw ValidationError("coefficient map order mismatch");
    Int acc = 0;
    for (const auto& [key, c] : x.terms()) {
        bool killed = false;
        for (const auto& g : key)
            if (g.is_identity()) {
                killed = true;
                break;
            }
        if (killed) continue;
        for (const auto& g : key)
            if (g.word_length() > radius_)
                throw RadiusError("tensor factor " + g.to_string(spec_) +
                                  " outside truncation radius " + std::to_string(radius_));
        auto it = values_.find(key);
        if (it != values_.end()) acc += c * it->second;
    }
    return acc;
}

CellCochain ModuleMap::pushforward(const CellCochain& c) const {
    if (c.tag().order != order_ || c.tag().aug_slots != order_)
        throw ValidationError("pushforward expects a cochain over I^(x order)");
    ModuleMap self = *this;
    return c.mapped(ModuleTag::Z(),
                    [self](const ModuleElement& v) { return ModuleElement::from_int(self.evaluate(v)); });
}

BarCochain ModuleMap::pushforward(const BarCochain& c) const {
    if (c.tag().order != order_ || c.tag().aug_slots != order_)
        throw ValidationError("pushforward expects a cochain over I^(x order)");
    ModuleMap self = *this;
    return c.lifted(ModuleTag::Z(),
                    [self](const ModuleElement& v) { return ModuleElement::from_int(self.evaluate(v)); });
}

namespace {

// expansion of gamma . basis(T) in the basis: entries gamma*g_i or gamma with
// inclusion-exclusion signs; tuples containing e vanish
void expand_translated_basis(const GroupSpec& spec, const std::vector<GroupElement>& tuple,
                             const GroupElement& gamma,
                             std::vector<std::pair<std::vector<GroupElement>, int>>& out) {
    const int k = static_cast<int>(tuple.size());
    out.clear();
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        std::vector<GroupElement> key(k);
        int sign = 1;
        bool dead = false;
        for (int s = 0; s < k; ++s) {
            GroupElement entry = (mask & (1u << s)) ? gamma : mul(gamma, tuple[s]);
            if (mask & (1u << s)) sign = -sign;
            if (entry.is_identity()) {
                dead = true;
                break;
            }
            key[s] = std::move(entry);
        }
        if (!dead) out.emplace_back(std::move(key), sign);
    }
    (void)spec;
}

std::vector<std::vector<GroupElement>> basis_tuples(const GroupSpec& spec, int order, int radius,
                                                    std::uint64_t cap) {
    std::vector<GroupElement> b = ball(spec, radius, cap);
    b.erase(std::remove_if(b.begin(), b.end(), [](const GroupElement& g) { return g.is_identity(); }),
            b.end());
    std::vector<std::vector<GroupElement>> tuples;
    std::vector<GroupElement> cur(order);
    auto rec = [&](auto&& self, int slot) -> void {
        if (slot == order) {
            tuples.push_back(cur);
            return;
        }
        for (const auto& g : b) {
            cur[slot] = g;
            self(self, slot + 1);
        }
    };
    double size = 1;
    for (int i = 0; i < order; ++i) size *= static_cast<double>(b.size());
    if (size > static_cast<double>(cap)) throw ResourceError("tensor basis exceeds the configured cap");
    rec(rec, 0);
    return tuples;
}

} // namespace

std::size_t ModuleMap::equivariance_violations(std::uint64_t cap) const {
    auto tuples = basis_tuples(spec_, order_, radius_, cap);
    std::map<std::vector<GroupElement>, int> index;
    for (std::size_t i = 0; i < tuples.size(); ++i) index.emplace(tuples[i], static_cast<int>(i));
    auto val = [&](const std::vector<GroupElement>& key) {
        auto it = values_.find(key);
        return it == values_.end() ? Int(0) : it->second;
    };
    std::size_t bad = 0;
    std::vector<std::pair<std::vector<GroupElement>, int>> expansion;
    for (const auto& t : tuples) {
        for (const auto& gamma : ball(spec_, radius_, cap)) {
            if (gamma.is_identity()) continue;
            bool in_range = true;
            for (const auto& g : t)
                if (mul(gamma, g).word_length() > radius_) {
                    in_range = false;
                    break;
                }
            if (!in_range) continue;
            expand_translated_basis(spec_, t, gamma, expansion);
            Int acc = -val(t);
            for (const auto& [key, sign] : expansion) acc += sign * val(key);
            if (acc != 0) ++bad;
        }
    }
    return bad;
}

CellCochain beta_power(std::shared_ptr<const FreeZGComplex> resolution, int k) {
    if (k < 1) throw ConfigError("beta power requires k >= 1");
    CellCochain c = berstein_schwarz(resolution);
    for (int l = 2; l <= k; ++l)
        c = connecting_cohomology(c, ShortExactSeq::augmentation_seq(resolution->spec, l));
    return c;
}

ModuleMap solve_coefficient_hom(std::shared_ptr<const FreeZGComplex> resolution, int k, int radius,
                                const CellCochain& target, std::uint64_t cap) {
    const GroupSpec& spec = resolution->spec;
    if (target.degree() != k) throw ValidationError("target class degree must equal the tensor order");
    if (!(target.tag() == ModuleTag::Z()))
        throw ValidationError("target class must have trivial coefficients");

    auto tuples = basis_tuples(spec, k, radius, cap);
    std::map<std::vector<GroupElement>, int> index;
    for (std::size_t i = 0; i < tuples.size(); ++i) index.emplace(tuples[i], static_cast<int>(i));

    IntLinearSystem sys(static_cast<int>(tuples.size()));

    // in-ball equivariance constraints
    std::vector<std::pair<std::vector<GroupElement>, int>> expansion;
    auto b = ball(spec, radius, cap);
    for (const auto& t : tuples) {
        for (const auto& gamma : b) {
            if (gamma.is_identity()) continue;
            bool in_range = true;
            for (const auto& g : t)
                if (mul(gamma, g).word_length() > radius) {
                    in_range = false;
                    break;
                }
            if (!in_range) continue;
            expand_translated_basis(spec, t, gamma, expansion);
            std::map<int, Int> row;
            row[index.at(t)] -= 1;
            for (const auto& [key, sign] : expansion) row[index.at(key)] += sign;
            for (auto it = row.begin(); it != row.end();)
                it = (it->second == 0) ? row.erase(it) : std::next(it);
            if (!row.empty()) sys.add_row(std::move(row), 0);
        }
    }

    // pairing constraints against every cycle of the finite quotient model
    CellCochain bk = beta_power(resolution, k);
    for (const auto& cycle : resolution->cycle_basis(k)) {
        std::map<int, Int> row;
        for (std::size_t g = 0; g < cycle.size(); ++g) {
            if (cycle[g] == 0) continue;
            for (const auto& [key, c] : bk.value(static_cast<int>(g)).terms()) {
                bool killed = false;
                for (const auto& el : key) {
                    if (el.is_identity()) {
                        killed = true;
                        break;
                    }
                    if (el.word_length() > radius)
                        throw RadiusError("beta^k needs radius > " + std::to_string(radius));
                }
                if (killed) continue;
                row[index.at(key)] += cycle[g] * c;
            }
        }
        Int rhs = target.pairing(cycle).as_int();
        sys.add_row(std::move(row), rhs);
    }

    auto sol = sys.solve();
    if (!sol) throw UnsatError("no integer coefficient homomorphism at radius " + std::to_string(radius));
    std::map<std::vector<GroupElement>, Int> values;
    for (std::size_t i = 0; i < tuples.size(); ++i)
        if ((*sol)[i] != 0) values.emplace(tuples[i], (*sol)[i]);
    return ModuleMap(spec, k, radius, std::move(values));
}

int coinvariants_rank_at(const GroupSpec& spec, int order, int radius, std::uint64_t cap) {
    auto tuples = basis_tuples(spec, order, radius, cap);
    std::map<std::vector<GroupElement>, int> index;
    for (std::size_t i = 0; i < tuples.size(); ++i) index.emplace(tuples[i], static_cast<int>(i));

    IntLinearSystem relations(static_cast<int>(tuples.size()));
    std::vector<std::pair<std::vector<GroupElement>, int>> expansion;
    auto b = ball(spec, radius, cap);
    for (const auto& t : tuples) {
        for (const auto& gamma : b) {
            if (gamma.is_identity()) continue;
            bool in_range = true;
            for (const auto& g : t)
                if (mul(gamma, g).word_length() > radius) {
                    in_range = false;
                    break;
                }
            if (!in_range) continue;
            expand_translated_basis(spec, t, gamma, expansion);
            std::map<int, Int> row;
            row[index.at(t)] -= 1;
            for (const auto& [key, sign] : expansion) row[index.at(key)] += sign;
            for (auto it = row.begin(); it != row.end();)
                it = (it->second == 0) ? row.erase(it) : std::next(it);
            if (!row.empty()) relations.add_row(std::move(row), 0);
        }
    }
    return static_cast<int>(tuples.size()) - relations.rank();
}

std::pair<int, int> coinvariants_rank(const GroupSpec& spec, int order, int radius,
                                      std::uint64_t cap) {
    return {coinvariants_rank_at(spec, order, radius, cap),
            coinvariants_rank_at(spec, order, radius + 1, cap)};
}

void ModuleMap::save_table(std::ostream& out) const {
    out << "# coefficient-map table\n";
    out << "group " << spec_.name() << "\n";
    out << "order " << order_ << "\n";
    out << "radius " << radius_ << "\n";
    for (const auto& [key, v] : values_) {
        for (std::size_t i = 0; i < key.size(); ++i) {
            if (i) out << " (x) ";
            out << key[i].to_string(spec_);
        }
        out << " = " << v << "\n";
    }
}

ModuleMap ModuleMap::load_table(std::istream& in) {
    GroupSpec spec;
    int order = -1, radius = -1;
    std::map<std::vector<GroupElement>, Int> values;
    bool have_spec = false;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string first;
        ls >> first;
        if (first == "group") {
            std::string g;
            ls >> g;
            spec = GroupSpec::parse(g);
            have_spec = true;
        } else if (first == "order") {
            ls >> order;
        } else if (first == "radius") {
            ls >> radius;
        } else {
            if (!have_spec || order < 1) throw ConfigError("table header incomplete");
            auto eq = line.rfind('=');
            if (eq == std::string::npos) throw ConfigError("malformed table line: " + line);
            std::string lhs = line.substr(0, eq);
            std::string rhs = line.substr(eq + 1);
            rhs.erase(0, rhs.find_first_not_of(" \t"));
            rhs.erase(rhs.find_last_not_of(" \t\r") + 1);
            Int v(rhs);
            std::vector<GroupElement> key;
            std::size_t pos = 0;
            while (pos < lhs.size()) {
                std::size_t sep = lhs.find(" (x) ", pos);
                std::string word = lhs.substr(pos, sep == std::string::npos ? std::string::npos : sep - pos);
                word.erase(0, word.find_first_not_of(" \t"));
                word.erase(word.find_last_not_of(" \t") + 1);
                key.push_back(parse_element(spec, word));
                pos = (sep == std::string::npos) ? lhs.size() : sep + 5;
            }
            if (static_cast<int>(key.size()) != order) throw ConfigError("table key arity mismatch");
            if (v != 0) values.emplace(std::move(key), std::move(v));
        }
    }
    if (!have_spec || order < 1 || radius < 0) throw ConfigError("table header incomplete");
    return ModuleMap(spec, order, radius, std::move(values));
}

} // namespace lipcoh
