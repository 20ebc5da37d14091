#include "lipcoh/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace lipcoh {

GroupSpec GroupSpec::free_abelian(int d) {
    if (d < 1) throw ConfigError("Z^d requires d >= 1");
    GroupSpec s;
    s.family = GroupFamily::FreeAbelian;
    s.rank = d;
    if (d == 1) {
        s.gen_names = {"t"};
    } else {
        for (int i = 1; i <= d; ++i) s.gen_names.push_back("t" + std::to_string(i));
    }
    return s;
}

GroupSpec GroupSpec::free_group(int r) {
    if (r < 1) throw ConfigError("F_r requires r >= 1");
    GroupSpec s;
    s.family = GroupFamily::Free;
    s.rank = r;
    static const char* letters = "abcdefgh";
    for (int i = 0; i < r; ++i) {
        if (i < 8)
            s.gen_names.push_back(std::string(1, letters[i]));
        else
            s.gen_names.push_back("x" + std::to_string(i + 1));
    }
    return s;
}

GroupSpec GroupSpec::parse(const std::string& text) {
    auto fail = [&] { throw ConfigError("unrecognized group \"" + text + "\" (expected Z^d or F_r)"); };
    if (text.size() >= 3 && text[0] == 'Z' && text[1] == '^') {
        int d = std::atoi(text.c_str() + 2);
        if (d < 1) fail();
        return free_abelian(d);
    }
    if (text == "Z") return free_abelian(1);
    if (text.size() >= 3 && text[0] == 'F' && text[1] == '_') {
        int r = std::atoi(text.c_str() + 2);
        if (r < 1) fail();
        return free_group(r);
    }
    fail();
    return {};
}

std::string GroupSpec::name() const {
    if (family == GroupFamily::FreeAbelian)
        return rank == 1 ? "Z" : "Z^" + std::to_string(rank);
    return "F_" + std::to_string(rank);
}

GroupElement GroupElement::identity(const GroupSpec& spec) {
    GroupElement g;
    g.family_ = spec.family;
    g.rank_ = spec.rank;
    if (spec.family == GroupFamily::FreeAbelian) g.data_.assign(spec.rank, 0);
    return g;
}

GroupElement GroupElement::generator(const GroupSpec& spec, int i, int exponent) {
    if (i < 0 || i >= spec.rank) throw ConfigError("generator index out of range");
    GroupElement g = identity(spec);
    if (spec.family == GroupFamily::FreeAbelian) {
        g.data_[i] = exponent;
    } else {
        std::int64_t letter = (exponent >= 0) ? (i + 1) : -(i + 1);
        for (int k = 0; k < std::abs(exponent); ++k) g.data_.push_back(letter);
    }
    return g;
}

GroupElement GroupElement::from_exponents(const GroupSpec& spec, std::vector<std::int64_t> exps) {
    if (spec.family != GroupFamily::FreeAbelian || static_cast<int>(exps.size()) != spec.rank)
        throw ConfigError("exponent vector does not match group spec");
    GroupElement g;
    g.family_ = spec.family;
    g.rank_ = spec.rank;
    g.data_ = std::move(exps);
    return g;
}

GroupElement GroupElement::from_word(const GroupSpec& spec, std::vector<std::int64_t> letters) {
    if (spec.family != GroupFamily::Free) throw ConfigError("word form requires a free group");
    GroupElement g;
    g.family_ = spec.family;
    g.rank_ = spec.rank;
    for (std::int64_t l : letters) {
        if (l == 0 || std::abs(l) > spec.rank) throw ConfigError("letter out of range");
        if (!g.data_.empty() && g.data_.back() == -l)
            g.data_.pop_back();
        else
            g.data_.push_back(l);
    }
    return g;
}

bool GroupElement::is_identity() const {
    if (family_ == GroupFamily::FreeAbelian)
        return std::all_of(data_.begin(), data_.end(), [](std::int64_t v) { return v == 0; });
    return data_.empty();
}

std::int64_t GroupElement::word_length() const {
    if (family_ == GroupFamily::FreeAbelian) {
        std::int64_t n = 0;
        for (std::int64_t v : data_) n += std::abs(v);
        return n;
    }
    return static_cast<std::int64_t>(data_.size());
}

std::vector<std::int64_t> GroupElement::abelianized() const {
    if (family_ == GroupFamily::FreeAbelian) return data_;
    std::vector<std::int64_t> v(rank_, 0);
    for (std::int64_t l : data_) {
        if (l > 0)
            ++v[l - 1];
        else
            --v[-l - 1];
    }
    return v;
}

std::string GroupElement::to_string(const GroupSpec& spec) const {
    if (is_identity()) return "e";
    std::ostringstream out;
    bool first = true;
    if (family_ == GroupFamily::FreeAbelian) {
        for (int i = 0; i < rank_; ++i) {
            if (data_[i] == 0) continue;
            if (!first) out << "*";
            out << spec.gen_names[i];
            if (data_[i] != 1) out << "^" << data_[i];
            first = false;
        }
    } else {
        // run-length encode the reduced word
        std::size_t i = 0;
        while (i < data_.size()) {
            std::size_t j = i;
            while (j < data_.size() && data_[j] == data_[i]) ++j;
            std::int64_t l = data_[i];
            if (!first) out << "*";
            out << spec.gen_names[std::abs(l) - 1];
            std::int64_t run = static_cast<std::int64_t>(j - i) * (l > 0 ? 1 : -1);
            if (run != 1) out << "^" << run;
            first = false;
            i = j;
        }
    }
    return out.str();
}

void GroupElement::check_compatible(const GroupElement& o) const {
    if (family_ != o.family_ || rank_ != o.rank_)
        throw ConfigError("group elements over mismatched GroupSpecs");
}

GroupElement mul(const GroupElement& g, const GroupElement& h) {
    g.check_compatible(h);
    GroupElement out;
    out.family_ = g.family_;
    out.rank_ = g.rank_;
    if (g.family_ == GroupFamily::FreeAbelian) {
        out.data_.resize(g.data_.size());
        for (std::size_t i = 0; i < g.data_.size(); ++i) out.data_[i] = g.data_[i] + h.data_[i];
    } else {
        out.data_ = g.data_;
        for (std::int64_t l : h.data_) {
            if (!out.data_.empty() && out.data_.back() == -l)
                out.data_.pop_back();
            else
                out.data_.push_back(l);
        }
    }
    return out;
}

GroupElement inverse(const GroupElement& g) {
    GroupElement out;
    out.family_ = g.family();
    out.rank_ = g.rank();
    if (g.family() == GroupFamily::FreeAbelian) {
        out.data_.reserve(g.data().size());
        for (std::int64_t v : g.data()) out.data_.push_back(-v);
    } else {
        out.data_.reserve(g.data().size());
        for (auto it = g.data().rbegin(); it != g.data().rend(); ++it) out.data_.push_back(-*it);
    }
    return out;
}

std::strong_ordering GroupElement::operator<=>(const GroupElement& o) const {
    if (auto c = word_length() <=> o.word_length(); c != 0) return c;
    if (auto c = data_.size() <=> o.data_.size(); c != 0) return c;
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (auto c = data_[i] <=> o.data_[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

namespace {

void ball_abelian(const GroupSpec& spec, int radius, std::uint64_t cap,
                  std::vector<std::int64_t>& current, int coord, std::int64_t budget,
                  std::vector<GroupElement>& out) {
    if (coord == spec.rank) {
        if (out.size() + 1 > cap)
            throw ResourceError("ball cap " + std::to_string(cap) + " exceeded for " + spec.name());
        out.push_back(GroupElement::from_exponents(spec, current));
        return;
    }
    for (std::int64_t v = -budget; v <= budget; ++v) {
        current[coord] = v;
        ball_abelian(spec, radius, cap, current, coord + 1, budget - std::abs(v), out);
    }
    current[coord] = 0;
}

void ball_free(const GroupSpec& spec, int radius, std::uint64_t cap,
               std::vector<std::int64_t>& word, std::vector<GroupElement>& out) {
    if (out.size() + 1 > cap)
        throw ResourceError("ball cap " + std::to_string(cap) + " exceeded for " + spec.name());
    out.push_back(GroupElement::from_word(spec, word));
    if (static_cast<int>(word.size()) == radius) return;
    for (int i = 1; i <= spec.rank; ++i) {
        for (std::int64_t l : {static_cast<std::int64_t>(i), static_cast<std::int64_t>(-i)}) {
            if (!word.empty() && word.back() == -l) continue;
            word.push_back(l);
            ball_free(spec, radius, cap, word, out);
            word.pop_back();
        }
    }
}

} // namespace

std::vector<GroupElement> ball(const GroupSpec& spec, int radius, std::uint64_t cap) {
    if (radius < 0) throw ConfigError("ball radius must be >= 0");
    std::vector<GroupElement> out;
    if (spec.family == GroupFamily::FreeAbelian) {
        std::vector<std::int64_t> current(spec.rank, 0);
        ball_abelian(spec, radius, cap, current, 0, radius, out);
    } else {
        std::vector<std::int64_t> word;
        ball_free(spec, radius, cap, word, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t ball_size(const GroupSpec& spec, int radius) {
    // counted without materializing; free groups: 1 + 2r((2r-1)^R - 1)/(2r-2)
    if (spec.family == GroupFamily::Free) {
        std::uint64_t total = 1, layer = 1;
        for (int k = 1; k <= radius; ++k) {
            layer *= (k == 1) ? static_cast<std::uint64_t>(2 * spec.rank)
                              : static_cast<std::uint64_t>(2 * spec.rank - 1);
            total += layer;
        }
        return total;
    }
    // Z^d ball: sum over choose patterns; small d, just recurse
    std::vector<std::uint64_t> prev(radius + 1, 1); // d = 0: only the origin per budget
    for (int dim = 1; dim <= spec.rank; ++dim) {
        std::vector<std::uint64_t> cur(radius + 1, 0);
        for (int b = 0; b <= radius; ++b) {
            cur[b] = prev[b]; // v = 0
            for (int v = 1; v <= b; ++v) cur[b] += 2 * prev[b - v];
        }
        prev = std::move(cur);
    }
    return prev[radius];
}

} // namespace lipcoh
