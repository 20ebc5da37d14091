#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lipcoh/bigint.hpp"
#include "lipcoh/errors.hpp"

namespace lipcoh {

enum class GroupFamily : std::uint8_t { FreeAbelian, Free };

/**
 * One of the supported group families with named generators:
 * Z^d (free abelian) or F_r (free).  Parsed from the config grammar
 * `group = "Z^2"` / `group = "F_2"`.
 */
struct GroupSpec {
    GroupFamily family = GroupFamily::FreeAbelian;
    int rank = 1;
    std::vector<std::string> gen_names;

    static GroupSpec free_abelian(int d);
    static GroupSpec free_group(int r);
    static GroupSpec parse(const std::string& text);

    std::string name() const;
    bool operator==(const GroupSpec& o) const { return family == o.family && rank == o.rank; }
};

/**
 * Group element in normal form.
 *
 * FreeAbelian: `data` is the exponent vector (length = rank).
 * Free: `data` is the reduced word; letter +i is generator i-1, letter -i its
 * inverse.  Two elements are equal iff their stored forms are identical.
 */
class GroupElement {
  public:
    GroupElement() = default;

    static GroupElement identity(const GroupSpec& spec);
    static GroupElement generator(const GroupSpec& spec, int i, int exponent = 1);
    static GroupElement from_exponents(const GroupSpec& spec, std::vector<std::int64_t> exps);
    static GroupElement from_word(const GroupSpec& spec, std::vector<std::int64_t> letters);

    GroupFamily family() const { return family_; }
    int rank() const { return rank_; }
    const std::vector<std::int64_t>& data() const { return data_; }

    bool is_identity() const;
    std::int64_t word_length() const;

    // abelianized exponent vector (identity map for FreeAbelian)
    std::vector<std::int64_t> abelianized() const;

    std::string to_string(const GroupSpec& spec) const;

    friend GroupElement mul(const GroupElement& g, const GroupElement& h);
    friend GroupElement inverse(const GroupElement& g);

    bool operator==(const GroupElement& o) const {
        return family_ == o.family_ && rank_ == o.rank_ && data_ == o.data_;
    }
    // total order: word length first, then lexicographic on the stored form.
    // The identity is the minimum; used everywhere determinism matters.
    std::strong_ordering operator<=>(const GroupElement& o) const;

  private:
    GroupFamily family_ = GroupFamily::FreeAbelian;
    std::int32_t rank_ = 0;
    std::vector<std::int64_t> data_;

    void check_compatible(const GroupElement& o) const;
};

GroupElement mul(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);

/// Conjugation-free left division: g^{-1} h.
inline GroupElement left_divide(const GroupElement& g, const GroupElement& h) {
    return mul(inverse(g), h);
}

constexpr std::uint64_t kDefaultBallCap = 1'000'000;

/**
 * The word-metric ball { g : |g| <= radius } for the standard generating set,
 * sorted in the canonical element order.  Throws ResourceError when the ball
 * would exceed `cap` elements (free-group balls grow exponentially).
 */
std::vector<GroupElement> ball(const GroupSpec& spec, int radius,
                               std::uint64_t cap = kDefaultBallCap);

std::uint64_t ball_size(const GroupSpec& spec, int radius);

} // namespace lipcoh
