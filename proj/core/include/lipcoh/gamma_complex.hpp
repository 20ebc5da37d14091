#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "lipcoh/homology.hpp"
#include "lipcoh/module_element.hpp"

namespace lipcoh {

/**
 * Locally finite simplicial/cellular G-complex presented by orbit data: one
 * representative cell per orbit, faces recorded as (orbit, translating group
 * element, sign).  A face entry (tau, g, s) means: the corresponding face of
 * the representative of this cell equals s . g.(representative of tau).
 */
struct OrbitCell {
    std::string id;
    struct Face {
        int orbit; // index into cells[degree-1]
        GroupElement translate;
        int sign; // +1 / -1
    };
    std::vector<Face> faces;
    // stabilizer description: generating sample of Gamma_sigma (empty = free)
    std::vector<GroupElement> stabilizer_gens;
};

struct OrbitCellComplex {
    GroupSpec spec;
    std::vector<std::vector<OrbitCell>> cells; // per degree

    int dimension() const { return static_cast<int>(cells.size()) - 1; }
    int orbit_count(int degree) const {
        return (degree < 0 || degree > dimension()) ? 0 : static_cast<int>(cells[degree].size());
    }
    const OrbitCell& cell(int degree, int orbit) const { return cells[degree][orbit]; }
    int orbit_by_id(int degree, const std::string& id) const;

    bool all_stabilizers_trivial() const;

    /// exact face-of-face check: the twisted boundary squares to zero
    void validate() const;

    /// Z-chain complex of the quotient (free actions only)
    IntChainComplex quotient_complex() const;
};

/**
 * G-invariant chain with coefficients in L, stored as one coefficient per
 * orbit representative; the full chain is sum over instances gamma.sigma of
 * (gamma.lambda_sigma) (gamma.sigma).
 */
struct InvariantChain {
    std::shared_ptr<const OrbitCellComplex> complex;
    int degree = 0;
    ModuleTag tag;
    std::map<int, ModuleElement> coeffs; // orbit -> lambda (zero values dropped)

    void set(int orbit, ModuleElement v);
    ModuleElement coeff(int orbit) const;
    bool is_zero() const { return coeffs.empty(); }

    /// coefficient of the instance gamma.sigma, i.e. gamma.lambda_sigma
    ModuleElement instance_coeff(int orbit, const GroupElement& gamma) const;

    /// checks stabilizer invariance of every stored coefficient
    void validate() const;

    InvariantChain& operator+=(const InvariantChain& o);
    friend InvariantChain operator+(InvariantChain a, const InvariantChain& b) { return a += b; }
    InvariantChain operator-() const;
    friend InvariantChain operator*(const Int& c, const InvariantChain& z);
    bool operator==(const InvariantChain& o) const {
        return degree == o.degree && tag == o.tag && coeffs == o.coeffs;
    }

    /// coefficientwise module map (e.g. a section or a projection)
    InvariantChain mapped(ModuleTag target,
                          const std::function<ModuleElement(const ModuleElement&)>& f) const;
};

/**
 * Twisted boundary of an invariant chain: a face entry (tau, g, s) of sigma
 * contributes s . g^{-1}(lambda_sigma) at tau.  This is the unique convention
 * under which orbit storage commutes with expanding to instance chains.
 */
InvariantChain invariant_boundary(const InvariantChain& z, bool validate = true);

/// plain-text cell-list format (see README): load / save
OrbitCellComplex load_cell_complex(std::istream& in);
OrbitCellComplex load_cell_complex_file(const std::string& path);
void save_cell_complex(std::ostream& out, const OrbitCellComplex& c);

/// parse a group word like "t1^2*t2^-1", "a*b^-1", "e"
GroupElement parse_element(const GroupSpec& spec, const std::string& text);

} // namespace lipcoh
