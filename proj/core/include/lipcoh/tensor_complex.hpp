#pragma once

#include <functional>
#include <map>

#include "lipcoh/cochain.hpp"

namespace lipcoh {

/**
 * Tensor product over Z of two free resolutions, with the diagonal action.
 * As a ZG-module, degree n is free on the symbols a_i (x) g.b_j with
 * i in C_p, j in D_{n-p}, g in the group; the engine therefore works with
 * finitely supported chains and evaluator-backed cochains instead of rank
 * matrices.  The differential obeys d(c (x) d) = dc (x) d + (-1)^{|c|} c (x) dd.
 */
struct TensorComplex {
    std::shared_ptr<const FreeZGComplex> C, D;

    int top_degree() const { return C->top_degree() + D->top_degree(); }
};

struct TensorKey {
    int p = 0; // degree in C; the D-degree is (chain degree - p)
    int i = 0; // generator index in C_p
    int j = 0; // generator index in D_{degree-p}
    GroupElement g; // relative translate of the D generator
    auto operator<=>(const TensorKey&) const = default;
};

/// finitely supported chain with ZG coefficients acting diagonally
class TensorChain {
  public:
    TensorChain(TensorComplex complex, int degree) : complex_(std::move(complex)), degree_(degree) {}

    const TensorComplex& complex() const { return complex_; }
    int degree() const { return degree_; }
    const std::map<TensorKey, GroupRingElement>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const TensorKey& key, const GroupRingElement& coeff);

    TensorChain boundary() const;
    TensorChain acted(const GroupRingElement& r) const;
    TensorChain& operator+=(const TensorChain& o);
    friend TensorChain operator+(TensorChain a, const TensorChain& b) { return a += b; }
    bool operator==(const TensorChain& o) const {
        return degree_ == o.degree_ && terms_ == o.terms_;
    }

    /// push all coefficients through the augmentation: the canonical lift of
    /// the image in the coinvariant complex
    TensorChain trivialized() const;

  private:
    TensorComplex complex_;
    int degree_ = 0;
    std::map<TensorKey, GroupRingElement> terms_;
};

/// equivariant cochain on the tensor complex, backed by a basis evaluator
class TensorCochain {
  public:
    using Eval = std::function<ModuleElement(const TensorKey&)>;

    TensorCochain(TensorComplex complex, int degree, ModuleTag tag, Eval eval)
        : complex_(std::move(complex)), degree_(degree), tag_(tag), eval_(std::move(eval)) {}

    const TensorComplex& complex() const { return complex_; }
    int degree() const { return degree_; }
    const ModuleTag& tag() const { return tag_; }

    ModuleElement eval_basis(const TensorKey& key) const { return eval_(key); }
    /// ZG-linear evaluation on a chain of matching degree
    ModuleElement eval(const TensorChain& chain) const;

    TensorCochain delta() const;
    TensorCochain operator-(const TensorCochain& o) const;

  private:
    TensorComplex complex_;
    int degree_ = 0;
    ModuleTag tag_;
    Eval eval_;
};

/**
 * Cross/cup product cocycle on the product resolution:
 * (u cup v)(a_i (x) g b_j) = u(a_i) (x) g.v(b_j), supported on the bidegree
 * (deg u, deg v) component.  With the Leibniz boundary above this satisfies
 * delta(u cup v) = delta u cup v + (-1)^{deg u} u cup delta v.
 */
TensorCochain cup_product(const CellCochain& u, const CellCochain& v);

/**
 * Diagonal approximation for the cubical resolution of Z^d: the chain map
 * K -> K (x) K covering the identity,
 * Delta(e_S) = sum over S = A u B of rho(A,B) e_A (x) (t_A . e_B).
 * Returns, per degree, the images of the generators.
 */
std::vector<std::vector<TensorChain>> cubical_diagonal(std::shared_ptr<const FreeZGComplex> koszul);

} // namespace lipcoh
