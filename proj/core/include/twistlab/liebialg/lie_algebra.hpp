#pragma once

#include "twistlab/report.hpp"

#include <gmpxx.h>

#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

namespace twistlab::liebialg {

using Rational = mpq_class;

// Sparse structure-constant entry: [X_i, X_j] has coefficient c on X_k.
struct BracketTriple {
    int i, j, k;
    Rational c;
};

// Basis labels plus structure constants c^k_ij, stored densely. Cheap to
// copy; copies share the underlying table.
class LieAlgebra {
public:
    LieAlgebra() = default;

    // Antisymmetric completion of the listed triples; throws if a triple and
    // its transpose disagree.
    static LieAlgebra from_triples(std::string name, std::vector<std::string> basis,
                                   const std::vector<BracketTriple>& triples);
    static LieAlgebra from_json(const std::string& text);
    std::string to_json() const;

    const std::string& name() const { return d_->name; }
    int dim() const { return static_cast<int>(d_->basis.size()); }
    const std::vector<std::string>& basis() const { return d_->basis; }
    const std::string& label(int i) const { return d_->basis.at(i); }
    int index(const std::string& label) const;  // BasisMismatch when absent

    const Rational& c(int i, int j, int k) const { return d_->c[(i * dim() + j) * dim() + k]; }
    std::vector<BracketTriple> triples() const;  // i < j, nonzero only

    bool valid() const { return d_ != nullptr; }
    const void* id() const { return d_.get(); }
    bool same_as(const LieAlgebra& o) const { return d_ == o.d_ || (d_ && o.d_ && d_->basis == o.d_->basis && d_->c == o.d_->c); }

private:
    struct Data {
        std::string name;
        std::vector<std::string> basis;
        std::vector<Rational> c;
    };
    std::shared_ptr<const Data> d_;
};

// Element of the k-fold tensor power of the algebra, coefficients on basis
// tensors X_{i1} (x) ... (x) X_{ik}. Wedge convention X^Y = X(x)Y - Y(x)X.
class Tensor {
public:
    using Index = std::vector<int>;

    Tensor() = default;
    Tensor(LieAlgebra g, int degree) : g_(std::move(g)), deg_(degree) {}

    static Tensor basis(const LieAlgebra& g, int i);
    static Tensor basis(const LieAlgebra& g, const std::string& label) { return basis(g, g.index(label)); }
    static Tensor vector(const LieAlgebra& g, const std::vector<Rational>& comps);
    static Tensor tensor(const Tensor& a, const Tensor& b);
    static Tensor wedge(const Tensor& a, const Tensor& b);  // degree 1 arguments

    const LieAlgebra& algebra() const { return g_; }
    int degree() const { return deg_; }
    const std::map<Index, Rational>& terms() const { return t_; }
    Rational coeff(const Index& idx) const;
    void add(const Index& idx, const Rational& c);

    bool is_zero() const { return t_.empty(); }
    // Fully antisymmetric under every transposition of legs.
    bool is_alternating() const;
    // Apply a permutation of legs: result leg p gets input leg perm[p].
    Tensor permuted(const std::vector<int>& perm) const;
    Tensor flipped() const { return permuted({1, 0}); }

    Tensor operator+(const Tensor& o) const;
    Tensor operator-(const Tensor& o) const;
    Tensor operator*(const Rational& s) const;
    friend Tensor operator*(const Rational& s, const Tensor& t) { return t * s; }
    friend bool operator==(const Tensor& a, const Tensor& b) { return a.deg_ == b.deg_ && a.t_ == b.t_; }

    // Adjoint action of a degree-1 element on every leg.
    Tensor ad(const Tensor& x) const;

    // "2*E", "-2 H^E" (alternating tensors print on increasing index tuples).
    std::string str() const;

private:
    void check_same(const Tensor& o) const;
    LieAlgebra g_;
    int deg_ = 0;
    std::map<Index, Rational> t_;
};

Tensor bracket(const Tensor& x, const Tensor& y);

// Every basis triple (i<j<k) with nonzero Jacobiator; empty means pass.
VerificationReport jacobi_check(const LieAlgebra& g);

// Classical Yang-Baxter / algebraic Schouten bracket [r,r] =
// [r12,r13] + [r12,r23] + [r13,r23] from structure constants.
Tensor schouten_cybe(const Tensor& r);
// Same value by explicit leg embedding and commutators of basis tensors.
Tensor schouten_cybe_bruteforce(const Tensor& r);

// delta(X) = [r, X(x)1 + 1(x)X].
Tensor cobracket(const Tensor& r, const Tensor& x);
std::vector<Tensor> cobracket_table(const Tensor& r);

// Lie algebra on the dual space with [xi^a, xi^b] = sum_k delta(X_k)^{ab} xi^k.
// Throws PreconditionFailed when co-Jacobi fails.
LieAlgebra dual_algebra(const LieAlgebra& g, const std::vector<Tensor>& delta);
// Cobracket on the dual space transposing g's bracket; dual_algebra of it is g.
std::vector<Tensor> transpose_cobracket(const LieAlgebra& g);

// Cocycle identity delta([X,Y]) = X.delta(Y) - Y.delta(X) on all basis pairs.
VerificationReport cobracket_cocycle_check(const Tensor& r);

// Linear map given by its matrix (row = image of basis element) intertwining
// the brackets of source and target.
VerificationReport bracket_intertwine_check(const LieAlgebra& src, const LieAlgebra& dst,
                                            const std::vector<std::vector<Rational>>& matrix);

LieAlgebra fixture(const std::string& name);  // axb, axb_dual, axb_double
std::vector<std::string> fixture_names();
std::string fixture_text(const std::string& name);

LieAlgebra build_axb();
LieAlgebra build_double_axb();
// r = H^E on a basis containing H and E.
Tensor r_matrix_axb(const LieAlgebra& g);

// Heisenberg subalgebra of the double: F = bH - H, Z = 2E - 2 bE, with
// [E,F] = z_scale Z; reports the scale and the centrality of Z.
VerificationReport double_heisenberg_check(const LieAlgebra& d);

}  // namespace twistlab::liebialg
