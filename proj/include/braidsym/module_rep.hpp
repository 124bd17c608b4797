#ifndef BRAIDSYM_MODULE_REP_HPP
#define BRAIDSYM_MODULE_REP_HPP

#include <map>
#include <string>
#include <vector>

#include "braidsym/linalg.hpp"
#include "braidsym/ratfunc.hpp"

namespace braidsym {

/// Isomorphism type of a finite-dimensional weight module: highest weights
/// with multiplicities, sorted by descending weight.
struct Decomposition {
    std::vector<std::pair<long, long>> components; // (highest weight, multiplicity)

    long total_dim() const;
    long multiplicity(long hw) const;
    bool empty() const { return components.empty(); }

    /// Character as weight -> multiplicity.
    std::map<long, long> character() const;

    friend bool operator==(const Decomposition& a, const Decomposition& b) {
        return a.components == b.components;
    }
    friend bool operator!=(const Decomposition& a, const Decomposition& b) { return !(a == b); }

    /// e.g. "V9 + V5" or "0".
    std::string str() const;
    /// JSON array of {"hw": int, "mult": int}, descending hw.
    std::string json() const;
};

/// Builds a decomposition from weight-space dimensions: the multiplicity of
/// the simple of highest weight w is dim(w) - dim(w+2). Throws
/// InconsistentModule if the counts do not form a valid character.
Decomposition decomposition_from_weight_dims(const std::map<long, long>& weight_dims);

/// Finite-dimensional weight module with labeled basis and generator action
/// matrices in column convention: E(v_j) = sum_i E(i,j) v_i.
///
/// One type covers all three scalar flavors. F = RatFunc is the generic
/// quantum module over Q(q); F = Rational with q0 = 1 is the classical
/// module (K is then the identity and H = diag(weights) carries the torus
/// action); F = Rational with any other q0 is the fast specialized backend.
template <class F>
class ModuleRep {
public:
    ModuleRep(Scalars<F> ctx, std::vector<long> weights, Matrix<F> e_mat, Matrix<F> f_mat,
              std::vector<std::string> labels)
        : ctx_(ctx), weights_(std::move(weights)), e_(std::move(e_mat)), f_(std::move(f_mat)),
          labels_(std::move(labels)) {
        verify_relations();
    }

    std::size_t dim() const { return weights_.size(); }
    const std::vector<long>& weights() const { return weights_; }
    const Matrix<F>& e_mat() const { return e_; }
    const Matrix<F>& f_mat() const { return f_; }
    const Scalars<F>& scalars() const { return ctx_; }
    const std::vector<std::string>& labels() const { return labels_; }

    bool is_classical() const;

    /// K = diag(q^weight); identity in the classical limit.
    Matrix<F> k_mat(long power = 1) const {
        Matrix<F> k(dim(), dim());
        for (std::size_t i = 0; i < dim(); ++i) k(i, i) = ctx_.q_power(power * weights_[i]);
        return k;
    }

    std::vector<std::size_t> weight_indices(long w) const {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < dim(); ++i)
            if (weights_[i] == w) idx.push_back(i);
        return idx;
    }

    std::map<long, long> weight_dims() const {
        std::map<long, long> d;
        for (long w : weights_) ++d[w];
        return d;
    }

private:
    void verify_relations() const;

    Scalars<F> ctx_;
    std::vector<long> weights_;
    Matrix<F> e_, f_;
    std::vector<std::string> labels_;
};

/// The (l+1)-dimensional simple module with highest weight l: basis
/// v_0..v_l, weight(v_i) = l - 2i, E v_i = [i] v_{i-1}, F v_i = [l-i] v_{i+1},
/// K v_i = q^{l-2i} v_i. The F action is the unique one satisfying
/// EF - FE = (K - K^{-1})/(q - q^{-1}) with this E and K.
template <class F>
ModuleRep<F> simple_module(long l, const Scalars<F>& ctx);

/// Tensor product with module structure via the coproduct:
/// E = E x 1 + K x E, F = F x K^{-1} + 1 x F, K = K x K; weights add.
/// Basis order: (a_i x b_j) -> i * dim(b) + j.
template <class F>
ModuleRep<F> tensor(const ModuleRep<F>& a, const ModuleRep<F>& b);

/// Coordinate subspace spanned by the basis vectors of weight w.
template <class F>
Subspace<F> weight_space(const ModuleRep<F>& m, long w);

/// Ker(E) intersected with the weight-w space, computed on that block.
template <class F>
Subspace<F> highest_weight_vectors(const ModuleRep<F>& m, long w);

/// Multiplicities by weight-space differences, cross-checked against the
/// dimensions of highest-weight spaces; InconsistentModule on disagreement.
template <class F>
Decomposition decompose(const ModuleRep<F>& m);

/// Smallest E-, F-, K-stable subspace containing the given row vectors.
template <class F>
Subspace<F> submodule_generated(const ModuleRep<F>& m, const Matrix<F>& vectors);

extern template class ModuleRep<RatFunc>;
extern template class ModuleRep<Rational>;
extern template ModuleRep<RatFunc> simple_module<RatFunc>(long, const Scalars<RatFunc>&);
extern template ModuleRep<Rational> simple_module<Rational>(long, const Scalars<Rational>&);
extern template ModuleRep<RatFunc> tensor<RatFunc>(const ModuleRep<RatFunc>&, const ModuleRep<RatFunc>&);
extern template ModuleRep<Rational> tensor<Rational>(const ModuleRep<Rational>&, const ModuleRep<Rational>&);
extern template Subspace<RatFunc> weight_space<RatFunc>(const ModuleRep<RatFunc>&, long);
extern template Subspace<Rational> weight_space<Rational>(const ModuleRep<Rational>&, long);
extern template Subspace<RatFunc> highest_weight_vectors<RatFunc>(const ModuleRep<RatFunc>&, long);
extern template Subspace<Rational> highest_weight_vectors<Rational>(const ModuleRep<Rational>&, long);
extern template Decomposition decompose<RatFunc>(const ModuleRep<RatFunc>&);
extern template Decomposition decompose<Rational>(const ModuleRep<Rational>&);
extern template Subspace<RatFunc> submodule_generated<RatFunc>(const ModuleRep<RatFunc>&, const Matrix<RatFunc>&);
extern template Subspace<Rational> submodule_generated<Rational>(const ModuleRep<Rational>&, const Matrix<Rational>&);

} // namespace braidsym

#endif
