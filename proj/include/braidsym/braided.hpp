#ifndef BRAIDSYM_BRAIDED_HPP
#define BRAIDSYM_BRAIDED_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "braidsym/module_rep.hpp"

namespace braidsym {

enum class PowerKind { Symmetric, Exterior };

inline std::string kind_name(PowerKind k) { return k == PowerKind::Symmetric ? "sym" : "ext"; }
PowerKind parse_kind(const std::string& s);

/// Size guards for the exact backend.
struct Limits {
    std::size_t max_block = 2000000; // largest materialized weight block (columns)
    long max_degree = 24;
};

/// The normalized braiding on V_l (x) V_l: the involution acting by (-1)^k
/// on the isotypic component of highest weight 2l-2k. Assembled from
/// isotypic projectors, so no completion of the quantized algebra is ever
/// represented.
///
/// Besides the operator matrix itself, this owns the +1/-1 eigenspace bases
/// and their annihilators in the dual; the latter carry the braided-power
/// constraints in a denominator-free form.
template <class F>
class BraidingOperator {
public:
    BraidingOperator(long l, const Scalars<F>& ctx);

    long l() const { return l_; }
    std::size_t dim() const { return sq_->dim(); } // (l+1)^2
    const Matrix<F>& matrix() const { return sigma_; }
    const ModuleRep<F>& tensor_square() const { return *sq_; }
    const Subspace<F>& plus_subspace() const { return plus_; }
    const Subspace<F>& minus_subspace() const { return minus_; }
    const Decomposition& plus_decomposition() const { return plus_decomp_; }
    const Decomposition& minus_decomposition() const { return minus_decomp_; }
    const Subspace<F>& eigenspace(PowerKind k) const {
        return k == PowerKind::Symmetric ? plus_ : minus_;
    }

    /// Weight-tagged primitive rows spanning an eigenspace, and spanning its
    /// annihilator in the dual. A vector of V (x) V lies in the +1 eigenspace
    /// iff every annihilator-of-plus row pairs to zero against it.
    const std::vector<std::pair<long, std::vector<F>>>& eigen_rows(PowerKind k) const {
        return k == PowerKind::Symmetric ? plus_rows_ : minus_rows_;
    }
    const std::vector<std::pair<long, std::vector<F>>>& annihilator_rows(PowerKind k) const {
        return k == PowerKind::Symmetric ? ann_plus_rows_ : ann_minus_rows_;
    }

private:
    long l_;
    std::shared_ptr<ModuleRep<F>> sq_;
    Matrix<F> sigma_;
    Subspace<F> plus_, minus_;
    Decomposition plus_decomp_, minus_decomp_;
    std::vector<std::pair<long, std::vector<F>>> plus_rows_, minus_rows_;
    std::vector<std::pair<long, std::vector<F>>> ann_plus_rows_, ann_minus_rows_;
};

template <class F>
BraidingOperator<F> build_sigma(long l, const Scalars<F>& ctx) {
    return BraidingOperator<F>(l, ctx);
}

/// Graded tower of braided powers of V_l.
///
/// Level n is the n-th braided symmetric (or exterior) power, the
/// intersection of the kernels of sigma_{i,i+1} -/+ id over all adjacent
/// slot pairs. It is computed without ever forming the (l+1)^n-dimensional
/// tensor power: level n+1 lives inside (level n) (x) V, and the one new
/// constraint only involves the last two tensor slots. Expressed over
/// (level n-1) (x) V (x) V coordinates it says that the trailing two-slot
/// component lies in the target eigenspace, i.e. that every annihilator
/// functional of that eigenspace contracts to zero. All work proceeds
/// block-by-block in the weight grading, fraction-free.
///
/// With `transposed` set, the tower intersects the kernels of the
/// transposed braiding instead. Those kernels are the annihilators of the
/// degree-n component of the quadratic ideal generated by the opposite
/// eigenspace, so the transposed tower's block dimensions are exactly the
/// weight dimensions of the quotient algebra T(V)/<gen> in degree n, and
/// its materialized rows are the linear functionals cutting the ideal out.
template <class F>
class PowerTower {
public:
    struct Level {
        long degree = 0;
        std::vector<long> weights;          // weight of each basis element
        Matrix<F> basis;                    // rows over (prev element, V index) pairs
        std::vector<std::size_t> pivots;    // marker pair column exclusive to each row
        std::optional<Matrix<F>> e, f;      // generator action on this level's basis
        std::size_t dim() const { return weights.size(); }
        std::map<long, long> weight_dims() const {
            std::map<long, long> d;
            for (long w : weights) ++d[w];
            return d;
        }
        std::map<long, std::vector<std::size_t>> blocks() const {
            std::map<long, std::vector<std::size_t>> b;
            for (std::size_t i = 0; i < weights.size(); ++i) b[weights[i]].push_back(i);
            return b;
        }
    };

    /// A prebuilt braiding may be shared between towers over the same V_l.
    PowerTower(long l, PowerKind kind, const Scalars<F>& ctx, bool transposed = false,
               Limits limits = {}, std::shared_ptr<BraidingOperator<F>> sigma = nullptr);

    long l() const { return l_; }
    PowerKind kind() const { return kind_; }
    const BraidingOperator<F>& braiding() const { return *sigma_; }
    const Scalars<F>& scalars() const { return ctx_; }

    const Level& level(long n);
    std::map<long, long> weight_dims(long n) { return level(n).weight_dims(); }
    long dim(long n) { return static_cast<long>(level(n).dim()); }

    /// Decomposition of level n; when the module action is tracked
    /// (untransposed towers) the weight-difference multiplicities are
    /// cross-checked against highest-weight space dimensions.
    Decomposition decomposition(long n);

    /// Basis of level n in full tensor-power coordinates; row-major
    /// dim x (l+1)^n. Guarded by limits.max_block.
    const Matrix<F>& materialize(long n);

private:
    void extend();
    void compute_action(Level& next, const Level& prev);

    long l_;
    PowerKind kind_;
    Scalars<F> ctx_;
    bool transposed_;
    Limits limits_;
    std::shared_ptr<BraidingOperator<F>> sigma_;
    std::shared_ptr<ModuleRep<F>> v_;
    // constraint functionals on the trailing V (x) V slots, keyed by the
    // weight of their coordinate support
    std::map<long, std::vector<std::vector<F>>> phi_;
    std::vector<Level> levels_; // levels_[n] = degree n
    std::vector<Matrix<F>> materialized_;
};

/// Result of one braided power computation.
struct BraidedPowerResult {
    long l = 0;
    long n = 0;
    PowerKind kind = PowerKind::Symmetric;
    long dim = 0;
    std::map<long, long> weight_dims;
    Decomposition decomposition;
};

template <class F>
BraidedPowerResult braided_power(long l, long n, PowerKind kind, const Scalars<F>& ctx,
                                 Limits limits = {});

/// Weight-blocked subspace of the n-th tensor power; the carrier for the
/// degree-n component of a quadratic ideal. Blocks are held as fraction-free
/// echelon bases; RREF views are materialized on demand.
template <class F>
struct BlockedSubspace {
    long l = 0;
    long n = 0;
    std::map<long, std::vector<std::size_t>> block_index; // weight -> ambient indices
    std::map<long, EchelonBasis<F>> blocks;               // weight -> echelon basis

    long dim() const {
        long d = 0;
        for (const auto& [w, s] : blocks) d += static_cast<long>(s.dim());
        return d;
    }
    std::map<long, long> weight_dims() const {
        std::map<long, long> d;
        for (const auto& [w, s] : blocks)
            if (s.dim() > 0) d[w] = static_cast<long>(s.dim());
        return d;
    }
    /// Membership test for a full-coordinate vector supported on one block.
    bool contains(long w, const std::vector<F>& full_vector) const;
    /// Row-reduced basis of one block, in block-local coordinates.
    Subspace<F> block_subspace(long w) const;
    /// Assembles a single RREF Subspace of the full (l+1)^n space.
    Subspace<F> to_subspace() const;
};

/// Degree-n component sum_{i} V^i (x) gen (x) V^{n-2-i} of the two-sided
/// ideal generated by gen inside T(V), computed per weight block. gen must
/// be a subspace of V (x) V with weight-homogeneous RREF rows (any
/// eigenspace of the braiding qualifies).
template <class F>
BlockedSubspace<F> ideal_component(long l, long n, const Subspace<F>& gen, const Scalars<F>& ctx,
                                   Limits limits = {});

/// One row of a graded-algebra report: degree, dimension and decomposition
/// by the intersection method, and agreement with the quotient method.
struct GradedRow {
    long n = 0;
    long dim = 0;
    Decomposition components;
    long quotient_dim = 0;
    Decomposition quotient_components;
    bool agree = false;
};

struct GradedReport {
    long l = 0;
    PowerKind kind = PowerKind::Symmetric;
    std::string backend;
    std::vector<GradedRow> rows;
    bool all_agree() const {
        for (const auto& r : rows)
            if (!r.agree) return false;
        return true;
    }
    std::string json() const;
    std::string table() const;
};

/// For each degree n <= n_max computes the braided power twice -- as the
/// kernel intersection and through the quotient by the quadratic ideal --
/// decomposes both and records agreement.
template <class F>
GradedReport graded_algebra_report(long l, PowerKind kind, long n_max, const Scalars<F>& ctx,
                                   Limits limits = {});

/// Closed-form decomposition of the n-th braided symmetric power:
/// odd l: sum of V_{nl-4i} for i = 0..(l-1)/2; even l: i = 0..floor(nl/4).
Decomposition symmetric_power_formula(long l, long n);
/// Closed form for exterior powers: degree 2 from the braiding split,
/// degree 3 nonzero only for even l, zero in all degrees >= 4 (and >= 3 for
/// odd l).
Decomposition exterior_power_formula(long l, long n);

struct TheoremCheck {
    long l = 0;
    long n = 0;
    std::string kind;
    Decomposition expected;
    Decomposition computed;
    bool pass = false;
};

struct TheoremReport {
    std::vector<TheoremCheck> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Compares computed symmetric/exterior decompositions of V_l against the
/// closed forms for every degree 2..n_max. Failures are data, not errors.
template <class F>
TheoremReport verify_main_theorem(long l, long n_max, const Scalars<F>& ctx, Limits limits = {});

struct HwEmbeddingCheck {
    long i = 0;          // index of the degree-2 highest weight vector
    long weight = 0;     // n*l - 4i
    bool e_annihilates = false;
    bool outside_ideal = false;
};

struct HwEmbeddingReport {
    long l = 0, n = 0;
    std::vector<HwEmbeddingCheck> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.e_annihilates || !c.outside_ideal) return false;
        return true;
    }
};

/// For each highest weight vector v_i of the braided symmetric square,
/// checks that v_i (x) v_0^{(n-2)} is a highest weight vector of V_l^{(n)}
/// and does NOT lie in the degree-n component of the exterior ideal.
/// Ideal membership is decided by pairing against the annihilator of the
/// ideal (the transposed symmetric tower in full coordinates).
template <class F>
HwEmbeddingReport hw_embedding_check(long l, long n, const Scalars<F>& ctx, Limits limits = {});

extern template class BraidingOperator<RatFunc>;
extern template class BraidingOperator<Rational>;
extern template class PowerTower<RatFunc>;
extern template class PowerTower<Rational>;
extern template struct BlockedSubspace<RatFunc>;
extern template struct BlockedSubspace<Rational>;
extern template BraidedPowerResult braided_power<RatFunc>(long, long, PowerKind, const Scalars<RatFunc>&, Limits);
extern template BraidedPowerResult braided_power<Rational>(long, long, PowerKind, const Scalars<Rational>&, Limits);
extern template BlockedSubspace<RatFunc> ideal_component<RatFunc>(long, long, const Subspace<RatFunc>&, const Scalars<RatFunc>&, Limits);
extern template BlockedSubspace<Rational> ideal_component<Rational>(long, long, const Subspace<Rational>&, const Scalars<Rational>&, Limits);
extern template GradedReport graded_algebra_report<RatFunc>(long, PowerKind, long, const Scalars<RatFunc>&, Limits);
extern template GradedReport graded_algebra_report<Rational>(long, PowerKind, long, const Scalars<Rational>&, Limits);
extern template TheoremReport verify_main_theorem<RatFunc>(long, long, const Scalars<RatFunc>&, Limits);
extern template TheoremReport verify_main_theorem<Rational>(long, long, const Scalars<Rational>&, Limits);
extern template HwEmbeddingReport hw_embedding_check<RatFunc>(long, long, const Scalars<RatFunc>&, Limits);
extern template HwEmbeddingReport hw_embedding_check<Rational>(long, long, const Scalars<Rational>&, Limits);

} // namespace braidsym

#endif
