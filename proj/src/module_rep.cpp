#include "braidsym/module_rep.hpp"

#include <algorithm>
#include <sstream>

namespace braidsym {

long Decomposition::total_dim() const {
    long d = 0;
    for (const auto& [hw, mult] : components) d += mult * (hw + 1);
    return d;
}

long Decomposition::multiplicity(long hw) const {
    for (const auto& [h, m] : components)
        if (h == hw) return m;
    return 0;
}

std::map<long, long> Decomposition::character() const {
    std::map<long, long> c;
    for (const auto& [hw, mult] : components)
        for (long w = -hw; w <= hw; w += 2) c[w] += mult;
    return c;
}

std::string Decomposition::str() const {
    if (components.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [hw, mult] : components) {
        if (!first) os << " + ";
        first = false;
        if (mult != 1) os << mult << "*";
        os << "V" << hw;
    }
    return os.str();
}

std::string Decomposition::json() const {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (const auto& [hw, mult] : components) {
        if (!first) os << ",";
        first = false;
        os << "{\"hw\":" << hw << ",\"mult\":" << mult << "}";
    }
    os << "]";
    return os.str();
}

Decomposition decomposition_from_weight_dims(const std::map<long, long>& weight_dims) {
    Decomposition d;
    long total = 0;
    for (const auto& [w, n] : weight_dims) {
        if (n < 0) throw InconsistentModule("negative weight-space dimension");
        total += n;
        if (w < 0) continue;
        auto it = weight_dims.find(w + 2);
        long above = it == weight_dims.end() ? 0 : it->second;
        long mult = n - above;
        if (mult < 0) throw InconsistentModule("weight dimensions do not form a character");
        if (mult > 0) d.components.emplace_back(w, mult);
    }
    std::sort(d.components.begin(), d.components.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    if (d.total_dim() != total)
        throw InconsistentModule("character does not account for all weights (asymmetric weight multiset)");
    return d;
}

template <class F>
bool ModuleRep<F>::is_classical() const {
    if constexpr (std::is_same_v<F, Rational>) return ctx_.q0.is_one();
    else return false;
}

template <class F>
void ModuleRep<F>::verify_relations() const {
    const std::size_t n = dim();
    if (e_.rows() != n || e_.cols() != n || f_.rows() != n || f_.cols() != n)
        throw InconsistentModule("generator matrix size mismatch");
    // E raises weight by 2, F lowers by 2.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!e_(i, j).is_zero() && weights_[i] != weights_[j] + 2)
                throw InconsistentModule("E does not raise weight by 2");
            if (!f_(i, j).is_zero() && weights_[i] != weights_[j] - 2)
                throw InconsistentModule("F does not lower weight by 2");
        }
    // EF - FE = diag([w]) -- the quantum number at weight w, which is the
    // classical eigenvalue w itself at q = 1.
    Matrix<F> comm = e_ * f_ - f_ * e_;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            F want = (i == j) ? ctx_.q_int(weights_[i]) : F(0);
            if (!(comm(i, j) - want).is_zero())
                throw InconsistentModule("EF - FE != (K - K^-1)/(q - q^-1)");
        }
    // K E K^-1 = q^2 E and K F K^-1 = q^-2 F hold automatically once the
    // weight-raising pattern above does.
}

template <class F>
ModuleRep<F> simple_module(long l, const Scalars<F>& ctx) {
    if (l < 0) throw UsageError("simple_module: highest weight must be >= 0");
    const std::size_t n = static_cast<std::size_t>(l + 1);
    std::vector<long> weights(n);
    std::vector<std::string> labels(n);
    Matrix<F> e(n, n), f(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        long ii = static_cast<long>(i);
        weights[i] = l - 2 * ii;
        labels[i] = "v" + std::to_string(ii);
        if (i + 1 < n) {
            e(i, i + 1) = ctx.q_int(ii + 1);     // E v_{i+1} = [i+1] v_i
            f(i + 1, i) = ctx.q_int(l - ii);     // F v_i = [l-i] v_{i+1}
        }
    }
    return ModuleRep<F>(ctx, std::move(weights), std::move(e), std::move(f), std::move(labels));
}

template <class F>
ModuleRep<F> tensor(const ModuleRep<F>& a, const ModuleRep<F>& b) {
    if constexpr (std::is_same_v<F, Rational>) {
        if (!(a.scalars().q0 == b.scalars().q0))
            throw FlavorMismatch("tensor: operands specialized at different q0");
    }
    const std::size_t da = a.dim(), db = b.dim(), n = da * db;
    std::vector<long> weights(n);
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j) {
            weights[i * db + j] = a.weights()[i] + b.weights()[j];
            labels[i * db + j] = a.labels()[i] + "*" + b.labels()[j];
        }
    Matrix<F> e(n, n), f(n, n);
    // E = E x 1 + K x E ; F = F x K^{-1} + 1 x F.
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t k = 0; k < da; ++k) {
            if (a.e_mat()(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < db; ++j) e(i * db + j, k * db + j) += a.e_mat()(i, k);
        }
    for (std::size_t i = 0; i < da; ++i) {
        F ki = a.scalars().q_power(a.weights()[i]);
        for (std::size_t j = 0; j < db; ++j)
            for (std::size_t t = 0; t < db; ++t) {
                if (b.e_mat()(j, t).is_zero()) continue;
                e(i * db + j, i * db + t) += ki * b.e_mat()(j, t);
            }
    }
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t k = 0; k < da; ++k) {
            if (a.f_mat()(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < db; ++j) {
                F kj = b.scalars().q_power(-b.weights()[j]);
                f(i * db + j, k * db + j) += a.f_mat()(i, k) * kj;
            }
        }
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j)
            for (std::size_t t = 0; t < db; ++t) {
                if (b.f_mat()(j, t).is_zero()) continue;
                f(i * db + j, i * db + t) += b.f_mat()(j, t);
            }
    return ModuleRep<F>(a.scalars(), std::move(weights), std::move(e), std::move(f), std::move(labels));
}

template <class F>
Subspace<F> weight_space(const ModuleRep<F>& m, long w) {
    auto idx = m.weight_indices(w);
    Matrix<F> rows(idx.size(), m.dim());
    for (std::size_t r = 0; r < idx.size(); ++r) rows(r, idx[r]) = F(1);
    return Subspace<F>::span(rows);
}

template <class F>
Subspace<F> highest_weight_vectors(const ModuleRep<F>& m, long w) {
    // Restrict E to the block weight w -> weight w+2 and solve there.
    auto from = m.weight_indices(w);
    auto to = m.weight_indices(w + 2);
    Matrix<F> block(to.size(), from.size());
    for (std::size_t i = 0; i < to.size(); ++i)
        for (std::size_t j = 0; j < from.size(); ++j) block(i, j) = m.e_mat()(to[i], from[j]);
    Subspace<F> k = kernel(block);
    Matrix<F> rows(k.dim(), m.dim());
    for (std::size_t r = 0; r < k.dim(); ++r)
        for (std::size_t j = 0; j < from.size(); ++j) rows(r, from[j]) = k.basis()(r, j);
    return Subspace<F>::span(rows);
}

template <class F>
Decomposition decompose(const ModuleRep<F>& m) {
    Decomposition d = decomposition_from_weight_dims(m.weight_dims());
    // Independent route: multiplicity of V_w equals the dimension of the
    // highest-weight space at w.
    for (const auto& [w, n] : m.weight_dims()) {
        if (w < 0) continue;
        long hw_dim = static_cast<long>(highest_weight_vectors(m, w).dim());
        if (hw_dim != d.multiplicity(w))
            throw InconsistentModule("weight-difference and E-kernel multiplicities disagree at weight " +
                                     std::to_string(w));
    }
    return d;
}

template <class F>
Subspace<F> submodule_generated(const ModuleRep<F>& m, const Matrix<F>& vectors) {
    EchelonBasis<F> acc(m.dim());
    std::vector<std::size_t> worklist;
    for (std::size_t r = 0; r < vectors.rows(); ++r)
        if (auto id = acc.insert(vectors.row(r))) worklist.push_back(*id);
    while (!worklist.empty()) {
        std::size_t r = worklist.back();
        worklist.pop_back();
        std::vector<F> v = acc.row(r); // copy: insertions may reallocate
        if (auto id = acc.insert(m.e_mat().apply(v))) worklist.push_back(*id);
        if (auto id = acc.insert(m.f_mat().apply(v))) worklist.push_back(*id);
    }
    return acc.to_subspace();
}

template class ModuleRep<RatFunc>;
template class ModuleRep<Rational>;
template ModuleRep<RatFunc> simple_module<RatFunc>(long, const Scalars<RatFunc>&);
template ModuleRep<Rational> simple_module<Rational>(long, const Scalars<Rational>&);
template ModuleRep<RatFunc> tensor<RatFunc>(const ModuleRep<RatFunc>&, const ModuleRep<RatFunc>&);
template ModuleRep<Rational> tensor<Rational>(const ModuleRep<Rational>&, const ModuleRep<Rational>&);
template Subspace<RatFunc> weight_space<RatFunc>(const ModuleRep<RatFunc>&, long);
template Subspace<Rational> weight_space<Rational>(const ModuleRep<Rational>&, long);
template Subspace<RatFunc> highest_weight_vectors<RatFunc>(const ModuleRep<RatFunc>&, long);
template Subspace<Rational> highest_weight_vectors<Rational>(const ModuleRep<Rational>&, long);
template Decomposition decompose<RatFunc>(const ModuleRep<RatFunc>&);
template Decomposition decompose<Rational>(const ModuleRep<Rational>&);
template Subspace<RatFunc> submodule_generated<RatFunc>(const ModuleRep<RatFunc>&, const Matrix<RatFunc>&);
template Subspace<Rational> submodule_generated<Rational>(const ModuleRep<Rational>&, const Matrix<Rational>&);

} // namespace braidsym
