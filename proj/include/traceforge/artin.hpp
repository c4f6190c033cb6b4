#pragma once

#include <algorithm>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "traceforge/matrix.hpp"
#include "traceforge/semigroup.hpp"
#include "traceforge/subspace.hpp"

namespace traceforge {

/// Finite-dimensional commutative local algebra given by structure constants.
///
/// table[i][j] is the coordinate vector of e_i * e_j. The basis element at
/// unit_index is the identity and the remaining basis elements span the
/// maximal ideal. Copies share the table.
template <ExactScalar E>
class ArtinAlgebra {
public:
    using Vector = std::vector<E>;
    using Table = std::vector<std::vector<Vector>>;

    /// Validates commutativity, associativity, identity and locality.
    static ArtinAlgebra from_table(FieldSpec field, std::vector<std::string> labels, Table table,
                                   std::size_t unit_index = 0) {
        const std::size_t n = labels.size();
        require(n >= 1, ErrorCode::InvalidAlgebra, "algebra must have dimension >= 1");
        require(table.size() == n && unit_index < n, ErrorCode::InvalidAlgebra, "table shape");
        for (const auto& row : table) {
            require(row.size() == n, ErrorCode::InvalidAlgebra, "table shape");
            for (const auto& v : row) {
                require(v.size() == n, ErrorCode::InvalidAlgebra, "table shape");
                for (const auto& x : v) require(x.field() == field, ErrorCode::FieldMismatch, "table entry field");
            }
        }
        ArtinAlgebra a(std::make_shared<Data>(Data{field, std::move(labels), std::move(table), unit_index}));
        a.validate();
        return a;
    }

    const FieldSpec& field() const { return d_->field; }
    std::size_t dim() const { return d_->labels.size(); }
    const std::vector<std::string>& labels() const { return d_->labels; }
    std::size_t unit_index() const { return d_->unit; }
    const Table& table() const { return d_->table; }

    Vector basis_vector(std::size_t i) const {
        Vector v(dim(), E::zero(field()));
        v[i] = E::one(field());
        return v;
    }

    Vector multiply(const Vector& a, const Vector& b) const {
        Vector out(dim(), E::zero(field()));
        for (std::size_t i = 0; i < dim(); ++i) {
            if (a[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim(); ++j) {
                if (b[j].is_zero()) continue;
                const E s = a[i] * b[j];
                const auto& prod = d_->table[i][j];
                for (std::size_t k = 0; k < dim(); ++k)
                    if (!prod[k].is_zero()) out[k] += s * prod[k];
            }
        }
        return out;
    }

    /// Matrix of x -> e_i * x on column vectors.
    Matrix<E> left_multiplication(std::size_t i) const {
        Matrix<E> m(field(), dim(), dim());
        for (std::size_t j = 0; j < dim(); ++j)
            for (std::size_t k = 0; k < dim(); ++k) m(k, j) = d_->table[i][j][k];
        return m;
    }

    std::vector<std::size_t> maximal_ideal_indices() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < dim(); ++i)
            if (i != d_->unit) out.push_back(i);
        return out;
    }

    std::string describe_vector(const Vector& v) const {
        std::string s;
        for (std::size_t i = 0; i < dim(); ++i) {
            if (v[i].is_zero()) continue;
            std::string c = v[i].to_string();
            if (!s.empty()) s += " + ";
            s += (c == "1" ? "" : c + "*") + d_->labels[i];
        }
        return s.empty() ? "0" : s;
    }

    friend bool operator==(const ArtinAlgebra& a, const ArtinAlgebra& b) {
        return a.d_ == b.d_ || (a.field() == b.field() && a.labels() == b.labels() && a.table() == b.table() &&
                                a.unit_index() == b.unit_index());
    }

private:
    struct Data {
        FieldSpec field;
        std::vector<std::string> labels;
        Table table;
        std::size_t unit;
    };

    explicit ArtinAlgebra(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

    void validate() const {
        const std::size_t n = dim();
        const auto& t = d_->table;
        for (std::size_t i = 0; i < n; ++i) {
            require(t[d_->unit][i] == basis_vector(i), ErrorCode::InvalidAlgebra, "unit index is not the identity");
            for (std::size_t j = 0; j < n; ++j) require(t[i][j] == t[j][i], ErrorCode::InvalidAlgebra, "not commutative");
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    require(multiply(t[i][j], basis_vector(k)) == multiply(basis_vector(i), t[j][k]),
                            ErrorCode::InvalidAlgebra, "not associative");
        // The non-unit basis elements must span a nilpotent ideal.
        const auto mi = maximal_ideal_indices();
        std::vector<Vector> power;
        for (auto i : mi) power.push_back(basis_vector(i));
        for (std::size_t step = 0; step < n && !power.empty(); ++step) {
            std::vector<Vector> next;
            for (const auto& v : power)
                for (auto i : mi) {
                    auto w = multiply(v, basis_vector(i));
                    require(w[d_->unit].is_zero(), ErrorCode::InvalidAlgebra, "maximal ideal is not closed");
                    next.push_back(std::move(w));
                }
            auto red = rref(Matrix<E>::from_rows(field(), next, n));
            power.clear();
            for (std::size_t r = 0; r < red.matrix.rows(); ++r) power.push_back(red.matrix.row_vector(r));
        }
        require(power.empty(), ErrorCode::InvalidAlgebra, "maximal ideal is not nilpotent");
    }

    std::shared_ptr<const Data> d_;
};

/// An ideal of an ArtinAlgebra stored as an RREF basis.
template <ExactScalar E>
class SubIdeal {
public:
    SubIdeal(ArtinAlgebra<E> a, const std::vector<std::vector<E>>& spanning)
        : a_(std::move(a)), basis_(a_.field()) {
        auto red = rref(Matrix<E>::from_rows(a_.field(), spanning, a_.dim()));
        basis_ = std::move(red.matrix);
        pivots_ = std::move(red.pivots);
    }

    static SubIdeal zero(const ArtinAlgebra<E>& a) { return SubIdeal(a, {}); }
    static SubIdeal whole(const ArtinAlgebra<E>& a) {
        std::vector<std::vector<E>> rows;
        for (std::size_t i = 0; i < a.dim(); ++i) rows.push_back(a.basis_vector(i));
        return SubIdeal(a, rows);
    }
    static SubIdeal maximal(const ArtinAlgebra<E>& a) {
        std::vector<std::vector<E>> rows;
        for (auto i : a.maximal_ideal_indices()) rows.push_back(a.basis_vector(i));
        return SubIdeal(a, rows);
    }

    /// Smallest ideal containing the given elements.
    static SubIdeal generated_by(const ArtinAlgebra<E>& a, const std::vector<std::vector<E>>& gens) {
        std::vector<std::vector<E>> rows;
        for (const auto& g : gens)
            for (std::size_t i = 0; i < a.dim(); ++i) rows.push_back(a.multiply(a.basis_vector(i), g));
        return SubIdeal(a, rows);
    }

    const ArtinAlgebra<E>& algebra() const { return a_; }
    std::size_t dim() const { return basis_.rows(); }
    bool is_zero() const { return dim() == 0; }
    const Matrix<E>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(std::vector<E> v) const {
        reduce_against(v, basis_, pivots_);
        return is_zero_vector<E>(v);
    }
    bool contains(const SubIdeal& o) const {
        for (std::size_t r = 0; r < o.dim(); ++r)
            if (!contains(o.basis_.row_vector(r))) return false;
        return true;
    }

    bool is_ideal() const {
        for (std::size_t r = 0; r < dim(); ++r)
            for (std::size_t i = 0; i < a_.dim(); ++i)
                if (!contains(a_.multiply(a_.basis_vector(i), basis_.row_vector(r)))) return false;
        return true;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s = "(";
        for (std::size_t r = 0; r < dim(); ++r) s += (r ? ", " : "") + a_.describe_vector(basis_.row_vector(r));
        return s + ")";
    }

    friend bool operator==(const SubIdeal& x, const SubIdeal& y) { return x.basis_ == y.basis_; }

private:
    ArtinAlgebra<E> a_;
    Matrix<E> basis_;
    std::vector<std::size_t> pivots_;
};

// ---- presets --------------------------------------------------------------

/// K[x]/(x^l).
template <ExactScalar E>
ArtinAlgebra<E> truncated_dvr(FieldSpec field, int l) {
    require(l >= 1, ErrorCode::InvalidArgument, "truncation length must be >= 1");
    const std::size_t n = static_cast<std::size_t>(l);
    std::vector<std::string> labels;
    typename ArtinAlgebra<E>::Table t(n, std::vector<std::vector<E>>(n, std::vector<E>(n, E::zero(field))));
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back(i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i));
        for (std::size_t j = 0; j < n; ++j)
            if (i + j < n) t[i][j][i + j] = E::one(field);
    }
    return ArtinAlgebra<E>::from_table(field, labels, t);
}

/// K[x,y]/(x,y)^2.
template <ExactScalar E>
ArtinAlgebra<E> square_zero_two_vars(FieldSpec field) {
    std::vector<std::vector<std::vector<E>>> t(3, std::vector<std::vector<E>>(3, std::vector<E>(3, E::zero(field))));
    for (std::size_t i = 0; i < 3; ++i) {
        t[0][i][i] = E::one(field);
        t[i][0][i] = E::one(field);
    }
    return ArtinAlgebra<E>::from_table(field, {"1", "x", "y"}, t);
}

/// K[x,y]/(x^2 - y^2, xy), basis 1, x, y, x^2. Gorenstein with socle x^2.
template <ExactScalar E>
ArtinAlgebra<E> gorenstein_xy(FieldSpec field) {
    std::vector<std::vector<std::vector<E>>> t(4, std::vector<std::vector<E>>(4, std::vector<E>(4, E::zero(field))));
    for (std::size_t i = 0; i < 4; ++i) {
        t[0][i][i] = E::one(field);
        t[i][0][i] = E::one(field);
    }
    t[1][1][3] = E::one(field); // x*x = x^2
    t[2][2][3] = E::one(field); // y*y = x^2
    return ArtinAlgebra<E>::from_table(field, {"1", "x", "y", "x^2"}, t);
}

namespace detail {
template <ExactScalar E>
ArtinAlgebra<E> monomial_algebra(FieldSpec field, const std::vector<int>& exps,
                                 const std::function<bool(int)>& survives) {
    const std::size_t n = exps.size();
    std::vector<std::string> labels;
    typename ArtinAlgebra<E>::Table t(n, std::vector<std::vector<E>>(n, std::vector<E>(n, E::zero(field))));
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back(exps[i] == 0 ? "1" : "t^" + std::to_string(exps[i]));
        for (std::size_t j = 0; j < n; ++j) {
            const int s = exps[i] + exps[j];
            if (!survives(s)) continue;
            const auto it = std::find(exps.begin(), exps.end(), s);
            require(it != exps.end(), ErrorCode::InvalidAlgebra, "monomial basis not closed");
            t[i][j][static_cast<std::size_t>(it - exps.begin())] = E::one(field);
        }
    }
    return ArtinAlgebra<E>::from_table(field, labels, t);
}
} // namespace detail

/// R / c for R = K[[H]]: basis t^h for members h below the conductor.
template <ExactScalar E>
ArtinAlgebra<E> semigroup_quotient(FieldSpec field, const NumericalSemigroup& h) {
    require(!h.is_natural(), ErrorCode::ZeroQuotient, "the conductor of K[[t]] is the whole ring");
    require(static_cast<int>(h.small_elements().size()) <= 12, ErrorCode::WorkloadExceeded, "R/c too large");
    const int c = h.conductor();
    return detail::monomial_algebra<E>(field, h.small_elements(), [c](int s) { return s < c; });
}

/// R / t^a R for a positive member a: basis t^w for w in Ap_a(H).
template <ExactScalar E>
ArtinAlgebra<E> apery_quotient(FieldSpec field, const NumericalSemigroup& h, int a) {
    const auto ap = apery_set(h, a);
    return detail::monomial_algebra<E>(field, ap, [&h, a](int s) { return !h.contains(static_cast<long>(s) - a); });
}

// ---- ideal theory ---------------------------------------------------------

/// (0 : m).
template <ExactScalar E>
SubIdeal<E> socle(const ArtinAlgebra<E>& a) {
    Matrix<E> system(a.field(), 0, a.dim());
    for (auto i : a.maximal_ideal_indices()) {
        const auto l = a.left_multiplication(i);
        for (std::size_t r = 0; r < l.rows(); ++r) system.append_row(l.row(r));
    }
    return SubIdeal<E>(a, solve_homogeneous(system));
}

template <ExactScalar E>
bool is_gorenstein(const ArtinAlgebra<E>& a) {
    return socle(a).dim() == 1;
}

/// Sum of f(I) over f in Hom_A(I, A), from the definition.
///
/// Unknowns are the images f(x_1), ..., f(x_k) of the basis of I; A-linearity
/// says f(e_b x_j) = e_b f(x_j) for every basis element e_b, where e_b x_j is
/// expanded in the basis of I.
template <ExactScalar E>
SubIdeal<E> hom_trace(const SubIdeal<E>& ideal) {
    const auto& a = ideal.algebra();
    const std::size_t n = a.dim(), k = ideal.dim();
    if (k == 0) return SubIdeal<E>::zero(a);
    Matrix<E> system(a.field(), 0, n * k);
    for (auto b : a.maximal_ideal_indices()) {
        const auto lb = a.left_multiplication(b);
        for (std::size_t j = 0; j < k; ++j) {
            const auto prod = a.multiply(a.basis_vector(b), ideal.basis().row_vector(j));
            // coordinates of prod in the RREF basis are its pivot entries
            std::vector<E> coords(k, E::zero(a.field()));
            for (std::size_t l = 0; l < k; ++l) coords[l] = prod[ideal.pivots()[l]];
            for (std::size_t m = 0; m < n; ++m) {
                std::vector<E> row(n * k, E::zero(a.field()));
                for (std::size_t l = 0; l < k; ++l) row[l * n + m] += coords[l];
                for (std::size_t mp = 0; mp < n; ++mp) row[j * n + mp] -= lb(m, mp);
                system.append_row(row);
            }
        }
    }
    std::vector<std::vector<E>> images;
    for (const auto& sol : solve_homogeneous(system))
        for (std::size_t j = 0; j < k; ++j)
            images.emplace_back(sol.begin() + static_cast<long>(j * n), sol.begin() + static_cast<long>((j + 1) * n));
    return SubIdeal<E>(a, images);
}

template <ExactScalar E>
bool is_trace_ideal(const SubIdeal<E>& i) {
    return hom_trace(i) == i;
}

/// Every ideal of an algebra over F_p, duplicate-free, sorted by dimension.
inline std::vector<SubIdeal<Residue>> enumerate_ideals(const ArtinAlgebra<Residue>& a) {
    std::vector<Matrix<Residue>> ops;
    for (auto i : a.maximal_ideal_indices()) ops.push_back(a.left_multiplication(i));
    auto subspaces = enumerate_invariant_subspaces(a.field(), a.dim(), ops);
    std::vector<SubIdeal<Residue>> out;
    for (const auto& s : subspaces.subspaces) {
        std::vector<std::vector<Residue>> rows;
        for (std::size_t r = 0; r < s.rows(); ++r) rows.push_back(s.row_vector(r));
        out.emplace_back(a, rows);
    }
    return out;
}

inline std::vector<SubIdeal<Rational>> enumerate_ideals(const ArtinAlgebra<Rational>&) {
    fail(ErrorCode::InfiniteField, "ideal enumeration over Q is not finite");
}

/// Trace ideals among all ideals; the zero ideal is always included.
template <ExactScalar E>
std::vector<SubIdeal<E>> enumerate_trace_ideals_artinian(const ArtinAlgebra<E>& a) {
    std::vector<SubIdeal<E>> out;
    for (auto& i : enumerate_ideals(a))
        if (is_trace_ideal(i)) out.push_back(std::move(i));
    return out;
}

template <ExactScalar E>
struct SeparationReport {
    std::vector<SubIdeal<E>> ideals;
    std::size_t distinct = 0;
    bool all_trace = true;
};

/// Forms (u + a v) for each sample a; in a Gorenstein algebra with u, v
/// independent modulo m^2 these are pairwise distinct trace ideals.
template <ExactScalar E>
SeparationReport<E> gorenstein_family_separation(const ArtinAlgebra<E>& a, const std::vector<E>& u,
                                                 const std::vector<E>& v, const std::vector<E>& samples) {
    require(is_gorenstein(a), ErrorCode::NotGorenstein, "socle is not one-dimensional");
    require(u.size() == a.dim() && v.size() == a.dim(), ErrorCode::InvalidArgument, "vector length");
    require(u[a.unit_index()].is_zero() && v[a.unit_index()].is_zero(), ErrorCode::DependentGenerators,
            "generators must lie in the maximal ideal");
    const auto m = SubIdeal<E>::maximal(a);
    std::vector<std::vector<E>> m2;
    for (std::size_t r = 0; r < m.dim(); ++r)
        for (std::size_t s = 0; s < m.dim(); ++s) m2.push_back(a.multiply(m.basis().row_vector(r), m.basis().row_vector(s)));
    const SubIdeal<E> msq(a, m2);
    auto rows = m2;
    rows.push_back(u);
    rows.push_back(v);
    require(rank(Matrix<E>::from_rows(a.field(), rows, a.dim())) == msq.dim() + 2, ErrorCode::DependentGenerators,
            "u and v are dependent modulo m^2");
    for (std::size_t i = 0; i < samples.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            require(!(samples[i] == samples[j]), ErrorCode::InvalidArgument, "samples must be distinct");

    SeparationReport<E> rep;
    for (const auto& s : samples) {
        std::vector<E> g(a.dim(), E::zero(a.field()));
        for (std::size_t i = 0; i < a.dim(); ++i) g[i] = u[i] + s * v[i];
        auto ideal = SubIdeal<E>::generated_by(a, {g});
        rep.all_trace = rep.all_trace && is_trace_ideal(ideal);
        if (std::none_of(rep.ideals.begin(), rep.ideals.end(), [&](const SubIdeal<E>& x) { return x == ideal; }))
            ++rep.distinct;
        rep.ideals.push_back(std::move(ideal));
    }
    return rep;
}

} // namespace traceforge
