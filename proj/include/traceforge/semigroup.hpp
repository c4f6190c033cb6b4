#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <memory>
#include <numeric>
#include <queue>
#include <sstream>
#include <string>
#include <vector>

#include "traceforge/error.hpp"

namespace traceforge {

/// A numerical semigroup H: a cofinite additive submonoid of N_0.
///
/// Values are immutable and share their tables, so copies are cheap and can
/// be handed to worker threads freely.
class NumericalSemigroup {
    struct Data {
        std::vector<int> minimal_generators;
        std::vector<int> small_elements; // members below the conductor
        int frobenius = -1;
        std::vector<char> table;         // membership on [0, table.size())
    };

public:
    /// Conductor above which construction refuses to build tables.
    static constexpr int kMaxConductor = 1 << 20;

    static NumericalSemigroup natural() { return from_generators({1}); }

    static NumericalSemigroup from_generators(const std::vector<long>& gens) {
        require(!gens.empty(), ErrorCode::EmptyGenerators, "no generators given");
        long g = 0;
        for (long x : gens) {
            require(x > 0, ErrorCode::InvalidArgument, "generators must be positive");
            require(x <= kMaxConductor, ErrorCode::BoundTooLarge, "generator too large");
            g = std::gcd(g, x);
        }
        require(g == 1, ErrorCode::NotCofinite, "generators are not cofinite (gcd " + std::to_string(g) + ")");

        // Least member in each residue class modulo the smallest generator
        // (Dijkstra over residues).
        const int m = static_cast<int>(*std::min_element(gens.begin(), gens.end()));
        constexpr long kInf = std::numeric_limits<long>::max();
        std::vector<long> w(m, kInf);
        w[0] = 0;
        using Item = std::pair<long, int>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
        pq.push({0, 0});
        while (!pq.empty()) {
            auto [d, r] = pq.top();
            pq.pop();
            if (d != w[r]) continue;
            for (long x : gens) {
                const int r2 = static_cast<int>((r + x) % m);
                if (d + x < w[r2]) {
                    w[r2] = d + x;
                    pq.push({w[r2], r2});
                }
            }
        }
        const long frob = *std::max_element(w.begin(), w.end()) - m;
        require(frob + 1 <= kMaxConductor, ErrorCode::BoundTooLarge, "conductor too large");
        std::vector<int> members;
        for (long n = 0; n <= frob; ++n)
            if (n >= w[n % m]) members.push_back(static_cast<int>(n));
        return build(static_cast<int>(frob), members);
    }

    /// H = N_0 minus the given gaps. The gap set must make H closed under addition.
    static NumericalSemigroup from_gaps(const std::vector<int>& gaps) {
        int frob = -1;
        for (int g : gaps) {
            require(g > 0, ErrorCode::InvalidArgument, "gaps must be positive");
            frob = std::max(frob, g);
        }
        std::vector<char> is_gap(frob + 1, 0);
        for (int g : gaps) is_gap[g] = 1;
        std::vector<int> members;
        for (int n = 0; n <= frob; ++n)
            if (!is_gap[n]) members.push_back(n);
        for (int a : members)
            for (int b : members)
                if (a + b <= frob)
                    require(!is_gap[a + b], ErrorCode::InvalidArgument, "gap set is not closed");
        return build(frob, members);
    }

    const std::vector<int>& minimal_generators() const { return d_->minimal_generators; }
    /// Members strictly below the conductor, ascending (always starts with 0 unless H = N_0).
    const std::vector<int>& small_elements() const { return d_->small_elements; }
    int frobenius() const { return d_->frobenius; }
    int conductor() const { return d_->frobenius + 1; }
    int multiplicity() const { return d_->minimal_generators.front(); }
    int embedding_dimension() const { return static_cast<int>(d_->minimal_generators.size()); }
    int genus() const { return conductor() - static_cast<int>(d_->small_elements.size()); }
    bool has_minimal_multiplicity() const { return multiplicity() == embedding_dimension(); }
    bool is_natural() const { return conductor() == 0; }
    int max_generator() const { return d_->minimal_generators.back(); }
    /// Table covers [0, 2*conductor + max generator].
    int table_bound() const { return static_cast<int>(d_->table.size()) - 1; }

    bool contains(long n) const {
        if (n < 0) return false;
        if (n >= conductor()) return true;
        return d_->table[static_cast<std::size_t>(n)] != 0;
    }

    std::vector<int> gaps() const {
        std::vector<int> out;
        for (int n = 1; n < conductor(); ++n)
            if (!contains(n)) out.push_back(n);
        return out;
    }

    /// Comma-separated minimal generators, e.g. "4,5,11".
    std::string to_string() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < minimal_generators().size(); ++i)
            os << (i ? "," : "") << minimal_generators()[i];
        return os.str();
    }
    std::string pretty() const { return "<" + to_string() + ">"; }

    friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
        return a.d_ == b.d_ || a.d_->minimal_generators == b.d_->minimal_generators;
    }

private:
    explicit NumericalSemigroup(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

    static NumericalSemigroup build(int frob, const std::vector<int>& members_to_frob) {
        auto d = std::make_shared<Data>();
        d->frobenius = frob;
        const int c = frob + 1;
        for (int n : members_to_frob)
            if (n < c) d->small_elements.push_back(n);
        auto member = [&](int n) {
            return n >= c || std::binary_search(d->small_elements.begin(), d->small_elements.end(), n);
        };
        // Minimal generators are the multiplicity and the minimal Apery
        // elements, all at most F + multiplicity.
        int mult = 1;
        for (int n : d->small_elements)
            if (n > 0) { mult = n; break; }
        if (d->small_elements.size() <= 1) mult = std::max(c, 1);
        for (int h = 1; h <= std::max(c - 1 + mult, mult); ++h) {
            if (!member(h)) continue;
            bool decomposable = false;
            for (int a = 1; a <= h / 2 && !decomposable; ++a)
                decomposable = member(a) && member(h - a);
            if (!decomposable) d->minimal_generators.push_back(h);
        }
        const int bound = 2 * c + d->minimal_generators.back();
        d->table.assign(static_cast<std::size_t>(bound) + 1, 0);
        for (int n = 0; n <= bound; ++n) d->table[n] = member(n) ? 1 : 0;
        return NumericalSemigroup(std::move(d));
    }

    std::shared_ptr<const Data> d_;
};

/// E subset of Z with E + H inside E and [stable_bound, inf) inside E.
class SemigroupIdeal {
public:
    /// Union of g + H over the given generators.
    static SemigroupIdeal from_generators(const NumericalSemigroup& h, const std::vector<int>& gens) {
        require(!gens.empty(), ErrorCode::EmptyGenerators, "semigroup ideal needs a generator");
        const int lo = *std::min_element(gens.begin(), gens.end());
        int hi = std::numeric_limits<int>::min();
        for (int g : gens) hi = std::max(hi, g + h.conductor());
        std::vector<char> bits(static_cast<std::size_t>(hi - lo), 0);
        for (int x = lo; x < hi; ++x)
            for (int g : gens)
                if (h.contains(static_cast<long>(x) - g)) { bits[x - lo] = 1; break; }
        return SemigroupIdeal(h, lo, hi, std::move(bits));
    }

    /// From the explicit membership of [lo, hi), everything at or above hi included.
    /// Throws NotClosed when the set is not an H-ideal.
    static SemigroupIdeal from_membership(const NumericalSemigroup& h, int lo, int hi,
                                          const std::vector<char>& bits) {
        require(static_cast<int>(bits.size()) == hi - lo, ErrorCode::InvalidArgument, "bit table size");
        SemigroupIdeal e(h, lo, hi, bits);
        for (int x = lo; x < hi; ++x) {
            if (!e.contains(x)) continue;
            for (int g : h.minimal_generators())
                require(e.contains(x + g), ErrorCode::NotClosed, "set is not closed under H");
        }
        return e;
    }

    const NumericalSemigroup& base() const { return base_; }
    int min() const { return min_; }
    int stable_bound() const { return stable_; }

    bool contains(long x) const {
        if (x >= stable_) return true;
        if (x < min_) return false;
        return bits_[static_cast<std::size_t>(x - min_)] != 0;
    }

    /// Members in [min, stable_bound).
    std::vector<int> small_elements() const {
        std::vector<int> out;
        for (int x = min_; x < stable_; ++x)
            if (contains(x)) out.push_back(x);
        return out;
    }

    /// E minus (E + (H \ {0})).
    std::vector<int> minimal_generators() const {
        std::vector<int> out;
        const int top = stable_ + base_.multiplicity();
        for (int x = min_; x < top; ++x) {
            if (!contains(x)) continue;
            bool reducible = false;
            for (int h = 1; h <= x - min_ && !reducible; ++h)
                reducible = base_.contains(h) && contains(static_cast<long>(x) - h);
            if (!reducible) out.push_back(x);
        }
        return out;
    }

    SemigroupIdeal shifted(int k) const { return SemigroupIdeal(base_, min_ + k, stable_ + k, bits_); }

    std::string to_string() const {
        std::ostringstream os;
        os << "{";
        bool first = true;
        for (int x : small_elements()) {
            os << (first ? "" : ",") << x;
            first = false;
        }
        os << (first ? "" : ",") << stable_ << ",...}";
        return os.str();
    }

    friend bool operator==(const SemigroupIdeal& a, const SemigroupIdeal& b) {
        return a.min_ == b.min_ && a.stable_ == b.stable_ && a.bits_ == b.bits_;
    }

private:
    SemigroupIdeal(NumericalSemigroup h, int lo, int hi, std::vector<char> bits)
        : base_(std::move(h)), min_(lo), stable_(hi), bits_(std::move(bits)) {
        normalize();
    }

    void normalize() {
        while (stable_ > min_ && bits_[stable_ - 1 - min_]) {
            --stable_;
            bits_.pop_back();
        }
        std::size_t skip = 0;
        while (skip < bits_.size() && !bits_[skip]) ++skip;
        bits_.erase(bits_.begin(), bits_.begin() + static_cast<long>(skip));
        min_ += static_cast<int>(skip);
    }

    NumericalSemigroup base_;
    int min_;
    int stable_;
    std::vector<char> bits_;
};

/// Ap_e(H): members h with h - e not in H, sorted ascending.
inline std::vector<int> apery_set(const NumericalSemigroup& h, int e) {
    require(e > 0 && h.contains(e), ErrorCode::NotAMember,
            std::to_string(e) + " is not a positive member of " + h.pretty());
    std::vector<int> w(e, -1);
    int found = 0;
    for (int n = 0; found < e; ++n) {
        if (h.contains(n) && w[n % e] < 0) {
            w[n % e] = n;
            ++found;
        }
    }
    std::sort(w.begin(), w.end());
    return w;
}

struct KunzVector {
    int e = 0;
    std::vector<int> coords; // mu_1 .. mu_{e-1}

    friend bool operator==(const KunzVector&, const KunzVector&) = default;
};

/// w_i = i + mu_i * e for the Apery elements w_i congruent to i mod e.
inline KunzVector kunz_coordinates(const NumericalSemigroup& h, int e) {
    require(e >= 2, ErrorCode::InvalidArgument, "Kunz coordinates need e >= 2");
    const auto ap = apery_set(h, e);
    KunzVector k{e, std::vector<int>(e - 1, 0)};
    for (int w : ap)
        if (w % e != 0) k.coords[w % e - 1] = (w - w % e) / e;
    return k;
}

enum class KunzClass { Exterior, Boundary, Interior };

inline std::string to_string(KunzClass c) {
    switch (c) {
    case KunzClass::Exterior: return "exterior";
    case KunzClass::Boundary: return "boundary";
    case KunzClass::Interior: return "interior";
    }
    return "?";
}

/// Position of a point relative to the Kunz cone. Right-hand subscripts wrap
/// mod e when i + j > e. Interior means every inequality is strict and every
/// coordinate is at least 1.
inline KunzClass kunz_cone_classify(const KunzVector& x) {
    require(x.e >= 2 && static_cast<int>(x.coords.size()) == x.e - 1, ErrorCode::InvalidArgument,
            "malformed Kunz vector");
    auto mu = [&](int i) { return x.coords[i - 1]; };
    bool strict = true;
    for (int i = 1; i < x.e; ++i) {
        if (mu(i) < 0) return KunzClass::Exterior;
        if (mu(i) < 1) strict = false;
    }
    for (int i = 1; i < x.e; ++i) {
        for (int j = i; j < x.e; ++j) {
            if (i + j == x.e) continue;
            const int lhs = mu(i) + mu(j);
            const int rhs = i + j < x.e ? mu(i + j) : mu(i + j - x.e) - 1;
            if (lhs < rhs) return KunzClass::Exterior;
            if (lhs == rhs) strict = false;
        }
    }
    return strict ? KunzClass::Interior : KunzClass::Boundary;
}

/// K(H) = { x : F(H) - x not in H }, which has minimum 0.
inline SemigroupIdeal canonical_value_set(const NumericalSemigroup& h) {
    const int f = h.frobenius();
    const int hi = f + 1;
    std::vector<char> bits(static_cast<std::size_t>(std::max(hi, 0)), 0);
    for (int x = 0; x < hi; ++x) bits[x] = h.contains(static_cast<long>(f) - x) ? 0 : 1;
    return SemigroupIdeal::from_membership(h, 0, std::max(hi, 0), bits);
}

/// Symmetric (Gorenstein): x gap iff F - x in H.
inline bool is_symmetric(const NumericalSemigroup& h) {
    for (int x = 0; x <= h.frobenius(); ++x)
        if (h.contains(x) == h.contains(h.frobenius() - x)) return false;
    return true;
}

struct ValueSetVerdict {
    enum class Kind { ConditionI, ConditionII, Fails };
    Kind kind;
    int witness = 0; // least violating n when kind == Fails

    bool holds() const { return kind != Kind::Fails; }
    std::string to_string() const {
        switch (kind) {
        case Kind::ConditionI: return "ConditionI";
        case Kind::ConditionII: return "ConditionII";
        case Kind::Fails: return "Fails(" + std::to_string(witness) + ")";
        }
        return "?";
    }
};

/// Either 1 lies in the canonical value set, or no two consecutive integers
/// n, n+1 with n >= 2 are both missing from it.
inline ValueSetVerdict value_set_condition(const NumericalSemigroup& h) {
    const auto k = canonical_value_set(h);
    if (k.contains(1)) return {ValueSetVerdict::Kind::ConditionI};
    for (int n = 2; n <= h.frobenius() + 1; ++n)
        if (!k.contains(n) && !k.contains(n + 1)) return {ValueSetVerdict::Kind::Fails, n};
    return {ValueSetVerdict::Kind::ConditionII};
}

/// Smallest numerical semigroup containing the given nonnegative integers.
inline NumericalSemigroup semigroup_generated_by(const std::vector<int>& elements) {
    std::vector<long> gens;
    for (int x : elements) {
        require(x >= 0, ErrorCode::InvalidArgument, "negative element");
        if (x > 0) gens.push_back(x);
    }
    return NumericalSemigroup::from_generators(gens);
}

/// Value semigroup of R[omega/a]: generated by H together with K(H).
inline NumericalSemigroup canonical_extension(const NumericalSemigroup& h) {
    const auto k = canonical_value_set(h);
    std::vector<int> gens = k.minimal_generators();
    for (int g : h.minimal_generators()) gens.push_back(g);
    return semigroup_generated_by(gens);
}

struct CmTypeListing {
    bool listed = false;
    std::string tag;          // e.g. "<1>", "<2,2s-1> s=4", "<3,4,5>"
    bool substituted = false; // matched the entry standing in for the repeated <3,5,7>
};

/// Tests the value semigroup of R[omega/a] against the finite-CM-type list
/// {<1>, <2,2s-1>, <3,4>, <3,5>, <3,5,7>, <3,4,5>}.
inline CmTypeListing cm_type_list_check(const NumericalSemigroup& h) {
    const auto s = canonical_extension(h);
    const auto& g = s.minimal_generators();
    using V = std::vector<int>;
    if (g == V{1}) return {true, "<1>", false};
    if (g.size() == 2 && g[0] == 2 && g[1] % 2 == 1)
        return {true, "<2,2s-1> s=" + std::to_string((g[1] + 1) / 2), false};
    if (g == V{3, 4}) return {true, "<3,4>", false};
    if (g == V{3, 5}) return {true, "<3,5>", false};
    if (g == V{3, 5, 7}) return {true, "<3,5,7>", false};
    if (g == V{3, 4, 5}) return {true, "<3,4,5>", true};
    return {false, s.pretty(), false};
}

/// L(H) = <e, g - e : g minimal generator>; the value semigroup of m:m.
inline NumericalSemigroup blowup(const NumericalSemigroup& h) {
    if (h.is_natural()) return h;
    const int e = h.multiplicity();
    std::vector<long> gens{e};
    for (int g : h.minimal_generators())
        if (g != e) gens.push_back(g - e);
    return NumericalSemigroup::from_generators(gens);
}

/// H = H_0, H_1 = L(H_0), ... up to N_0 (inclusive).
inline std::vector<NumericalSemigroup> lipman_sequence(const NumericalSemigroup& h) {
    std::vector<NumericalSemigroup> chain{h};
    while (!chain.back().is_natural()) {
        auto next = blowup(chain.back());
        require(next.genus() < chain.back().genus(), ErrorCode::InvalidArgument,
                "blowup did not decrease the genus");
        chain.push_back(std::move(next));
    }
    return chain;
}

/// Arf via the Lipman chain: every member has minimal multiplicity.
inline bool is_arf(const NumericalSemigroup& h) {
    for (const auto& s : lipman_sequence(h))
        if (!s.has_minimal_multiplicity()) return false;
    return true;
}

/// Arf via the closure property x + y - z in H for x >= y >= z in H. Only
/// x below the conductor can fail, since x + y - z >= x.
inline bool is_arf_by_closure(const NumericalSemigroup& h) {
    const auto& small = h.small_elements();
    for (std::size_t a = 0; a < small.size(); ++a)
        for (std::size_t b = 0; b <= a; ++b)
            for (std::size_t c = 0; c <= b; ++c)
                if (!h.contains(small[a] + small[b] - small[c])) return false;
    return true;
}

/// Smallest Arf semigroup containing H. Its conductor never exceeds c(H).
inline NumericalSemigroup arf_closure(const NumericalSemigroup& h) {
    const int c = h.conductor();
    std::vector<char> in(static_cast<std::size_t>(c), 0);
    for (int x : h.small_elements()) in[x] = 1;
    auto member = [&](int n) { return n >= c || in[n]; };
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> cur;
        for (int n = 0; n < c; ++n)
            if (in[n]) cur.push_back(n);
        for (std::size_t a = 0; a < cur.size(); ++a)
            for (std::size_t b = 0; b <= a; ++b)
                for (std::size_t d = 0; d <= b; ++d) {
                    const int v = cur[a] + cur[b] - cur[d];
                    if (!member(v)) {
                        in[v] = 1;
                        changed = true;
                    }
                }
    }
    std::vector<int> gaps;
    for (int n = 1; n < c; ++n)
        if (!in[n]) gaps.push_back(n);
    return NumericalSemigroup::from_gaps(gaps);
}

} // namespace traceforge
