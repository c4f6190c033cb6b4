#pragma once

// JSON and text serialization for semigroups, ideals, enumerations and
// Artinian algebras. Needs nlohmann/json on the include path.

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "traceforge/artin.hpp"
#include "traceforge/trace.hpp"

namespace traceforge {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

using json = nlohmann::ordered_json;

// ---- scalars and semigroups -------------------------------------------------

/// Residues become JSON integers, rationals become strings like "-3/4".
template <ExactScalar E>
json scalar_to_json(const E& x) {
    if constexpr (std::is_same_v<E, Residue>)
        return x.value();
    else
        return x.to_string();
}

template <ExactScalar E>
E scalar_from_json(const json& j, const FieldSpec& field) {
    if (j.is_string()) return parse_scalar<E>(j.get<std::string>(), field);
    require(j.is_number_integer(), ErrorCode::ParseError, "coefficient must be an integer or a string");
    return E::from_int(field, j.get<long>());
}

inline json field_to_json(const FieldSpec& f) {
    if (f.is_finite()) return json{{"p", f.characteristic()}};
    return json{{"p", "Q"}};
}

/// Parses "4,5,11" (whitespace tolerated) into a semigroup.
inline NumericalSemigroup parse_semigroup(const std::string& text) {
    std::vector<long> gens;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t\r");
        require(b != std::string::npos, ErrorCode::ParseError, "empty generator in '" + text + "'");
        item = item.substr(b, e - b + 1);
        std::size_t pos = 0;
        long g = 0;
        try {
            g = std::stol(item, &pos);
        } catch (const std::exception&) {
            fail(ErrorCode::ParseError, "bad generator '" + item + "'");
        }
        require(pos == item.size(), ErrorCode::ParseError, "bad generator '" + item + "'");
        gens.push_back(g);
    }
    return NumericalSemigroup::from_generators(gens);
}

/// Corpus file: one semigroup per line, '#' starts a comment.
inline std::vector<NumericalSemigroup> parse_corpus(std::istream& in) {
    std::vector<NumericalSemigroup> out;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        out.push_back(parse_semigroup(line));
    }
    return out;
}

inline json int_list(const std::vector<int>& v) { return json(v); }

inline json semigroup_ideal_to_json(const SemigroupIdeal& e) {
    return json{{"min", e.min()},
                {"stable_bound", e.stable_bound()},
                {"small_elements", e.small_elements()},
                {"generators", e.minimal_generators()}};
}

/// Every invariant the library computes for H, in one object.
inline json semigroup_to_json(const NumericalSemigroup& h) {
    json j{{"generators", h.minimal_generators()},
           {"genus", h.genus()},
           {"frobenius", h.frobenius()},
           {"conductor", h.conductor()},
           {"multiplicity", h.multiplicity()},
           {"embedding_dimension", h.embedding_dimension()},
           {"minimal_multiplicity", h.has_minimal_multiplicity()},
           {"gaps", h.gaps()},
           {"symmetric", is_symmetric(h)},
           {"arf", is_arf(h)}};
    const int e = h.multiplicity();
    j["apery_set"] = apery_set(h, e);
    if (e >= 2) {
        const auto k = kunz_coordinates(h, e);
        j["kunz"] = {{"e", k.e}, {"coords", k.coords}, {"class", to_string(kunz_cone_classify(k))}};
    } else {
        j["kunz"] = nullptr;
    }
    j["canonical_value_set"] = semigroup_ideal_to_json(canonical_value_set(h));
    j["value_set_condition"] = value_set_condition(h).to_string();
    const auto cm = cm_type_list_check(h);
    j["cm_type_list"] = {{"listed", cm.listed}, {"tag", cm.tag}, {"substituted", cm.substituted}};
    json chain = json::array();
    for (const auto& s : lipman_sequence(h)) chain.push_back(s.to_string());
    j["lipman_sequence"] = chain;
    j["arf_closure"] = arf_closure(h).to_string();
    return j;
}

// ---- fractional ideals --------------------------------------------------------

/// {lo, tail, basis: [[[exp, coeff], ...], ...]}
template <ExactScalar E>
json ideal_to_json(const FractionalIdeal<E>& i) {
    json basis = json::array();
    for (const auto& b : i.basis()) {
        json terms = json::array();
        for (const auto& [exp, c] : b.terms()) terms.push_back(json::array({exp, scalar_to_json(c)}));
        basis.push_back(terms);
    }
    return json{{"lo", i.lo()}, {"tail", i.tail()}, {"basis", basis}};
}

/// Inverse of ideal_to_json. The basis rows must span an R-module; the
/// result is re-canonicalized, so any spanning set is accepted.
template <ExactScalar E>
FractionalIdeal<E> ideal_from_json(const json& j, const FieldSpec& field, const NumericalSemigroup& h) {
    require(j.contains("tail") && j.contains("basis"), ErrorCode::ParseError, "ideal JSON needs tail and basis");
    const int tail = j.at("tail").get<int>();
    int lo = j.value("lo", tail);
    std::vector<LaurentPoly<E>> polys;
    for (const auto& row : j.at("basis")) {
        LaurentPoly<E> p(field);
        for (const auto& term : row) p.add_term(term.at(0).get<int>(), scalar_from_json<E>(term.at(1), field));
        if (auto v = p.valuation()) lo = std::min(lo, *v);
        polys.push_back(std::move(p));
    }
    std::vector<std::vector<E>> rows;
    for (const auto& p : polys) {
        std::vector<E> v(static_cast<std::size_t>(tail - lo), E::zero(field));
        for (const auto& [exp, c] : p.terms()) {
            require(exp >= lo, ErrorCode::ParseError, "term below lo");
            if (exp < tail) v[static_cast<std::size_t>(exp - lo)] = c;
        }
        rows.push_back(std::move(v));
    }
    auto out = FractionalIdeal<E>::from_span(field, h, lo, tail, rows);
    require(out.is_closed_under(h), ErrorCode::NotClosed, "ideal JSON is not an R-module");
    return out;
}

/// Short human label: "c", "m", "R" or "c + (t^5)" style.
template <ExactScalar E>
std::string ideal_label(const FractionalIdeal<E>& i) {
    const auto& h = i.ring();
    const auto f = i.field();
    if (i == FractionalIdeal<E>::unit(f, h)) return "R";
    if (i.basis_size() == 0) {
        if (i.tail() != h.conductor()) return "t^" + std::to_string(i.tail()) + "K[[t]]";
        return i == FractionalIdeal<E>::maximal(f, h) ? "c = m" : "c";
    }
    std::string gens;
    for (std::size_t k = 0; k < i.basis_size(); ++k) gens += (k ? ", " : "") + i.basis_element(k).to_string();
    const std::string base = i.tail() == h.conductor() ? "c" : "t^" + std::to_string(i.tail()) + "K[[t]]";
    const std::string sum = base + " + (" + gens + ")";
    if (i == FractionalIdeal<E>::maximal(f, h)) return "m = " + sum;
    return sum;
}

// ---- enumerations ---------------------------------------------------------------

inline json census_to_json(const TraceCensus& c) {
    return json{{"quotient_dimension", c.quotient_dimension},
                {"candidate_ideals", c.candidate_ideals},
                {"cyclic_modules", c.cyclic_modules},
                {"vectors_scanned", c.vectors_scanned},
                {"sums_formed", c.sums_formed}};
}

/// Check outcomes attached to a trace enumeration.
inline json enumeration_checks(const TraceEnumeration& tr) {
    const auto& h = tr.semigroup;
    const auto m = FractionalIdeal<Residue>::maximal(tr.field, h);
    json checks{{"conductor_smallest", verify_smallest_regular_trace(tr)},
                {"normalization_union", verify_normalization_union(tr)},
                {"maximal_ideal_trace", is_trace_ideal(m) != h.is_natural()},
                {"minimal_trace_class", minimal_trace_consistent(tr)}};
    return checks;
}

inline json enumeration_to_json(const TraceEnumeration& tr, bool with_checks = true) {
    json ideals = json::array();
    for (const auto& r : tr.ideals) {
        json j = ideal_to_json(r.ideal);
        j["label"] = ideal_label(r.ideal);
        j["is_conductor"] = r.is_conductor;
        j["is_maximal_ideal"] = r.is_maximal_ideal;
        j["is_unit_ideal"] = r.is_unit_ideal;
        j["is_monomial"] = r.is_monomial;
        ideals.push_back(std::move(j));
    }
    json out{{"schema_version", kSchemaVersion},
             {"tool_version", kToolVersion},
             {"kind", "trace_enumeration"},
             {"semigroup", tr.semigroup.to_string()},
             {"field", tr.field.to_string()},
             {"zero_ideal", tr.zero_ideal},
             {"trace_ideals", ideals},
             {"count", tr.total_count()},
             {"census", census_to_json(tr.census)}};
    if (with_checks) out["checks"] = enumeration_checks(tr);
    return out;
}

// ---- Artinian algebras ----------------------------------------------------------

template <ExactScalar E>
json artin_to_json(const ArtinAlgebra<E>& a) {
    json table = json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < a.dim(); ++j) {
            json v = json::array();
            for (const auto& x : a.table()[i][j]) v.push_back(scalar_to_json(x));
            row.push_back(v);
        }
        table.push_back(row);
    }
    json p = a.field().is_finite() ? json(a.field().characteristic()) : json("Q");
    return json{{"dim", a.dim()}, {"p", p}, {"labels", a.labels()}, {"unit_index", a.unit_index()}, {"table", table}};
}

template <ExactScalar E>
json subideal_to_json(const SubIdeal<E>& i) {
    json rows = json::array();
    for (std::size_t r = 0; r < i.dim(); ++r) {
        json v = json::array();
        for (const auto& x : i.basis().row_vector(r)) v.push_back(scalar_to_json(x));
        rows.push_back(v);
    }
    return json{{"dim", i.dim()}, {"basis", rows}, {"text", i.to_string()}};
}

/// Rebuilds an algebra from artin_to_json output (table validated again).
template <ExactScalar E>
ArtinAlgebra<E> artin_from_json(const json& j) {
    const json& p = j.at("p");
    const FieldSpec field = p.is_string() ? FieldSpec::rationals() : FieldSpec::prime(p.get<std::uint64_t>());
    const std::size_t n = j.at("dim").get<std::size_t>();
    std::vector<std::string> labels = j.value("labels", std::vector<std::string>{});
    if (labels.empty())
        for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
    typename ArtinAlgebra<E>::Table t(n, std::vector<std::vector<E>>(n, std::vector<E>(n, E::zero(field))));
    const json& tab = j.at("table");
    require(tab.size() == n, ErrorCode::ParseError, "table size");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) t[a][b][c] = scalar_from_json<E>(tab.at(a).at(b).at(c), field);
    return ArtinAlgebra<E>::from_table(field, labels, t, j.value("unit_index", std::size_t{0}));
}

} // namespace traceforge
