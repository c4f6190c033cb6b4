// Trace ideals of small local algebras: K[x]/(x^l), K[x,y]/(x,y)^2, and
// the Gorenstein algebra K[x,y]/(x^2 - y^2, xy).
#include <iostream>

#include "traceforge/traceforge.hpp"

using namespace traceforge;

template <class E>
void show(const char* name, const ArtinAlgebra<E>& a) {
    const auto tr = enumerate_trace_ideals_artinian(a);
    std::cout << name << ": " << enumerate_ideals(a).size() << " ideals, " << tr.size() << " trace ideals:";
    for (const auto& i : tr) std::cout << ' ' << i.to_string();
    std::cout << '\n';
}

int main() {
    const auto f2 = FieldSpec::prime(2);
    for (int l = 1; l <= 4; ++l) show(("F2[x]/(x^" + std::to_string(l) + ")").c_str(), truncated_dvr<Residue>(f2, l));
    show("F2[x,y]/(x,y)^2", square_zero_two_vars<Residue>(f2));
    show("F3[x,y]/(x^2-y^2,xy)", gorenstein_xy<Residue>(FieldSpec::prime(3)));

    const auto q = FieldSpec::rationals();
    const auto a = gorenstein_xy<Rational>(q);
    std::vector<Rational> ks;
    for (long k : {0, 1, 2, -1, 7}) ks.push_back(Rational::from_int(q, k));
    const auto rep = gorenstein_family_separation(a, a.basis_vector(1), a.basis_vector(2), ks);
    std::cout << "over Q, (x + k y) for 5 values of k: " << rep.distinct << " distinct, all trace: "
              << (rep.all_trace ? "yes" : "no") << '\n';
}
