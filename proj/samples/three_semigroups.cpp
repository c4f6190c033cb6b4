// Walks through the three semigroups <4,5,11>, <4,6,9,11>, <4,5,7>:
// canonical value sets, the colon R : (c + (t^4 + t^5)) over Q, and Tr(R)
// over F_2.
#include <iostream>

#include "traceforge/traceforge.hpp"

using namespace traceforge;

int main() {
    for (const auto& gens : {std::vector<long>{4, 5, 11}, {4, 6, 9, 11}, {4, 5, 7}}) {
        const auto h = NumericalSemigroup::from_generators(gens);
        std::cout << h.pretty() << "  K(H) generated by";
        for (int g : canonical_value_set(h).minimal_generators()) std::cout << ' ' << g;
        std::cout << "  " << value_set_condition(h).to_string() << '\n';

        const auto tr = enumerate_trace_ideals(h, 2);
        for (const auto& r : tr.ideals) {
            std::cout << "    tail " << r.ideal.tail() << " basis";
            for (const auto& b : r.ideal.basis()) std::cout << " [" << b.to_string() << ']';
            if (r.is_maximal_ideal) std::cout << "  (m)";
            if (r.is_unit_ideal) std::cout << "  (R)";
            std::cout << '\n';
        }
    }

    const auto q = FieldSpec::rationals();
    const auto h = NumericalSemigroup::from_generators({4, 5, 11});
    const auto i = FractionalIdeal<Rational>::from_generators(q, h, {LaurentPoly<Rational>::parse("t^4 + t^5", q)}, true);
    const auto r = FractionalIdeal<Rational>::unit(q, h);
    std::cout << "R : (c + (t^4 + t^5)) =";
    for (const auto& b : r.colon(i).basis()) std::cout << " [" << b.to_string() << ']';
    std::cout << " + t^" << r.colon(i).tail() << "K[[t]]\n";
    std::cout << "its trace is m: " << (trace(i) == FractionalIdeal<Rational>::maximal(q, h) ? "yes" : "no") << '\n';
}
