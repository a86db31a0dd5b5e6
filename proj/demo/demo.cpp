// Walks through one weight tuple: ages, the reduced operator, lattice counts
// and the quotient presentation.
#include "wph/wph.hpp"

#include <iostream>

int main() {
    const auto w = wph::make_weights({1, 5, 6, 8});

    const auto s = wph::age_spectrum(w);
    std::cout << "degree " << w.degree() << ", strict residues " << s.rank << ", a^s = (";
    for (std::size_t j = 0; j < s.counts.size(); ++j) std::cout << (j ? "," : "") << s.counts[j];
    std::cout << ")\n";
    std::cout << "canonical: " << std::boolalpha << wph::is_canonical(w).canonical << "\n";

    const auto ops = wph::operator_forms(w);
    std::cout << "H^red = " << wph::factored_text(ops.reduced) << "\n";

    const wph::LatticeContext ctx(w);
    std::cout << "face sum:";
    for (auto h : wph::hodge_via_inclusion_exclusion(ctx)) std::cout << ' ' << h;
    std::cout << "\n";

    const auto q = wph::quotient_presentation(w);
    std::cout << "|G| = " << q.group_order << ", genus of the z_3 = 0 section: " << wph::facet_curve_genus(w, 3)
              << "\n";

    const auto klass = wph::classify_weights(w);
    std::cout << "tag: " << wph::to_string(klass.tag) << "\n";
}
