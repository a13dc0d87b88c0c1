#include "lmap/presentation.hpp"

#include <string>

#include "lmap/errors.hpp"

namespace lmap {

void validate(const Presentation& p) {
    if (p.f2.n() != p.pairs.size())
        throw InvalidPresentation("f2 is over " + std::to_string(p.f2.n()) + " pairs but the presentation lists " +
                                  std::to_string(p.pairs.size()));
    const SphereClass pm = change_basis(p.f2, BasisKind::pm(p.n()));
    for (std::size_t i = 0; i < p.pairs.size(); ++i) {
        const PairRecord& r = p.pairs[i];
        const std::string at = "pair " + std::to_string(i + 1) + ": ";
        if (r.sign != 1 && r.sign != -1) throw InvalidPresentation(at + "sign must be +1 or -1");
        if (r.m < 0) throw InvalidPresentation(at + "multiplicity m must be nonnegative");
        const LaurentPoly& alpha = r.sign > 0 ? pm.first(i) : pm.second(i);
        if (augment(alpha) != r.m)
            throw InvalidPresentation(at + "augmentation of alpha" + (r.sign > 0 ? "+" : "-") + " is " +
                                      augment(alpha).get_str() + ", declared m = " + std::to_string(r.m));
    }
}

Presentation empty_presentation() { return {{}, SphereClass::zero(BasisKind::pm(0))}; }

}  // namespace lmap
