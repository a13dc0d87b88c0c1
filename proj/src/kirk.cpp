#include "lmap/kirk.hpp"

#include "lmap/errors.hpp"

namespace lmap {

KirkPair make_kirk(ZPoly sigma1, ZPoly sigma2) {
    if (sigma1.coeff(0) != 0 || sigma2.coeff(0) != 0)
        throw InvalidPair(InvalidPair::Reason::NonzeroConstant,
                          "Kirk invariants must lie in zZ[z]: got constant terms " + sigma1.coeff(0).get_str() +
                              " and " + sigma2.coeff(0).get_str());
    if (sigma1.coeff(1) != sigma2.coeff(1))
        throw InvalidPair(InvalidPair::Reason::Symmetry, "z-coefficients differ: " + sigma1.coeff(1).get_str() +
                                                             " vs " + sigma2.coeff(1).get_str());
    return KirkPair(std::move(sigma1), std::move(sigma2));
}

KirkPair add(const KirkPair& a, const KirkPair& b) {
    return KirkPair(a.sigma1_ + b.sigma1_, a.sigma2_ + b.sigma2_);
}

KirkPair negate(const KirkPair& a) { return KirkPair(-a.sigma1_, -a.sigma2_); }

bool is_trivial(const KirkPair& a) { return a.sigma1().is_zero() && a.sigma2().is_zero(); }

Integer difference_map(const ZPoly& sigma1, const ZPoly& sigma2) { return sigma1.coeff(1) - sigma2.coeff(1); }

Integer difference_map(const KirkPair& a) { return difference_map(a.sigma1(), a.sigma2()); }

KirkPair jk_kirk(const JKInput& input) {
    auto series = [](const std::vector<Integer>& beta) {
        std::vector<Integer> c(beta.size() + 1);
        for (std::size_t i = 0; i < beta.size(); ++i) c[i + 1] = beta[i];
        return ZPoly(std::move(c));
    };
    return make_kirk(series(input.beta1), series(input.beta2));
}

}  // namespace lmap
