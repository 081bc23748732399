#include "qmf/brackets.hpp"

#include <algorithm>

namespace qmf {

GradedSeries rankin_cohen(const GradedSeries& g, const GradedSeries& h, unsigned m)
{
    if (g.weight < 1 || h.weight < 1) {
        throw DomainError("rankin_cohen: weights must be positive, got " + std::to_string(g.weight) + " and "
                          + std::to_string(h.weight));
    }
    const std::int64_t mm = m;
    const std::size_t prec = std::min(g.prec(), h.prec());
    QSeries acc(prec);
    for (std::int64_t r = 0; r <= mm; ++r) {
        const std::int64_t s = mm - r;
        Rational c(binomial(mm + g.weight - 1, s) * binomial(mm + h.weight - 1, r));
        if (c == 0) {
            continue;
        }
        if (r % 2 != 0) {
            c = -c;
        }
        acc = acc + c * (derivative_D(g.series, static_cast<unsigned>(r)) * derivative_D(h.series, static_cast<unsigned>(s)));
    }
    std::optional<int> depth;
    if (g.depth == 0 && h.depth == 0) {
        depth = 0;
    }
    return {std::move(acc), g.weight + h.weight + 2 * static_cast<int>(m), depth};
}

} // namespace qmf
