// Library walkthrough: classify a few (a, b) pairs over Z/(7^2), predict
// periods, confirm them by iteration, and print the closed-form table.

#include <iostream>

#include "iprng/iprng.hpp"

int main() {
    const auto ring = iprng::make_context(7, 2);

    for (auto [a, b] : {std::pair{7, 3}, std::pair{2, 0}, std::pair{5, 3}, std::pair{1, 1}, std::pair{5, 1}}) {
        const auto ra = ring.residue(a), rb = ring.residue(b);
        const iprng::PairPredictor predictor(ring, ra, rb);
        std::cout << "a=" << a << " b=" << b << " class=" << iprng::to_string(predictor.analysis().poly_class())
                  << '\n';
        for (int x0 : {0, 1, 3, 8}) {
            const iprng::GeneratorParams params{ra, rb, ring.residue(x0)};
            const auto pred = predictor.predict(params.x0);
            const auto orbit = iprng::eventual_period(ring, params);
            std::cout << "  x0=" << x0 << ' ' << iprng::format_prediction(pred, true) << "  oracle "
                      << iprng::format_orbit(orbit) << '\n';
        }
    }

    std::cout << "\nclosed-form distribution, units case:\n";
    iprng::write_histogram_csv(std::cout, iprng::distribution_table(ring, iprng::CaseFilter::UnitsAB));
}
