#include "wavewr/nnwr.hpp"

#include <cmath>
#include <random>
#include <type_traits>

namespace wavewr {

void validate_theta(double theta) {
    if (!(theta > 0.0 && theta <= 1.0)) throw ValidationError("theta out of (0,1]");
}

template <typename Layout>
std::vector<SpaceTimeTrace> make_guesses(const Layout& layout, const InitialGuess& guess,
                                         const std::vector<double>& xs,
                                         const std::vector<std::vector<double>>& grids) {
    std::mt19937_64 rng(guess.seed);
    std::uniform_real_distribution<double> uniform(-1.0, 1.0);
    const std::size_t width = layout.width();
    std::vector<double> ys(width, 0.0);
    if constexpr (std::is_same_v<Layout, ChainLayout2D>) {
        const Grid1D yg = layout.y_grid();
        for (std::size_t l = 0; l < width; ++l) ys[l] = yg.x(l);
    }
    std::vector<SpaceTimeTrace> out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        SpaceTimeTrace tr(grids[i], width);
        for (std::size_t m = 0; m < tr.samples(); ++m) {
            const double t = grids[i][m];
            for (std::size_t l = 0; l < width; ++l) {
                double v = 0.0;
                switch (guess.kind) {
                    case InitialGuess::Kind::zero: v = 0.0; break;
                    case InitialGuess::Kind::poly_t2: v = t * t; break;
                    case InitialGuess::Kind::t_sin_y: v = t * std::sin(ys[l]); break;
                    case InitialGuess::Kind::random: v = uniform(rng); break;
                    case InitialGuess::Kind::function: v = guess.fn(ys[l], t); break;
                }
                tr.at(m, l) = v;
            }
        }
        if (guess.kind == InitialGuess::Kind::random) {
            const auto u0 = layout.initial_at(xs[i]);
            for (std::size_t l = 0; l < width; ++l) tr.at(0, l) = u0[l];
        }
        for (std::size_t l : layout.pinned_entries()) {
            for (std::size_t m = 0; m < tr.samples(); ++m) tr.at(m, l) = layout.pinned_value(xs[i], l, grids[i][m]);
        }
        out.push_back(std::move(tr));
    }
    return out;
}

template std::vector<SpaceTimeTrace> make_guesses<ChainLayout1D>(const ChainLayout1D&, const InitialGuess&,
                                                                 const std::vector<double>&,
                                                                 const std::vector<std::vector<double>>&);
template std::vector<SpaceTimeTrace> make_guesses<ChainLayout2D>(const ChainLayout2D&, const InitialGuess&,
                                                                 const std::vector<double>&,
                                                                 const std::vector<std::vector<double>>&);

}  // namespace wavewr
