#include <cmath>
#include <numbers>

#include "wavewr/delay_oracle.hpp"
#include "wavewr/errors.hpp"

namespace wavewr {

double talbot_inverse(const std::function<std::complex<double>(std::complex<double>)>& F, double t,
                      std::size_t nodes) {
    if (!(t > 0.0)) throw ValidationError("Talbot inversion needs t > 0");
    if (nodes < 2) throw ValidationError("Talbot inversion needs at least two nodes");
    using namespace std::complex_literals;
    const double pi = std::numbers::pi;
    const double N = static_cast<double>(nodes);
    const double scale = N / t;
    std::complex<double> sum = 0.0;
    for (std::size_t k = 0; k < nodes; ++k) {
        const double th = -pi + (static_cast<double>(k) + 0.5) * 2.0 * pi / N;
        const double a = 0.6407 * th;
        const double cot = std::cos(a) / std::sin(a);
        const std::complex<double> z = scale * (-0.6122 + 0.5017 * th * cot + 0.2645i * th);
        const std::complex<double> dz =
            scale * (0.5017 * cot - 0.5017 * a / (std::sin(a) * std::sin(a)) + 0.2645i);
        sum += std::exp(z * t) * F(z) * dz;
    }
    return (sum / (1.0i * N)).real();
}

double chi_continuous_talbot(double alpha, double beta, double t, std::size_t nodes) {
    if (t <= beta) return 0.0;
    auto G = [alpha, beta](std::complex<double> s) {
        using namespace std::complex_literals;
        const std::complex<double> r = std::sqrt(s + 1.0i * alpha) * std::sqrt(s - 1.0i * alpha);
        return 1.0 - std::exp(beta * (s - r));
    };
    return -talbot_inverse(G, t - beta, nodes);
}

}  // namespace wavewr
