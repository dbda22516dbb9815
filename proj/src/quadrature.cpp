#include "hytet/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "hytet/errors.hpp"

namespace hytet {

void validate(const QuadratureConfig& cfg) {
    if (!(cfg.abs_tol > 0.0) || !(cfg.rel_tol > 0.0))
        throw DomainError("quadrature tolerances must be positive");
    if (cfg.max_levels < 3) throw DomainError("quadrature max_levels must be >= 3");
}

QuadratureResult integrate_tanh_sinh(const std::function<double(double)>& f,
                                     double a, double b,
                                     const QuadratureConfig& cfg) {
    validate(cfg);
    QuadratureResult out;
    if (a == b) return out;
    if (a > b) {
        out = integrate_tanh_sinh(f, b, a, cfg);
        out.value = -out.value;
        return out;
    }

    std::size_t count = 0;
    auto counted = [&](double x) {
        ++count;
        return f(x);
    };
    boost::math::quadrature::tanh_sinh<double> integrator(
        static_cast<std::size_t>(cfg.max_levels));
    // Boost stops on a tolerance relative to the L1 norm; a coarse pass
    // estimates that norm so the absolute tolerance can be folded in.
    double l1 = 0.0;
    double err = 0.0;
    std::size_t levels = 0;
    integrator.integrate(counted, a, b, 1e-3, &err, &l1, &levels);
    double tol = cfg.rel_tol;
    if (l1 > 0.0) tol = std::max(tol, cfg.abs_tol / l1);
    out.value = integrator.integrate(counted, a, b, tol, &err, &l1, &levels);
    out.error_estimate = err;
    out.evaluations = count;
    out.levels = levels;
    return out;
}

}  // namespace hytet
