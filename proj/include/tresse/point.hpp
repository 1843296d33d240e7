#ifndef TRESSE_POINT_HPP
#define TRESSE_POINT_HPP

#include "tresse/rational_function.hpp"

#include <variant>
#include <vector>

namespace tresse {

// Mode-tagged evaluation point. Exact points stay exact; float points are
// converted to their exact dyadic values for evaluation, so the float result
// is a single rounding of the true value.
class Point {
public:
    enum class Mode { exact, floating };

    static Point exact(std::vector<Rat> coords);
    static Point floating(std::vector<double> coords);

    Mode mode() const { return mode_; }
    int dim() const;
    const std::vector<Rat>& rats() const;       // exact mode only
    const std::vector<double>& floats() const;  // floating mode only
    std::vector<Rat> as_rats() const;           // either mode, exact values

private:
    Mode mode_ = Mode::exact;
    std::vector<Rat> rats_;
    std::vector<double> floats_;
};

using Value = std::variant<Rat, double>;

// Exact mode -> Rat; floating mode -> double within 1 ulp of rounding the
// exact value. Throws pole_error at zeros of the denominator.
Value eval_at(const RationalFunction& f, const Point& p);

} // namespace tresse

#endif
