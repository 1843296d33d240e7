#include "tresse/point.hpp"

#include "tresse/errors.hpp"

namespace tresse {

Point Point::exact(std::vector<Rat> coords) {
    Point p;
    p.mode_ = Mode::exact;
    p.rats_ = std::move(coords);
    return p;
}

Point Point::floating(std::vector<double> coords) {
    Point p;
    p.mode_ = Mode::floating;
    p.floats_ = std::move(coords);
    return p;
}

int Point::dim() const {
    return mode_ == Mode::exact ? static_cast<int>(rats_.size()) : static_cast<int>(floats_.size());
}

const std::vector<Rat>& Point::rats() const {
    if (mode_ != Mode::exact) throw dimension_error("point is not in exact mode");
    return rats_;
}

const std::vector<double>& Point::floats() const {
    if (mode_ != Mode::floating) throw dimension_error("point is not in floating mode");
    return floats_;
}

std::vector<Rat> Point::as_rats() const {
    if (mode_ == Mode::exact) return rats_;
    std::vector<Rat> r;
    r.reserve(floats_.size());
    for (double x : floats_) r.push_back(rat_from_double(x));
    return r;
}

Value eval_at(const RationalFunction& f, const Point& p) {
    std::vector<Rat> coords = p.as_rats();
    Rat v = f.eval(coords);
    if (p.mode() == Point::Mode::exact) return Value(v);
    return Value(rat_to_double(v));
}

} // namespace tresse
