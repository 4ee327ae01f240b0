#pragma once

// Threshold-type bipolar memristive device: resistance X is the internal state,
// its rate is a clipped linear function of the applied voltage gated by the
// programmed resistance window.

#include <algorithm>
#include <cmath>
#include <concepts>
#include <stdexcept>

namespace memgrid {

template <std::floating_point Scalar>
struct DeviceParams {
    Scalar r_on = Scalar(2e3);
    Scalar r_off = Scalar(2e5);
    Scalar v_t = Scalar(0.6);
    Scalar beta = Scalar(5e5);  // ohm / (V s)
    Scalar r_init = Scalar(2e5);

    Scalar ratio() const { return r_off / r_on; }

    void validate() const {
        if (!(r_on > 0) || !(r_on < r_off))
            throw std::invalid_argument("device: require 0 < r_on < r_off");
        if (!(r_init >= r_on) || !(r_init <= r_off))
            throw std::invalid_argument("device: require r_on <= r_init <= r_off");
        if (!(v_t >= 0)) throw std::invalid_argument("device: require v_t >= 0");
        if (!(beta > 0)) throw std::invalid_argument("device: require beta > 0");
    }

    bool operator==(const DeviceParams&) const = default;
};

template <std::floating_point Scalar>
struct DeviceState {
    Scalar x;

    bool operator==(const DeviceState&) const = default;
};

/// Sign applied to the node-voltage difference v(a) - v(b) to obtain V_M.
enum class Polarity : int { forward = 1, inverted = -1 };

constexpr int sign(Polarity p) { return static_cast<int>(p); }

template <std::floating_point Scalar>
DeviceState<Scalar> initial_state(const DeviceParams<Scalar>& p) {
    return {p.r_init};
}

/// Zero inside the closed deadband |v_m| <= v_t, shifted linear outside it.
template <std::floating_point Scalar>
constexpr Scalar clipped_drive(Scalar v_m, Scalar v_t) {
    if (v_m > v_t) return v_m - v_t;
    if (v_m < -v_t) return v_m + v_t;
    return Scalar(0);
}

/// Heaviside step with theta(0) = 0.
template <std::floating_point Scalar>
constexpr Scalar step(Scalar v) {
    return v > 0 ? Scalar(1) : Scalar(0);
}

/// dX/dt. Positive drive can only raise X below r_off (RESET), negative drive
/// can only lower X above r_on (SET).
template <std::floating_point Scalar>
constexpr Scalar state_rate(Scalar x, Scalar v_m, const DeviceParams<Scalar>& p) {
    const Scalar window = step(v_m) * step(p.r_off - x) + step(-v_m) * step(x - p.r_on);
    return p.beta * clipped_drive(v_m, p.v_t) * window;
}

/// One explicit Euler step followed by a hard clamp to [r_on, r_off].
template <std::floating_point Scalar>
constexpr DeviceState<Scalar> advance(DeviceState<Scalar> s, Scalar v_m, Scalar dt,
                                      const DeviceParams<Scalar>& p) {
    return {std::clamp(s.x + state_rate(s.x, v_m, p) * dt, p.r_on, p.r_off)};
}

template <std::floating_point Scalar>
constexpr Scalar current(DeviceState<Scalar> s, Scalar v_m) {
    return v_m / s.x;
}

using Params = DeviceParams<double>;
using State = DeviceState<double>;

}  // namespace memgrid
