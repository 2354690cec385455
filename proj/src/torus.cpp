#include "oddgon/torus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "oddgon/error.hpp"

namespace oddgon {

namespace {

// Times in (t_lo, t_hi] at which s + v t meets the lines {coord = integer}.
void lattice_times(double s, double v, double t_lo, double t_hi, std::vector<double>& out) {
    if (v == 0.0) return;
    const double a = s + v * t_lo;
    const double b = s + v * t_hi;
    const double lo = std::min(a, b);
    const double hi = std::max(a, b);
    for (double k = std::floor(lo) + 1.0; k <= hi; k += 1.0) {
        const double t = (k - s) / v;
        if (t > t_lo && t <= t_hi) out.push_back(t);
    }
}

std::vector<TorusCrossing> crossings_in(Vec2 s, Vec2 v, double t_lo, double t_hi, double delta) {
    std::vector<double> tb;
    std::vector<double> ta;
    lattice_times(s.x, v.x, t_lo, t_hi, tb);
    lattice_times(s.y, v.y, t_lo, t_hi, ta);
    std::vector<TorusCrossing> out;
    out.reserve(ta.size() + tb.size());
    for (double t : ta) out.push_back({'A', t, s + v * t});
    for (double t : tb) out.push_back({'B', t, s + v * t});
    std::sort(out.begin(), out.end(), [](const TorusCrossing& a, const TorusCrossing& b) { return a.time < b.time; });
    const double speed = norm(v);
    for (std::size_t i = 1; i < out.size(); ++i) {
        if (out[i].letter != out[i - 1].letter && (out[i].time - out[i - 1].time) * speed < delta) {
            std::ostringstream msg;
            msg << "torus line passes within " << delta << " of a lattice point near (" << out[i].hit.x << ", "
                << out[i].hit.y << ")";
            throw CornerHit(msg.str());
        }
    }
    return out;
}

TorusTrajectory trace_line(Vec2 start, Vec2 v, std::size_t max_crossings, double delta) {
    if (v.x < 0 || v.y < 0 || (v.x == 0 && v.y == 0)) {
        throw Error(ErrorCode::InvalidArgument, "torus direction must lie in [0, pi/2)");
    }
    TorusTrajectory traj;
    traj.start = start;
    traj.velocity = v;
    double horizon = (static_cast<double>(max_crossings) + 2.0) / (v.x + v.y);
    while (true) {
        traj.crossings = crossings_in(start, v, 0.0, horizon, delta);
        if (traj.crossings.size() >= max_crossings) break;
        horizon *= 2.0;
    }
    traj.crossings.resize(max_crossings);
    return traj;
}

std::string least_rotation(const std::string& s) {
    std::string best = s;
    for (std::size_t i = 1; i < s.size(); ++i) best = std::min(best, s.substr(i) + s.substr(0, i));
    return best;
}

} // namespace

TorusWord TorusTrajectory::window() const {
    TorusWord w{{}, Topology::Window};
    for (const TorusCrossing& c : crossings) w.letters.push_back(c.letter);
    return w;
}

std::optional<TorusWord> TorusTrajectory::cyclic() const {
    if (!period || crossings.size() < *period) return std::nullopt;
    TorusWord w{{}, Topology::Cyclic};
    for (std::size_t i = 0; i < *period; ++i) w.letters.push_back(crossings[i].letter);
    return w;
}

TorusTrajectory torus_trace(Vec2 start, double theta, std::size_t max_crossings, double delta) {
    if (!(theta >= 0.0 && theta < std::numbers::pi / 2)) {
        throw Error(ErrorCode::InvalidArgument, "torus direction must lie in [0, pi/2)");
    }
    return trace_line(start, unit_vector(theta), max_crossings, delta);
}

TorusTrajectory torus_trace_slope(Vec2 start, int p, int q, std::size_t max_crossings, double delta) {
    if (p < 0 || q <= 0) throw Error(ErrorCode::InvalidArgument, "slope p/q needs p >= 0 and q > 0");
    TorusTrajectory traj = trace_line(start, {static_cast<double>(q), static_cast<double>(p)}, max_crossings, delta);
    if (std::gcd(p, q) == 1) traj.period = static_cast<std::size_t>(p + q);
    return traj;
}

TorusWord torus_derive_rule(const TorusWord& word) {
    for (char c : word.letters) {
        if (c != 'A' && c != 'B') throw Error(ErrorCode::InvalidArgument, "torus words use only A and B");
    }
    TorusWord out{{}, word.topology};
    std::string w = word.letters;
    const auto first = w.find('A');
    if (first == std::string::npos) {
        if (word.topology == Topology::Cyclic) out.letters = w;
        return out;
    }
    if (word.topology == Topology::Cyclic) {
        std::rotate(w.begin(), w.begin() + static_cast<long>(first), w.end());
        w.push_back('A'); // closing A, dropped again below
    } else {
        const auto last = w.rfind('A');
        if (last == first) return out;
        w = w.substr(first, last - first + 1);
    }
    std::size_t i = 0;
    while (i < w.size()) {
        out.letters.push_back('A');
        std::size_t j = i + 1;
        while (j < w.size() && w[j] == 'B') ++j;
        if (j == w.size()) break;
        out.letters.append(j - i - 1 > 0 ? j - i - 2 : 0, 'B');
        i = j;
    }
    if (word.topology == Topology::Cyclic) out.letters.pop_back();
    return out;
}

TorusWord torus_derive_geometric(const TorusTrajectory& trajectory) {
    const Vec2 v = trajectory.velocity;
    if (!(v.x > 0 && v.y >= 0 && v.y <= v.x)) {
        throw Error(ErrorCode::InvalidArgument, "torus derivation needs a direction in [0, pi/4]");
    }
    const Vec2 s = trajectory.start;
    const Vec2 image_start{s.x - s.y, s.y};
    const Vec2 image_v{v.x - v.y, v.y};

    if (trajectory.period) {
        // Integer velocity: both lines close up after unit time.
        TorusWord out{{}, Topology::Cyclic};
        for (const TorusCrossing& c : crossings_in(image_start, image_v, 0.0, 1.0, 0.0)) out.letters.push_back(c.letter);
        return out;
    }

    TorusWord out{{}, Topology::Window};
    const auto first = std::find_if(trajectory.crossings.begin(), trajectory.crossings.end(),
                                    [](const TorusCrossing& c) { return c.letter == 'A'; });
    const auto last = std::find_if(trajectory.crossings.rbegin(), trajectory.crossings.rend(),
                                   [](const TorusCrossing& c) { return c.letter == 'A'; });
    if (first == trajectory.crossings.end() || &*first == &*last) return out;
    constexpr double kSlack = 1e-9;
    for (const TorusCrossing& c : crossings_in(image_start, image_v, first->time - kSlack, last->time + kSlack, 0.0)) {
        out.letters.push_back(c.letter);
    }
    return out;
}

bool same_torus_word(const TorusWord& a, const TorusWord& b) {
    if (a.topology != b.topology || a.letters.size() != b.letters.size()) return false;
    if (a.topology == Topology::Window) return a.letters == b.letters;
    return least_rotation(a.letters) == least_rotation(b.letters);
}

} // namespace oddgon
