#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "oddgon/cylinder.hpp"
#include "oddgon/derivation.hpp"
#include "oddgon/flow.hpp"
#include "oddgon/torus.hpp"

namespace oddgon {

using Json = nlohmann::ordered_json;

// Rounds to 12 significant digits, the printed precision of coordinates.
double round12(double x);

Json to_json(const Surface& surface);
Json to_json(const Surface& surface, const Trajectory& trajectory);
Json to_json(const Surface& surface, const Trajectory& trajectory, const DerivedTrajectory& derived);
Json to_json(const TransitionDiagram& diagram);
Json to_json(const VertexGuide& guide);
Json to_json(const std::vector<Cylinder>& cylinders);
Json to_json(const TorusTrajectory& trajectory);
Json torus_word_json(const TorusWord& word);

// Derivation result: the input word, the derived word, and a status of
// "empty", "fixed" (derived equals input) or "derived".
Json derivation_json(int n, const Word& input, const Word& derived, const std::string& method);

std::string to_dot(const TransitionDiagram& diagram);

// Polygon outlines (P_L shaded), optional trajectory polyline and guide dots.
std::string render_svg(const Surface& surface, const Trajectory* trajectory = nullptr, const VertexGuide* guide = nullptr);

} // namespace oddgon
