#pragma once

#include <string>

namespace rkit {

struct ProblemText {
  std::string domain;
  std::string problem;
};

/// Two cities, each with an airport and a downtown area, one container per
/// city downtown, one truck per city and one airplane. City i has robots
/// r<i>-1..r<i>-m at its airport, robot j made by manufacturer j. Loading a
/// truck with a robot of manufacturer j uses schema load-truck-mj, which has
/// a possible precondition (light ?c) of weight 0.7; containers are heavy.
/// The goal swaps the containers between the two airports.
ProblemText make_mini_logistics(int m);

}  // namespace rkit
