#include "rkit/fixtures.hpp"

#include <sstream>
#include <stdexcept>

namespace rkit {

ProblemText make_mini_logistics(int m) {
  if (m < 1) throw std::invalid_argument("mini-logistics needs m >= 1");
  std::ostringstream d;
  d << "(define (domain mini-logistics-m" << m << ")\n";
  d << "  (:requirements :strips :typing)\n";
  d << "  (:types location container truck airplane robot - object";
  for (int j = 1; j <= m; ++j) d << "\n          robot-m" << j;
  d << " - robot)\n";
  d << "  (:predicates (at ?x - object ?l - location) (in ?c - container ?v - object)\n";
  d << "               (road ?from ?to - location) (air-route ?from ?to - location)\n";
  d << "               (light ?c - container))\n";
  d << R"(
  (:action move-robot
    :parameters (?r - robot ?from ?to - location)
    :precondition (and (at ?r ?from) (road ?from ?to))
    :effect (and (at ?r ?to) (not (at ?r ?from))))

  (:action drive-truck
    :parameters (?t - truck ?from ?to - location)
    :precondition (and (at ?t ?from) (road ?from ?to))
    :effect (and (at ?t ?to) (not (at ?t ?from))))
)";
  for (int j = 1; j <= m; ++j) {
    d << "\n  (:action load-truck-m" << j << "\n";
    d << "    :parameters (?c - container ?t - truck ?r - robot-m" << j << " ?l - location)\n";
    d << "    :precondition (and (at ?c ?l) (at ?t ?l) (at ?r ?l))\n";
    d << "    :poss-precondition (:weight 0.7 (light ?c))\n";
    d << "    :effect (and (in ?c ?t) (not (at ?c ?l))))\n";
  }
  d << R"(
  (:action unload-truck
    :parameters (?c - container ?t - truck ?l - location)
    :precondition (and (in ?c ?t) (at ?t ?l))
    :effect (and (at ?c ?l) (not (in ?c ?t))))

  (:action load-airplane
    :parameters (?c - container ?a - airplane ?l - location)
    :precondition (and (at ?c ?l) (at ?a ?l))
    :effect (and (in ?c ?a) (not (at ?c ?l))))

  (:action unload-airplane
    :parameters (?c - container ?a - airplane ?l - location)
    :precondition (and (in ?c ?a) (at ?a ?l))
    :effect (and (at ?c ?l) (not (in ?c ?a))))

  (:action fly-airplane
    :parameters (?a - airplane ?from ?to - location)
    :precondition (and (at ?a ?from) (air-route ?from ?to))
    :effect (and (at ?a ?to) (not (at ?a ?from)))))
)";

  std::ostringstream p;
  p << "(define (problem mini-logistics-m" << m << "-swap)\n";
  p << "  (:domain mini-logistics-m" << m << ")\n";
  p << "  (:objects ap1 dt1 ap2 dt2 - location\n";
  p << "            c1 c2 - container\n";
  p << "            t1 t2 - truck\n";
  p << "            a1 - airplane";
  for (int j = 1; j <= m; ++j) p << "\n            r1-" << j << " r2-" << j << " - robot-m" << j;
  p << ")\n";
  p << "  (:init (road ap1 dt1) (road dt1 ap1) (road ap2 dt2) (road dt2 ap2)\n";
  p << "         (air-route ap1 ap2) (air-route ap2 ap1)\n";
  p << "         (at c1 dt1) (at c2 dt2) (at t1 dt1) (at t2 dt2) (at a1 ap1)";
  for (int j = 1; j <= m; ++j) p << "\n         (at r1-" << j << " ap1) (at r2-" << j << " ap2)";
  p << ")\n";
  p << "  (:goal (and (at c1 ap2) (at c2 ap1))))\n";
  return {d.str(), p.str()};
}

}  // namespace rkit
