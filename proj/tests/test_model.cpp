#include <doctest.h>

#include "rkit/bits.hpp"
#include "rkit/model.hpp"
#include "rkit/parser.hpp"
#include "rkit/rational.hpp"

using namespace rkit;

namespace {

bool has_code(const std::vector<Diagnostic>& ds, const std::string& code) {
  for (const auto& d : ds)
    if (d.code == code) return true;
  return false;
}

IncompleteDomain tiny() {
  return parse_domain(R"((define (domain d) (:predicates (p) (q ?x))
    (:action a :parameters (?x) :precondition (q ?x) :effect (p))))");
}

}  // namespace

TEST_SUITE("model") {
  TEST_CASE("decimal weights parse exactly") {
    CHECK(*parse_rational("0.7") == Rational(7, 10));
    CHECK(*parse_rational("7/10") == Rational(7, 10));
    CHECK(*parse_rational(".25") == Rational(1, 4));
    CHECK(*parse_rational("1") == 1);
    CHECK(*parse_rational("-0.5") == Rational(-1, 2));
    CHECK(*parse_rational("0.9") == Rational(9, 10));
    CHECK_FALSE(parse_rational("0.7.1"));
    CHECK_FALSE(parse_rational("1/0"));
    CHECK_FALSE(parse_rational(""));
    CHECK_FALSE(parse_rational("abc"));
    CHECK_FALSE(parse_rational("1e3"));
  }

  TEST_CASE("rational printing") {
    CHECK(to_fraction_string(Rational(3, 4)) == "3/4");
    CHECK(to_compact_string(Rational(3, 4)) == "0.75");
    CHECK(to_compact_string(Rational(1, 3)) == "1/3");
    CHECK(to_compact_string(Rational(1)) == "1");
    CHECK(to_compact_string(Rational(51, 100)) == "0.51");
  }

  TEST_CASE("bits") {
    Bits a(130), b(130);
    a.set(0);
    a.set(64);
    a.set(129);
    CHECK(a.count() == 3);
    CHECK(a.ones() == std::vector<int>{0, 64, 129});
    CHECK(b.none());
    CHECK(b.is_subset_of(a));
    CHECK_FALSE(a.is_subset_of(b));
    b = a;
    CHECK(a == b);
    CHECK(a.hash() == b.hash());
    b.reset(64);
    CHECK(b.is_subset_of(a));
    CHECK(a != b);
  }

  TEST_CASE("valid domain has no diagnostics") { CHECK(validate_domain(tiny()).empty()); }

  TEST_CASE("weight outside the open unit interval is rejected") {
    auto d = tiny();
    d.actions[0].annotations.push_back({{"p", {}}, AnnotationKind::Pre, Rational(0), SchemaScope{}});
    CHECK(has_code(validate_domain(d), "weight-range"));
    d.actions[0].annotations[0].weight = Rational(3, 2);
    CHECK(has_code(validate_domain(d), "weight-range"));
    d.actions[0].annotations[0].weight = Rational(1);
    CHECK(has_code(validate_domain(d), "weight-range"));
    d.actions[0].annotations[0].weight = Rational(1, 2);
    CHECK_FALSE(has_errors(validate_domain(d)));
  }

  TEST_CASE("a literal cannot be both certain and possible of one kind") {
    auto d = tiny();
    d.actions[0].annotations.push_back({{"p", {}}, AnnotationKind::Add, Rational(1, 2), SchemaScope{}});
    CHECK(has_code(validate_domain(d), "certain-possible-overlap"));
  }

  TEST_CASE("possible add and delete of the same literal is only a warning") {
    auto d = tiny();
    d.actions[0].add.clear();
    d.actions[0].annotations.push_back({{"p", {}}, AnnotationKind::Add, Rational(1, 2), SchemaScope{}});
    d.actions[0].annotations.push_back({{"p", {}}, AnnotationKind::Del, Rational(1, 2), SchemaScope{}});
    auto ds = validate_domain(d);
    CHECK(has_code(ds, "possible-add-del"));
    CHECK_FALSE(has_errors(ds));
  }

  TEST_CASE("structural errors") {
    auto d = tiny();
    d.actions[0].pre.push_back({"nope", {}});
    CHECK(has_code(validate_domain(d), "unknown-predicate"));
    d = tiny();
    d.actions[0].pre.push_back({"q", {}});
    CHECK(has_code(validate_domain(d), "arity-mismatch"));
    d = tiny();
    d.actions[0].add.push_back({"q", {"?y"}});
    CHECK(has_code(validate_domain(d), "unbound-variable"));
    d = tiny();
    d.actions[0].annotations.push_back({{"p", {}}, AnnotationKind::Pre, Rational(1, 2), SchemaScope{}});
    d.actions[0].annotations.push_back({{"p", {}}, AnnotationKind::Pre, Rational(1, 4), SchemaScope{}});
    CHECK(has_code(validate_domain(d), "duplicate-annotation"));
  }

  TEST_CASE("empty :when constraint is an error") {
    auto d = tiny();
    d.actions[0].annotations.push_back({{"p", {}}, AnnotationKind::Pre, Rational(1, 2), WhenScope{}});
    CHECK(has_code(validate_domain(d), "empty-constraint"));
  }
}
