#include "rkit/model.hpp"

#include <algorithm>
#include <set>

namespace rkit {

std::string to_string(const Atom& atom) {
  std::string out = "(" + atom.predicate;
  for (const auto& a : atom.args) out += " " + a;
  return out + ")";
}

std::string_view to_string(AnnotationKind kind) {
  switch (kind) {
    case AnnotationKind::Pre: return "pre";
    case AnnotationKind::Add: return "add";
    case AnnotationKind::Del: return "del";
  }
  return "?";
}

std::string to_string(const WhenConstraint& constraint) {
  auto term_text = [](const ConstraintTerm& t) {
    switch (t.op) {
      case ConstraintTerm::Op::Eq: return "(= " + t.var + " " + t.constants.at(0) + ")";
      case ConstraintTerm::Op::Neq: return "(not (= " + t.var + " " + t.constants.at(0) + "))";
      case ConstraintTerm::Op::In: {
        std::string s = "(in " + t.var + " (";
        for (std::size_t i = 0; i < t.constants.size(); ++i) s += (i ? " " : "") + t.constants[i];
        return s + "))";
      }
    }
    return std::string{};
  };
  if (constraint.terms.size() == 1) return term_text(constraint.terms.front());
  std::string out = "(and";
  for (const auto& t : constraint.terms) out += " " + term_text(t);
  return out + ")";
}

std::string to_string(const PlanStep& step) {
  std::string out = "(" + step.action;
  for (const auto& a : step.args) out += " " + a;
  return out + ")";
}

std::vector<const Annotation*> ActionSchema::annotations_of(AnnotationKind kind) const {
  std::vector<const Annotation*> out;
  for (const auto& a : annotations)
    if (a.kind == kind) out.push_back(&a);
  return out;
}

const PredicateDecl* IncompleteDomain::find_predicate(const std::string& name) const {
  auto it = std::find_if(predicates.begin(), predicates.end(), [&](const auto& p) { return p.name == name; });
  return it == predicates.end() ? nullptr : &*it;
}

const ActionSchema* IncompleteDomain::find_action(const std::string& name) const {
  auto it = std::find_if(actions.begin(), actions.end(), [&](const auto& a) { return a.name == name; });
  return it == actions.end() ? nullptr : &*it;
}

bool IncompleteDomain::is_subtype(const std::string& type, const std::string& ancestor) const {
  std::string current = type;
  // Bounded walk so a cyclic declaration cannot loop forever.
  for (std::size_t guard = 0; guard <= types.size() + 1; ++guard) {
    if (current == ancestor) return true;
    if (current == "object") return false;
    auto it = std::find_if(types.begin(), types.end(), [&](const auto& t) { return t.name == current; });
    if (it == types.end()) return false;
    current = it->type;
  }
  return false;
}

bool has_errors(const std::vector<Diagnostic>& diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(), [](const auto& d) { return d.is_error(); });
}

namespace {

struct Checker {
  const IncompleteDomain& domain;
  std::vector<Diagnostic> out;

  void error(std::string code, std::string message) {
    out.push_back({Diagnostic::Severity::Error, std::move(code), std::move(message)});
  }
  void warning(std::string code, std::string message) {
    out.push_back({Diagnostic::Severity::Warning, std::move(code), std::move(message)});
  }

  bool type_known(const std::string& t) const {
    return t == "object" ||
           std::any_of(domain.types.begin(), domain.types.end(), [&](const auto& d) { return d.name == t; });
  }

  void check_atom(const ActionSchema& schema, const Atom& atom, const std::set<std::string>& params) {
    const PredicateDecl* decl = domain.find_predicate(atom.predicate);
    if (!decl) {
      error("unknown-predicate", schema.name + ": unknown predicate in " + to_string(atom));
    } else if (decl->params.size() != atom.args.size()) {
      error("arity-mismatch", schema.name + ": " + to_string(atom) + " expects " +
                                  std::to_string(decl->params.size()) + " arguments");
    }
    for (const auto& arg : atom.args)
      if (is_variable(arg) && !params.contains(arg))
        error("unbound-variable", schema.name + ": variable " + arg + " in " + to_string(atom) + " is not a parameter");
  }

  void check_schema(const ActionSchema& schema) {
    std::set<std::string> params;
    for (const auto& p : schema.params) {
      if (!params.insert(p.name).second) error("duplicate-parameter", schema.name + ": duplicate parameter " + p.name);
      if (!type_known(p.type)) error("unknown-type", schema.name + ": unknown type " + p.type);
    }
    for (const auto* list : {&schema.pre, &schema.add, &schema.del})
      for (const auto& atom : *list) check_atom(schema, atom, params);

    auto certain = [&](AnnotationKind k) -> const std::vector<Atom>& {
      return k == AnnotationKind::Pre ? schema.pre : k == AnnotationKind::Add ? schema.add : schema.del;
    };

    for (std::size_t i = 0; i < schema.annotations.size(); ++i) {
      const Annotation& a = schema.annotations[i];
      check_atom(schema, a.literal, params);
      if (a.weight <= 0 || a.weight >= 1)
        error("weight-range", schema.name + ": weight " + to_fraction_string(a.weight) + " of " +
                                  to_string(a.literal) + " is outside the open interval (0,1)");
      const auto& c = certain(a.kind);
      if (std::find(c.begin(), c.end(), a.literal) != c.end())
        error("certain-possible-overlap", schema.name + ": " + to_string(a.literal) + " is both a certain and a possible " +
                                              std::string(to_string(a.kind)));
      if (const auto* w = std::get_if<WhenScope>(&a.scope)) {
        if (w->constraint.terms.empty()) error("empty-constraint", schema.name + ": empty :when constraint");
        for (const auto& t : w->constraint.terms)
          if (!params.contains(t.var))
            error("unbound-variable", schema.name + ": :when constraint mentions " + t.var + " which is not a parameter");
      } else if (const auto* d = std::get_if<DependsScope>(&a.scope)) {
        for (const auto& v : d->vars)
          if (!params.contains(v))
            error("unbound-variable", schema.name + ": :depends mentions " + v + " which is not a parameter");
      }
      for (std::size_t j = 0; j < i; ++j) {
        const Annotation& b = schema.annotations[j];
        if (b.kind == a.kind && b.literal == a.literal && b.scope == a.scope)
          error("duplicate-annotation", schema.name + ": duplicate possible " + std::string(to_string(a.kind)) + " " +
                                            to_string(a.literal));
        bool add_del = (a.kind == AnnotationKind::Add && b.kind == AnnotationKind::Del) ||
                       (a.kind == AnnotationKind::Del && b.kind == AnnotationKind::Add);
        if (add_del && a.literal == b.literal)
          warning("possible-add-del", schema.name + ": " + to_string(a.literal) +
                                          " is both a possible add and a possible delete (independent variables)");
      }
    }
  }

  void run() {
    std::set<std::string> names;
    for (const auto& t : domain.types)
      if (!type_known(t.type)) error("unknown-type", "type " + t.name + " has unknown parent " + t.type);
    for (const auto& c : domain.constants)
      if (!type_known(c.type)) error("unknown-type", "constant " + c.name + " has unknown type " + c.type);
    std::set<std::string> preds;
    for (const auto& p : domain.predicates)
      if (!preds.insert(p.name).second) error("duplicate-predicate", "predicate " + p.name + " declared twice");
    for (const auto& schema : domain.actions) {
      if (!names.insert(schema.name).second) error("duplicate-action", "action " + schema.name + " declared twice");
      check_schema(schema);
    }
  }
};

}  // namespace

std::vector<Diagnostic> validate_domain(const IncompleteDomain& domain) {
  Checker checker{domain, {}};
  checker.run();
  return std::move(checker.out);
}

}  // namespace rkit
