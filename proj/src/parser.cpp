#include "rkit/parser.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace rkit {

namespace {

[[noreturn]] void syntax(const SExpr& at, const std::string& message) {
  throw ParseError(ParseError::Kind::Syntax, at.span, message);
}

[[noreturn]] void semantic(const SExpr& at, const std::string& message) {
  throw ParseError(ParseError::Kind::Semantic, at.span, message);
}

const std::string& expect_symbol(const SExpr& e, const char* what) {
  if (!e.is_symbol() || e.symbol.empty()) syntax(e, std::string("expected ") + what);
  return e.symbol;
}

bool is_keyword(const SExpr& e) { return e.is_symbol() && !e.symbol.empty() && e.symbol.front() == ':'; }

/// `a b - t c - u d` -> [(a,t),(b,t),(c,u),(d,object)].
std::vector<TypedName> parse_typed_list(const std::vector<SExpr>& items, std::size_t begin, bool variables) {
  std::vector<TypedName> out;
  std::size_t pending = 0;
  for (std::size_t i = begin; i < items.size(); ++i) {
    const SExpr& e = items[i];
    if (e.is_symbol("-")) {
      if (pending == 0) syntax(e, "'-' without preceding names");
      if (i + 1 >= items.size()) syntax(e, "missing type after '-'");
      const SExpr& t = items[i + 1];
      if (t.is_list) syntax(t, "only single-inheritance types are supported (no 'either')");
      for (std::size_t k = out.size() - pending; k < out.size(); ++k) out[k].type = t.symbol;
      pending = 0;
      ++i;
      continue;
    }
    const std::string& name = expect_symbol(e, variables ? "variable" : "name");
    if (variables != is_variable(name))
      syntax(e, variables ? "expected a ?variable, got " + name : "unexpected variable " + name);
    out.push_back({name, "object"});
    ++pending;
  }
  return out;
}

std::vector<SExpr> conjuncts(const SExpr& e) {
  if (!e.is_list) syntax(e, "expected a list");
  if (e.items.empty()) return {};
  if (e.has_head("and")) return {e.items.begin() + 1, e.items.end()};
  return {e};
}

class DomainReader {
 public:
  explicit DomainReader(const std::string& file) : file_(file) {}

  IncompleteDomain read(std::string_view text) {
    auto top = read_sexprs(text, file_);
    if (top.size() != 1) {
      SExpr where;
      where.span = top.empty() ? SourceSpan{file_, 1, 1} : top[1].span;
      syntax(where, "expected exactly one (define (domain ...)) form");
    }
    const SExpr& root = top.front();
    if (!root.has_head("define") || root.items.size() < 2 || !root.items[1].has_head("domain") ||
        root.items[1].items.size() != 2)
      syntax(root, "expected (define (domain <name>) ...)");
    domain_.name = expect_symbol(root.items[1].items[1], "domain name");

    for (std::size_t i = 2; i < root.items.size(); ++i) {
      const SExpr& section = root.items[i];
      if (!section.is_list || section.items.empty() || !is_keyword(section.items.front()))
        syntax(section, "expected a (:section ...) form");
      const std::string& head = section.items.front().symbol;
      if (head == ":requirements") {
        for (std::size_t k = 1; k < section.items.size(); ++k)
          domain_.requirements.push_back(expect_symbol(section.items[k], "requirement"));
      } else if (head == ":types") {
        domain_.types = parse_typed_list(section.items, 1, false);
      } else if (head == ":constants") {
        domain_.constants = parse_typed_list(section.items, 1, false);
      } else if (head == ":predicates") {
        for (std::size_t k = 1; k < section.items.size(); ++k) read_predicate(section.items[k]);
      } else if (head == ":action") {
        read_action(section);
      } else if (head == ":tandem" || head == ":correlated") {
        semantic(section, "correlated annotations across schemas are not supported");
      } else {
        syntax(section, "unsupported domain section " + head);
      }
    }
    check_types();
    return std::move(domain_);
  }

 private:
  void check_types() {
    for (const auto& t : domain_.types)
      if (t.type != "object" && !type_declared(t.type))
        throw ParseError(ParseError::Kind::Semantic, {file_, 1, 1}, "type " + t.name + " has undeclared parent " + t.type);
  }

  bool type_declared(const std::string& t) const {
    return t == "object" ||
           std::any_of(domain_.types.begin(), domain_.types.end(), [&](const auto& d) { return d.name == t; });
  }

  void read_predicate(const SExpr& e) {
    if (!e.is_list || e.items.empty()) syntax(e, "expected (predicate ?x - type ...)");
    PredicateDecl decl;
    decl.name = expect_symbol(e.items.front(), "predicate name");
    if (is_keyword(e.items.front()) || is_variable(decl.name)) syntax(e, "bad predicate name " + decl.name);
    decl.params = parse_typed_list(e.items, 1, true);
    for (const auto& p : decl.params)
      if (!type_declared(p.type)) semantic(e, "unknown type " + p.type);
    if (domain_.find_predicate(decl.name)) semantic(e, "predicate " + decl.name + " declared twice");
    domain_.predicates.push_back(std::move(decl));
  }

  Atom read_atom(const SExpr& e, const std::set<std::string>& params) {
    if (!e.is_list || e.items.empty()) syntax(e, "expected an atom");
    Atom atom;
    atom.predicate = expect_symbol(e.items.front(), "predicate");
    for (std::size_t i = 1; i < e.items.size(); ++i) atom.args.push_back(expect_symbol(e.items[i], "argument"));
    if (atom.predicate == "not" || atom.predicate == "and" || atom.predicate == "or" || atom.predicate == "when" ||
        atom.predicate == "forall" || atom.predicate == "exists")
      syntax(e, "'" + atom.predicate + "' is not allowed here");
    const PredicateDecl* decl = domain_.find_predicate(atom.predicate);
    if (!decl) semantic(e, "unknown predicate " + atom.predicate);
    if (decl->params.size() != atom.args.size())
      semantic(e, "arity mismatch: " + atom.predicate + " takes " + std::to_string(decl->params.size()) + " arguments");
    for (std::size_t i = 0; i < atom.args.size(); ++i) {
      const auto& a = atom.args[i];
      if (is_variable(a)) {
        if (!params.contains(a)) semantic(e.items[i + 1], "unbound variable " + a);
      } else if (std::none_of(domain_.constants.begin(), domain_.constants.end(),
                              [&](const auto& c) { return c.name == a; })) {
        semantic(e.items[i + 1], "unknown constant " + a);
      }
    }
    return atom;
  }

  // Constants in :when constraints may be problem objects, so they are not
  // resolved here.
  void read_constraint(const SExpr& e, const std::set<std::string>& params, WhenConstraint& out) {
    if (!e.is_list || e.items.empty()) syntax(e, "expected a :when constraint");
    auto var_of = [&](const SExpr& v) {
      const std::string& name = expect_symbol(v, "variable");
      if (!is_variable(name)) syntax(v, "expected a ?variable in :when constraint");
      if (!params.contains(name)) semantic(v, "unbound variable " + name + " in :when constraint");
      return name;
    };
    if (e.has_head("and")) {
      for (std::size_t i = 1; i < e.items.size(); ++i) read_constraint(e.items[i], params, out);
      return;
    }
    if (e.has_head("=")) {
      if (e.items.size() != 3) syntax(e, "expected (= ?var constant)");
      out.terms.push_back({ConstraintTerm::Op::Eq, var_of(e.items[1]), {expect_symbol(e.items[2], "constant")}});
      return;
    }
    if (e.has_head("not")) {
      if (e.items.size() != 2 || !e.items[1].has_head("=") || e.items[1].items.size() != 3)
        syntax(e, "expected (not (= ?var constant))");
      const SExpr& eq = e.items[1];
      out.terms.push_back({ConstraintTerm::Op::Neq, var_of(eq.items[1]), {expect_symbol(eq.items[2], "constant")}});
      return;
    }
    if (e.has_head("in")) {
      if (e.items.size() != 3 || !e.items[2].is_list) syntax(e, "expected (in ?var (c1 c2 ...))");
      ConstraintTerm t{ConstraintTerm::Op::In, var_of(e.items[1]), {}};
      for (const auto& c : e.items[2].items) t.constants.push_back(expect_symbol(c, "constant"));
      if (t.constants.empty()) syntax(e, "empty set in (in ...)");
      out.terms.push_back(std::move(t));
      return;
    }
    syntax(e, "unsupported :when constraint");
  }

  struct EntryState {
    std::optional<Rational> weight;
    std::optional<AnnotationScope> scope;
  };

  void read_entry(const SExpr& e, bool effect, const std::set<std::string>& params, EntryState state,
                  std::vector<Annotation>& out) {
    if (!e.is_list || e.items.empty()) syntax(e, "expected an annotation entry");
    if (e.has_head(":weight")) {
      if (e.items.size() != 3) syntax(e, "expected (:weight w <entry>)");
      if (state.weight) syntax(e, "weight given twice");
      auto w = parse_rational(expect_symbol(e.items[1], "weight"));
      if (!w) syntax(e.items[1], "malformed weight " + e.items[1].symbol);
      state.weight = *w;
      read_entry(e.items[2], effect, params, state, out);
      return;
    }
    if (e.has_head(":when")) {
      if (e.items.size() != 3) syntax(e, "expected (:when <constraint> <entry>)");
      if (state.scope) syntax(e, "an annotation takes at most one :when/:depends scope");
      WhenConstraint c;
      read_constraint(e.items[1], params, c);
      state.scope = WhenScope{std::move(c)};
      read_entry(e.items[2], effect, params, state, out);
      return;
    }
    if (e.has_head(":depends")) {
      if (e.items.size() != 3 || !e.items[1].is_list) syntax(e, "expected (:depends (?v ...) <entry>)");
      if (state.scope) syntax(e, "an annotation takes at most one :when/:depends scope");
      DependsScope d;
      for (const auto& v : e.items[1].items) {
        const std::string& name = expect_symbol(v, "variable");
        if (!is_variable(name)) syntax(v, "expected a ?variable in :depends");
        if (!params.contains(name)) semantic(v, "unbound variable " + name + " in :depends");
        d.vars.push_back(name);
      }
      state.scope = DependsScope{std::move(d)};
      read_entry(e.items[2], effect, params, state, out);
      return;
    }
    if (e.has_head(":tandem") || e.has_head(":correlated"))
      semantic(e, "correlated annotations across schemas are not supported");
    if (is_keyword(e.items.front())) syntax(e, "unknown annotation form " + e.items.front().symbol);

    Annotation a;
    if (e.has_head("not")) {
      if (!effect) syntax(e, "negative possible preconditions are not supported");
      if (e.items.size() != 2) syntax(e, "expected (not <atom>)");
      a.literal = read_atom(e.items[1], params);
      a.kind = AnnotationKind::Del;
    } else {
      a.literal = read_atom(e, params);
      a.kind = effect ? AnnotationKind::Add : AnnotationKind::Pre;
    }
    if (state.weight) a.weight = *state.weight;
    if (state.scope) a.scope = *state.scope;
    out.push_back(std::move(a));
  }

  void read_action(const SExpr& section) {
    if (section.items.size() < 2) syntax(section, "expected (:action <name> ...)");
    ActionSchema schema;
    schema.name = expect_symbol(section.items[1], "action name");
    if (domain_.find_action(schema.name)) semantic(section, "action " + schema.name + " declared twice");

    std::set<std::string> params;
    std::vector<Annotation> poss_pre, poss_eff;
    std::set<std::string> seen;
    for (std::size_t i = 2; i < section.items.size(); i += 2) {
      const SExpr& key = section.items[i];
      if (!is_keyword(key)) syntax(key, "expected an action keyword");
      if (i + 1 >= section.items.size()) syntax(key, "missing value for " + key.symbol);
      if (!seen.insert(key.symbol).second) syntax(key, key.symbol + " given twice");
      const SExpr& value = section.items[i + 1];
      if (key.symbol == ":parameters") {
        if (!value.is_list) syntax(value, "expected a parameter list");
        schema.params = parse_typed_list(value.items, 0, true);
        for (const auto& p : schema.params) {
          if (!params.insert(p.name).second) semantic(value, "duplicate parameter " + p.name);
          if (!type_declared(p.type)) semantic(value, "unknown type " + p.type);
        }
      } else if (key.symbol == ":precondition") {
        for (const auto& c : conjuncts(value)) {
          if (c.has_head("not")) syntax(c, "negative preconditions are not supported");
          schema.pre.push_back(read_atom(c, params));
        }
      } else if (key.symbol == ":effect") {
        for (const auto& c : conjuncts(value)) {
          if (c.has_head("not")) {
            if (c.items.size() != 2) syntax(c, "expected (not <atom>)");
            schema.del.push_back(read_atom(c.items[1], params));
          } else {
            schema.add.push_back(read_atom(c, params));
          }
        }
      } else if (key.symbol == ":poss-precondition") {
        for (const auto& c : conjuncts(value)) read_entry(c, false, params, {}, poss_pre);
      } else if (key.symbol == ":poss-effect") {
        for (const auto& c : conjuncts(value)) read_entry(c, true, params, {}, poss_eff);
      } else {
        syntax(key, "unsupported action keyword " + key.symbol);
      }
    }
    // Parameters must precede everything that uses them.
    if (!seen.contains(":parameters") && section.items.size() > 2 && !params.empty())
      syntax(section, "missing :parameters");
    schema.annotations = std::move(poss_pre);
    schema.annotations.insert(schema.annotations.end(), poss_eff.begin(), poss_eff.end());
    domain_.actions.push_back(std::move(schema));
  }

  std::string file_;
  IncompleteDomain domain_;
};

class ProblemReader {
 public:
  ProblemReader(const IncompleteDomain& domain, const std::string& file) : domain_(domain), file_(file) {}

  ProblemSpec read(std::string_view text) {
    auto top = read_sexprs(text, file_);
    if (top.size() != 1) {
      SExpr where;
      where.span = top.empty() ? SourceSpan{file_, 1, 1} : top[1].span;
      syntax(where, "expected exactly one (define (problem ...)) form");
    }
    const SExpr& root = top.front();
    if (!root.has_head("define") || root.items.size() < 2 || !root.items[1].has_head("problem") ||
        root.items[1].items.size() != 2)
      syntax(root, "expected (define (problem <name>) ...)");
    problem_.name = expect_symbol(root.items[1].items[1], "problem name");
    problem_.domain_name = domain_.name;

    bool have_goal = false;
    std::set<std::string> seen;
    for (std::size_t i = 2; i < root.items.size(); ++i) {
      const SExpr& section = root.items[i];
      if (!section.is_list || section.items.empty() || !is_keyword(section.items.front()))
        syntax(section, "expected a (:section ...) form");
      const std::string& head = section.items.front().symbol;
      if (!seen.insert(head).second) syntax(section, head + " given twice");
      if (head == ":domain") {
        if (section.items.size() != 2) syntax(section, "expected (:domain <name>)");
        problem_.domain_name = expect_symbol(section.items[1], "domain name");
        if (problem_.domain_name != domain_.name)
          semantic(section, "problem is for domain " + problem_.domain_name + ", not " + domain_.name);
      } else if (head == ":objects") {
        problem_.objects = parse_typed_list(section.items, 1, false);
        for (const auto& o : problem_.objects) {
          if (o.type != "object" &&
              std::none_of(domain_.types.begin(), domain_.types.end(), [&](const auto& t) { return t.name == o.type; }))
            semantic(section, "object " + o.name + " has unknown type " + o.type);
          if (!names_.insert(o.name).second) semantic(section, "object " + o.name + " declared twice");
        }
      } else if (head == ":init") {
        for (std::size_t k = 1; k < section.items.size(); ++k) {
          const SExpr& e = section.items[k];
          if (e.has_head("not")) syntax(e, "negative literals are implicit in the initial state");
          problem_.init.push_back(read_ground_atom(e));
        }
      } else if (head == ":goal") {
        if (section.items.size() != 2) syntax(section, "expected (:goal <formula>)");
        for (const auto& c : conjuncts(section.items[1])) {
          if (c.has_head("not")) syntax(c, "negative goals are not supported");
          problem_.goal.push_back(read_ground_atom(c));
        }
        have_goal = true;
      } else if (head == ":rho") {
        if (section.items.size() != 2) syntax(section, "expected (:rho <value>)");
        auto r = parse_rational(expect_symbol(section.items[1], "threshold"));
        if (!r) syntax(section.items[1], "malformed threshold");
        if (*r <= 0 || *r > 1) semantic(section.items[1], "rho must lie in (0,1]");
        problem_.rho = *r;
      } else if (head == ":requirements") {
        // accepted and ignored
      } else {
        syntax(section, "unsupported problem section " + head);
      }
    }
    if (!have_goal) syntax(root, "missing (:goal ...)");
    return std::move(problem_);
  }

 private:
  Atom read_ground_atom(const SExpr& e) {
    if (!e.is_list || e.items.empty()) syntax(e, "expected a ground atom");
    Atom atom;
    atom.predicate = expect_symbol(e.items.front(), "predicate");
    const PredicateDecl* decl = domain_.find_predicate(atom.predicate);
    if (!decl) semantic(e, "unknown predicate " + atom.predicate);
    if (decl->params.size() + 1 != e.items.size())
      semantic(e, "arity mismatch: " + atom.predicate + " takes " + std::to_string(decl->params.size()) + " arguments");
    for (std::size_t i = 1; i < e.items.size(); ++i) {
      const std::string& arg = expect_symbol(e.items[i], "object");
      if (is_variable(arg)) syntax(e.items[i], "variables are not allowed here");
      bool known = names_.contains(arg) || std::any_of(domain_.constants.begin(), domain_.constants.end(),
                                                       [&](const auto& c) { return c.name == arg; });
      if (!known) semantic(e.items[i], "undeclared object " + arg);
      atom.args.push_back(arg);
    }
    return atom;
  }

  const IncompleteDomain& domain_;
  std::string file_;
  ProblemSpec problem_;
  std::set<std::string> names_;
};

std::string typed_list_text(const std::vector<TypedName>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += " ";
    out += names[i].name;
    if (i + 1 == names.size() || names[i + 1].type != names[i].type) out += " - " + names[i].type;
  }
  return out;
}

std::string conjunction_text(const std::vector<std::string>& parts) {
  if (parts.empty()) return "(and)";
  std::string out = "(and";
  for (const auto& p : parts) out += " " + p;
  return out + ")";
}

std::string entry_text(const Annotation& a) {
  std::string text = a.kind == AnnotationKind::Del ? "(not " + to_string(a.literal) + ")" : to_string(a.literal);
  if (a.weight != Rational(1, 2)) text = "(:weight " + to_compact_string(a.weight) + " " + text + ")";
  if (const auto* w = std::get_if<WhenScope>(&a.scope)) {
    text = "(:when " + to_string(w->constraint) + " " + text + ")";
  } else if (const auto* d = std::get_if<DependsScope>(&a.scope)) {
    std::string vars;
    for (std::size_t i = 0; i < d->vars.size(); ++i) vars += (i ? " " : "") + d->vars[i];
    text = "(:depends (" + vars + ") " + text + ")";
  }
  return text;
}

}  // namespace

IncompleteDomain parse_domain(std::string_view text, const std::string& file) { return DomainReader(file).read(text); }

ProblemSpec parse_problem(std::string_view text, const IncompleteDomain& domain, const std::string& file) {
  return ProblemReader(domain, file).read(text);
}

Plan parse_plan(std::string_view text, const std::string& file) {
  Plan plan;
  for (const SExpr& e : read_sexprs(text, file)) {
    if (!e.is_list || e.items.empty()) syntax(e, "expected (action arg ...)");
    PlanStep step;
    step.action = expect_symbol(e.items.front(), "action name");
    for (std::size_t i = 1; i < e.items.size(); ++i) {
      const std::string& arg = expect_symbol(e.items[i], "argument");
      if (is_variable(arg)) syntax(e.items[i], "plan steps must be ground");
      step.args.push_back(arg);
    }
    step.line = e.span.line;
    plan.steps.push_back(std::move(step));
  }
  return plan;
}

std::string serialize_domain(const IncompleteDomain& domain) {
  std::ostringstream out;
  out << "(define (domain " << domain.name << ")\n";
  if (!domain.requirements.empty()) {
    out << "  (:requirements";
    for (const auto& r : domain.requirements) out << " " << r;
    out << ")\n";
  }
  if (!domain.types.empty()) out << "  (:types " << typed_list_text(domain.types) << ")\n";
  if (!domain.constants.empty()) out << "  (:constants " << typed_list_text(domain.constants) << ")\n";
  out << "  (:predicates";
  for (const auto& p : domain.predicates) {
    out << "\n    (" << p.name;
    if (!p.params.empty()) out << " " << typed_list_text(p.params);
    out << ")";
  }
  out << ")\n";
  for (const auto& a : domain.actions) {
    out << "  (:action " << a.name << "\n";
    out << "    :parameters (" << typed_list_text(a.params) << ")\n";
    std::vector<std::string> pre, eff, poss_pre, poss_eff;
    for (const auto& p : a.pre) pre.push_back(to_string(p));
    for (const auto& p : a.add) eff.push_back(to_string(p));
    for (const auto& p : a.del) eff.push_back("(not " + to_string(p) + ")");
    for (const auto& ann : a.annotations)
      (ann.kind == AnnotationKind::Pre ? poss_pre : poss_eff).push_back(entry_text(ann));
    out << "    :precondition " << conjunction_text(pre) << "\n";
    if (!poss_pre.empty()) out << "    :poss-precondition " << conjunction_text(poss_pre) << "\n";
    out << "    :effect " << conjunction_text(eff);
    if (!poss_eff.empty()) out << "\n    :poss-effect " << conjunction_text(poss_eff);
    out << ")\n";
  }
  out << ")\n";
  return out.str();
}

std::string serialize_problem(const ProblemSpec& problem) {
  std::ostringstream out;
  out << "(define (problem " << problem.name << ")\n";
  out << "  (:domain " << problem.domain_name << ")\n";
  if (!problem.objects.empty()) out << "  (:objects " << typed_list_text(problem.objects) << ")\n";
  out << "  (:init";
  for (const auto& a : problem.init) out << "\n    " << to_string(a);
  out << ")\n";
  std::vector<std::string> goal;
  for (const auto& g : problem.goal) goal.push_back(to_string(g));
  out << "  (:goal " << conjunction_text(goal) << ")";
  if (problem.rho) out << "\n  (:rho " << to_compact_string(*problem.rho) << ")";
  out << ")\n";
  return out.str();
}

std::string serialize_plan(const Plan& plan) {
  std::string out;
  for (const auto& s : plan.steps) out += to_string(s) + "\n";
  return out;
}

}  // namespace rkit
