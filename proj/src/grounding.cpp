#include "rkit/grounding.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rkit {

std::string GroundAction::label() const {
  std::string out = "(" + name;
  for (const auto& a : args) out += " " + a;
  return out + ")";
}

std::vector<int> GroundAction::vars() const {
  std::vector<int> out;
  for (const auto* list : {&poss_pre, &poss_add, &poss_del})
    for (const auto& item : *list) out.push_back(item.var);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Bits GroundModel::initial_state() const { return bits_from(fluents.size(), init); }

int GroundModel::fluent_id(const Atom& atom) const {
  auto it = fluent_index.find(to_string(atom));
  return it == fluent_index.end() ? -1 : it->second;
}

namespace {

using Binding = std::map<std::string, std::string>;

Atom substitute(const Atom& atom, const Binding& binding) {
  Atom out{atom.predicate, {}};
  out.args.reserve(atom.args.size());
  for (const auto& a : atom.args) out.args.push_back(is_variable(a) ? binding.at(a) : a);
  return out;
}

bool satisfies(const WhenConstraint& c, const Binding& binding) {
  for (const auto& t : c.terms) {
    const std::string& value = binding.at(t.var);
    bool member = std::find(t.constants.begin(), t.constants.end(), value) != t.constants.end();
    if (t.op == ConstraintTerm::Op::Neq ? member : !member) return false;
  }
  return true;
}

std::string sanitize(std::string s) {
  for (char& c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_')) c = '_';
  return s;
}

struct PendingItem {
  Atom atom;
  std::string key;
};

struct PendingAction {
  std::string name;
  std::vector<std::string> args;
  int schema = 0;
  std::vector<Atom> pre, add, del;
  std::vector<PendingItem> poss[3];
};

struct VarInfo {
  const ActionSchema* schema;
  const Annotation* annotation;
  std::string binding_class;
};

void sort_unique(std::vector<int>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

GroundModel ground(const IncompleteDomain& domain, const ProblemSpec& problem, const GroundOptions& options) {
  GroundModel model;
  model.domain_name = domain.name;
  model.problem_name = problem.name;
  for (const auto& p : domain.predicates) model.predicate_arities.emplace_back(p.name, static_cast<int>(p.params.size()));

  // Universe of objects: domain constants followed by problem objects.
  std::vector<TypedName> objects = domain.constants;
  std::set<std::string> object_names;
  for (const auto& c : domain.constants) object_names.insert(c.name);
  for (const auto& o : problem.objects) {
    if (!object_names.insert(o.name).second) throw GroundingError("object " + o.name + " declared twice");
    if (o.type != "object" &&
        std::none_of(domain.types.begin(), domain.types.end(), [&](const auto& t) { return t.name == o.type; }))
      throw GroundingError("object " + o.name + " has unknown type " + o.type);
    objects.push_back(o);
  }
  model.objects = objects;

  std::map<std::string, std::vector<std::string>> by_type;
  auto objects_of = [&](const std::string& type) -> const std::vector<std::string>& {
    auto [it, inserted] = by_type.try_emplace(type);
    if (inserted)
      for (const auto& o : objects)
        if (domain.is_subtype(o.type, type)) it->second.push_back(o.name);
    return it->second;
  };

  std::vector<PendingAction> pending;
  std::map<std::string, VarInfo> var_infos;
  std::set<std::string> atom_texts;
  std::map<std::string, Atom> atoms;
  auto note_atom = [&](const Atom& a) {
    auto text = to_string(a);
    if (atom_texts.insert(text).second) atoms.emplace(text, a);
  };

  for (std::size_t s = 0; s < domain.actions.size(); ++s) {
    const ActionSchema& schema = domain.actions[s];
    std::vector<const std::vector<std::string>*> domains;
    bool empty = false;
    for (const auto& p : schema.params) {
      domains.push_back(&objects_of(p.type));
      empty = empty || domains.back()->empty();
    }
    std::vector<bool> annotation_used(schema.annotations.size(), false);
    if (!empty) {
      std::vector<std::size_t> odometer(schema.params.size(), 0);
      while (true) {
        Binding binding;
        PendingAction act;
        act.name = schema.name;
        act.schema = static_cast<int>(s);
        for (std::size_t i = 0; i < schema.params.size(); ++i) {
          const std::string& value = (*domains[i])[odometer[i]];
          binding[schema.params[i].name] = value;
          act.args.push_back(value);
        }
        for (const auto& a : schema.pre) act.pre.push_back(substitute(a, binding));
        for (const auto& a : schema.add) act.add.push_back(substitute(a, binding));
        for (const auto& a : schema.del) act.del.push_back(substitute(a, binding));
        for (std::size_t k = 0; k < schema.annotations.size(); ++k) {
          const Annotation& ann = schema.annotations[k];
          std::string binding_class;
          if (const auto* w = std::get_if<WhenScope>(&ann.scope)) {
            if (!satisfies(w->constraint, binding)) continue;
            binding_class = "when:" + to_string(w->constraint);
          } else if (const auto* d = std::get_if<DependsScope>(&ann.scope)) {
            binding_class = "depends:";
            for (std::size_t i = 0; i < d->vars.size(); ++i) binding_class += (i ? "," : "") + binding.at(d->vars[i]);
          }
          annotation_used[k] = true;
          std::string key = schema.name + "|" + std::string(to_string(ann.kind)) + "|" + to_string(ann.literal) + "|" +
                            binding_class;
          var_infos.try_emplace(key, VarInfo{&schema, &ann, binding_class});
          act.poss[static_cast<int>(ann.kind)].push_back({substitute(ann.literal, binding), key});
        }
        for (const auto* list : {&act.pre, &act.add, &act.del})
          for (const auto& a : *list) note_atom(a);
        for (const auto& list : act.poss)
          for (const auto& item : list) note_atom(item.atom);
        pending.push_back(std::move(act));

        std::size_t i = 0;
        for (; i < odometer.size(); ++i) {
          if (++odometer[i] < domains[i]->size()) break;
          odometer[i] = 0;
        }
        if (i == odometer.size()) break;
      }
    }
    for (std::size_t k = 0; k < schema.annotations.size(); ++k)
      if (!annotation_used[k] && std::holds_alternative<WhenScope>(schema.annotations[k].scope))
        model.warnings.push_back(schema.name + ": :when constraint of possible " +
                                 std::string(to_string(schema.annotations[k].kind)) + " " +
                                 to_string(schema.annotations[k].literal) + " is unsatisfiable; annotation is vacuous");
  }

  auto check_ground = [&](const Atom& a, const char* where) {
    for (const auto& arg : a.args)
      if (!object_names.contains(arg)) throw GroundingError(std::string(where) + " mentions undeclared object " + arg);
    note_atom(a);
  };
  for (const auto& a : problem.init) check_ground(a, "initial state");
  for (const auto& a : problem.goal) check_ground(a, "goal");

  for (const auto& [text, atom] : atoms) {
    model.fluent_index.emplace(text, static_cast<int>(model.fluents.size()));
    model.fluents.push_back(atom);
  }
  std::map<std::string, int> var_ids;
  for (const auto& [key, info] : var_infos) {
    int id = static_cast<int>(model.vars.size());
    var_ids.emplace(key, id);
    RealizationVariable v;
    v.id = id;
    v.schema = info.schema->name;
    v.literal = info.annotation->literal;
    v.kind = info.annotation->kind;
    v.weight = info.annotation->weight;
    v.binding_class = info.binding_class;
    v.key = key;
    model.vars.push_back(std::move(v));
  }

  auto fid = [&](const Atom& a) { return model.fluent_index.at(to_string(a)); };
  for (auto& act : pending) {
    GroundAction g;
    g.name = act.name;
    g.args = act.args;
    g.schema = act.schema;
    for (const auto& a : act.pre) g.pre.push_back(fid(a));
    for (const auto& a : act.add) g.add.push_back(fid(a));
    for (const auto& a : act.del) g.del.push_back(fid(a));
    sort_unique(g.pre);
    sort_unique(g.add);
    sort_unique(g.del);
    std::vector<PossibleItem>* slots[3] = {&g.poss_pre, &g.poss_add, &g.poss_del};
    for (int k = 0; k < 3; ++k) {
      for (const auto& item : act.poss[k]) slots[k]->push_back({fid(item.atom), var_ids.at(item.key)});
      std::sort(slots[k]->begin(), slots[k]->end(),
                [](const auto& x, const auto& y) { return std::tie(x.var, x.fluent) < std::tie(y.var, y.fluent); });
    }
    model.actions.push_back(std::move(g));
  }
  std::stable_sort(model.actions.begin(), model.actions.end(),
                   [](const GroundAction& x, const GroundAction& y) { return x.label() < y.label(); });

  for (const auto& a : problem.init) model.init.push_back(fid(a));
  for (const auto& a : problem.goal) model.goal.push_back(fid(a));
  sort_unique(model.init);
  sort_unique(model.goal);

  if (options.prune_unreachable) {
    std::vector<char> reached(model.fluents.size(), 0);
    for (int f : model.init) reached[static_cast<std::size_t>(f)] = 1;
    std::vector<char> usable(model.actions.size(), 0);
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < model.actions.size(); ++i) {
        if (usable[i]) continue;
        const auto& a = model.actions[i];
        if (!std::all_of(a.pre.begin(), a.pre.end(), [&](int f) { return reached[static_cast<std::size_t>(f)]; }))
          continue;
        usable[i] = 1;
        changed = true;
        for (int f : a.add) reached[static_cast<std::size_t>(f)] = 1;
        for (const auto& item : a.poss_add) reached[static_cast<std::size_t>(item.fluent)] = 1;
      }
    }
    std::vector<GroundAction> kept;
    for (std::size_t i = 0; i < model.actions.size(); ++i)
      if (usable[i]) kept.push_back(std::move(model.actions[i]));
    model.actions = std::move(kept);

    std::vector<int> remap(model.vars.size(), -1);
    for (const auto& a : model.actions)
      for (int v : a.vars()) remap[static_cast<std::size_t>(v)] = 0;
    std::vector<RealizationVariable> vars;
    for (std::size_t v = 0; v < model.vars.size(); ++v) {
      if (remap[v] < 0) continue;
      remap[v] = static_cast<int>(vars.size());
      vars.push_back(std::move(model.vars[v]));
      vars.back().id = remap[v];
    }
    model.vars = std::move(vars);
    for (auto& a : model.actions)
      for (auto* list : {&a.poss_pre, &a.poss_add, &a.poss_del})
        for (auto& item : *list) item.var = remap[static_cast<std::size_t>(item.var)];
  }

  std::set<std::string> symbols;
  for (auto& v : model.vars) {
    std::string sym = std::string(to_string(v.kind)) + "-" + v.schema + "-" + v.literal.predicate;
    for (const auto& a : v.literal.args) sym += "-" + (is_variable(a) ? a.substr(1) : a);
    if (v.binding_class.starts_with("depends:"))
      sym += "--" + v.binding_class.substr(8);
    else if (v.binding_class.starts_with("when:"))
      sym += "--when";
    sym = sanitize(sym);
    std::string candidate = sym;
    for (int n = 2; !symbols.insert(candidate).second; ++n) candidate = sym + "-" + std::to_string(n);
    v.symbol = candidate;
  }
  return model;
}

namespace {

std::size_t edit_distance(const std::string& a, const std::string& b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

}  // namespace

ResolvedPlan resolve_plan(const Plan& plan, const GroundModel& model) {
  std::unordered_map<std::string, int> by_label;
  std::map<std::string, std::set<std::size_t>> arities;
  for (std::size_t i = 0; i < model.actions.size(); ++i) {
    by_label.emplace(model.actions[i].label(), static_cast<int>(i));
    arities[model.actions[i].name].insert(model.actions[i].args.size());
  }
  ResolvedPlan out;
  for (std::size_t k = 0; k < plan.steps.size(); ++k) {
    const PlanStep& step = plan.steps[k];
    std::string where = "step " + std::to_string(k + 1) + (step.line ? " (line " + std::to_string(step.line) + ")" : "");
    auto it = by_label.find(to_string(step));
    if (it != by_label.end()) {
      out.steps.push_back(it->second);
      continue;
    }
    auto ar = arities.find(step.action);
    if (ar == arities.end()) {
      std::vector<std::pair<std::size_t, std::string>> scored;
      for (const auto& [name, set] : arities) scored.emplace_back(edit_distance(name, step.action), name);
      std::sort(scored.begin(), scored.end());
      std::string hint;
      for (std::size_t i = 0; i < std::min<std::size_t>(3, scored.size()); ++i) {
        hint += (i ? ", " : "") + scored[i].second;
        for (auto n : arities[scored[i].second]) hint += "/" + std::to_string(n);
      }
      throw ResolutionError(where + ": unknown action " + step.action + (hint.empty() ? "" : "; nearest: " + hint));
    }
    if (!ar->second.contains(step.args.size())) {
      std::string expected;
      for (auto n : ar->second) expected += (expected.empty() ? "" : ", ") + step.action + "/" + std::to_string(n);
      throw ResolutionError(where + ": " + to_string(step) + " has " + std::to_string(step.args.size()) +
                            " arguments; expected " + expected);
    }
    throw ResolutionError(where + ": no ground action " + to_string(step) + " (argument types or objects do not match)");
  }
  return out;
}

Plan to_plan(const ResolvedPlan& plan, const GroundModel& model) {
  Plan out;
  for (int i : plan.steps) {
    const auto& a = model.actions.at(static_cast<std::size_t>(i));
    out.steps.push_back({a.name, a.args, 0});
  }
  return out;
}

}  // namespace rkit
