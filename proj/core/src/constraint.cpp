#include <founded/constraint.hpp>

namespace founded {

namespace {

bool modelLess(const TwoValuedModel& a, const TwoValuedModel& b, const AtomTable& atoms) {
	return std::lexicographical_compare(a.trueAtoms.begin(), a.trueAtoms.end(), b.trueAtoms.begin(), b.trueAtoms.end(),
	                                    [&](AtomId x, AtomId y) { return atoms.less(x, y); });
}

Truth eval2(const GroundExpr& e, const std::vector<Truth>& v) {
	using K = GroundExpr::Kind;
	switch (e.kind) {
		case K::True:  return Truth::True;
		case K::False: return Truth::False;
		case K::Atom:  return e.lit.positive ? v[e.lit.atom] : kleeneNot(v[e.lit.atom]);
		case K::Not:   return kleeneNot(eval2(e.children.front(), v));
		case K::And: {
			Truth t = Truth::True;
			for (const auto& c : e.children) {
				t = kleeneAnd(t, eval2(c, v));
				if (t == Truth::False) break;
			}
			return t;
		}
		case K::Or: {
			Truth t = Truth::False;
			for (const auto& c : e.children) {
				t = kleeneOr(t, eval2(c, v));
				if (t == Truth::True) break;
			}
			return t;
		}
	}
	return Truth::Undefined;
}

void collectAtoms(const GroundExpr& e, std::vector<AtomId>& out) {
	if (e.kind == GroundExpr::Kind::Atom) out.push_back(e.lit.atom);
	for (const auto& c : e.children) collectAtoms(c, out);
}

struct Constraint {
	GroundLiteral     head;
	const GroundExpr* body;
	bool              biconditional;
};

// Kleene value of a constraint under a partial assignment.
Truth check(const Constraint& c, const std::vector<Truth>& v) {
	Truth h = c.head.positive ? v[c.head.atom] : kleeneNot(v[c.head.atom]);
	Truth b = eval2(*c.body, v);
	Truth implies = kleeneOr(kleeneNot(b), h);
	if (!c.biconditional) return implies;
	return kleeneAnd(implies, kleeneOr(kleeneNot(h), b));
}

class Search {
public:
	Search(const GroundProgram& gp, const CompletedProgram& cp, const Interpretation& founded, ConstraintOptions opts)
		: atoms_(*gp.atoms), opts_(opts), values_(founded.values()), watch_(gp.atoms->size()) {
		for (const auto& r : gp.rules) add({r.head, &r.body, false});
		if (opts.completion) {
			for (const auto& r : cp.combinedRules) add({r.head, &r.body, true});
		}
		for (AtomId a = 0; a != values_.size(); ++a) {
			if (values_[a] == Truth::Undefined) open_.push_back(a);
		}
		std::sort(open_.begin(), open_.end(), [&](AtomId a, AtomId b) { return atoms_.less(a, b); });
		out_.atoms = gp.atoms;
	}

	ModelSet run() {
		bool ok = std::all_of(constraints_.begin(), constraints_.end(),
		                      [&](const Constraint& c) { return check(c, values_) != Truth::False; });
		if (ok) descend(0);
		canonicalize(out_);
		return std::move(out_);
	}

private:
	void add(Constraint c) {
		std::vector<AtomId> mentioned{c.head.atom};
		collectAtoms(*c.body, mentioned);
		std::sort(mentioned.begin(), mentioned.end());
		mentioned.erase(std::unique(mentioned.begin(), mentioned.end()), mentioned.end());
		for (AtomId a : mentioned) watch_[a].push_back(constraints_.size());
		constraints_.push_back(c);
	}

	bool stop() const {
		if (!opts_.limit || out_.models.size() < *opts_.limit) return false;
		return open_.size() > opts_.exactCountLimit;
	}

	void descend(std::size_t depth) {
		if (stop()) {
			out_.exact = false;
			return;
		}
		if (depth == open_.size()) {
			++out_.count;
			if (!opts_.limit || out_.models.size() < *opts_.limit) out_.models.push_back(modelOf(values_));
			return;
		}
		AtomId a = open_[depth];
		for (Truth t : {Truth::False, Truth::True}) {
			values_[a] = t;
			bool ok = std::all_of(watch_[a].begin(), watch_[a].end(),
			                      [&](std::size_t i) { return check(constraints_[i], values_) != Truth::False; });
			if (ok) descend(depth + 1);
		}
		values_[a] = Truth::Undefined;
	}

	TwoValuedModel modelOf(const std::vector<Truth>& v) const {
		TwoValuedModel m;
		for (AtomId a = 0; a != v.size(); ++a) {
			if (v[a] == Truth::True) m.trueAtoms.push_back(a);
		}
		std::sort(m.trueAtoms.begin(), m.trueAtoms.end(), [&](AtomId x, AtomId y) { return atoms_.less(x, y); });
		return m;
	}

	const AtomTable&                      atoms_;
	ConstraintOptions                     opts_;
	std::vector<Truth>                    values_;
	std::vector<std::vector<std::size_t>> watch_;
	std::vector<Constraint>               constraints_;
	std::vector<AtomId>                   open_;
	ModelSet                              out_;
};

} // namespace

bool ModelSet::contains(const TwoValuedModel& m) const { return std::find(models.begin(), models.end(), m) != models.end(); }

std::vector<std::string> ModelSet::trueAtomNames(std::size_t i) const {
	std::vector<std::string> names;
	for (AtomId a : models[i].trueAtoms) names.push_back(atoms->name(a));
	return names;
}

std::string ModelSet::render() const {
	if (models.empty()) return "no model";
	std::string out;
	const auto order = atoms->sorted();
	for (std::size_t i = 0; i != models.size(); ++i) {
		if (i) out += ", ";
		std::vector<bool> t(atoms->size(), false);
		for (AtomId a : models[i].trueAtoms) t[a] = true;
		out += "{";
		for (std::size_t j = 0; j != order.size(); ++j) {
			if (j) out += ", ";
			if (!t[order[j]]) out += "¬";
			out += atoms->name(order[j]);
		}
		out += "}";
	}
	return out;
}

std::string ModelSet::summary(std::size_t maxShown) const {
	if (exact && count <= maxShown && models.size() == count) return render();
	return (exact ? "" : "at least ") + std::to_string(count) + " models";
}

void canonicalize(ModelSet& set) {
	const AtomTable& atoms = *set.atoms;
	for (auto& m : set.models) std::sort(m.trueAtoms.begin(), m.trueAtoms.end(), [&](AtomId x, AtomId y) { return atoms.less(x, y); });
	std::sort(set.models.begin(), set.models.end(), [&](const auto& a, const auto& b) { return modelLess(a, b, atoms); });
	set.models.erase(std::unique(set.models.begin(), set.models.end()), set.models.end());
	if (set.exact) set.count = std::max(set.count, set.models.size());
}

TwoValuedModel modelOf(const std::vector<bool>& values, const AtomTable& atoms) {
	TwoValuedModel m;
	for (AtomId a : atoms.sorted()) {
		if (values[a]) m.trueAtoms.push_back(a);
	}
	return m;
}

Interpretation toInterpretation(const TwoValuedModel& m, const Interpretation& like) {
	std::vector<Truth> values(like.values().size(), Truth::False);
	for (AtomId a : m.trueAtoms) values[a] = Truth::True;
	return Interpretation(like.atomTable(), like.decls(), std::move(values));
}

ModelSet constraintModels(const GroundProgram& gp, const CompletedProgram& cp, const Interpretation& founded,
                          ConstraintOptions options) {
	return Search(gp, cp, founded, options).run();
}

ModelSet constraintModelsIncomplete(const GroundProgram& gp, const CompletedProgram& cp, const Interpretation& founded,
                                    ConstraintOptions options) {
	options.completion = false;
	return Search(gp, cp, founded, options).run();
}

ModelSet smsFilter(const ModelSet& models, const CompletedProgram& cp) {
	ModelSet out;
	out.atoms = models.atoms;
	out.exact = models.exact && models.models.size() == models.count;
	std::vector<PredicateDecl> decls = cp.decls;
	for (const auto& m : models.models) {
		std::vector<AtomId> candidates;
		for (AtomId a : m.trueAtoms) {
			if (cp.decl(a).isClosed()) candidates.push_back(a);
		}
		std::vector<Truth> values(cp.atoms->size(), Truth::False);
		for (AtomId a : m.trueAtoms) values[a] = Truth::True;
		Interpretation itp(cp.atoms, decls, std::move(values));
		if (selfFalseAmong(itp, cp, candidates).empty()) out.models.push_back(m);
	}
	out.count = out.models.size();
	return out;
}

bool satisfiesRules(const TwoValuedModel& m, const GroundProgram& gp) {
	std::vector<Truth> v(gp.atoms->size(), Truth::False);
	for (AtomId a : m.trueAtoms) v[a] = Truth::True;
	auto holds = [&](GroundLiteral l) { return (v[l.atom] == Truth::True) == l.positive; };
	for (const auto& f : gp.facts) {
		if (!holds(f)) return false;
	}
	for (const auto& r : gp.rules) {
		if (eval2(r.body, v) == Truth::True && !holds(r.head)) return false;
	}
	return true;
}

bool extends(const TwoValuedModel& m, const Interpretation& founded) {
	std::vector<bool> t(founded.values().size(), false);
	for (AtomId a : m.trueAtoms) t[a] = true;
	for (AtomId a = 0; a != t.size(); ++a) {
		Truth f = founded.value(a);
		if (f == Truth::True && !t[a]) return false;
		if (f == Truth::False && t[a]) return false;
	}
	return true;
}

} // namespace founded
