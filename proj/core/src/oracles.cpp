#include <founded/oracles.hpp>

#include <functional>

namespace founded {

namespace {

using Values = std::vector<Truth>;

void checkBudget(const GroundProgram& gp, const OracleBudget& budget, bool enumerates) {
	if (gp.atoms->size() > budget.maxGroundAtoms) {
		throw BudgetExceeded(std::to_string(gp.atoms->size()) + " ground atoms exceed the oracle budget of " +
		                     std::to_string(budget.maxGroundAtoms));
	}
	if (enumerates && (gp.atoms->size() >= 63 || (std::uint64_t{1} << gp.atoms->size()) > budget.maxModelsExamined)) {
		throw BudgetExceeded("interpretation space exceeds the oracle budget");
	}
}

// Kleene evaluation; negated subformulas optionally read from a fixed
// interpretation instead (for the Gelfond-Lifschitz reduct).
Truth eval(const GroundExpr& e, const Values& v, const Values* negContext = nullptr) {
	using K = GroundExpr::Kind;
	switch (e.kind) {
		case K::True:  return Truth::True;
		case K::False: return Truth::False;
		case K::Atom: {
			if (!e.lit.positive) return kleeneNot((negContext ? *negContext : v)[e.lit.atom]);
			return v[e.lit.atom];
		}
		case K::Not:
			return kleeneNot(eval(e.children.front(), negContext ? *negContext : v, nullptr));
		case K::And: {
			Truth t = Truth::True;
			for (const auto& c : e.children) t = kleeneAnd(t, eval(c, v, negContext));
			return t;
		}
		case K::Or: {
			Truth t = Truth::False;
			for (const auto& c : e.children) t = kleeneOr(t, eval(c, v, negContext));
			return t;
		}
	}
	return Truth::Undefined;
}

Interpretation make(const GroundProgram& gp, Values v) { return Interpretation(gp.atoms, gp.decls, std::move(v)); }

// One Clark-completion step: T if a fact or some body is T, F if every body is F.
Values completionStep(const GroundProgram& gp, const Values& v) {
	Values out(v.size(), Truth::False);
	for (const auto& f : gp.facts) {
		if (f.positive) out[f.atom] = Truth::True;
	}
	for (const auto& r : gp.rules) {
		if (!r.head.positive) continue;
		out[r.head.atom] = kleeneOr(out[r.head.atom], eval(r.body, v));
	}
	return out;
}

// Least model of the reduct by `context`.
Values gamma(const GroundProgram& gp, const Values& context) {
	Values v(context.size(), Truth::False);
	for (const auto& f : gp.facts) {
		if (f.positive) v[f.atom] = Truth::True;
	}
	bool changed = true;
	while (changed) {
		changed = false;
		for (const auto& r : gp.rules) {
			if (!r.head.positive || v[r.head.atom] == Truth::True) continue;
			if (eval(r.body, v, &context) == Truth::True) {
				v[r.head.atom] = Truth::True;
				changed = true;
			}
		}
	}
	return v;
}

ModelSet enumerate(const GroundProgram& gp, const std::function<bool(const Values&)>& keep) {
	ModelSet out;
	out.atoms = gp.atoms;
	const std::size_t n = gp.atoms->size();
	for (std::uint64_t bits = 0; bits != (std::uint64_t{1} << n); ++bits) {
		Values v(n);
		for (std::size_t i = 0; i != n; ++i) v[i] = (bits >> i & 1) ? Truth::True : Truth::False;
		if (!keep(v)) continue;
		TwoValuedModel m;
		for (AtomId a = 0; a != n; ++a) {
			if (v[a] == Truth::True) m.trueAtoms.push_back(a);
		}
		out.models.push_back(std::move(m));
	}
	canonicalize(out);
	out.count = out.models.size();
	return out;
}

} // namespace

Interpretation fittingOracle(const GroundProgram& gp, OracleBudget budget) {
	checkBudget(gp, budget, false);
	Values v(gp.atoms->size(), Truth::Undefined);
	for (;;) {
		Values next = completionStep(gp, v);
		if (next == v) return make(gp, std::move(v));
		v = std::move(next);
	}
}

ModelSet supportedOracle(const GroundProgram& gp, OracleBudget budget) {
	checkBudget(gp, budget, true);
	return enumerate(gp, [&](const Values& v) { return completionStep(gp, v) == v; });
}

Interpretation wfsOracle(const GroundProgram& gp, OracleBudget budget) {
	checkBudget(gp, budget, false);
	const std::size_t n = gp.atoms->size();
	Values under(n, Truth::False);     // definitely true atoms, growing
	Values over = gamma(gp, under);    // possibly true atoms, shrinking
	for (;;) {
		Values nextUnder = gamma(gp, over);
		Values nextOver  = gamma(gp, nextUnder);
		if (nextUnder == under && nextOver == over) break;
		under = std::move(nextUnder);
		over  = std::move(nextOver);
	}
	Values v(n);
	for (AtomId a = 0; a != n; ++a) {
		if (under[a] == Truth::True) v[a] = Truth::True;
		else if (over[a] == Truth::False) v[a] = Truth::False;
		else v[a] = Truth::Undefined;
	}
	return make(gp, std::move(v));
}

ModelSet smsOracle(const GroundProgram& gp, OracleBudget budget) {
	checkBudget(gp, budget, true);
	return enumerate(gp, [&](const Values& v) { return gamma(gp, v) == v; });
}

Interpretation stratifiedOracle(const GroundProgram& gp, OracleBudget budget) {
	checkBudget(gp, budget, false);
	const AtomTable& atoms = *gp.atoms;
	const std::size_t np = atoms.numPredicates();

	struct Dep {
		PredId from, to;
		bool   negative;
	};
	std::vector<Dep> deps;
	std::function<void(const GroundExpr&, PredId, bool)> walk = [&](const GroundExpr& e, PredId head, bool neg) {
		if (e.kind == GroundExpr::Kind::Atom) {
			deps.push_back({atoms.predicateOf(e.lit.atom), head, neg != !e.lit.positive});
			return;
		}
		bool flip = e.kind == GroundExpr::Kind::Not;
		for (const auto& c : e.children) walk(c, head, neg != flip);
	};
	for (const auto& r : gp.rules) {
		if (!r.head.positive) throw NotStratified("negative conclusions are not supported");
		walk(r.body, atoms.predicateOf(r.head.atom), false);
	}
	for (const auto& f : gp.facts) {
		if (!f.positive) throw NotStratified("negative facts are not supported");
	}

	// Stratum numbers: a negative edge raises the level by one.
	std::vector<std::size_t> level(np, 0);
	for (bool changed = true; changed;) {
		changed = false;
		for (const auto& d : deps) {
			std::size_t need = level[d.from] + (d.negative ? 1 : 0);
			if (level[d.to] < need) {
				level[d.to] = need;
				if (need > np) throw NotStratified("negation through recursion");
				changed = true;
			}
		}
	}

	const std::size_t top = np == 0 ? 0 : *std::max_element(level.begin(), level.end());
	Values v(atoms.size(), Truth::False);
	for (const auto& f : gp.facts) v[f.atom] = Truth::True;
	for (std::size_t s = 0; s <= top; ++s) {
		for (bool changed = true; changed;) {
			changed = false;
			for (const auto& r : gp.rules) {
				AtomId h = r.head.atom;
				if (level[atoms.predicateOf(h)] != s || v[h] == Truth::True) continue;
				if (eval(r.body, v) == Truth::True) {
					v[h] = Truth::True;
					changed = true;
				}
			}
		}
	}
	return make(gp, std::move(v));
}

ModelSet foOracle(const GroundProgram& gp, OracleBudget budget) {
	checkBudget(gp, budget, true);
	return enumerate(gp, [&](const Values& v) {
		auto holds = [&](GroundLiteral l) { return (v[l.atom] == Truth::True) == l.positive; };
		for (const auto& f : gp.facts) {
			if (!holds(f)) return false;
		}
		for (const auto& r : gp.rules) {
			if (eval(r.body, v) == Truth::True && !holds(r.head)) return false;
		}
		return true;
	});
}

} // namespace founded
