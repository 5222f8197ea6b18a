#include <founded/language.hpp>

#include <algorithm>
#include <array>
#include <functional>
#include <queue>

namespace founded {

namespace {

void collectBodyPredicates(const HypExpr& e, bool negated,
                           const std::function<void(const std::string&, bool)>& out) {
	switch (e.kind) {
		case HypExpr::Kind::Literal: out(e.literal.atom.predicate, negated != e.literal.negative); break;
		case HypExpr::Kind::Neg:     collectBodyPredicates(e.children.front(), !negated, out); break;
		case HypExpr::Kind::True:
		case HypExpr::Kind::False:   break;
		default:
			for (const auto& c : e.children) collectBodyPredicates(c, negated, out);
	}
}

void collectBodyAtoms(const HypExpr& e, std::vector<const Atom*>& out) {
	if (e.kind == HypExpr::Kind::Literal) { out.push_back(&e.literal.atom); return; }
	for (const auto& c : e.children) collectBodyAtoms(c, out);
}

// Index-based view of the dependency graph used by the SCC computation.
struct IndexedGraph {
	std::vector<std::string>                         names;
	std::map<std::string, std::size_t>               index;
	std::vector<std::vector<std::pair<std::size_t, Polarity>>> succ;
};

IndexedGraph indexed(const Program& program) {
	IndexedGraph g;
	DependencyGraph dg = dependencyGraph(program);
	g.names = dg.nodes;
	for (std::size_t i = 0; i != g.names.size(); ++i) g.index[g.names[i]] = i;
	g.succ.resize(g.names.size());
	for (const auto& e : dg.edges) g.succ[g.index[e.from]].emplace_back(g.index[e.to], e.polarity);
	return g;
}

// Iterative Tarjan. Returns the component id of every node; ids are assigned
// in reverse topological order of the condensation.
std::vector<std::size_t> tarjan(const IndexedGraph& g, std::size_t& numComponents) {
	const std::size_t n = g.names.size();
	constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
	std::vector<std::size_t> order(n, unvisited), low(n, 0), comp(n, unvisited);
	std::vector<bool>        onStack(n, false);
	std::vector<std::size_t> stack;
	std::vector<std::pair<std::size_t, std::size_t>> work; // node, next successor
	std::size_t counter = 0;
	numComponents = 0;
	for (std::size_t root = 0; root != n; ++root) {
		if (order[root] != unvisited) continue;
		work.emplace_back(root, 0);
		while (!work.empty()) {
			auto& [v, next] = work.back();
			if (next == 0 && order[v] == unvisited) {
				order[v] = low[v] = counter++;
				stack.push_back(v);
				onStack[v] = true;
			}
			if (next < g.succ[v].size()) {
				std::size_t w = g.succ[v][next++].first;
				if (order[w] == unvisited) {
					work.emplace_back(w, 0);
				}
				else if (onStack[w]) {
					low[v] = std::min(low[v], order[w]);
				}
				continue;
			}
			if (low[v] == order[v]) {
				std::size_t w;
				do {
					w = stack.back();
					stack.pop_back();
					onStack[w] = false;
					comp[w] = numComponents;
				} while (w != v);
				++numComponents;
			}
			std::size_t done = v;
			work.pop_back();
			if (!work.empty()) {
				std::size_t parent = work.back().first;
				low[parent] = std::min(low[parent], low[done]);
			}
		}
	}
	return comp;
}

} // namespace

std::string_view toString(Certainty c) { return c == Certainty::Certain ? "certain" : "uncertain"; }

std::string_view toString(Completeness c) {
	switch (c) {
		case Completeness::Complete:   return "complete";
		case Completeness::Incomplete: return "incomplete";
		default:                       return "n/a";
	}
}

std::map<std::string, std::size_t> Program::arities() const {
	std::map<std::string, std::size_t> out;
	auto note = [&](const Atom& a) { out.emplace(a.predicate, a.args.size()); };
	for (const auto& f : facts) note(f.literal.atom);
	for (const auto& r : rules) {
		note(r.conclusion.atom);
		std::vector<const Atom*> atoms;
		collectBodyAtoms(r.body, atoms);
		for (const Atom* a : atoms) note(*a);
	}
	return out;
}

std::set<std::string> Program::predicates() const {
	std::set<std::string> out;
	for (const auto& [name, arity] : arities()) out.insert(name);
	for (const auto& [name, decl] : decls) out.insert(name);
	return out;
}

bool Program::hasNegativeFactsOrConclusions() const {
	return std::any_of(facts.begin(), facts.end(), [](const Fact& f) { return f.literal.negative; }) ||
	       std::any_of(rules.begin(), rules.end(), [](const Rule& r) { return r.conclusion.negative; });
}

DependencyGraph dependencyGraph(const Program& program) {
	DependencyGraph g;
	std::set<std::string>          nodes = program.predicates();
	std::set<DependencyGraph::Edge> edges;
	for (const auto& r : program.rules) {
		const std::string& head = r.conclusion.atom.predicate;
		collectBodyPredicates(r.body, false, [&](const std::string& p, bool negated) {
			bool negative = negated || r.conclusion.negative;
			edges.insert({p, head, negative ? Polarity::Negative : Polarity::Positive});
		});
	}
	g.nodes.assign(nodes.begin(), nodes.end());
	g.edges.assign(edges.begin(), edges.end());
	return g;
}

std::vector<DefinedUsing> definedUsing(const Program& program) {
	IndexedGraph g = indexed(program);
	const std::size_t n = g.names.size();
	std::vector<DefinedUsing> out;
	for (std::size_t src = 0; src != n; ++src) {
		// States (node, sawNegation); BFS over 2n states.
		std::vector<std::array<bool, 2>> seen(n, {false, false});
		std::queue<std::pair<std::size_t, bool>> q;
		for (auto [w, pol] : g.succ[src]) {
			bool neg = pol == Polarity::Negative;
			if (!seen[w][neg]) { seen[w][neg] = true; q.emplace(w, neg); }
		}
		while (!q.empty()) {
			auto [v, neg] = q.front();
			q.pop();
			for (auto [w, pol] : g.succ[v]) {
				bool n2 = neg || pol == Polarity::Negative;
				if (!seen[w][n2]) { seen[w][n2] = true; q.emplace(w, n2); }
			}
		}
		for (std::size_t dst = 0; dst != n; ++dst) {
			if (seen[dst][0] || seen[dst][1]) out.push_back({g.names[dst], g.names[src], seen[dst][1]});
		}
	}
	std::sort(out.begin(), out.end(), [](const DefinedUsing& a, const DefinedUsing& b) {
		return std::tie(a.predicate, a.uses) < std::tie(b.predicate, b.uses);
	});
	return out;
}

std::vector<std::vector<std::string>> sccOrder(const Program& program) {
	IndexedGraph g = indexed(program);
	std::size_t numComp = 0;
	std::vector<std::size_t> comp = tarjan(g, numComp);
	std::vector<std::vector<std::string>> members(numComp);
	for (std::size_t v = 0; v != g.names.size(); ++v) members[comp[v]].push_back(g.names[v]);
	for (auto& m : members) std::sort(m.begin(), m.end());

	std::vector<std::set<std::size_t>> succ(numComp);
	std::vector<std::size_t> indeg(numComp, 0);
	for (std::size_t v = 0; v != g.names.size(); ++v) {
		for (auto [w, pol] : g.succ[v]) {
			if (comp[v] != comp[w] && succ[comp[v]].insert(comp[w]).second) ++indeg[comp[w]];
		}
	}
	using Entry = std::pair<std::string, std::size_t>;
	std::priority_queue<Entry, std::vector<Entry>, std::greater<>> ready;
	for (std::size_t c = 0; c != numComp; ++c) {
		if (indeg[c] == 0) ready.emplace(members[c].front(), c);
	}
	std::vector<std::vector<std::string>> out;
	while (!ready.empty()) {
		std::size_t c = ready.top().second;
		ready.pop();
		out.push_back(members[c]);
		for (std::size_t d : succ[c]) {
			if (--indeg[d] == 0) ready.emplace(members[d].front(), d);
		}
	}
	return out;
}

std::set<std::string> conclusionPredicates(const Program& program) {
	std::set<std::string> out;
	for (const auto& r : program.rules) out.insert(r.conclusion.atom.predicate);
	return out;
}

namespace {

enum class UncertainReason { None, OwnNegation, UsesUncertain, NegativeAssertions, Declared };

std::map<std::string, UncertainReason> uncertainReasons(const Program& program) {
	IndexedGraph g = indexed(program);
	std::size_t numComp = 0;
	std::vector<std::size_t> comp = tarjan(g, numComp);
	const std::size_t n = g.names.size();
	std::vector<UncertainReason> reason(n, UncertainReason::None);

	for (std::size_t v = 0; v != n; ++v) {
		for (auto [w, pol] : g.succ[v]) {
			if (pol == Polarity::Negative && comp[v] == comp[w]) {
				// Every member of the component reaches itself through this edge.
				for (std::size_t u = 0; u != n; ++u) {
					if (comp[u] == comp[v]) reason[u] = UncertainReason::OwnNegation;
				}
			}
		}
	}
	auto mark = [&](const std::string& p, UncertainReason r) {
		auto it = g.index.find(p);
		if (it != g.index.end() && reason[it->second] == UncertainReason::None) reason[it->second] = r;
	};
	for (const auto& f : program.facts) {
		if (f.literal.negative) mark(f.literal.atom.predicate, UncertainReason::NegativeAssertions);
	}
	for (const auto& r : program.rules) {
		if (r.conclusion.negative) mark(r.conclusion.atom.predicate, UncertainReason::NegativeAssertions);
	}
	for (const auto& [name, d] : program.decls) {
		if (d.certainty == Certainty::Uncertain) mark(name, UncertainReason::Declared);
	}
	// Anything defined using an uncertain predicate is uncertain.
	std::queue<std::size_t> q;
	for (std::size_t v = 0; v != n; ++v) {
		if (reason[v] != UncertainReason::None) q.push(v);
	}
	while (!q.empty()) {
		std::size_t v = q.front();
		q.pop();
		for (auto [w, pol] : g.succ[v]) {
			if (reason[w] == UncertainReason::None) {
				reason[w] = UncertainReason::UsesUncertain;
				q.push(w);
			}
		}
	}
	std::map<std::string, UncertainReason> out;
	for (std::size_t v = 0; v != n; ++v) out[g.names[v]] = reason[v];
	return out;
}

} // namespace

std::set<std::string> mustBeUncertain(const Program& program) {
	std::set<std::string> out;
	for (const auto& [name, r] : uncertainReasons(program)) {
		if (r != UncertainReason::None) out.insert(name);
	}
	return out;
}

Program resolveDeclarations(const Program& program) {
	Program out = program;
	auto arity = program.arities();
	for (const auto& [name, d] : program.decls) {
		if (!arity.count(name)) throw DeclarationError(name, "declaration for unused predicate '" + name + "'");
	}
	auto reasons     = uncertainReasons(program);
	auto conclusions = conclusionPredicates(program);

	for (const auto& [name, a] : arity) {
		PredicateDecl d;
		if (auto it = program.decls.find(name); it != program.decls.end()) d = it->second;
		d.predicate = name;
		UncertainReason why = reasons[name];
		if (d.certainty == Certainty::Certain) {
			switch (why) {
				case UncertainReason::OwnNegation:
					throw DeclarationError(name, "'" + name + "' is defined transitively using its own negation and cannot be certain");
				case UncertainReason::UsesUncertain:
					throw DeclarationError(name, "'" + name + "' is defined using an uncertain predicate and cannot be certain");
				case UncertainReason::NegativeAssertions:
					throw DeclarationError(name, "'" + name + "' has negative facts or conclusions and cannot be certain");
				default: break;
			}
		}
		if (!d.certainty) d.certainty = why == UncertainReason::None ? Certainty::Certain : Certainty::Uncertain;

		bool eligible = d.certainty == Certainty::Uncertain && conclusions.count(name);
		if (d.completeness && d.completeness != Completeness::NotApplicable && !eligible) {
			throw DeclarationError(name, "'" + name + "' may be declared " + std::string(toString(*d.completeness)) +
			                                 " only if it is uncertain and in the conclusion of a rule");
		}
		if (!d.completeness || (d.completeness == Completeness::NotApplicable && eligible)) {
			d.completeness = eligible ? Completeness::Complete : Completeness::NotApplicable;
		}
		if (d.closedness == Closedness::Closed && !(d.certainty == Certainty::Uncertain && d.isComplete())) {
			throw DeclarationError(name, "'" + name + "' may be declared closed only if it is uncertain and complete");
		}
		if (!d.closedness) d.closedness = Closedness::Open;
		out.decls[name] = d;
	}
	return out;
}

} // namespace founded
