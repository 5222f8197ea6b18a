#include <founded/founded.hpp>

#include <random>

namespace founded {

std::string_view toString(Truth t) {
	switch (t) {
		case Truth::True:  return "true";
		case Truth::False: return "false";
		default:           return "undefined";
	}
}

Interpretation::Interpretation(std::shared_ptr<const AtomTable> atoms, std::vector<PredicateDecl> decls,
                               std::vector<Truth> values, std::vector<AtomId> conflicts)
	: atoms_(std::move(atoms)), decls_(std::move(decls)), values_(std::move(values)), conflicts_(std::move(conflicts)) {
	std::sort(conflicts_.begin(), conflicts_.end());
}

std::optional<Truth> Interpretation::value(std::string_view atomText) const {
	if (auto a = atoms_->find(atomText)) return values_[*a];
	auto p = atoms_->predicate(atomText.substr(0, atomText.find('(')));
	if (!p) return std::nullopt;
	return decls_[*p].isCertain() ? Truth::False : Truth::Undefined;
}

std::size_t Interpretation::count(Truth t) const { return static_cast<std::size_t>(std::count(values_.begin(), values_.end(), t)); }

std::string Interpretation::render() const {
	std::string out = "{";
	bool first = true;
	for (AtomId a : atoms_->sorted()) {
		if (!first) out += ", ";
		first = false;
		switch (values_[a]) {
			case Truth::True:  break;
			case Truth::False: out += "¬"; break;
			default:           out += "U "; break;
		}
		out += atoms_->name(a);
	}
	return out + "}";
}

Truth eval3(const GroundExpr& body, const Interpretation& itp) {
	using K = GroundExpr::Kind;
	switch (body.kind) {
		case K::True:  return Truth::True;
		case K::False: return Truth::False;
		case K::Atom:  return itp.value(body.lit);
		case K::Not:   return kleeneNot(eval3(body.children.front(), itp));
		case K::And: {
			Truth t = Truth::True;
			for (const auto& c : body.children) {
				t = kleeneAnd(t, eval3(c, itp));
				if (t == Truth::False) break;
			}
			return t;
		}
		case K::Or: {
			Truth t = Truth::False;
			for (const auto& c : body.children) {
				t = kleeneOr(t, eval3(c, itp));
				if (t == Truth::True) break;
			}
			return t;
		}
	}
	return Truth::Undefined;
}

std::string renderTrace(const DerivationTrace& trace, const AtomTable& atoms) {
	std::string out;
	for (const auto& s : trace.steps) {
		out += renderGroundLiteral(s.derived, atoms) + " <= " + s.ruleId + " [";
		for (std::size_t i = 0; i != s.hypotheses.size(); ++i) {
			if (i) out += ", ";
			out += renderGroundLiteral(s.hypotheses[i].first, atoms) + "=" + std::string(toString(s.hypotheses[i].second));
		}
		out += "]\n";
	}
	return out;
}

namespace {

struct RuleRef {
	const GroundRule* rule;
	std::string       id;
};

std::vector<RuleRef> allRules(const CompletedProgram& cp) {
	std::vector<RuleRef> out;
	auto add = [&](const std::vector<GroundRule>& rules, char tag) {
		for (std::size_t i = 0; i != rules.size(); ++i) out.push_back({&rules[i], tag + std::to_string(i)});
	};
	add(cp.combinedRules, 'c');
	add(cp.inverseRules, 'i');
	add(cp.passthroughRules, 'r');
	return out;
}

// Derived sides of every atom, shared by both evaluators.
class DerivationState {
public:
	DerivationState(const CompletedProgram& cp, bool recordTrace)
		: cp_(cp), pos_(cp.atoms->size(), 0), neg_(cp.atoms->size(), 0), record_(recordTrace) {}

	bool derived(GroundLiteral l) const { return (l.positive ? pos_ : neg_)[l.atom] != 0; }

	Truth read(GroundLiteral l) const {
		if (derived(l)) return Truth::True;
		if (derived({l.atom, !l.positive})) return Truth::False;
		return Truth::Undefined;
	}

	Truth eval(const GroundExpr& e) const {
		using K = GroundExpr::Kind;
		switch (e.kind) {
			case K::True:  return Truth::True;
			case K::False: return Truth::False;
			case K::Atom:  return read(e.lit);
			case K::Not:   return kleeneNot(eval(e.children.front()));
			case K::And: {
				Truth t = Truth::True;
				for (const auto& c : e.children) {
					t = kleeneAnd(t, eval(c));
					if (t == Truth::False) break;
				}
				return t;
			}
			case K::Or: {
				Truth t = Truth::False;
				for (const auto& c : e.children) {
					t = kleeneOr(t, eval(c));
					if (t == Truth::True) break;
				}
				return t;
			}
		}
		return Truth::Undefined;
	}

	/// Returns false if already derived.
	bool derive(GroundLiteral l, std::string_view ruleId, const GroundExpr* body) {
		auto& side = l.positive ? pos_ : neg_;
		if (side[l.atom]) return false;
		if (record_) {
			TraceStep s;
			s.derived = l;
			s.ruleId  = std::string(ruleId);
			s.order   = trace.steps.size();
			if (body) collectSupport(*body, s.hypotheses);
			trace.steps.push_back(std::move(s));
		}
		side[l.atom] = 1;
		return true;
	}

	Interpretation finish() {
		std::vector<Truth>  values(pos_.size(), Truth::Undefined);
		std::vector<AtomId> conflicts;
		for (AtomId a = 0; a != values.size(); ++a) {
			if (pos_[a] && neg_[a]) conflicts.push_back(a);
			else if (pos_[a]) values[a] = Truth::True;
			else if (neg_[a]) values[a] = Truth::False;
		}
		return Interpretation(cp_.atoms, cp_.decls, std::move(values), std::move(conflicts));
	}

	bool sccIsCertain(const std::vector<PredId>& scc) const {
		return std::all_of(scc.begin(), scc.end(), [&](PredId p) { return cp_.decls[p].isCertain(); });
	}

	DerivationTrace trace;

private:
	// Leaves that make the body true: every conjunct, the first true disjunct.
	void collectSupport(const GroundExpr& e, std::vector<std::pair<GroundLiteral, Truth>>& out) const {
		if (e.kind == GroundExpr::Kind::Atom) {
			out.emplace_back(e.lit, read(e.lit));
			return;
		}
		if (e.kind == GroundExpr::Kind::Or) {
			for (const auto& c : e.children) {
				if (eval(c) == Truth::True) return collectSupport(c, out);
			}
		}
		for (const auto& c : e.children) collectSupport(c, out);
	}

	const CompletedProgram&   cp_;
	std::vector<std::uint8_t> pos_;
	std::vector<std::uint8_t> neg_;
	bool                      record_;
};

void deriveFacts(const CompletedProgram& cp, DerivationState& st) {
	for (std::size_t i = 0; i != cp.facts.size(); ++i) st.derive(cp.facts[i], "f" + std::to_string(i), nullptr);
}

} // namespace

FoundedResult foundedModel(const CompletedProgram& cp, EvalOptions options) {
	DerivationState st(cp, options.recordTrace);
	const AtomTable& atoms = *cp.atoms;
	std::vector<std::size_t> sccOf(atoms.numPredicates(), 0);
	for (std::size_t s = 0; s != cp.sccs.size(); ++s) {
		for (PredId p : cp.sccs[s]) sccOf[p] = s;
	}
	std::vector<std::vector<RuleRef>> bySCC(cp.sccs.size());
	for (auto& r : allRules(cp)) bySCC[sccOf[atoms.predicateOf(r.rule->head.atom)]].push_back(std::move(r));

	std::mt19937_64 rng(options.shuffleSeed.value_or(0));
	deriveFacts(cp, st);
	for (std::size_t s = 0; s != cp.sccs.size(); ++s) {
		auto& rules = bySCC[s];
		if (options.shuffleSeed) std::shuffle(rules.begin(), rules.end(), rng);
		bool changed = true;
		while (changed) {
			changed = false;
			for (const auto& r : rules) {
				if (st.derived(r.rule->head)) continue;
				++st.trace.counter;
				if (st.eval(r.rule->body) == Truth::True) {
					st.derive(r.rule->head, r.id, &r.rule->body);
					changed = true;
				}
			}
		}
		if (st.sccIsCertain(cp.sccs[s])) {
			for (PredId p : cp.sccs[s]) {
				for (AtomId a : atoms.atomsOf(p)) {
					if (!st.derived({a, true})) st.derive({a, false}, "closure", nullptr);
				}
			}
		}
	}
	FoundedResult out{st.finish(), std::move(st.trace)};
	return out;
}

namespace {

// Connective network for linearLfp.
class Network {
public:
	Network(const CompletedProgram& cp, DerivationState& st, std::optional<std::uint64_t> seed)
		: cp_(cp), st_(st), subscribers_(2 * cp.atoms->size()), rng_(seed.value_or(0)), shuffle_(seed.has_value()) {
		rules_ = allRules(cp);
		for (std::size_t i = 0; i != rules_.size(); ++i) {
			Ref root = compile(rules_[i].rule->body);
			std::uint32_t node;
			if (root.kind == Ref::Kind::Node) {
				node = root.id;
			}
			else {
				node = newNode(false);
				attach(node, root);
			}
			nodes_[node].rule = static_cast<std::int64_t>(i);
		}
	}

	void run() {
		deriveFactsQueued();
		for (std::uint32_t n : initiallyTrue_) fire(n);
		for (const auto& scc : cp_.sccs) {
			drain();
			if (!st_.sccIsCertain(scc)) continue;
			for (PredId p : scc) {
				for (AtomId a : cp_.atoms->atomsOf(p)) {
					if (!st_.derived({a, true})) derive({a, false}, "closure", nullptr);
				}
			}
		}
		drain();
	}

private:
	struct Ref {
		enum class Kind { Node, Side, True, False };
		Kind          kind;
		std::uint32_t id = 0;
	};

	struct Node {
		bool                       conj    = false;
		bool                       fired   = false;
		std::uint32_t              pending = 0;
		std::int64_t               rule    = -1;
		std::vector<std::uint32_t> parents;
	};

	static std::uint32_t side(GroundLiteral l) { return 2 * l.atom + (l.positive ? 0 : 1); }

	std::uint32_t newNode(bool conj) {
		nodes_.push_back(Node{conj, false, 0, -1, {}});
		return static_cast<std::uint32_t>(nodes_.size() - 1);
	}

	// Wires child into node; returns false if the child can never become true.
	void attach(std::uint32_t node, Ref child) {
		Node& n = nodes_[node];
		switch (child.kind) {
			case Ref::Kind::True:
				if (!n.conj) initiallyTrue_.push_back(node);
				break;
			case Ref::Kind::False:
				if (n.conj) ++n.pending; // never satisfied
				break;
			case Ref::Kind::Side:
				if (n.conj) ++n.pending;
				subscribers_[child.id].push_back(node);
				break;
			case Ref::Kind::Node:
				if (n.conj) ++n.pending;
				nodes_[child.id].parents.push_back(node);
				break;
		}
	}

	Ref compile(const GroundExpr& e) {
		using K = GroundExpr::Kind;
		switch (e.kind) {
			case K::True:  return {Ref::Kind::True};
			case K::False: return {Ref::Kind::False};
			case K::Atom:  return {Ref::Kind::Side, side(e.lit)};
			case K::Not:   throw std::logic_error("linearLfp requires a renamed (negation-free) program");
			case K::And:
			case K::Or: {
				std::vector<Ref> kids;
				kids.reserve(e.children.size());
				for (const auto& c : e.children) kids.push_back(compile(c));
				std::uint32_t node = newNode(e.kind == K::And);
				for (Ref k : kids) attach(node, k);
				if (e.kind == K::And && nodes_[node].pending == 0) initiallyTrue_.push_back(node);
				return {Ref::Kind::Node, node};
			}
		}
		return {Ref::Kind::False};
	}

	void deriveFactsQueued() {
		for (std::size_t i = 0; i != cp_.facts.size(); ++i) derive(cp_.facts[i], "f" + std::to_string(i), nullptr);
	}

	void derive(GroundLiteral l, std::string_view id, const GroundExpr* body) {
		if (!st_.derive(l, id, body)) return;
		++st_.trace.counter;
		queue_.push_back(side(l));
	}

	void notify(std::uint32_t node) {
		++st_.trace.counter;
		Node& n = nodes_[node];
		if (n.fired) return;
		if (n.conj && --n.pending != 0) return;
		fire(node);
	}

	void fire(std::uint32_t node) {
		Node& n = nodes_[node];
		if (n.fired) return;
		n.fired = true;
		++st_.trace.counter;
		if (n.rule >= 0) {
			const RuleRef& r = rules_[static_cast<std::size_t>(n.rule)];
			derive(r.rule->head, r.id, &r.rule->body);
		}
		for (std::size_t i = 0; i != nodes_[node].parents.size(); ++i) notify(nodes_[node].parents[i]);
	}

	void drain() {
		while (!queue_.empty()) {
			if (shuffle_) {
				std::uniform_int_distribution<std::size_t> pick(0, queue_.size() - 1);
				std::swap(queue_[pick(rng_)], queue_.back());
			}
			std::uint32_t s = queue_.back();
			queue_.pop_back();
			for (std::uint32_t node : subscribers_[s]) notify(node);
		}
	}

	const CompletedProgram&                 cp_;
	DerivationState&                        st_;
	std::vector<RuleRef>                    rules_;
	std::vector<Node>                       nodes_;
	std::vector<std::vector<std::uint32_t>> subscribers_;
	std::vector<std::uint32_t>              initiallyTrue_;
	std::vector<std::uint32_t>              queue_;
	std::mt19937_64                         rng_;
	bool                                    shuffle_;
};

} // namespace

FoundedResult linearLfp(const CompletedProgram& cp, EvalOptions options) {
	DerivationState st(cp, options.recordTrace);
	Network net(cp, st, options.shuffleSeed);
	net.run();
	FoundedResult out{st.finish(), std::move(st.trace)};
	return out;
}

} // namespace founded
