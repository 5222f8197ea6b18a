#include <doctest.h>
#include <support.hpp>

#include <set>

using namespace founded;

namespace {

std::vector<std::string> propertyPrograms(std::size_t fuzzed, std::uint64_t seed) {
	std::vector<std::string> texts = testing::fuzzedPrograms(fuzzed, seed);
	for (auto& text : testing::declaredCorpusTexts()) texts.push_back(text);
	return texts;
}

std::size_t atomSpace(const CompletedProgram& cp) { return 2 * cp.atoms->size(); }

} // namespace

TEST_SUITE("founded") {

TEST_CASE("Kleene connectives") {
	CHECK((kleeneNot(Truth::Undefined) == Truth::Undefined));
	CHECK((kleeneNot(Truth::True) == Truth::False));
	CHECK((kleeneAnd(Truth::True, Truth::Undefined) == Truth::Undefined));
	CHECK((kleeneAnd(Truth::False, Truth::Undefined) == Truth::False));
	CHECK((kleeneOr(Truth::True, Truth::Undefined) == Truth::True));
	CHECK((kleeneOr(Truth::False, Truth::Undefined) == Truth::Undefined));
}

TEST_CASE("eval3 over the doubled space") {
	Analysis a = testing::analyze("uncertain p.\np <- p.\nq.\n");
	AtomId p = *a.ground.atoms->find("p");
	AtomId q = *a.ground.atoms->find("q");
	Interpretation itp = testing::foundedOf(a);
	CHECK((eval3(GroundExpr::atom(q), itp) == Truth::True));
	CHECK((eval3(GroundExpr::atom(q, false), itp) == Truth::False));
	CHECK((eval3(GroundExpr::atom(p), itp) == Truth::Undefined));
	CHECK((eval3(GroundExpr::conj({GroundExpr::atom(p), GroundExpr::atom(q, false)}), itp) == Truth::False));
	CHECK((eval3(GroundExpr::disj({GroundExpr::atom(p), GroundExpr::atom(q)}), itp) == Truth::True));
	CHECK((eval3(GroundExpr::negation(GroundExpr::atom(p)), itp) == Truth::Undefined));
	CHECK((eval3(GroundExpr::constant(false), itp) == Truth::False));
}

TEST_CASE("even numbers") {
	Interpretation m = testing::foundedOf(testing::analyze(testing::corpus("examples/even.fl")));
	CHECK(testing::valueOf(m, "even(0)") == "true");
	CHECK(testing::valueOf(m, "even(1)") == "false");
	CHECK(testing::valueOf(m, "even(2)") == "true");
	CHECK(testing::valueOf(m, "even(3)") == "false");
	CHECK(testing::valueOf(m, "succ(1,2)") == "true");
	CHECK(testing::valueOf(m, "succ(2,1)") == "false");
}

TEST_CASE("reachability") {
	Interpretation certain = testing::foundedOf(testing::analyze(testing::corpus("examples/reach.fl")));
	for (const char* t : {"reach(1)", "reach(2)", "reach(3)"}) CHECK(testing::valueOf(certain, t) == "true");
	for (const char* f : {"reach(4)", "reach(5)", "reach(6)"}) CHECK(testing::valueOf(certain, f) == "false");

	Interpretation uncertain = testing::foundedOf(testing::analyze(testing::corpus("examples/reach_uncertain.fl")));
	for (const char* t : {"reach(1)", "reach(2)", "reach(3)"}) CHECK(testing::valueOf(uncertain, t) == "true");
	CHECK(testing::valueOf(uncertain, "reach(4)") == "undefined");
	CHECK(testing::valueOf(uncertain, "reach(5)") == "undefined");
	CHECK(testing::valueOf(uncertain, "reach(6)") == "false");
}

TEST_CASE("Yale shooting") {
	Interpretation m = testing::foundedOf(testing::analyze(testing::corpus("examples/yale.fl")));
	CHECK(m.consistent());
	CHECK(testing::valueOf(m, "alive(0)") == "true");
	CHECK(testing::valueOf(m, "loaded(0)") == "false");
	CHECK(testing::valueOf(m, "loaded(1)") == "true");
	for (const char* u : {"loaded(2)", "loaded(3)", "alive(1)", "alive(2)", "alive(3)"}) CHECK(testing::valueOf(m, u) == "undefined");
}

TEST_CASE("Yale variant is fully certain") {
	Interpretation m = testing::foundedOf(testing::analyze(testing::corpus("examples/yale_variant.fl")));
	CHECK(m.count(Truth::Undefined) == 0);
	CHECK(testing::valueOf(m, "loaded(1)") == "true");
	CHECK(testing::valueOf(m, "noise(1)") == "true");
	CHECK(testing::valueOf(m, "noise(0)") == "false");
	CHECK(testing::valueOf(m, "shoots(1)") == "true");
}

TEST_CASE("win game") {
	Interpretation m = testing::foundedOf(testing::analyze(testing::corpus("examples/win.fl")));
	const std::map<std::string, std::string> expected{{"win(1)", "undefined"}, {"win(2)", "undefined"}, {"win(3)", "true"},
	                                                  {"win(4)", "false"},     {"win(5)", "true"},      {"win(6)", "false"}};
	for (const auto& [atom, v] : expected) CHECK(testing::valueOf(m, atom) == v);
}

TEST_CASE("uninterned atoms take the predicate default") {
	Interpretation m = testing::foundedOf(testing::analyze(testing::corpus("examples/reach.fl")));
	CHECK(testing::valueOf(m, "reach(9)") == "false");
	CHECK(testing::valueOf(m, "nosuch(1)") == "missing");
}

TEST_CASE("interpretation rendering") {
	Interpretation m = testing::foundedOf(testing::analyze("uncertain p.\np <- p.\nq.\nr <- not q.\n"));
	CHECK(m.render() == "{U p, q, ¬r}");
}

TEST_CASE("linearLfp equals foundedModel") {
	for (const auto& text : propertyPrograms(300, 31)) {
		CAPTURE(text);
		Analysis a = testing::analyze(text);
		CHECK(linearLfp(a.completed).model == foundedModel(a.completed).model);
	}
}

TEST_CASE("confluence under 20 firing orders") {
	for (const auto& text : propertyPrograms(40, 33)) {
		CAPTURE(text);
		Analysis a = testing::analyze(text);
		Interpretation reference = foundedModel(a.completed).model;
		for (std::uint64_t seed = 1; seed <= 20; ++seed) {
			CHECK(linearLfp(a.completed, {.shuffleSeed = seed, .recordTrace = false}).model == reference);
			CHECK(foundedModel(a.completed, {.shuffleSeed = seed, .recordTrace = false}).model == reference);
		}
	}
}

TEST_CASE("traces are well founded") {
	for (const auto& text : propertyPrograms(150, 35)) {
		CAPTURE(text);
		Analysis a = testing::analyze(text);
		for (auto* eval : {&linearLfp, &foundedModel}) {
			FoundedResult r = eval(a.completed, {});
			std::set<std::pair<AtomId, bool>> derived;
			for (const auto& s : r.trace.steps) {
				for (const auto& [lit, v] : s.hypotheses) {
					if (v == Truth::True) CHECK(derived.count({lit.atom, lit.positive}) == 1);
				}
				CHECK(derived.insert({s.derived.atom, s.derived.positive}).second);
			}
			for (AtomId x = 0; x != r.model.atoms().size(); ++x) {
				bool t = derived.count({x, true}) != 0;
				bool f = derived.count({x, false}) != 0;
				CHECK((r.model.value(x) == Truth::True) == (t && !f));
				CHECK((r.model.value(x) == Truth::False) == (f && !t));
			}
		}
	}
}

TEST_CASE("trace rendering") {
	Analysis a = testing::analyze("q <- p.\np.\n");
	std::string text = renderTrace(linearLfp(a.completed).trace, *a.completed.atoms);
	CHECK(text.find("p <= ") != std::string::npos);
	CHECK(text.find("q <= ") != std::string::npos);
	CHECK(text.find("[p=true]") != std::string::npos);
}

TEST_CASE("step counter is linear in the completed size") {
	for (const auto& text : propertyPrograms(300, 37)) {
		CAPTURE(text);
		Analysis a = testing::analyze(text);
		auto steps = linearLfp(a.completed, {.shuffleSeed = std::nullopt, .recordTrace = false}).trace.counter;
		CHECK(steps <= 4 * (a.completed.size() + atomSpace(a.completed)));
	}
}

TEST_CASE("consistency without negative facts or conclusions") {
	for (const auto& text : testing::fuzzedPrograms(500, 39)) {
		CAPTURE(text);
		CHECK(testing::foundedOf(testing::analyze(text)).consistent());
	}
}

TEST_CASE("Yale with a contradiction reports the conflict") {
	Interpretation m = testing::foundedOf(testing::analyze("uncertain p.\np.\nnot p.\n"));
	CHECK_FALSE(m.consistent());
	REQUIRE(m.conflicts().size() == 1);
	CHECK(m.atoms().name(m.conflicts().front()) == "p");
}

TEST_CASE("all-certain programs give the stratified model") {
	for (const auto& text : testing::fuzzedPrograms(300, 41, true)) {
		CAPTURE(text);
		auto resolved = applyRegime(parseProgram(text), Regime::DefaultCertain);
		REQUIRE(resolved);
		Analysis a = prepare(*resolved);
		Interpretation mine = testing::foundedOf(a);
		Interpretation ref  = stratifiedOracle(a.ground);
		CHECK(mine.count(Truth::Undefined) == 0);
		CHECK(mine.values() == ref.values());
	}
}

} // TEST_SUITE
