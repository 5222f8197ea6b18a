#include <doctest.h>
#include <support.hpp>

using namespace founded;

namespace {

struct Models {
	Analysis analysis;
	Interpretation founded;
	ModelSet models;
};

Models constraintOf(const std::string& text, Regime regime, ConstraintOptions options = {}) {
	Analysis a = prepare(*applyRegime(parseProgram(text), regime));
	Interpretation f = testing::foundedOf(a);
	ModelSet m = constraintModels(a.ground, a.completed, f, options);
	return {std::move(a), std::move(f), std::move(m)};
}

// Constraint-model cells of the boundary table (all predicates uncertain).
const std::map<std::string, std::string> kTable{
	{"prog1", "no model"},   {"prog2", "{p, ¬q}, {¬p, q}"}, {"prog3", "{¬q}, {q}"},      {"prog4", "{¬p, ¬q}, {p, q}"},
	{"prog5", "{p, ¬q}, {¬p, q}"}, {"prog6", "{¬p, ¬q}, {p, q}"}, {"prog7", "{q}"}, {"prog8", "{¬q}"},
};

// Same programs with their conclusion predicates incomplete.
const std::map<std::string, std::string> kIncomplete{
	{"prog1", "{q}"},        {"prog2", "{p, ¬q}, {p, q}, {¬p, q}"}, {"prog3", "{¬q}, {q}"},
	{"prog4", "{¬p, ¬q}, {p, q}"}, {"prog5", "{p, ¬q}, {p, q}, {¬p, q}"},
	{"prog6", "{¬p, ¬q}, {p, q}, {¬p, q}"}, {"prog7", "{q}"}, {"prog8", "{¬q}, {q}"},
};

// Stable-model cells.
const std::map<std::string, std::string> kStable{
	{"prog1", "no model"}, {"prog2", "{p, ¬q}, {¬p, q}"}, {"prog3", "{¬q}"},      {"prog4", "{¬p, ¬q}"},
	{"prog5", "{¬p, q}"},  {"prog6", "{¬p, ¬q}"},         {"prog7", "no model"}, {"prog8", "{¬q}"},
};

} // namespace

TEST_SUITE("constraint") {

TEST_CASE("boundary table constraint models") {
	for (const auto& [name, cell] : kTable) {
		CAPTURE(name);
		Models m = constraintOf(testing::corpus("table/" + name + ".fl"), Regime::AllUncertain);
		CHECK(m.models.render() == cell);
		CHECK(m.models.exact);
	}
}

TEST_CASE("incomplete variants gain models") {
	for (const auto& [name, cell] : kIncomplete) {
		CAPTURE(name);
		Models variant = constraintOf(testing::corpus("table/" + name + "_incomplete.fl"), Regime::AllUncertain);
		CHECK(variant.models.render() == cell);

		Models base = constraintOf(testing::corpus("table/" + name + ".fl"), Regime::AllUncertain);
		ModelSet relaxed = constraintModelsIncomplete(base.analysis.ground, base.analysis.completed, base.founded);
		CHECK(relaxed.render() == cell);
		for (const auto& model : base.models.models) CHECK(relaxed.contains(model));
	}
}

TEST_CASE("incomplete variants agree with first-order models") {
	for (const auto& [name, cell] : kIncomplete) {
		CAPTURE(name);
		Analysis a = prepare(*applyRegime(parseProgram(testing::corpus("table/" + name + ".fl")), Regime::AllUncertain));
		CHECK(foOracle(a.ground).render() == cell);
	}
}

TEST_CASE("stable models by filtering the closed constraint models") {
	for (const auto& [name, cell] : kStable) {
		CAPTURE(name);
		Models m = constraintOf(testing::corpus("table/" + name + ".fl"), Regime::AllClosed);
		CHECK(smsFilter(m.models, m.analysis.completed).render() == cell);
	}
}

TEST_CASE("Yale shooting has 24 constraint models") {
	Models m = constraintOf(testing::corpus("examples/yale.fl"), Regime::AsDeclared);
	CHECK(m.models.count == 24);
	CHECK(m.models.models.size() == 24);
	CHECK(m.models.exact);
	AtomId loaded2 = *m.analysis.ground.atoms->find("loaded(2)");
	AtomId alive3  = *m.analysis.ground.atoms->find("alive(3)");
	for (const auto& model : m.models.models) {
		bool l = std::find(model.trueAtoms.begin(), model.trueAtoms.end(), loaded2) != model.trueAtoms.end();
		bool a = std::find(model.trueAtoms.begin(), model.trueAtoms.end(), alive3) != model.trueAtoms.end();
		CHECK_FALSE((l && a));
	}
}

TEST_CASE("a fully determined founded model is the only constraint model") {
	Models m = constraintOf(testing::corpus("examples/yale_variant.fl"), Regime::AsDeclared);
	REQUIRE(m.models.models.size() == 1);
	CHECK(toInterpretation(m.models.models.front(), m.founded) == m.founded);
}

TEST_CASE("limit and lower bounds") {
	const std::string text = "uncertain q.\nincomplete q.\nq(x) <- q(x).\nd(1).\nd(2).\nd(3).\nd(4).\nd(5).\n";
	Models all = constraintOf(text, Regime::AsDeclared);
	CHECK(all.models.count == 32);
	CHECK(all.models.exact);
	CHECK(all.models.summary(8) == "32 models");

	Models limited = constraintOf(text, Regime::AsDeclared, {.limit = 3});
	CHECK(limited.models.models.size() == 3);
	CHECK(limited.models.count == 32);
	CHECK(limited.models.exact);
	CHECK(limited.models.models[0] == all.models.models[0]);

	Models bounded = constraintOf(text, Regime::AsDeclared, {.limit = 3, .exactCountLimit = 2});
	CHECK(bounded.models.models.size() == 3);
	CHECK_FALSE(bounded.models.exact);
	CHECK(bounded.models.count >= 3);
	CHECK(bounded.models.summary(2).rfind("at least ", 0) == 0);
}

TEST_CASE("canonical order puts false before true") {
	Models m = constraintOf(testing::corpus("table/prog3.fl"), Regime::AllUncertain);
	REQUIRE(m.models.models.size() == 2);
	CHECK(m.models.models[0].trueAtoms.empty());
	CHECK(m.models.trueAtomNames(1) == std::vector<std::string>{"q"});
}

TEST_CASE("every model extends the founded model and satisfies the rules") {
	std::vector<std::string> texts = testing::fuzzedPrograms(300, 51);
	for (auto& text : testing::declaredCorpusTexts()) texts.push_back(text);
	for (const auto& text : texts) {
		CAPTURE(text);
		Models m = constraintOf(text, Regime::AsDeclared, {.limit = 64});
		if (!m.founded.consistent()) continue;
		for (const auto& model : m.models.models) {
			CHECK(extends(model, m.founded));
			CHECK(satisfiesRules(model, m.analysis.ground));
		}
		ModelSet relaxed = constraintModelsIncomplete(m.analysis.ground, m.analysis.completed, m.founded, {.limit = 64});
		for (const auto& model : relaxed.models) CHECK(satisfiesRules(model, m.analysis.ground));
	}
}

TEST_CASE("small programs: constraint models are exactly the extending first-order models") {
	for (const auto& text : testing::fuzzedPrograms(200, 53)) {
		CAPTURE(text);
		Analysis a = testing::analyze(text);
		if (a.ground.atoms->size() > 12) continue;
		Interpretation f = testing::foundedOf(a);
		ModelSet relaxed = constraintModelsIncomplete(a.ground, a.completed, f);
		std::size_t expected = 0;
		for (const auto& model : foOracle(a.ground).models) {
			if (!extends(model, f)) continue;
			++expected;
			CHECK(relaxed.contains(model));
		}
		CHECK(relaxed.count == expected);
	}
}

} // TEST_SUITE
