#include <doctest.h>
#include <support.hpp>

using namespace founded;

namespace {

GroundProgram groundText(const std::string& text, GroundOptions options = {}) {
	return ground(resolveDeclarations(parseProgram(text)), options);
}

std::string winChainText(std::size_t n) {
	std::string text;
	for (std::size_t i = 1; i < n; ++i) text += "move(" + std::to_string(i) + "," + std::to_string(i + 1) + ").\n";
	return text + "win(x) <- move(x,y) and not win(y).\n";
}

std::map<std::string, Truth> byName(const Interpretation& itp) {
	std::map<std::string, Truth> out;
	for (AtomId a = 0; a != itp.atoms().size(); ++a) out[itp.atoms().name(a)] = itp.value(a);
	return out;
}

} // namespace

TEST_SUITE("grounder") {

TEST_CASE("constant domain order") {
	CHECK(constantDomain(parseProgram(testing::corpus("examples/win.fl"))) ==
	      std::vector<std::string>{"1", "2", "3", "4", "5", "6"});
	CHECK(constantDomain(parseProgram("p(10). p(9). p('b'). p('a').")) ==
	      std::vector<std::string>{"9", "10", "'a'", "'b'"});
	CHECK(constantDomain(parseProgram("q <- not q.")).empty());
	CHECK(constantLess("2", "10"));
	CHECK(constantLess("10", "'a'"));
}

TEST_CASE("propositional sizes") {
	CHECK(groundText("q <- not q.").size == 3);
	CHECK(groundText("q <- q.").size == 2);
	CHECK(groundText("q <- not q and q.").size == 5);
	CHECK(groundText("").size == 0);
	CHECK(groundText("p.").size == 1);
}

TEST_CASE("win chain naive sizes") {
	const std::map<std::size_t, std::size_t> expected{{3, 47}, {4, 83}, {5, 129}, {6, 185}};
	for (const auto& [n, size] : expected) {
		CAPTURE(n);
		GroundProgram gp = groundText(winChainText(n));
		CHECK(gp.size == size);
		CHECK(groundSize(gp) == size);
		CHECK(gp.rules.size() == n * n);
	}
	CHECK(groundText(winChainText(3)).rules.size() == 9);
}

TEST_CASE("win chain pruned sizes") {
	for (auto [n, size] : std::vector<std::pair<std::size_t, std::size_t>>{{512, 3066}, {1024, 6138}}) {
		GroundProgram gp = ground(resolveDeclarations(benchProgram(BenchFamily::WinChain, n)), {.pruneExtensional = true});
		CHECK(gp.size == size);
		CHECK(gp.rules.size() == n - 1);
	}
}

TEST_CASE("universal quantifier expands to a conjunction over the domain") {
	GroundProgram gp = groundText("lose(x) <- each y | not move(x,y) or win(y).\nmove(1,2).\nwin(2).\n");
	REQUIRE(gp.rules.size() == 2);
	for (const auto& r : gp.rules) {
		REQUIRE(r.body.kind == GroundExpr::Kind::And);
		CHECK(r.body.children.size() == 2);
		CHECK(r.body.children[0].kind == GroundExpr::Kind::Or);
	}
	CHECK(renderGroundRule(gp.rules[0], *gp.atoms) == "lose(1) <- (not move(1,1) or win(1)) and (not move(1,2) or win(2)).");
}

TEST_CASE("existential quantifier expands to a disjunction") {
	GroundProgram gp = groundText("e <- some y | p(y).\np(1).\np(2).\n");
	REQUIRE(gp.rules.size() == 1);
	CHECK(gp.rules[0].body.kind == GroundExpr::Kind::Or);
	CHECK(gp.rules[0].body.children.size() == 2);
}

TEST_CASE("quantifiers over an empty domain") {
	GroundProgram e = groundText("p <- some x | q(x).\n");
	REQUIRE(e.rules.size() == 1);
	CHECK(e.rules[0].body.kind == GroundExpr::Kind::False);
	GroundProgram a = groundText("p <- each x | q(x).\n");
	REQUIRE(a.rules.size() == 1);
	CHECK(a.rules[0].body.kind == GroundExpr::Kind::True);
}

TEST_CASE("rules with free variables and an empty domain vanish") {
	GroundProgram gp = groundText("p(x) <- q(x).\n");
	CHECK(gp.rules.empty());
	CHECK(gp.size == 0);
}

TEST_CASE("atom lookup by text") {
	GroundProgram gp = groundText(testing::corpus("examples/barber_multi.fl"));
	CHECK(gp.atoms->find("shave('barber','al')").has_value());
	CHECK(gp.atoms->find("man('bo')").has_value());
	CHECK_FALSE(gp.atoms->find("man('zed')").has_value());
	CHECK(gp.rules.size() == 3);
}

TEST_CASE("grounding bound on corpus and fuzzed programs") {
	std::vector<std::string> texts = testing::fuzzedPrograms(300, 7);
	for (auto& text : testing::declaredCorpusTexts()) texts.push_back(text);
	for (std::size_t n : {3, 5, 8}) texts.push_back(winChainText(n));
	for (const auto& text : texts) {
		CAPTURE(text);
		Program p = resolveDeclarations(parseProgram(text));
		GroundingBound b = groundingBound(p);
		CHECK(b.rules == ground(p).rules.size());
		CHECK(b.rules <= b.bound);
	}
}

TEST_CASE("pruned grounding gives the same model") {
	std::vector<std::string> texts = testing::fuzzedPrograms(200, 9);
	for (auto& text : testing::declaredCorpusTexts()) texts.push_back(text);
	for (std::size_t n : {2, 4, 7}) texts.push_back(winChainText(n));
	for (const auto& text : texts) {
		CAPTURE(text);
		Program p  = resolveDeclarations(parseProgram(text));
		auto naive  = byName(testing::foundedOf(prepare(p)));
		auto pruned = byName(testing::foundedOf(prepare(p, {.pruneExtensional = true})));
		for (const auto& [name, v] : pruned) CHECK((naive.at(name) == v));
		for (const auto& [name, v] : naive) {
			if (!pruned.count(name)) CHECK((v != Truth::True));
		}
	}
}

TEST_CASE("rule variables") {
	Program p = parseProgram("p(x) <- q(x,y) and (some z | r(z)).");
	CHECK(ruleVariables(p.rules[0]) == std::vector<std::string>{"x", "y"});
}

} // TEST_SUITE
