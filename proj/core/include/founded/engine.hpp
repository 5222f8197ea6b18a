#pragma once

#include <founded/oracles.hpp>
#include <founded/parser.hpp>

#include <chrono>

namespace founded {

/// Ways of overriding a program's declarations before evaluation.
enum class Regime {
	AsDeclared,     // the program's own declarations
	AllUncertain,   // every predicate uncertain, completeness kept, nothing closed
	DefaultCertain, // certain wherever allowed, nothing closed
	Fitting,        // conclusion predicates uncertain and complete, others certain
	AllClosed,      // certain wherever allowed, the rest complete and closed
	AllIncomplete,  // every predicate uncertain, conclusion predicates incomplete
};

std::string_view toString(Regime r);

/// Resolved program under the regime, or nullopt when the regime does not
/// apply (DefaultCertain where no predicate can be certain).
std::optional<Program> applyRegime(const Program& parsed, Regime regime);

struct Analysis {
	Program          program; // resolved
	GroundProgram    ground;
	CompletedProgram completed;
};

Analysis prepare(const Program& resolved, GroundOptions options = {});

/// Founded model, or the closure fixpoint when some predicate is closed.
ClosureResult evaluate(const Analysis& analysis, EvalOptions options = {});

/// Column names of the comparison table, in order.
const std::vector<std::string>& compareColumns();

struct CompareReport {
	std::vector<std::pair<std::string, std::string>> cells; // column, rendered cell

	const std::string* cell(std::string_view column) const;
	/// One "column: cell" line per column.
	std::string render() const;
};

/// Evaluates the program under every regime of the comparison table.
CompareReport compare(const Program& parsed);

/// Reads a rendered report back into (column, cell) pairs; blank lines and
/// '%' comments are skipped.
std::vector<std::pair<std::string, std::string>> parseReport(std::string_view text);

enum class BenchFamily { WinChain, WinCycle, ReachGrid };

std::optional<BenchFamily> benchFamily(std::string_view name);
std::string_view           toString(BenchFamily f);

/// Generated program with n positions.
Program benchProgram(BenchFamily family, std::size_t n);

struct BenchRow {
	std::size_t               n          = 0;
	std::size_t               groundAtoms = 0;
	std::size_t               groundSize = 0;
	std::uint64_t             steps      = 0;
	std::chrono::duration<double> wall{};

	double ratio() const { return groundSize ? static_cast<double>(steps) / static_cast<double>(groundSize) : 0.0; }
};

struct BenchReport {
	BenchFamily           family = BenchFamily::WinChain;
	std::vector<BenchRow> rows;
	/// max ratio over min ratio; nullopt with fewer than two rows.
	std::optional<double> spread() const;
	/// Empty with fewer than two rows.
	std::optional<bool> linear(double band = 2.0) const;
	std::string         render() const;
};

BenchRow    benchOne(BenchFamily family, std::size_t n);
BenchReport bench(BenchFamily family, const std::vector<std::size_t>& sizes);

} // namespace founded
