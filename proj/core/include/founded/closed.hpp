#pragma once

#include <founded/founded.hpp>

#include <span>

namespace founded {

/// Greatest set S of candidate atoms such that the combined body of every
/// member is false once the positive literals of S are read as false. All
/// other literals, including n.-literals of S, read itp.
std::vector<AtomId> selfFalseAmong(const Interpretation& itp, const CompletedProgram& cp,
                                   std::span<const AtomId> candidates);

/// Self-false atoms among the undefined atoms of closed predicates.
std::vector<AtomId> selfFalse(const Interpretation& itp, const CompletedProgram& cp);

struct ClosureResult {
	Interpretation  model;
	DerivationTrace trace;
	std::size_t     iterations = 0; // rounds that added self-false atoms
};

/// Founded model, then repeatedly assert n.A for self-false A and recompute
/// until no self-false atom remains.
ClosureResult wfsByClosure(const CompletedProgram& cp, EvalOptions options = {});

} // namespace founded
