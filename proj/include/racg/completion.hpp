#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "racg/complex.hpp"

namespace racg {

/// Completions can be infinite; the engine stops when either bound trips.
struct Budget {
  long long max_vertices = 10000;
  long long max_rounds = 64;
};

enum class CompletionStatus { Finite, BudgetExhausted };

struct RoundProfile {
  long long vertices = 0;
  long long edges = 0;
  long long cubes = 0;
};

struct CompletionReport {
  CompletionStatus status = CompletionStatus::BudgetExhausted;
  CubeComplex complex;
  std::vector<RoundProfile> profile;  // entry 0: input after the initial fold
  long long rounds_run = 0;

  explicit CompletionReport(CubeComplex c) : complex(std::move(c)) {}
};

/// Runs rounds of (attach all due cubes; fold to saturation) after an initial
/// fold, until a round changes nothing (Finite) or the budget trips. The
/// canonical operation order makes runs reproducible; a seed randomizes the
/// operation order instead.
CompletionReport complete(CubeComplex sigma, const Budget& budget,
                          std::optional<std::uint64_t> shuffle_seed = std::nullopt);

/// Vertex count after each round; stops at `rounds`, at the budget, or at a
/// fixed point.
std::vector<long long> growth_profile(const CubeComplex& sigma, long long rounds,
                                      const Budget& budget);

enum class Membership { Member, NonMember, Unknown };

/// Loops persist into the direct limit, so Member is valid even on a
/// truncated complex; NonMember needs a finite completion.
Membership membership(const CompletionReport& report, const Word& w);

enum class QCKind { Quasiconvex, EvidenceNonQuasiconvex, Inconclusive };

struct QCVerdict {
  QCKind kind = QCKind::Inconclusive;
  long long window = 0;  // rounds inspected for growth evidence
};

/// Finite -> Quasiconvex. BudgetExhausted with strictly increasing vertex
/// counts over the final ceil(rounds/2) rounds -> growth evidence of
/// non-quasiconvexity (explicitly not a proof). Otherwise Inconclusive.
QCVerdict quasiconvexity_verdict(const CompletionReport& report);

enum class IndexVerdict { FiniteIndex, InfiniteIndex, NotApplicable, Unknown };

/// NotApplicable when the defining graph is a cone. Otherwise FiniteIndex
/// iff the completion is finite and every vertex meets every label.
IndexVerdict finite_index_verdict(const CompletionReport& report, const SimplicialGraph& g);

/// Euler characteristic of a finite completion; throws InfiniteComplex on a
/// budget-truncated report.
long long report_euler(const CompletionReport& report);

}  // namespace racg
