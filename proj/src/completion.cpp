#include "racg/completion.hpp"

#include "racg/errors.hpp"

namespace racg {

namespace {

RoundProfile snapshot(const CubeComplex& c) {
  return RoundProfile{c.vertex_count(), c.edge_count(), c.cube_count()};
}

}  // namespace

CompletionReport complete(CubeComplex sigma, const Budget& budget,
                          std::optional<std::uint64_t> shuffle_seed) {
  if (budget.max_vertices <= 0 || budget.max_rounds <= 0)
    fail(ErrorCode::BadParameter, "budget bounds must be positive");

  auto next_seed = [&, n = std::uint64_t{0}]() mutable -> std::optional<std::uint64_t> {
    if (!shuffle_seed) return std::nullopt;
    return *shuffle_seed + 0x9e3779b97f4a7c15ull * ++n;
  };

  sigma.fold_saturate(next_seed());
  CompletionReport report(std::move(sigma));
  report.profile.push_back(snapshot(report.complex));
  report.rounds_run = 0;
  report.status = CompletionStatus::BudgetExhausted;

  for (long long round = 1; round <= budget.max_rounds; ++round) {
    long long attached = report.complex.attach_round(next_seed());
    FoldStats folds = report.complex.fold_saturate(next_seed());
    report.profile.push_back(snapshot(report.complex));
    report.rounds_run = round;
    if (attached == 0 && folds.total() == 0) {
      report.status = CompletionStatus::Finite;
      break;
    }
    if (report.complex.vertex_count() > budget.max_vertices) break;
  }
  if (report.status == CompletionStatus::Finite) {
    ComplexStatus final_status = report.complex.status();
    if (!final_status.folded || !final_status.cube_full)
      fail(ErrorCode::ValidationError, "internal: finite completion is not folded and cube-full");
  }
  return report;
}

std::vector<long long> growth_profile(const CubeComplex& sigma, long long rounds,
                                      const Budget& budget) {
  Budget b = budget;
  b.max_rounds = std::min(budget.max_rounds, rounds);
  if (b.max_rounds <= 0) fail(ErrorCode::BadParameter, "round count must be positive");
  CompletionReport report = complete(sigma, b);
  std::vector<long long> out;
  out.reserve(report.profile.size());
  for (const auto& p : report.profile) out.push_back(p.vertices);
  return out;
}

Membership membership(const CompletionReport& report, const Word& w) {
  Word r = reduce(w, report.complex.graph());
  TraceResult t = report.complex.trace(r);
  if (t.kind == TraceResult::Kind::Loop) return Membership::Member;
  return report.status == CompletionStatus::Finite ? Membership::NonMember : Membership::Unknown;
}

QCVerdict quasiconvexity_verdict(const CompletionReport& report) {
  if (report.status == CompletionStatus::Finite) return {QCKind::Quasiconvex, 0};
  long long n = report.rounds_run;
  long long window = (n + 1) / 2;
  if (window < 1 || static_cast<long long>(report.profile.size()) < window + 1)
    return {QCKind::Inconclusive, window};
  for (long long i = n - window; i < n; ++i) {
    if (report.profile[static_cast<size_t>(i)].vertices >=
        report.profile[static_cast<size_t>(i + 1)].vertices)
      return {QCKind::Inconclusive, window};
  }
  return {QCKind::EvidenceNonQuasiconvex, window};
}

IndexVerdict finite_index_verdict(const CompletionReport& report, const SimplicialGraph& g) {
  if (g != report.complex.graph())
    fail(ErrorCode::ValidationError, "graph does not match the report's defining graph");
  if (cone_vertex(g)) return IndexVerdict::NotApplicable;
  if (report.status != CompletionStatus::Finite) return IndexVerdict::Unknown;
  return report.complex.vertex_fullness() ? IndexVerdict::FiniteIndex : IndexVerdict::InfiniteIndex;
}

long long report_euler(const CompletionReport& report) {
  if (report.status != CompletionStatus::Finite)
    fail(ErrorCode::InfiniteComplex,
         "Euler characteristic is undefined for a budget-truncated completion");
  return report.complex.euler_characteristic();
}

}  // namespace racg
