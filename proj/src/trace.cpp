#include "cliquelink/trace.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cliquelink/errors.hpp"

namespace cliquelink {

const char* to_string(CaseKind kind) {
  switch (kind) {
    case CaseKind::base_row: return "base0";
    case CaseKind::base_two_rows: return "base1";
    case CaseKind::case1: return "case1";
    case CaseKind::case2: return "case2";
    case CaseKind::transpose: return "transpose";
  }
  return "?";
}

int SolverTrace::max_depth() const {
  int depth = 0;
  for (const CaseRecord& r : records) depth = std::max(depth, r.depth);
  return depth;
}

namespace {

std::string join(const std::vector<int>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out + "]";
}

std::string join(const std::vector<Vertex>& vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? " " : "") + to_string(vs[i]);
  return out + "}";
}

}  // namespace

std::string format_trace(const SolverTrace& trace) {
  std::ostringstream os;
  for (const CaseRecord& r : trace.records) {
    os << "# " << std::string(static_cast<std::size_t>(2 * r.depth), ' ') << to_string(r.kind);
    if (r.kind == CaseKind::case2 && r.alpha) os << "-alpha" << *r.alpha;
    os << " depth=" << r.depth << " rows=" << join(r.rows) << " cols=" << join(r.cols);
    if (!r.reason.empty()) os << " reason=" << r.reason;
    if (r.pair_index >= 0) os << " pair=" << r.pair_index + 1;
    if (!r.row_order.empty()) os << " row_order=" << join(r.row_order);
    if (!r.col_order.empty()) os << " col_order=" << join(r.col_order);
    if (!r.l1.empty()) os << " L1=" << join(r.l1);
    if (r.kind == CaseKind::case1) os << " U=" << join(r.moved) << " W=" << join(r.kept);
    else if (!r.moved.empty()) os << " moved=" << join(r.moved);
    if (r.n1 >= 0) os << " n1=" << r.n1 << " n2=" << r.n2;
    if (!r.matching.empty()) {
      os << " matching=";
      for (std::size_t i = 0; i < r.matching.size(); ++i)
        os << (i ? "," : "") << r.matching[i].first << "->" << r.matching[i].second;
    }
    if (r.scenario) os << " scenario=" << r.scenario;
    for (const Stub& s : r.stubs) os << " stub" << to_string(s.terminal) << "=" << join(s.path);
    for (std::size_t i = 0; i < r.subpair_origin.size(); ++i)
      if (r.subpair_origin[i] < 0) os << " padding=" << join({r.subpairs[i].s, r.subpairs[i].t});
    os << '\n';
  }
  return os.str();
}

Linkage stitch_level(const LinkageProblem& p, const CaseRecord& rec, const Linkage& sub) {
  if (sub.paths.size() != rec.subpairs.size())
    throw std::logic_error("induced linkage has the wrong number of paths");
  auto stub_of = [&](Vertex v) -> Path {
    for (const Stub& s : rec.stubs)
      if (s.terminal == v) return s.path;
    return {v};
  };
  Linkage out;
  out.paths.resize(p.k());
  std::vector<bool> done(p.k(), false);
  for (const auto& [index, path] : rec.finished) {
    out.paths.at(static_cast<std::size_t>(index)) = path;
    done[static_cast<std::size_t>(index)] = true;
  }
  for (std::size_t j = 0; j < rec.subpairs.size(); ++j) {
    if (rec.subpair_origin[j] < 0) continue;
    const auto i = static_cast<std::size_t>(rec.subpair_origin[j]);
    Path middle = sub.paths[j];
    if (middle.front() != rec.subpairs[j].s) std::reverse(middle.begin(), middle.end());
    Path path = stub_of(p.pairs[i].s);
    if (path.back() != middle.front()) throw std::logic_error("stub does not meet the induced path");
    path.insert(path.end(), middle.begin() + 1, middle.end());
    Path tail = stub_of(p.pairs[i].t);
    if (tail.back() != path.back()) throw std::logic_error("induced path does not meet the stub");
    path.insert(path.end(), tail.rbegin() + 1, tail.rend());
    out.paths[i] = std::move(path);
    done[i] = true;
  }
  if (std::find(done.begin(), done.end(), false) != done.end())
    throw std::logic_error("a pair has no path after stitching");
  return out;
}

namespace {

Linkage replay_level(const LinkageProblem& p, const SolverTrace& trace, std::size_t& pos) {
  if (p.k() == 0) return {};
  if (pos >= trace.records.size()) throw ContractError("trace ends before the linkage is complete");
  const CaseRecord& rec = trace.records[pos++];
  if (rec.rows != std::vector<int>(p.grid.rows().begin(), p.grid.rows().end()) ||
      rec.cols != std::vector<int>(p.grid.cols().begin(), p.grid.cols().end()))
    throw ContractError("trace record does not match the problem grid");
  switch (rec.kind) {
    case CaseKind::transpose:
      return transpose(replay_level(transpose(p), trace, pos));
    case CaseKind::base_row: {
      Linkage out;
      out.paths.resize(p.k());
      for (const auto& [index, path] : rec.finished) out.paths.at(static_cast<std::size_t>(index)) = path;
      return out;
    }
    default: {
      LinkageProblem sub{Subgrid(p.grid.base(), rec.sub_rows, rec.sub_cols), rec.subpairs};
      return stitch_level(p, rec, replay_level(sub, trace, pos));
    }
  }
}

}  // namespace

Linkage replay(const LinkageProblem& problem, const SolverTrace& trace) {
  std::size_t pos = 0;
  Linkage out = replay_level(problem, trace, pos);
  if (pos != trace.records.size()) throw ContractError("trace has unused records");
  return out;
}

}  // namespace cliquelink
