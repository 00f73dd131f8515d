#include "chemenum/pipeline.hpp"

#include <atomic>
#include <chrono>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "chemenum/biblock_gen.hpp"
#include "chemenum/graph_io.hpp"
#include "chemenum/iso_oracle.hpp"
#include "chemenum/mono_gen.hpp"

namespace chemenum {

PathSpec build_instance(const ChemicalGraph& sample, int max_len, int cover_len, int relax,
                        CoverageMode mode) {
  PathSpec ps;
  ps.max_len = max_len;
  ps.cover_len = cover_len;
  ps.relax = relax;
  ps.mode = mode;
  ps.lower.level = max_len;
  ps.upper.level = max_len;
  ps.upper.def = kUnbounded;
  FeatureVector f = feature_vector(sample, max_len);
  for (const auto& [t, cnt] : f.counts) {
    ps.paths.insert(t);
    if (t.length() == 0) {
      ps.lower.set(t, cnt);
      ps.upper.set(t, cnt);
    } else {
      std::int64_t lo = std::max<std::int64_t>(0, cnt - relax);
      if (lo > 0) ps.lower.set(t, lo);
      ps.upper.set(t, cnt + relax);
    }
  }
  return ps;
}

ProblemSpec instance_spec(const ChemicalGraph& sample, int max_len, int cover_len, int relax,
                          CoverageMode mode) {
  ProblemSpec spec;
  spec.table = sample.table_ptr();
  spec.d = sample.max_mult();
  spec.level = max_len;
  spec.path_spec = build_instance(sample, max_len, cover_len, relax, mode);
  return spec;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
  Clock::time_point end;
  bool enabled;
  bool expired() const { return enabled && Clock::now() > end; }
};

std::vector<int> atom_multiset(const ProblemSpec& spec) {
  std::vector<int> atoms;
  for (auto [color, count] : spec.atom_counts())
    for (int i = 0; i < count; ++i) atoms.push_back(color);
  return atoms;
}

// Deterministic parallel map over seeds: workers pull indices from a shared
// counter and results merge in seed order.
template <typename Fn>
std::vector<std::vector<ChemicalGraph>> parallel_over(const std::vector<ChemicalGraph>& seeds,
                                                      int workers, const Deadline& dl, Fn&& fn) {
  std::vector<std::vector<ChemicalGraph>> results(seeds.size());
  if (workers <= 1) {
    for (size_t i = 0; i < seeds.size(); ++i) {
      if (dl.expired()) break;
      results[i] = fn(seeds[i]);
    }
    return results;
  }
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= seeds.size() || dl.expired()) return;
      results[i] = fn(seeds[i]);
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace

RunResult run(const RunConfig& config) {
  RunResult res;
  auto t0 = Clock::now();
  Deadline dl{t0 + std::chrono::duration_cast<Clock::duration>(
                       std::chrono::duration<double>(config.time_limit_s)),
              config.time_limit_s > 0};

  const ProblemSpec& spec = config.spec;
  const PathSpec& ps = spec.path_spec;
  Stage target = config.stage == Stage::All ? Stage::BiBlock : config.stage;

  // lower bounds per stage: one relaxation step per edge addition remaining
  FeatureVector lo_final = ps.lower;
  FeatureVector lo_mono = relax_lower(lo_final);
  FeatureVector lo_tree = relax_lower(lo_mono);
  const FeatureVector& hi = ps.upper;

  bool seeds_from_file = !config.input_path.empty();

  // ---- tree stage ----
  std::vector<ChemicalGraph> trees;
  TreeSeedStats tstats;
  if (target == Stage::Tree || !seeds_from_file) {
    std::vector<int> atoms = atom_multiset(spec);
    if (atoms.empty()) throw std::runtime_error("run: spec pins no atom counts");
    trees = tree_seeds(spec.table, atoms, spec.d, hi, &tstats);
  } else if (target == Stage::Mono) {
    for (auto& blk : read_graphs_file(config.input_path, spec.table, spec.d))
      trees.push_back(std::move(blk.graph));
  }
  res.stats["tree_grown"] = tstats.grown;
  res.stats["tree_pruned_upper"] = tstats.pruned_upper;

  if (target == Stage::Tree) {
    const FeatureVector& lo = lo_final;
    for (ChemicalGraph& t : trees) {
      if (dl.expired()) break;
      if (feasible(t, lo, hi) && eulf_ok(t, ps)) res.graphs.push_back(std::move(t));
    }
    res.stats["tree_seeds"] = static_cast<long long>(trees.size());
  } else {
    // keep seeds that can still reach the target class
    std::vector<ChemicalGraph> kept;
    const FeatureVector& lo_seed = target == Stage::Mono ? lo_mono : lo_tree;
    for (ChemicalGraph& t : trees)
      if (feasible(t, lo_seed, hi)) kept.push_back(std::move(t));
    trees = std::move(kept);
    res.stats["tree_seeds"] = static_cast<long long>(trees.size());

    // ---- monocyclic stage ----
    std::vector<ChemicalGraph> monos;
    MonoGenStats mstats;
    bool mono_from_file = seeds_from_file && target == Stage::BiBlock;
    if (mono_from_file) {
      for (auto& blk : read_graphs_file(config.input_path, spec.table, spec.d)) {
        if (classify(blk.graph) != ShapeClass::Monocyclic)
          throw std::runtime_error("run: input graph " + blk.id + " is not monocyclic");
        monos.push_back(std::move(blk.graph));
      }
    } else {
      bool restrict_big = target == Stage::BiBlock;
      auto per_tree = parallel_over(trees, config.workers, dl, [&](const ChemicalGraph& t) {
        MonoGenStats st;
        std::vector<ChemicalGraph> out = generate_monocyclic(t, hi, spec.d, restrict_big, &st);
        return out;
      });
      // cross-tree deduplication by canonical monocyclic key
      std::map<std::vector<int>, char> seen;
      const FeatureVector& lo_keep = target == Stage::Mono ? lo_final : lo_mono;
      for (auto& batch : per_tree) {
        for (ChemicalGraph& g : batch) {
          ++mstats.candidates;
          std::vector<int> key = monocyclic_key(g);
          if (seen.count(key)) continue;
          seen.emplace(std::move(key), 1);
          if (!feasible(g, lo_keep, hi)) continue;
          monos.push_back(std::move(g));
        }
      }
    }
    res.stats["mono_candidates"] = mstats.candidates;
    res.stats["mono_kept"] = static_cast<long long>(monos.size());

    if (target == Stage::Mono) {
      for (ChemicalGraph& g : monos) {
        if (dl.expired()) break;
        if (eulf_ok(g, ps)) res.graphs.push_back(std::move(g));
      }
    } else {
      // ---- bi-block stage ----
      std::atomic<long long> cand{0}, rej{0}, pruned{0};
      auto per_mono = parallel_over(monos, config.workers, dl, [&](const ChemicalGraph& g) {
        MonocyclicView view = decompose(g);
        BiBlockGenStats st;
        std::vector<ChemicalGraph> out = generate_children(view, hi, spec.d, &st);
        cand += st.candidates;
        rej += st.rejected_child;
        pruned += st.pruned_upper;
        return out;
      });
      res.stats["biblock_candidates"] = cand.load();
      res.stats["biblock_rejected_child"] = rej.load();
      res.stats["biblock_pruned_upper"] = pruned.load();
      for (auto& batch : per_mono) {
        for (ChemicalGraph& h : batch) {
          if (feasible(h, lo_final, hi) && eulf_ok(h, ps)) res.graphs.push_back(std::move(h));
        }
      }
    }
  }

  if (dl.expired()) {
    res.status = "time-exceeded";
    res.exit_code = kTimeLimit;
  } else if (config.limit >= 0 && static_cast<long long>(res.graphs.size()) > config.limit) {
    res.graphs.resize(static_cast<size_t>(config.limit));
    res.status = "limit-exceeded";
    res.exit_code = kCountLimit;
  } else if (res.graphs.empty()) {
    res.status = "no-solutions";
  }

  if (config.oracle_verify && res.exit_code == kOk) {
    std::vector<int> atoms = atom_multiset(spec);
    ShapeClass shape = target == Stage::Tree      ? ShapeClass::MultiTree
                       : target == Stage::Mono   ? ShapeClass::Monocyclic
                                                  : ShapeClass::BiBlock2Aug;
    OracleBounds ob{lo_final, hi, &ps};
    IsoClassSet truth = enumerate_all(shape, atoms, spec.table, spec.d, &ob);
    RepresentsReport rep = represents(res.graphs, truth);
    res.stats["oracle_classes"] = truth.size();
    if (!rep.ok()) {
      res.status = "oracle-mismatch " + rep.to_string();
      res.exit_code = kOracleMismatch;
    }
  }

  res.stats["emitted"] = static_cast<long long>(res.graphs.size());
  res.stats["wall_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
  return res;
}

void write_result(std::ostream& os, const RunResult& r, bool count_only) {
  if (!count_only) {
    int i = 0;
    for (const ChemicalGraph& g : r.graphs) write_graph(os, g, std::to_string(++i));
  }
  for (const auto& [k, v] : r.stats) os << "# " << k << " " << v << "\n";
  os << "# status " << r.status << "\n";
}

}  // namespace chemenum
