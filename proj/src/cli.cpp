// Copyright 2026 The Authors.
// SPDX-License-Identifier: Apache-2.0

#include "flowerdeck/cli.h"

#include <chrono>
#include <fstream>
#include <map>
#include <ostream>
#include <random>

#include "flowerdeck/abstract.h"
#include "flowerdeck/flowers.h"
#include "flowerdeck/io.h"
#include "flowerdeck/matroid_flowers.h"
#include "flowerdeck/parallel.h"

namespace fd::cli {

namespace {

using io::json;

// A check failed; the payload is the witness.
struct CheckFailed {
  json witness;
};

int need_k(const RunConfig& cfg) {
  if (cfg.k < 0) throw InputError(cfg.command + " needs --k");
  return cfg.k;
}

Pseudoflower load_flower(const ConnectivitySystem& sys, const RunConfig& cfg) {
  if (cfg.partition.empty()) throw InputError(cfg.command + " needs --partition");
  json doc = io::read_json_arg(cfg.partition);
  if (!cfg.order.empty()) {
    const CyclicOrder order = io::parse_cyclic_order(io::read_json_arg(cfg.order));
    if (doc.is_array()) doc = json{{"petals", doc}};
    doc["order"] = order.ring();
  }
  try {
    return io::parse_pseudoflower(sys, doc, cfg.k);
  } catch (const NotPseudoflowerError& e) {
    const Mask w = e.witness;
    throw CheckFailed{{{"pseudoflower", false},
                       {"reason", e.what()},
                       {"witness",
                        {{"start", e.start},
                         {"length", e.len},
                         {"set", io::side_json(sys.ground(), w)},
                         {"order", io::order_json(sys.lambda(w))}}}}};
  }
}

json cmd_verify(const ConnectivitySystem& sys, const RunConfig& cfg) {
  VerifyOptions opts;
  opts.exhaustive_limit = cfg.exhaustive_limit;
  opts.seed = cfg.seed;
  const VerificationReport r = verify(sys, opts);
  json witnesses = json::array();
  for (const auto& w : r.witnesses) {
    witnesses.push_back({{"property", w.property},
                         {"a", io::side_json(sys.ground(), w.a)},
                         {"b", io::side_json(sys.ground(), w.b)}});
  }
  json out = {{"passed", r.passed},
              {"exhaustive", r.exhaustive},
              {"symmetry_checked", r.symmetry_checked},
              {"pairs_checked", r.pairs_checked},
              {"witnesses", witnesses}};
  if (!r.passed) throw CheckFailed{out};
  return out;
}

json cmd_profiles(const ConnectivitySystem& sys, const RunConfig& cfg) {
  const int k = need_k(cfg);
  const auto profiles = enumerate_profiles(sys, k);
  json list = json::array();
  for (const auto& p : profiles) list.push_back(io::profile_json(sys.ground(), p));
  return {{"k", k}, {"count", profiles.size()}, {"profiles", list}};
}

json cmd_flower(const ConnectivitySystem& sys, const RunConfig& cfg) {
  const Pseudoflower f = load_flower(sys, cfg);
  json intervals = json::array();
  for (int start = 0; start < f.num_petals(); ++start) {
    for (int len = 1; len < f.num_petals(); ++len) {
      const Mask u = f.interval_union(start, len);
      intervals.push_back({{"start", start},
                           {"length", len},
                           {"set", io::side_json(sys.ground(), u)},
                           {"order", io::order_json(sys.lambda(u))}});
    }
  }
  return {{"pseudoflower", true}, {"flower", io::pseudoflower_json(f)}, {"intervals", intervals}};
}

json cmd_classify(const ConnectivitySystem& sys, const RunConfig& cfg) {
  ClassifyOptions opts;
  opts.seed = cfg.seed;
  if (!cfg.partition.empty()) {
    const Pseudoflower f = load_flower(sys, cfg);
    return {{"flower", io::pseudoflower_json(f)}, {"kind", to_string(classify(f, opts))}};
  }
  const int k = need_k(cfg);
  if (sys.size() > cfg.exhaustive_limit || sys.size() > 10) {
    throw InputError("exhaustive flower search is limited to 10 elements");
  }
  std::map<std::string, std::uint64_t> kinds;
  std::uint64_t examined = 0;
  for_each_pseudoflower(sys, k, 4, true, [&](const std::vector<Mask>& ring) {
    ++examined;
    ++kinds[to_string(classify(make_pseudoflower(sys, ring, k), opts))];
    return true;
  });
  return {{"k", k}, {"examined", examined}, {"kinds", kinds}};
}

json cmd_refine(const ConnectivitySystem& sys, const RunConfig& cfg) {
  const Pseudoflower f = load_flower(sys, cfg);
  if (classify(f) != FlowerKind::kAnemone) throw PreconditionError("refine needs an anemone");
  json petals = json::array();
  for (int i = 0; i < f.num_petals(); ++i) {
    if (cfg.audit) MuFunction(f, i, true);
    json classes = json::array();
    for (Mask c : petal_refinement(f, i)) classes.push_back(io::side_json(sys.ground(), c));
    petals.push_back({{"petal", i}, {"classes", classes}});
  }
  json out = {{"flower", io::pseudoflower_json(f)}, {"refinements", petals}, {"audited", cfg.audit}};
  out["maximal"] = f.num_petals() > f.k() ? io::pseudoflower_json(maximal_strong_anemone(f))
                                          : json(nullptr);
  return out;
}

json cmd_abstract(const ConnectivitySystem& sys, const RunConfig& cfg) {
  const int k = need_k(cfg);
  const auto profiles = enumerate_profiles(sys, k);
  json families = json::array();
  std::string dot;
  int index = 0;
  for (const auto& fam : group_by_truncation(sys, profiles)) {
    const AbstractSystem asys = build_abstract(sys, fam);
    const AbstractTree tree = build_tree(asys);
    json entry = io::abstract_json(asys, tree);
    json members = json::array();
    for (const auto& p : fam.profiles()) members.push_back(io::profile_json(sys.ground(), p));
    entry["profiles"] = members;
    families.push_back(entry);
    dot += to_dot(asys, tree, "abstract_" + std::to_string(index++));
  }
  if (!cfg.dot_path.empty()) {
    std::ofstream f(cfg.dot_path, std::ios::binary);
    if (!f) throw InputError("cannot write " + cfg.dot_path);
    f << dot;
  }
  return {{"k", k}, {"families", families}};
}

// Disjoint pairs (C, D) of the ground set, all of them up to 10 elements.
template <typename F>
std::uint64_t for_disjoint_pairs(int n, std::uint64_t seed, F&& f) {
  std::uint64_t pairs = 1;
  for (int t = 0; t < n; ++t) pairs *= 3;
  auto split = [&](std::uint64_t code) {
    Mask c = 0, d = 0;
    for (int t = 0; t < n; ++t, code /= 3) {
      if (code % 3 == 1) c |= bit(t);
      if (code % 3 == 2) d |= bit(t);
    }
    f(c, d);
  };
  if (n <= 10) {
    for (std::uint64_t code = 0; code < pairs; ++code) split(code);
    return pairs;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, pairs - 1);
  const std::uint64_t samples = 1 << 16;
  for (std::uint64_t i = 0; i < samples; ++i) split(pick(rng));
  return samples;
}

json flower_calculus(const Matroid& m, const Pseudoflower& f) {
  const DualFlowerReport r = dual_flower_check(m, f);
  for (int i = 0; i < f.num_petals(); ++i) {
    delete_petal(m, f, i);
    contract_petal(m, f, i);
  }
  return {{"kind", to_string(classify(f))},
          {"c", r.primal.c},
          {"d", r.primal.d},
          {"c_dual", r.dual.c},
          {"d_dual", r.dual.d}};
}

json cmd_matroid_checks(const ConnectivitySystem& sys, const RunConfig& cfg) {
  const Matroid* mp = sys.matroid();
  if (mp == nullptr) throw InputError("matroid-checks needs a matroid-backed system");
  const Matroid& m = *mp;
  const int n = m.size();
  if (n > 20) throw InputError("matroid-checks is limited to 20 elements");
  const Mask full = m.ground().full();
  const Matroid dual = m.dual();
  for (Mask x = 0;; ++x) {
    if (m.lambda(x) != dual.lambda(x)) {
      throw CheckFailed{{{"check", "dual_connectivity"}, {"set", io::side_json(m.ground(), x)}}};
    }
    base_pair_connectivity(m, x);
    if (x == full) break;
  }
  const std::uint64_t pairs = for_disjoint_pairs(n, cfg.seed, [&](Mask c, Mask d) {
    const Mask rest = full & ~c;
    const int lhs = m.lambda(c | d);
    const int rhs = m.contract(c).lambda(extract(d, rest)) +
                    m.remove(d).lambda(extract(c, full & ~d));
    if (lhs != rhs) {
      throw CheckFailed{{{"check", "contract_delete_split"},
                         {"c", io::side_json(m.ground(), c)},
                         {"d", io::side_json(m.ground(), d)}}};
    }
  });
  std::uint64_t reduced = 0;
  if (n <= 8) {
    for (Mask x = 0;; ++x) {
      reduce_class(m, x, cfg.seed);
      ++reduced;
      if (x == full) break;
    }
  }
  json out = {{"elements", n},
              {"rank", m.rank()},
              {"dual_connectivity_sets", std::uint64_t{1} << n},
              {"contract_delete_pairs", pairs},
              {"reduced_classes", reduced}};

  if (!cfg.partition.empty()) {
    out["flower"] = flower_calculus(m, load_flower(sys, cfg));
    return out;
  }
  if (n > 8) return out;
  // Every flower with at least five petals, for the given k or all k.
  int top = 0;
  for (Mask x = 0;; ++x) {
    top = std::max(top, m.lambda(x));
    if (x == full) break;
  }
  const int k_lo = cfg.k >= 1 ? cfg.k : 1, k_hi = cfg.k >= 1 ? cfg.k : top + 1;
  std::map<std::string, std::uint64_t> seen;
  std::uint64_t flowers = 0;
  for (int k = k_lo; k <= k_hi; ++k) {
    for_each_pseudoflower(sys, k, 5, true, [&](const std::vector<Mask>& ring) {
      Pseudoflower f = make_pseudoflower(sys, ring, k);
      const FlowerKind kind = classify(f);
      if (kind != FlowerKind::kAnemone && kind != FlowerKind::kDaisy) return true;
      ++flowers;
      const json r = flower_calculus(m, f);
      ++seen[r["kind"].get<std::string>() + " k=" + std::to_string(k) +
             " c=" + std::to_string(r["c"].get<int>()) + " d=" + std::to_string(r["d"].get<int>())];
      return true;
    });
  }
  out["flowers_checked"] = flowers;
  out["flower_parameters"] = seen;
  return out;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto t0 = std::chrono::steady_clock::now();
  auto progress = [&](json line) { err << line.dump() << "\n"; };
  if (cfg.jobs > 0) set_jobs(cfg.jobs);
  progress({{"event", "start"}, {"command", cfg.command}, {"jobs", jobs()}});
  int code = kExitOk;
  json report;
  try {
    const ConnectivitySystem sys = io::load_connsys(cfg.input);
    progress({{"event", "loaded"}, {"elements", sys.size()}});
    if (cfg.command == "verify") {
      report = cmd_verify(sys, cfg);
    } else if (cfg.command == "profiles") {
      report = cmd_profiles(sys, cfg);
    } else if (cfg.command == "flower") {
      report = cmd_flower(sys, cfg);
    } else if (cfg.command == "classify") {
      report = cmd_classify(sys, cfg);
    } else if (cfg.command == "refine") {
      report = cmd_refine(sys, cfg);
    } else if (cfg.command == "abstract") {
      report = cmd_abstract(sys, cfg);
    } else if (cfg.command == "matroid-checks") {
      report = cmd_matroid_checks(sys, cfg);
    } else {
      throw InputError("unknown command " + cfg.command);
    }
  } catch (const CheckFailed& f) {
    report = f.witness;
    code = kExitCheckFailed;
  } catch (const InvariantError& e) {
    report = {{"error", e.what()}, {"kind", "invariant"}};
    code = kExitCheckFailed;
  } catch (const InputError& e) {
    report = {{"error", e.what()}, {"kind", "input"}};
    code = kExitInputError;
  } catch (const PreconditionError& e) {
    report = {{"error", e.what()}, {"kind", "precondition"}};
    code = kExitInputError;
  }
  report = json{{"command", cfg.command}, {"result", report}};
  out << report.dump(2) << "\n";
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
  progress({{"event", "done"}, {"exit", code}, {"ms", ms}});
  return code;
}

}  // namespace fd::cli
