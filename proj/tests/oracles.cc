// Copyright 2026 The phonebias Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "oracles.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "decoder/decoding_graph.h"

namespace phonebias::testing {

namespace {

void Walk(const Wfst& fst, StateId s, PathResult* current, PathSet* out) {
  if (fst.IsFinal(s)) {
    PathResult done = *current;
    done.cost += fst.Final(s);
    out->push_back(std::move(done));
  }
  for (const Arc& a : fst.Arcs(s)) {
    PathResult next = *current;
    next.cost += a.weight;
    if (a.ilabel != 0) next.input.push_back(a.ilabel);
    if (a.olabel != 0) next.output.push_back(a.olabel);
    Walk(fst, a.nextstate, &next, out);
  }
}

std::string Show(const Sequence& s) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < s.size(); ++i) os << (i ? " " : "") << s[i];
  os << "]";
  return os.str();
}

}  // namespace

PathSet OraclePaths(const Wfst& fst) {
  PathSet out;
  if (fst.Start() == kNoState) return out;
  PathResult empty{{}, {}, 0.0};
  Walk(fst, fst.Start(), &empty, &out);
  return out;
}

CostMap MinCostMap(const PathSet& paths) {
  CostMap m;
  for (const PathResult& p : paths) {
    auto [it, inserted] = m.emplace(std::make_pair(p.input, p.output), p.cost);
    if (!inserted) it->second = std::min(it->second, p.cost);
  }
  return m;
}

CostMap JoinOracle(const CostMap& a, const CostMap& b) {
  CostMap out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      if (ka.second != kb.first) continue;
      auto [it, inserted] = out.emplace(std::make_pair(ka.first, kb.second), ca + cb);
      if (!inserted) it->second = std::min(it->second, ca + cb);
    }
  }
  return out;
}

std::map<Sequence, double> InputCostMap(const PathSet& paths) {
  std::map<Sequence, double> m;
  for (const PathResult& p : paths) {
    auto [it, inserted] = m.emplace(p.input, p.cost);
    if (!inserted) it->second = std::min(it->second, p.cost);
  }
  return m;
}

bool SameCostMap(const CostMap& a, const CostMap& b, double tol, std::string* why) {
  if (a.size() != b.size()) {
    *why = "path counts differ: " + std::to_string(a.size()) + " vs " + std::to_string(b.size());
    return false;
  }
  for (auto ia = a.begin(), ib = b.begin(); ia != a.end(); ++ia, ++ib) {
    if (ia->first != ib->first) {
      *why = "path " + Show(ia->first.first) + ":" + Show(ia->first.second) + " vs " +
             Show(ib->first.first) + ":" + Show(ib->first.second);
      return false;
    }
    if (std::abs(ia->second - ib->second) > tol) {
      *why = "cost of " + Show(ia->first.first) + " differs: " + std::to_string(ia->second) +
             " vs " + std::to_string(ib->second);
      return false;
    }
  }
  return true;
}

bool SameInputMap(const std::map<Sequence, double>& a, const std::map<Sequence, double>& b,
                  double tol, std::string* why) {
  CostMap ca, cb;
  for (const auto& [k, v] : a) ca[{k, {}}] = v;
  for (const auto& [k, v] : b) cb[{k, {}}] = v;
  return SameCostMap(ca, cb, tol, why);
}

PathResult OracleShortest(const PathSet& paths) {
  PathResult best;
  bool any = false;
  for (const PathResult& p : paths) {
    if (!any || std::tie(p.cost, p.output, p.input) < std::tie(best.cost, best.output, best.input)) {
      best = p;
      any = true;
    }
  }
  return best;
}

double DyadicCost(Rng& rng, int lo, int hi) {
  return static_cast<double>(lo + static_cast<int>(UniformIndex(rng, hi - lo + 1))) / 4.0;
}

Wfst RandomAcyclic(Rng& rng, const MachineShape& shape) {
  Wfst fst;
  const int n = 1 + static_cast<int>(UniformIndex(rng, shape.max_states));
  fst.AddStates(n);
  fst.SetStart(0);
  auto label = [&] { return static_cast<Label>(2 + UniformIndex(rng, shape.labels)); };
  for (int s = 0; s < n; ++s) {
    if (UniformDouble(rng) < shape.final_prob || s == n - 1) fst.SetFinal(s, DyadicCost(rng, 0, 8));
    if (s == n - 1) continue;
    const int arcs = static_cast<int>(UniformIndex(rng, shape.max_arcs + 1));
    for (int k = 0; k < arcs; ++k) {
      const StateId t = s + 1 + static_cast<StateId>(UniformIndex(rng, n - s - 1));
      Label in = UniformDouble(rng) < shape.epsilon_in ? kEpsilon : label();
      Label out;
      if (shape.acceptor) {
        out = in;
      } else if (shape.epsilon_pairs && in == kEpsilon) {
        out = kEpsilon;
      } else {
        out = UniformDouble(rng) < shape.epsilon_out ? kEpsilon : label();
      }
      fst.AddArc(s, {in, out, DyadicCost(rng, -4, 8), t});
    }
  }
  return fst;
}

Wfst RandomFunctional(Rng& rng, int layers, int labels) {
  Wfst fst;
  std::vector<std::vector<StateId>> layer(layers + 1);
  for (int k = 0; k <= layers; ++k) {
    const int size = k == 0 ? 1 : 1 + static_cast<int>(UniformIndex(rng, 3));
    for (int i = 0; i < size; ++i) layer[k].push_back(fst.AddState());
  }
  fst.SetStart(0);
  std::map<std::pair<Label, int>, Label> h;
  for (int k = 0; k < layers; ++k) {
    for (Label l = 2; l < 2 + labels; ++l) {
      h[{l, k}] = UniformDouble(rng) < 0.3 ? kEpsilon : static_cast<Label>(2 + UniformIndex(rng, labels));
    }
  }
  for (int k = 0; k < layers; ++k) {
    for (StateId s : layer[k]) {
      const int arcs = 1 + static_cast<int>(UniformIndex(rng, 3));
      for (int a = 0; a < arcs; ++a) {
        const Label in = static_cast<Label>(2 + UniformIndex(rng, labels));
        const StateId t = layer[k + 1][UniformIndex(rng, layer[k + 1].size())];
        fst.AddArc(s, {in, h[{in, k}], DyadicCost(rng, -4, 8), t});
      }
    }
  }
  for (int k = 0; k <= layers; ++k) {
    for (StateId s : layer[k]) {
      if (k == layers || UniformDouble(rng) < 0.25) fst.SetFinal(s, DyadicCost(rng, 0, 4));
    }
  }
  return fst;
}

Wfst RandomDfa(Rng& rng, int max_states, int labels) {
  Wfst fst;
  const int n = 2 + static_cast<int>(UniformIndex(rng, max_states - 1));
  fst.AddStates(n);
  fst.SetStart(0);
  for (int s = 0; s < n; ++s) {
    if (s == n - 1 || UniformDouble(rng) < 0.4) fst.SetFinal(s, UniformDouble(rng) < 0.7 ? 0.0 : 0.25);
    if (s == n - 1) continue;
    for (Label l = 2; l < 2 + labels; ++l) {
      if (UniformDouble(rng) < 0.5) continue;
      const StateId t = s + 1 + static_cast<StateId>(UniformIndex(rng, n - s - 1));
      fst.AddArc(s, {l, l, UniformDouble(rng) < 0.7 ? 0.0 : 0.5, t});
    }
  }
  return fst;
}

size_t OracleBankedUnits(const std::vector<Sequence>& phrases, const Sequence& input) {
  std::set<Sequence> prefixes, complete, inner;
  for (const Sequence& p : phrases) {
    complete.insert(p);
    for (size_t k = 1; k <= p.size(); ++k) {
      prefixes.insert(Sequence(p.begin(), p.begin() + k));
      if (k < p.size()) inner.insert(Sequence(p.begin(), p.begin() + k));
    }
  }
  auto deepest_completed = [&](const Sequence& p) {
    for (size_t k = p.size(); k > 0; --k) {
      if (complete.count(Sequence(p.begin(), p.begin() + k))) return k;
    }
    return size_t{0};
  };
  Sequence p;
  size_t banked = 0;
  for (Label x : input) {
    while (true) {
      Sequence q = p;
      q.push_back(x);
      if (prefixes.count(q)) {
        if (complete.count(q) && !inner.count(q)) {
          banked += q.size();
          p.clear();
        } else {
          p = std::move(q);
        }
        break;
      }
      if (p.empty()) break;
      banked += deepest_completed(p);
      p.clear();
    }
  }
  return banked + deepest_completed(p);
}

namespace {

struct Search {
  const EmissionSequence& em;
  const std::vector<OracleWord>& words;
  const std::vector<Sequence>* bias;
  double bonus;
  double lambda;
  const SymbolTable& units;
  std::set<Sequence> pron_prefixes;
  std::map<Sequence, double> by_out;  // output -> combined cost

  void Finish(const Sequence& out, const Sequence& inp, double model) {
    double total = model;
    if (bias != nullptr && lambda > 0.0) {
      total += lambda * -bonus * static_cast<double>(OracleBankedUnits(*bias, inp));
    }
    auto [it, inserted] = by_out.emplace(out, total);
    if (!inserted) {
      const double lo = std::min(it->second, total), hi = std::max(it->second, total);
      it->second = lo - std::log1p(std::exp(lo - hi));
    }
  }

  void Step(size_t t, const Sequence& partial, Sequence& out, Sequence& inp, double model) {
    if (t == em.steps.size()) {
      if (partial.empty()) Finish(out, inp, model);
      return;
    }
    const EmissionStep& step = em.steps[t];
    for (Label sym = 2; sym < static_cast<Label>(step.size()); ++sym) {
      if (step[sym] == -INFINITY) continue;
      const double m = model - step[sym];
      inp.push_back(sym);
      const SymbolKind kind = units.Kind(sym);
      if (kind == SymbolKind::kPhoneme) {
        Sequence q = partial;
        q.push_back(sym);
        if (pron_prefixes.count(q)) {
          for (const OracleWord& w : words) {
            if (w.pronunciation != q) continue;
            const size_t mark = out.size();
            out.insert(out.end(), w.pieces.begin(), w.pieces.end());
            out.push_back(kWordBoundary);
            Step(t + 1, {}, out, inp, m);
            out.resize(mark);
          }
          bool extends = false;
          for (const OracleWord& w : words) {
            extends |= w.pronunciation.size() > q.size() &&
                       std::equal(q.begin(), q.end(), w.pronunciation.begin());
          }
          if (extends) Step(t + 1, q, out, inp, m);
        }
      } else if (partial.empty()) {
        out.push_back(sym);
        Step(t + 1, partial, out, inp, m);
        out.pop_back();
      }
      inp.pop_back();
    }
  }
};

}  // namespace

OracleResult ExhaustiveDecode(const EmissionSequence& em, const std::vector<OracleWord>& words,
                              const std::vector<Sequence>* bias_phrases, double bonus,
                              double lambda, const SymbolTable& units) {
  Search search{em, words, bias_phrases, bonus, lambda, units, {}, {}};
  for (const OracleWord& w : words) {
    for (size_t k = 1; k <= w.pronunciation.size(); ++k) {
      search.pron_prefixes.insert(Sequence(w.pronunciation.begin(), w.pronunciation.begin() + k));
    }
  }
  Sequence out, inp;
  search.Step(0, {}, out, inp, 0.0);
  OracleResult r;
  if (search.by_out.empty()) return r;
  double floor = INFINITY;
  for (const auto& [o, c] : search.by_out) floor = std::min(floor, c);
  for (const auto& [o, c] : search.by_out) {
    if (c <= floor + 1e-9) {  // map order: the first is the smallest output
      r.any = true;
      r.out = o;
      r.cost = c;
      break;
    }
  }
  return r;
}

}  // namespace phonebias::testing
