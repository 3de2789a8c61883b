#include "dtdesc/chain_rewrite.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace dtdesc {

int ChainVector::sum() const { return std::accumulate(entries.begin(), entries.end(), 0); }

std::string ChainVector::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) os << ',';
    os << entries[i];
  }
  os << ')';
  if (closed) os << 'c';
  return os.str();
}

namespace {

// Chains-of-pieces view. Open vectors hold any number of chains; a closed
// vector is a single cyclic chain.
struct Structural {
  bool closed = false;
  std::vector<std::vector<int>> chains;
};

std::vector<int> reversed(std::vector<int> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

std::vector<int> orient_greatest(const std::vector<int>& c) { return std::max(c, reversed(c)); }

std::vector<int> cyclic_least(const std::vector<int>& c) {
  std::vector<int> best = c;
  std::vector<int> cur = c;
  const std::size_t k = c.size();
  for (int refl = 0; refl < 2; ++refl) {
    for (std::size_t r = 0; r < k; ++r) {
      std::rotate(cur.begin(), cur.begin() + 1, cur.end());
      if (cur < best) best = cur;
    }
    std::reverse(cur.begin(), cur.end());
  }
  return best;
}

ChainVector from_structural(const Structural& s) {
  ChainVector out;
  if (s.closed) {
    out.closed = true;
    out.entries = cyclic_least(s.chains.at(0));
    return out;
  }
  std::vector<std::vector<int>> chains;
  for (const auto& c : s.chains)
    if (!c.empty()) chains.push_back(orient_greatest(c));
  std::sort(chains.begin(), chains.end(), [](const auto& a, const auto& b) {
    int sa = std::accumulate(a.begin(), a.end(), 0);
    int sb = std::accumulate(b.begin(), b.end(), 0);
    if (sa != sb) return sa > sb;
    return a < b;
  });
  out.closed = false;
  if (chains.empty()) {
    out.entries = {0};
    return out;
  }
  for (const auto& c : chains) {
    out.entries.insert(out.entries.end(), c.begin(), c.end());
    out.entries.push_back(0);
  }
  return out;
}

Structural to_structural(const ChainVector& cv) {
  Structural s;
  s.closed = cv.closed;
  if (cv.closed) {
    s.chains.push_back(cv.entries);
    return s;
  }
  std::vector<int> cur;
  for (int e : cv.entries) {
    if (e == 0) {
      if (!cur.empty()) s.chains.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(e);
    }
  }
  if (!cur.empty()) s.chains.push_back(std::move(cur));
  return s;
}

// Cut a cyclic entry sequence at its zero entries; no zeros keeps it closed.
Structural from_cyclic(const std::vector<int>& cyc) {
  Structural s;
  if (std::find(cyc.begin(), cyc.end(), 0) == cyc.end()) {
    s.closed = true;
    s.chains.push_back(cyc);
    return s;
  }
  s.closed = false;
  const std::size_t k = cyc.size();
  std::size_t first0 = std::find(cyc.begin(), cyc.end(), 0) - cyc.begin();
  std::vector<int> cur;
  for (std::size_t t = 1; t <= k; ++t) {
    int e = cyc[(first0 + t) % k];
    if (e == 0) {
      if (!cur.empty()) s.chains.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(e);
    }
  }
  if (!cur.empty()) s.chains.push_back(std::move(cur));
  return s;
}

}  // namespace

ChainVector normalize(const std::vector<int>& raw, bool closed) {
  for (int e : raw) {
    if (e < 0) fail(Errc::NegativeEntry, "chain vector entries must be non-negative");
    if (closed && e == 0) fail(Errc::ZeroInClosed, "closed chain vectors contain no zeros");
  }
  if (closed && raw.empty()) fail(Errc::ZeroInClosed, "closed chain vector must be non-empty");
  ChainVector cv;
  cv.closed = closed;
  cv.entries = raw;
  return from_structural(to_structural(cv));
}

// ---- forward transitions ----

namespace {

using Transition = std::pair<DteType, ChainVector>;

constexpr DteType T111{1, 1, 1}, T011{0, 1, 1}, T101{1, 0, 1}, T110{1, 1, 0}, T010{0, 1, 0},
    T100{1, 0, 0}, T000{0, 0, 0}, T001{0, 0, 1};

void emit(std::set<Transition>& out, DteType t, const Structural& s) {
  out.insert({t, from_structural(s)});
}

// Replace seq[i..i+len) of an open chain with repl; 0 entries split chains.
void subst_open(std::set<Transition>& out, const Structural& host, std::size_t ci,
                const std::vector<int>& seq, std::size_t i, std::size_t len, DteType t,
                const std::vector<int>& repl) {
  std::vector<int> merged(seq.begin(), seq.begin() + i);
  merged.insert(merged.end(), repl.begin(), repl.end());
  merged.insert(merged.end(), seq.begin() + i + len, seq.end());
  Structural next;
  next.closed = false;
  for (std::size_t j = 0; j < host.chains.size(); ++j)
    if (j != ci) next.chains.push_back(host.chains[j]);
  std::vector<int> cur;
  for (int e : merged) {
    if (e == 0) {
      if (!cur.empty()) next.chains.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(e);
    }
  }
  if (!cur.empty()) next.chains.push_back(cur);
  emit(out, t, next);
}

// Replace the cyclic window seq[i..i+len) with repl.
void subst_closed(std::set<Transition>& out, const std::vector<int>& seq, std::size_t i,
                  std::size_t len, DteType t, const std::vector<int>& repl) {
  const std::size_t k = seq.size();
  std::vector<int> cyc = repl;
  for (std::size_t off = len; off < k; ++off) cyc.push_back(seq[(i + off) % k]);
  emit(out, t, from_cyclic(cyc));
}

std::set<Transition> children_set(const Structural& host) {
  std::set<Transition> out;
  if (host.closed) {
    const auto& c0 = host.chains.at(0);
    const std::size_t k = c0.size();
    if (k == 1) {
      // A single cyclic piece only grows, or splits off a 3-piece.
      int z = c0[0];
      Structural grown;
      grown.closed = true;
      grown.chains.push_back({z + 1});
      emit(out, T000, grown);
      emit(out, T001, grown);
      if (z >= 5) {
        Structural split;
        split.closed = true;
        split.chains.push_back({3, z - 4});
        emit(out, T111, split);
        emit(out, T110, split);
      }
      return out;
    }
    for (int refl = 0; refl < 2; ++refl) {
      std::vector<int> seq = refl ? reversed(c0) : c0;
      for (std::size_t i = 0; i < k; ++i) {
        const int z = seq[i];
        subst_closed(out, seq, i, 1, T000, {z + 1});
        subst_closed(out, seq, i, 1, T001, {z + 1});
        if (z >= 4)
          for (int m = 0; m + 4 <= z; ++m) subst_closed(out, seq, i, 1, T111, {m, 3, z - 4 - m});
        if (z >= 3) {
          subst_closed(out, seq, i, 1, T011, {z - 3, 3});
          subst_closed(out, seq, i, 1, T101, {3, z - 3});
          subst_closed(out, seq, i, 1, T010, {z - 3, 3});
          subst_closed(out, seq, i, 1, T010, {3, z - 3});
        }
        const int z2 = seq[(i + 1) % k];
        if (z >= 2) subst_closed(out, seq, i, 2, T110, {z - 2, 2, 0, z2 - 1});
        if (z == 1) subst_closed(out, seq, i, 2, T100, {2, 0, z2 - 1});
      }
    }
    return out;
  }
  for (std::size_t ci = 0; ci < host.chains.size(); ++ci) {
    for (int refl = 0; refl < 2; ++refl) {
      std::vector<int> seq = refl ? reversed(host.chains[ci]) : host.chains[ci];
      const std::size_t len = seq.size();
      for (std::size_t i = 0; i < len; ++i) {
        const int z = seq[i];
        subst_open(out, host, ci, seq, i, 1, T000, {z + 1});
        subst_open(out, host, ci, seq, i, 1, T001, {z + 1});
        if (z >= 4)
          for (int m = 0; m + 4 <= z; ++m)
            subst_open(out, host, ci, seq, i, 1, T111, {m, 3, z - 4 - m});
        if (z >= 3) {
          subst_open(out, host, ci, seq, i, 1, T011, {z - 3, 3});
          subst_open(out, host, ci, seq, i, 1, T101, {3, z - 3});
        }
        if (i + 1 < len) {
          const int z2 = seq[i + 1];
          if (z >= 2) subst_open(out, host, ci, seq, i, 2, T110, {z - 2, 2, 0, z2 - 1});
          if (z == 1) subst_open(out, host, ci, seq, i, 2, T100, {2, 0, z2 - 1});
        }
        if (i + 1 == len && z >= 2) subst_open(out, host, ci, seq, i, 1, T010, {z - 2, 2});
      }
    }
  }
  return out;
}

}  // namespace

std::vector<std::pair<DteType, ChainVector>> dte_children(const ChainVector& cv) {
  ChainVector n = from_structural(to_structural(cv));
  auto s = children_set(to_structural(n));
  return {s.begin(), s.end()};
}

// ---- inverse transitions ----

namespace {

// Attachment choice: absent, or another chain in one of its orientations.
struct Attach {
  int chain = -1;  // -1 = none
  bool rev = false;
};

std::vector<Attach> attach_options(const Structural& c, std::size_t skip,
                                   int also_skip = -1) {
  std::vector<Attach> opts{{-1, false}};
  for (std::size_t j = 0; j < c.chains.size(); ++j) {
    if (j == skip || static_cast<int>(j) == also_skip) continue;
    opts.push_back({static_cast<int>(j), false});
    if (c.chains[j] != reversed(c.chains[j])) opts.push_back({static_cast<int>(j), true});
  }
  return opts;
}

std::vector<int> attach_seq(const Structural& c, const Attach& a) {
  if (a.chain < 0) return {};
  return a.rev ? reversed(c.chains[a.chain]) : c.chains[a.chain];
}

// Candidate open parents of an open child, before forward filtering.
std::set<Transition> open_parent_candidates(const Structural& child) {
  std::set<Transition> cand;
  const auto& chains = child.chains;

  auto build = [&](std::size_t used1, int used2, std::vector<int> merged_chain, DteType t) {
    Structural p;
    p.closed = false;
    for (std::size_t j = 0; j < chains.size(); ++j)
      if (j != used1 && static_cast<int>(j) != used2) p.chains.push_back(chains[j]);
    if (!merged_chain.empty()) p.chains.push_back(std::move(merged_chain));
    cand.insert({t, from_structural(p)});
  };

  auto concat = [](std::initializer_list<std::vector<int>> parts) {
    std::vector<int> out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
  };

  for (std::size_t ci = 0; ci < chains.size(); ++ci) {
    for (int refl = 0; refl < 2; ++refl) {
      std::vector<int> X = refl ? reversed(chains[ci]) : chains[ci];
      const std::size_t len = X.size();
      for (std::size_t j = 0; j < len; ++j) {
        const int e = X[j];
        auto pre = [&](std::size_t upto) { return std::vector<int>(X.begin(), X.begin() + upto); };
        auto post = [&](std::size_t from) { return std::vector<int>(X.begin() + from, X.end()); };

        if (e >= 2) {
          std::vector<int> dec = X;
          dec[j] = e - 1;
          build(ci, -1, dec, T000);
          build(ci, -1, dec, T001);
        }

        if (e == 3) {
          // grow-by-three inverses
          if (j >= 1) {
            build(ci, -1, concat({pre(j - 1), {X[j - 1] + 3}, post(j + 1)}), T011);
          } else {
            for (const auto& a : attach_options(child, ci))
              build(ci, a.chain, concat({attach_seq(child, a), {3}, post(1)}), T011);
          }
          if (j + 1 < len) {
            build(ci, -1, concat({pre(j), {X[j + 1] + 3}, post(j + 2)}), T101);
          } else {
            for (const auto& a : attach_options(child, ci))
              build(ci, a.chain, concat({pre(j), {3}, attach_seq(child, a)}), T101);
          }
          // bundle inverses
          if (j >= 1 && j + 1 < len)
            build(ci, -1, concat({pre(j - 1), {X[j - 1] + X[j + 1] + 4}, post(j + 2)}), T111);
          if (j >= 1 && j + 1 == len)
            for (const auto& a : attach_options(child, ci))
              build(ci, a.chain, concat({pre(j - 1), {X[j - 1] + 4}, attach_seq(child, a)}), T111);
          if (j == 0 && len >= 2)
            for (const auto& a : attach_options(child, ci))
              build(ci, a.chain, concat({attach_seq(child, a), {X[1] + 4}, post(2)}), T111);
          if (len == 1)
            for (const auto& a : attach_options(child, ci))
              for (const auto& b : attach_options(child, ci, a.chain)) {
                Structural p;
                p.closed = false;
                for (std::size_t q = 0; q < chains.size(); ++q)
                  if (q != ci && static_cast<int>(q) != a.chain && static_cast<int>(q) != b.chain)
                    p.chains.push_back(chains[q]);
                p.chains.push_back(
                    concat({attach_seq(child, a), {4}, attach_seq(child, b)}));
                cand.insert({T111, from_structural(p)});
              }
        }

        if (e == 2 && j + 1 == len) {
          // inverses that re-join the break after a trailing 2
          auto n_options = [&](int exclude) {
            // (n value, tail, consumed chain)
            std::vector<std::tuple<int, std::vector<int>, int>> opts;
            opts.emplace_back(0, std::vector<int>{}, -1);
            for (const auto& a : attach_options(child, ci, exclude)) {
              if (a.chain < 0) continue;
              auto g = attach_seq(child, a);
              opts.emplace_back(0, g, a.chain);
              opts.emplace_back(g[0], std::vector<int>(g.begin() + 1, g.end()), a.chain);
            }
            return opts;
          };
          if (j >= 1) {
            for (auto& [n, tail, used] : n_options(-1))
              build(ci, used, concat({pre(j - 1), {X[j - 1] + 2, n + 1}, tail}), T110);
          } else {
            for (const auto& a : attach_options(child, ci))
              for (auto& [n, tail, used] : n_options(a.chain)) {
                Structural p;
                p.closed = false;
                for (std::size_t q = 0; q < chains.size(); ++q)
                  if (q != ci && static_cast<int>(q) != a.chain && static_cast<int>(q) != used)
                    p.chains.push_back(chains[q]);
                p.chains.push_back(concat({attach_seq(child, a), {2, n + 1}, tail}));
                cand.insert({T110, from_structural(p)});
              }
          }
          for (auto& [n, tail, used] : n_options(-1))
            build(ci, used, concat({pre(j), {1, n + 1}, tail}), T100);
          if (j >= 1) {
            build(ci, -1, concat({pre(j - 1), {X[j - 1] + 2}}), T010);
          } else {
            for (const auto& a : attach_options(child, ci))
              build(ci, a.chain, concat({attach_seq(child, a), {2}}), T010);
          }
        }
      }
    }
  }
  return cand;
}

// Reverse index over all closed vectors up to a sum bound; rebuilt lazily.
class ClosedParentIndex {
 public:
  std::vector<Transition> parents_of(const ChainVector& child, int need_sum) {
    std::scoped_lock lock(mu_);
    ensure(need_sum);
    auto it = rev_.find(child);
    if (it == rev_.end()) return {};
    return it->second;
  }

 private:
  void ensure(int s) {
    for (int t = built_ + 1; t <= s; ++t) {
      for (const auto& w : closed_of_sum(t)) {
        Structural host;
        host.closed = true;
        host.chains.push_back(w.entries);
        for (const auto& [ty, ch] : children_set(host)) rev_[ch].emplace_back(ty, w);
      }
    }
    built_ = std::max(built_, s);
  }

  static std::vector<ChainVector> closed_of_sum(int s) {
    std::set<ChainVector> out;
    // compositions of s, deduped up to rotation/reflection
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int rem) {
      if (rem == 0) {
        ChainVector cv;
        cv.closed = true;
        cv.entries = cyclic_least(cur);
        out.insert(cv);
        return;
      }
      for (int e = 1; e <= rem; ++e) {
        cur.push_back(e);
        rec(rem - e);
        cur.pop_back();
      }
    };
    if (s >= 1) rec(s);
    return {out.begin(), out.end()};
  }

  std::mutex mu_;
  int built_ = 0;
  std::map<ChainVector, std::vector<Transition>> rev_;
};

ClosedParentIndex& closed_index() {
  static ClosedParentIndex idx;
  return idx;
}

}  // namespace

std::vector<std::pair<DteType, ChainVector>> dtr_parents(const ChainVector& cv) {
  ChainVector child = from_structural(to_structural(cv));
  std::set<Transition> out;
  if (!child.closed) {
    for (const auto& [t, p] : open_parent_candidates(to_structural(child))) {
      auto kids = children_set(to_structural(p));
      if (kids.count({t, child})) out.insert({t, p});
    }
  }
  for (const auto& tp : closed_index().parents_of(child, child.sum() + 1)) out.insert(tp);
  return {out.begin(), out.end()};
}

CvOutcome classify_outcome(const ChainVector& cv) {
  ChainVector n = from_structural(to_structural(cv));
  Structural s = to_structural(n);
  if (n.closed && s.chains.at(0).size() == 1) return {CvTag::ClosedSingle};
  // Closed chains with a short piece next to everything: (m,1), (m,1,1), (m,2)
  if (n.closed) {
    const auto& c = s.chains.at(0);
    auto matches = [&](std::vector<int> pat) {
      // pat's first entry is the wildcard m >= 2
      if (c.size() != pat.size()) return false;
      std::vector<int> sorted_c = c;
      std::sort(sorted_c.begin(), sorted_c.end());
      std::sort(pat.begin() + 1, pat.end());
      // try every entry of c as m
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] < 2) continue;
        std::vector<int> rest;
        for (std::size_t j = 0; j < c.size(); ++j)
          if (j != i) rest.push_back(c[j]);
        std::sort(rest.begin(), rest.end());
        if (rest == std::vector<int>(pat.begin() + 1, pat.end())) return true;
      }
      return false;
    };
    if (matches({-1, 1}) || matches({-1, 1, 1}) || matches({-1, 2})) return {CvTag::UnrealizableLemma};
  }
  bool any_ge2 = false;
  for (int e : n.entries) any_ge2 |= (e >= 2);
  if (!any_ge2) return {CvTag::Invalid};
  return {CvTag::Candidate};
}

// ---- closure ----

namespace {

const ChainVector& target_33() {
  static const ChainVector t = normalize({3, 3}, true);
  return t;
}

std::string cv_json(const ChainVector& cv) {
  std::ostringstream os;
  os << "{\"entries\":[";
  for (std::size_t i = 0; i < cv.entries.size(); ++i) {
    if (i) os << ',';
    os << cv.entries[i];
  }
  os << "],\"closed\":" << (cv.closed ? "true" : "false") << "}";
  return os.str();
}

}  // namespace

ClosureResult dtr_closure(const ChainVector& start, int max_sum) {
  ClosureResult res;
  res.start = from_structural(to_structural(start));
  res.max_sum = max_sum;
  res.saturated = true;
  std::set<ChainVector> visited;
  std::deque<ChainVector> queue;
  visited.insert(res.start);
  queue.push_back(res.start);
  while (!queue.empty()) {
    ChainVector cur = queue.front();
    queue.pop_front();
    if (cur == target_33()) {
      res.reached_target = true;
      continue;
    }
    CvOutcome out = classify_outcome(cur);
    if (out.tag == CvTag::UnrealizableLemma || out.tag == CvTag::Invalid) continue;
    for (const auto& [t, p] : dtr_parents(cur)) {
      if (visited.count(p)) continue;
      if (p.sum() > max_sum) {
        res.saturated = false;
        continue;
      }
      visited.insert(p);
      queue.push_back(p);
    }
  }
  res.closure.assign(visited.begin(), visited.end());
  return res;
}

std::string ClosureResult::to_json() const {
  std::ostringstream os;
  os << "{\"start\":" << cv_json(start) << ",\"max_sum\":" << max_sum
     << ",\"reached_target\":" << (reached_target ? "true" : "false")
     << ",\"saturated\":" << (saturated ? "true" : "false") << ",\"closure\":[";
  for (std::size_t i = 0; i < closure.size(); ++i) {
    if (i) os << ',';
    os << cv_json(closure[i]);
  }
  os << "]}";
  return os.str();
}

TheoremReport verify_min_triangle_theorem(int max_sum) {
  TheoremReport rep;
  rep.ok = true;
  for (const auto& raw : std::vector<std::vector<int>>{{2, 0}, {2, 1, 0}, {2, 0, 1, 0}, {3, 0}}) {
    ClosureResult r = dtr_closure(normalize(raw, false), max_sum);
    rep.ok = rep.ok && r.saturated && !r.reached_target;
    rep.runs.push_back(std::move(r));
  }
  return rep;
}

std::string TheoremReport::to_json() const {
  std::ostringstream os;
  os << "{\"ok\":" << (ok ? "true" : "false") << ",\"runs\":[";
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (i) os << ',';
    os << runs[i].to_json();
  }
  os << "]}";
  return os.str();
}

// ---- universe enumeration ----

namespace {

// Orientation-canonical chains (compositions up to reversal), grouped by sum.
std::vector<std::vector<std::vector<int>>> chains_by_sum(int max_sum) {
  std::vector<std::set<std::vector<int>>> sets(max_sum + 1);
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rem, int total) {
    if (!cur.empty()) sets[total].insert(orient_greatest(cur));
    if (rem == 0) return;
    for (int e = 1; e <= rem; ++e) {
      cur.push_back(e);
      rec(rem - e, total + e);
      cur.pop_back();
    }
  };
  rec(max_sum, 0);
  std::vector<std::vector<std::vector<int>>> out(max_sum + 1);
  for (int s = 0; s <= max_sum; ++s) out[s] = {sets[s].begin(), sets[s].end()};
  return out;
}

}  // namespace

std::vector<ChainVector> all_open_vectors(int max_sum) {
  auto chains = chains_by_sum(max_sum);
  std::set<ChainVector> out;
  std::vector<std::vector<int>> acc;
  std::function<void(int)> rec = [&](int rem) {
    Structural s;
    s.closed = false;
    s.chains = acc;
    out.insert(from_structural(s));
    for (int t = 1; t <= rem; ++t)
      for (const auto& c : chains[t]) {
        acc.push_back(c);
        rec(rem - t);
        acc.pop_back();
      }
  };
  rec(max_sum);
  return {out.begin(), out.end()};
}

std::vector<ChainVector> all_closed_vectors(int max_sum) {
  std::set<ChainVector> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int rem) {
    if (!cur.empty()) {
      ChainVector cv;
      cv.closed = true;
      cv.entries = cyclic_least(cur);
      out.insert(cv);
    }
    if (rem == 0) return;
    for (int e = 1; e <= rem; ++e) {
      cur.push_back(e);
      rec(rem - e);
      cur.pop_back();
    }
  };
  rec(max_sum);
  return {out.begin(), out.end()};
}

}  // namespace dtdesc
