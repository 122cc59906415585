#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "cob_edge.hpp"
#include "cob_tri.hpp"
#include "filtration.hpp"
#include "types.hpp"

namespace vrph {

// --- stage policies: what owns a column and what its lows are ---

// H1*: edge columns, triangle lows
struct edge_stage {
  using gen_t = edge_t;
  using phi_t = phi_edge;
  static phi_t smallest(const filtration& f, gen_t g) { return find_smallest_t(f, g); }
  static void next(const filtration& f, phi_t& p) { find_next_t(f, p); }
  static phi_t geq(const filtration& f, gen_t g, paired_index d) {
    return find_geq_t(f, g, d);
  }
  static gen_t gen(const phi_t& p) { return p.e; }
  static std::uint64_t key(gen_t g) { return g; }
  // the edge that would close a trivial pair with low d
  static gen_t partner(const filtration&, paired_index d) { return d.primary; }
  static bool partner_minimal(const filtration& f, paired_index d) {
    return f.min_cob[d.primary] == d;
  }
};

// H2*: triangle columns, tetrahedron lows
struct tri_stage {
  using gen_t = paired_index;
  using phi_t = phi_tri;
  static phi_t smallest(const filtration& f, gen_t g) { return find_smallest_h(f, g); }
  static void next(const filtration& f, phi_t& p) { find_next_h(f, p); }
  static phi_t geq(const filtration& f, gen_t g, paired_index d) {
    return find_geq_h(f, g, d);
  }
  static gen_t gen(const phi_t& p) { return p.t; }
  static std::uint64_t key(gen_t g) { return g.key(); }
  // greatest boundary triangle of the tetrahedron d (edge endpoints keep u < v)
  static gen_t partner(const filtration& f, paired_index d) {
    return {d.primary, f.edge_v[d.secondary]};
  }
  static bool partner_minimal(const filtration& f, paired_index d) {
    return find_smallest_h(f, partner(f, d)).cur == d;
  }
};

// --- committed state ---

template <class G>
struct pair_store { // death low -> birth generator, injective both ways
  std::unordered_map<std::uint64_t, G> m;

  const G* find(paired_index low) const {
    auto it = m.find(low.key());
    return it == m.end() ? nullptr : &it->second;
  }
  void insert(paired_index low, G birth) { m.emplace(low.key(), birth); }
  std::size_t size() const { return m.size(); }
};

template <class S>
struct ops_store { // generator -> generators merged into its column; empty lists not kept
  using G = typename S::gen_t;
  std::unordered_map<std::uint64_t, std::vector<G>> m;

  const std::vector<G>& ops(G g) const {
    static const std::vector<G> none;
    auto it = m.find(S::key(g));
    return it == m.end() ? none : it->second;
  }
  void insert(G g, std::vector<G>&& v) {
    if (!v.empty()) m.emplace(S::key(g), std::move(v));
  }
};

// sort and drop even-multiplicity runs; mod-2 net content of a merge history
template <class G>
void compact_parity(std::vector<G>& gens) {
  std::sort(gens.begin(), gens.end());
  std::size_t out = 0, i = 0;
  while (i < gens.size()) {
    std::size_t j = i;
    while (j < gens.size() && gens[j] == gens[i]) ++j;
    if ((j - i) & 1) gens[out++] = gens[i];
    i = j;
  }
  gens.resize(out);
}

// --- fast implicit column ---
//
// A hash table keyed by the primary key of each tracked coboundary position.
// Only the bucket of the smallest (active) key is kept sorted, by (secondary,
// generator); the scan over it cancels matching adjacent entries, advances
// flagged cursors past settled positions, and stops at the first odd-parity
// value, which is the column's current low.
template <class S>
class fast_column {
 public:
  using gen_t = typename S::gen_t;
  using phi_t = typename S::phi_t;

  struct entry {
    phi_t phi;
    bool fn; // next-advance still pending for this cursor
  };

  void reset(gen_t owner, const phi_t& first) {
    for (const auto& ks : keys_) {
      pool_[ks.second].clear();
      free_.push_back(ks.second);
    }
    keys_.clear();
    if (active_ != no_edge) {
      pool_[aslot_].clear();
      free_.push_back(aslot_);
    }
    gens_.clear();
    owner_ = owner;
    active_ = first.cur.primary;
    aslot_ = alloc_slot();
    pool_[aslot_].push_back({first, true});
    hs_ = 0;
    coeff_ = 1;
    low_ = first.cur;
    state_ = st::at_low;
    peak_keys_ = 1;
  }

  gen_t owner() const { return owner_; }

  paired_index low(const filtration& f) {
    if (state_ == st::at_low) return low_;
    if (state_ == st::zero) return paired_index::none();
    if (!low_.is_none()) {
      // merges only add entries at or past the settled low, so resume at the
      // head of its secondary-key group; everything before it carries even
      // parity and spent flags
      auto& items = pool_[aslot_];
      auto it = std::lower_bound(items.begin(), items.end(), low_.secondary,
                                 [](const entry& x, std::uint32_t s) {
                                   return x.phi.cur.secondary < s;
                                 });
      hs_ = std::uint32_t(it - items.begin());
      coeff_ = 1;
    }
    scan(f);
    return state_ == st::zero ? paired_index::none() : low_;
  }

  void merge_trivial(const filtration& f, gen_t partner) {
    gens_.push_back(partner);
    phi_t p = S::geq(f, partner, low_);
    insert_entry({p, true});
    state_ = st::dirty;
  }

  void merge_stored(const filtration& f, gen_t birth, const std::vector<gen_t>& ops) {
    gens_.push_back(birth);
    phi_t p = S::geq(f, birth, low_);
    if (!p.exhausted()) insert_entry({p, true});
    for (const gen_t& g : ops) {
      gens_.push_back(g);
      phi_t q = S::geq(f, g, low_);
      if (!q.exhausted()) insert_entry({q, true});
    }
    state_ = st::dirty;
  }

  // copy a batch peer settled at the same low; its cursors are already in
  // place, so no repositioning is needed
  void absorb(const fast_column& donor) {
    const auto& ditems = donor.pool_[donor.aslot_];
    for (std::size_t i = donor.hs_; i < ditems.size(); ++i) insert_entry(ditems[i]);
    for (const auto& ks : donor.keys_)
      for (const entry& e : donor.pool_[ks.second]) insert_entry(e);
    gens_.push_back(donor.owner_);
    gens_.insert(gens_.end(), donor.gens_.begin(), donor.gens_.end());
    state_ = st::dirty;
  }

  std::vector<gen_t> take_ops() {
    compact_parity(gens_);
    return std::move(gens_);
  }

  // test hook (spec op hash_insert); engine inserts never precede the low
  void hash_insert(const phi_t& p, bool fn = true) {
    insert_entry({p, fn});
    state_ = st::dirty;
  }

  std::size_t live_keys() const { return keys_.size() + (active_ != no_edge ? 1 : 0); }
  std::size_t allocated_buckets() const { return pool_.size(); }
  std::size_t peak_live_keys() const { return peak_keys_; }

 private:
  enum class st { at_low, dirty, zero };

  std::vector<std::pair<std::uint32_t, std::uint32_t>> keys_; // non-active (primary, slot)
  std::vector<std::vector<entry>> pool_;
  std::vector<std::uint32_t> free_;
  std::uint32_t active_ = no_edge;
  std::uint32_t aslot_ = 0;
  std::uint32_t hs_ = 0;
  int coeff_ = 1;
  paired_index low_ = paired_index::none();
  st state_ = st::zero;
  std::vector<gen_t> gens_;
  gen_t owner_{};
  std::size_t peak_keys_ = 0;

  std::uint32_t alloc_slot() {
    if (!free_.empty()) {
      std::uint32_t s = free_.back();
      free_.pop_back();
      return s;
    }
    pool_.emplace_back();
    return std::uint32_t(pool_.size() - 1);
  }

  static bool entry_less(const entry& x, const entry& y) {
    if (x.phi.cur.secondary != y.phi.cur.secondary)
      return x.phi.cur.secondary < y.phi.cur.secondary;
    return S::gen(x.phi) < S::gen(y.phi);
  }

  void insert_entry(const entry& e) {
    std::uint32_t prim = e.phi.cur.primary;
    if (prim == active_) {
      auto& items = pool_[aslot_];
      items.insert(std::upper_bound(items.begin(), items.end(), e, entry_less), e);
      return;
    }
    for (auto& [p, slot] : keys_)
      if (p == prim) {
        pool_[slot].push_back(e);
        return;
      }
    std::uint32_t slot = alloc_slot();
    keys_.emplace_back(prim, slot);
    pool_[slot].push_back(e);
    peak_keys_ = std::max(peak_keys_, live_keys());
  }

  void promote_min() {
    std::size_t mi = 0;
    for (std::size_t i = 1; i < keys_.size(); ++i)
      if (keys_[i].first < keys_[mi].first) mi = i;
    active_ = keys_[mi].first;
    aslot_ = keys_[mi].second;
    keys_[mi] = keys_.back();
    keys_.pop_back();
    auto& items = pool_[aslot_];
    std::sort(items.begin(), items.end(), entry_less);
    hs_ = 0;
    coeff_ = 1;
  }

  void advance_flagged(const filtration& f, std::uint32_t idx) {
    auto& items = pool_[aslot_];
    if (!items[idx].fn) return;
    items[idx].fn = false;
    phi_t p = items[idx].phi;
    S::next(f, p);
    if (!p.exhausted()) insert_entry({p, true});
  }

  void scan(const filtration& f) {
    for (;;) {
      if (active_ == no_edge) {
        if (keys_.empty()) {
          state_ = st::zero;
          low_ = paired_index::none();
          return;
        }
        promote_min();
      }
      auto* items = &pool_[aslot_];
      if (hs_ + 1 == items->size()) {
        if (coeff_ == 1) {
          low_ = {active_, (*items)[hs_].phi.cur.secondary};
          state_ = st::at_low;
          return;
        }
        advance_flagged(f, hs_);
        items = &pool_[aslot_];
        if (hs_ + 1 < items->size()) continue; // the advance landed here
        items->clear();
        free_.push_back(aslot_);
        active_ = no_edge;
        continue;
      }
      std::uint32_t s0 = (*items)[hs_].phi.cur.secondary;
      std::uint32_t s1 = (*items)[hs_ + 1].phi.cur.secondary;
      if (s0 == s1) {
        coeff_ ^= 1;
        entry& c0 = (*items)[hs_];
        entry& c1 = (*items)[hs_ + 1];
        if (c0.fn && c1.fn && S::gen(c0.phi) == S::gen(c1.phi))
          c0.fn = c1.fn = false; // equal cursors: the remaining tails cancel
        advance_flagged(f, hs_);
        ++hs_;
      } else {
        if (coeff_ == 1) {
          low_ = {active_, s0};
          state_ = st::at_low;
          return;
        }
        advance_flagged(f, hs_);
        coeff_ = 1;
        ++hs_;
      }
    }
  }
};

// --- implicit row variant ---
//
// One flat cursor list; every step rescans it, tracking the minimum with a
// <n_e, 0> upper bound and its mod-2 coefficient. Kept as the slower
// cross-check engine.
template <class S>
class row_column {
 public:
  using gen_t = typename S::gen_t;
  using phi_t = typename S::phi_t;

  void reset(gen_t owner, const phi_t& first) {
    items_.clear();
    gens_.clear();
    owner_ = owner;
    items_.push_back(first);
    low_ = first.cur;
    state_ = st::at_low;
  }

  gen_t owner() const { return owner_; }

  paired_index low(const filtration& f) {
    if (state_ == st::at_low) return low_;
    if (state_ == st::zero) return paired_index::none();
    paired_index bound = paired_index::max_bound(f.n_edges());
    for (;;) {
      paired_index delta = bound;
      int coeff = 0;
      for (phi_t& p : items_) {
        if (!p.exhausted() && p.cur == low_) S::next(f, p); // settled positions advance
        if (p.exhausted()) continue;
        if (p.cur < delta) {
          delta = p.cur;
          coeff = 1;
        } else if (p.cur == delta) {
          coeff ^= 1;
        }
      }
      if (delta == bound) {
        state_ = st::zero;
        low_ = paired_index::none();
        return low_;
      }
      low_ = delta;
      if (coeff == 1) {
        state_ = st::at_low;
        return low_;
      }
    }
  }

  void merge_trivial(const filtration& f, gen_t partner) {
    gens_.push_back(partner);
    items_.push_back(S::geq(f, partner, low_));
    state_ = st::dirty;
  }

  void merge_stored(const filtration& f, gen_t birth, const std::vector<gen_t>& ops) {
    gens_.push_back(birth);
    phi_t p = S::geq(f, birth, low_);
    if (!p.exhausted()) items_.push_back(p);
    for (const gen_t& g : ops) {
      gens_.push_back(g);
      phi_t q = S::geq(f, g, low_);
      if (!q.exhausted()) items_.push_back(q);
    }
    state_ = st::dirty;
  }

  void absorb(const row_column& donor) {
    for (const phi_t& p : donor.items_)
      if (!p.exhausted()) items_.push_back(p);
    gens_.push_back(donor.owner_);
    gens_.insert(gens_.end(), donor.gens_.begin(), donor.gens_.end());
    state_ = st::dirty;
  }

  std::vector<gen_t> take_ops() {
    compact_parity(gens_);
    return std::move(gens_);
  }

 private:
  enum class st { at_low, dirty, zero };

  std::vector<phi_t> items_;
  paired_index low_ = paired_index::none();
  st state_ = st::zero;
  std::vector<gen_t> gens_;
  gen_t owner_{};
};

// --- reduction against committed state ---

enum class stop_kind { zero, trivial_self, settled };

// merge trivial partners and stored pairs into the column until its low
// matches neither; trivial pairs are checked first
template <class S, class Col>
stop_kind reduce_vs_committed(const filtration& f, Col& col,
                              const pair_store<typename S::gen_t>& pairs,
                              const ops_store<S>& ops) {
  for (;;) {
    paired_index d = col.low(f);
    if (d.is_none()) return stop_kind::zero;
    if (S::partner_minimal(f, d)) {
      typename S::gen_t partner = S::partner(f, d);
      if (partner == col.owner()) return stop_kind::trivial_self;
      col.merge_trivial(f, partner);
      continue;
    }
    if (const typename S::gen_t* birth = pairs.find(d)) {
      col.merge_stored(f, *birth, ops.ops(*birth));
      continue;
    }
    return stop_kind::settled;
  }
}

template <class S>
struct reduce_outcome {
  enum kind { zero, trivial, paired } k;
  paired_index low;                      // death simplex unless zero
  std::vector<typename S::gen_t> ops;    // merge history, paired outcomes only
};

// single-column reduction against committed state only; does not commit
template <class S, class Col>
reduce_outcome<S> reduce_one(const filtration& f, typename S::gen_t g,
                             const pair_store<typename S::gen_t>& pairs,
                             const ops_store<S>& ops) {
  typename S::phi_t first = S::smallest(f, g);
  if (first.exhausted()) return {reduce_outcome<S>::zero, paired_index::none(), {}};
  Col col;
  col.reset(g, first);
  switch (reduce_vs_committed<S>(f, col, pairs, ops)) {
    case stop_kind::zero: return {reduce_outcome<S>::zero, paired_index::none(), {}};
    case stop_kind::trivial_self: return {reduce_outcome<S>::trivial, col.low(f), {}};
    case stop_kind::settled: break;
  }
  return {reduce_outcome<S>::paired, col.low(f), col.take_ops()};
}

} // namespace vrph
