#pragma once

#include <condition_variable>
#include <cstdint>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

#include "reduce.hpp"

namespace vrph {

// Fixed pool created once per computation. run() executes fn(0..njobs) with
// static contiguous chunks, one per thread, and blocks until all finish; the
// calling thread works too. Shared state written before run() is visible to
// workers, and their writes are visible after run() returns.
class thread_pool {
 public:
  explicit thread_pool(unsigned threads);
  ~thread_pool();

  thread_pool(const thread_pool&) = delete;
  thread_pool& operator=(const thread_pool&) = delete;

  unsigned size() const { return nthreads_; }
  void run(std::size_t njobs, const std::function<void(std::size_t)>& fn);

 private:
  void worker(unsigned idx);
  void chunk(unsigned idx);

  unsigned nthreads_;
  std::vector<std::thread> workers_;
  std::mutex mu_;
  std::condition_variable cv_, done_cv_;
  const std::function<void(std::size_t)>* fn_ = nullptr;
  std::size_t njobs_ = 0;
  unsigned pending_ = 0;
  std::uint64_t gen_ = 0;
  bool stop_ = false;
};

// Batch entry states, one per scheduler flag combination: active = completely
// reduced this round (f_a), zero = column vanished (f_e), trivial_self =
// reduced onto its own trivial pair (f_a with the pair known a priori),
// pending_trivial / pending_stored = the serial phase saw the low match a
// trivial pair or stored pair (f_v / f_r); the merge itself waits for the
// next round. waiting = blocked behind an unresolved earlier entry.
enum class batch_state : std::uint8_t {
  active,
  zero,
  trivial_self,
  pending_trivial,
  pending_stored,
  waiting,
};

template <class S, class Col>
struct batch_entry {
  typename S::gen_t owner;
  Col col;
  paired_index low = paired_index::none(); // cached after each phase
  batch_state state = batch_state::waiting;
};

// Round-based reduction of a descending generator stream.
//
// Stream::next(gen&) yields generators in decreasing filtration order with
// cleared ones already skipped. Sink receives exactly one call per generator:
// on_zero for vanished columns, on_trivial(owner, death) for trivial pairs,
// on_pair(owner, death) for stored pairs. Pair and ops stores are mutated
// only by clearance, between phases.
template <class S, class Col, class Stream, class Sink>
class batch_reducer {
 public:
  using gen_t = typename S::gen_t;

  batch_reducer(const filtration& f, thread_pool& pool, std::size_t batch_size,
                Stream& stream, Sink& sink, pair_store<gen_t>& pairs,
                ops_store<S>& ops)
      : f_(f), pool_(pool), cap_(batch_size ? batch_size : 1), stream_(stream),
        sink_(sink), pairs_(pairs), ops_(ops) {}

  void run() {
    refill();
    while (!batch_.empty()) {
      parallel_phase();
      serial_phase();
      clearance();
      refill();
    }
  }

 private:
  using entry = batch_entry<S, Col>;

  const filtration& f_;
  thread_pool& pool_;
  std::size_t cap_;
  Stream& stream_;
  Sink& sink_;
  pair_store<gen_t>& pairs_;
  ops_store<S>& ops_;
  std::vector<entry> batch_;

  // columns whose first coboundary is empty vanish without a batch slot
  void refill() {
    gen_t g;
    while (batch_.size() < cap_ && stream_.next(g)) {
      typename S::phi_t first = S::smallest(f_, g);
      if (first.exhausted()) {
        sink_.on_zero(g);
        continue;
      }
      entry& e = batch_.emplace_back();
      e.owner = g;
      e.col.reset(g, first);
      e.low = first.cur;
      e.state = batch_state::waiting;
    }
  }

  // every surviving entry continues against the frozen committed state;
  // entries never observe each other
  void parallel_phase() {
    pool_.run(batch_.size(), [this](std::size_t i) {
      entry& e = batch_[i];
      switch (reduce_vs_committed<S>(f_, e.col, pairs_, ops_)) {
        case stop_kind::zero:
          e.state = batch_state::zero;
          e.low = paired_index::none();
          break;
        case stop_kind::trivial_self:
          e.state = batch_state::trivial_self;
          e.low = e.col.low(f_);
          break;
        case stop_kind::settled:
          e.state = batch_state::active;
          e.low = e.col.low(f_);
          break;
      }
    });
  }

  // resolve equal lows inside the batch, earliest entry keeping the pair;
  // merges into committed state are only flagged here, not performed
  void serial_phase() {
    for (std::size_t i = 0; i < batch_.size(); ++i) {
      entry& ei = batch_[i];
      if (ei.state != batch_state::active) continue;
      std::size_t j = 0;
      while (j < i) {
        entry& ej = batch_[j];
        if (ej.state == batch_state::zero || ej.low > ei.low) {
          ++j;
          continue;
        }
        if (ej.state != batch_state::active && ej.state != batch_state::trivial_self) {
          // an unresolved earlier entry at or below this low may still rise
          // to it; nothing here can be settled until it resolves
          ei.state = batch_state::waiting;
          break;
        }
        if (ej.low != ei.low) { // settled strictly below: never collides
          ++j;
          continue;
        }
        ei.col.absorb(ej.col);
        paired_index d = ei.col.low(f_);
        ei.low = d;
        if (d.is_none()) {
          ei.state = batch_state::zero;
          break;
        }
        if (S::partner_minimal(f_, d)) {
          ei.state = batch_state::pending_trivial;
          break;
        }
        if (pairs_.find(d)) {
          ei.state = batch_state::pending_stored;
          break;
        }
        j = 0; // fresh low: it may collide with any earlier entry
      }
    }
  }

  // commit resolved entries in batch order, keep the rest in order
  void clearance() {
    std::size_t out = 0;
    for (std::size_t i = 0; i < batch_.size(); ++i) {
      entry& e = batch_[i];
      switch (e.state) {
        case batch_state::zero:
          sink_.on_zero(e.owner);
          continue;
        case batch_state::trivial_self:
          sink_.on_trivial(e.owner, e.low);
          continue;
        case batch_state::active:
          pairs_.insert(e.low, e.owner);
          ops_.insert(e.owner, e.col.take_ops());
          sink_.on_pair(e.owner, e.low);
          continue;
        default:
          break;
      }
      if (out != i) batch_[out] = std::move(e);
      ++out;
    }
    batch_.resize(out);
  }
};

} // namespace vrph
