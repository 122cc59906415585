#include "vrph/parallel.hpp"

#include <algorithm>

namespace vrph {

thread_pool::thread_pool(unsigned threads) : nthreads_(threads ? threads : 1) {
  workers_.reserve(nthreads_ - 1);
  for (unsigned i = 1; i < nthreads_; ++i)
    workers_.emplace_back([this, i] { worker(i); });
}

thread_pool::~thread_pool() {
  {
    std::lock_guard<std::mutex> lk(mu_);
    stop_ = true;
    ++gen_;
  }
  cv_.notify_all();
  for (std::thread& t : workers_) t.join();
}

void thread_pool::chunk(unsigned idx) {
  std::size_t per = (njobs_ + nthreads_ - 1) / nthreads_;
  std::size_t b = std::min(njobs_, idx * per);
  std::size_t e = std::min(njobs_, b + per);
  for (std::size_t j = b; j < e; ++j) (*fn_)(j);
}

void thread_pool::worker(unsigned idx) {
  std::uint64_t seen = 0;
  for (;;) {
    std::unique_lock<std::mutex> lk(mu_);
    cv_.wait(lk, [&] { return gen_ != seen; });
    seen = gen_;
    if (stop_) return;
    lk.unlock();
    chunk(idx);
    lk.lock();
    if (--pending_ == 0) done_cv_.notify_one();
  }
}

void thread_pool::run(std::size_t njobs, const std::function<void(std::size_t)>& fn) {
  if (njobs == 0) return;
  if (workers_.empty()) {
    for (std::size_t j = 0; j < njobs; ++j) fn(j);
    return;
  }
  {
    std::lock_guard<std::mutex> lk(mu_);
    fn_ = &fn;
    njobs_ = njobs;
    pending_ = unsigned(workers_.size());
    ++gen_;
  }
  cv_.notify_all();
  chunk(0);
  std::unique_lock<std::mutex> lk(mu_);
  done_cv_.wait(lk, [this] { return pending_ == 0; });
  fn_ = nullptr;
}

} // namespace vrph
