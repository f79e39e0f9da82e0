#include "sinkloc/subsets.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <thread>

namespace sinkloc {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(acc);
}

CombinationCursor::CombinationCursor(std::size_t n, std::size_t k) : n_(n), indices_(k), valid_(k <= n) {
  std::iota(indices_.begin(), indices_.end(), std::size_t{0});
}

void CombinationCursor::advance() {
  const std::size_t k = indices_.size();
  std::size_t i = k;
  while (i > 0 && indices_[i - 1] == n_ - k + i - 1) --i;
  if (i == 0) {
    valid_ = false;
    return;
  }
  ++indices_[i - 1];
  for (std::size_t j = i; j < k; ++j) indices_[j] = indices_[j - 1] + 1;
}

SubsetStream::SubsetStream(std::vector<Position> candidates, std::size_t k)
    : candidates_(std::move(candidates)),
      k_(std::min(k, candidates_.size())),
      cursor_(candidates_.size(), k_) {}

std::optional<SinkSet> SubsetStream::next() {
  if (!cursor_.valid() || k_ == 0) return std::nullopt;
  std::vector<Position> chosen;
  chosen.reserve(k_);
  for (std::size_t i : cursor_.current()) chosen.push_back(candidates_[i]);
  cursor_.advance();
  return SinkSet(std::move(chosen));
}

namespace {

struct Best {
  EvaluationResult time = EvaluationResult::infeasible();
  std::uint64_t sequence = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::size_t> indices;
  std::uint64_t evaluated = 0;

  bool improves(EvaluationResult t, std::uint64_t seq) const {
    return t < time || (t == time && seq < sequence);
  }
};

}  // namespace

SubsetSearchResult search_subsets(const DynamicNetwork& network, std::span<const Position> candidates,
                                  std::size_t k, const SubsetSearchOptions& options) {
  const std::size_t size = std::min(k, candidates.size());
  SubsetSearchResult result;
  if (size == 0) {
    // No place for a sink; only a supply-free network is evacuated.
    if (network.total_supply() == 0) result.time = EvaluationResult::time(0);
    return result;
  }

  const unsigned workers = std::max(1u, options.parallelism);
  std::vector<Best> partial(workers);
  std::atomic<bool> done{false};

  auto work = [&](unsigned worker) {
    Best& best = partial[worker];
    std::vector<Position> chosen(size);
    std::uint64_t seq = 0;
    for (CombinationCursor cursor(candidates.size(), size); cursor.valid(); cursor.advance(), ++seq) {
      if (seq % workers != worker) continue;
      if (done.load(std::memory_order_relaxed)) return;
      const auto& idx = cursor.current();
      for (std::size_t i = 0; i < size; ++i) chosen[i] = candidates[idx[i]];
      EvaluationResult t = evacuation_time(network, SinkSet(chosen));
      ++best.evaluated;
      if (best.improves(t, seq)) {
        best.time = t;
        best.sequence = seq;
        best.indices = idx;
      }
      if (options.stop_within && t.within(*options.stop_within)) {
        done.store(true, std::memory_order_relaxed);
        return;
      }
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }

  Best merged;
  for (Best& b : partial) {
    merged.evaluated += b.evaluated;
    if (!b.indices.empty() && merged.improves(b.time, b.sequence)) {
      merged.time = b.time;
      merged.sequence = b.sequence;
      merged.indices = std::move(b.indices);
    }
  }
  result.evaluated = merged.evaluated;
  result.time = merged.time;
  std::vector<Position> chosen;
  for (std::size_t i : merged.indices) chosen.push_back(candidates[i]);
  result.sinks = SinkSet(std::move(chosen));
  return result;
}

}  // namespace sinkloc
