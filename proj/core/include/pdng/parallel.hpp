#pragma once

#include <cstddef>
#include <functional>
#include <future>
#include <optional>
#include <vector>

namespace pdng {

/// Pulls items from `next` in fixed-size chunks, applies `work` to each chunk
/// on up to `jobs` threads, and hands results to `sink` in input order.
/// `sink` returning false stops the run at the next chunk boundary.
/// Exceptions thrown by `work` propagate to the caller.
template <typename In, typename Out>
void ordered_parallel_map(const std::function<std::optional<In>()>& next, std::size_t chunk_size,
                          int jobs, const std::function<Out(const In&)>& work,
                          const std::function<bool(const In&, Out&&)>& sink) {
  if (jobs < 1) jobs = 1;
  if (chunk_size == 0) chunk_size = 1;
  bool more = true;
  while (more) {
    std::vector<std::vector<In>> chunks;
    for (int j = 0; j < jobs && more; ++j) {
      std::vector<In> chunk;
      while (chunk.size() < chunk_size) {
        auto item = next();
        if (!item) {
          more = false;
          break;
        }
        chunk.push_back(std::move(*item));
      }
      if (!chunk.empty()) chunks.push_back(std::move(chunk));
    }
    auto run = [&work](const std::vector<In>* chunk) {
      std::vector<Out> out;
      out.reserve(chunk->size());
      for (const auto& item : *chunk) out.push_back(work(item));
      return out;
    };
    std::vector<std::future<std::vector<Out>>> pending;
    if (jobs == 1) {
      for (const auto& chunk : chunks) {
        std::promise<std::vector<Out>> done;
        done.set_value(run(&chunk));
        pending.push_back(done.get_future());
      }
    } else {
      for (const auto& chunk : chunks) {
        pending.push_back(std::async(std::launch::async, run, &chunk));
      }
    }
    for (std::size_t c = 0; c < chunks.size(); ++c) {
      auto results = pending[c].get();
      for (std::size_t i = 0; i < results.size(); ++i) {
        if (!sink(chunks[c][i], std::move(results[i]))) {
          for (std::size_t rest = c + 1; rest < pending.size(); ++rest) pending[rest].wait();
          return;
        }
      }
    }
  }
}

} // end of namespace pdng
