// Copyright 2026 The consets Authors.
// SPDX-License-Identifier: Apache-2.0

#include "consets/harness/pipeline.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <string_view>
#include <thread>

#include "consets/graph6.hpp"

namespace consets::harness {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

constexpr std::string_view kHeader = ">>graph6<<";

}  // namespace

std::optional<InputError> Graph6Reader::read_chunk(std::vector<InputGraph>& out,
                                                   std::size_t max_graphs) {
  std::string raw;
  std::size_t taken = 0;
  while (taken < max_graphs) {
    if (!std::getline(in_, raw)) {
      done_ = true;
      return std::nullopt;
    }
    ++line_;
    std::string_view text = trim(raw);
    if (text.starts_with(kHeader)) {
      text = text.substr(kHeader.size());
    } else if (text.starts_with(">>")) {
      continue;
    }
    if (text.empty()) continue;
    try {
      out.push_back({line_, parse_graph6(text)});
      ++taken;
    } catch (const Graph6Error& e) {
      done_ = true;
      return InputError{line_, e.what()};
    }
  }
  return std::nullopt;
}

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& task) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        task(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
    for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace consets::harness
