// Copyright 2026 The consets Authors.
// SPDX-License-Identifier: Apache-2.0

#include "consets/harness/ledger.hpp"

#include <stdexcept>

namespace consets::harness {
namespace {

template <typename Key>
void offer(std::map<Key, ExtremalLedger::Entry>& table, const Key& key,
           const ExtremalLedger::Entry& candidate) {
  auto it = table.find(key);
  if (it == table.end()) {
    table.emplace(key, candidate);
    return;
  }
  const auto& held = it->second;
  if (candidate.value < held.value ||
      (candidate.value == held.value && candidate.index < held.index)) {
    it->second = candidate;
  }
}

void put_entry(Json& j, const ExtremalLedger::Entry& e) {
  j["value"] = e.value.str();
  j["decimal"] = e.value.decimal();
  j["witness"] = e.witness;
  j["index"] = e.index;
}

ExtremalLedger::Entry entry_from_json(const Json& j) {
  return {Ratio::parse(j.at("value").get<std::string>()), j.at("witness").get<std::string>(),
          j.at("index").get<std::uint64_t>()};
}

}  // namespace

void ExtremalLedger::fold(const ScanRecord& record) {
  if (record.status != RecordStatus::kOk || !record.connected()) return;
  offer(min_average_, record.n, Entry{record.A, record.graph6, record.index});
  offer(min_density_, std::pair{record.n, record.kappa},
        Entry{record.D, record.graph6, record.index});
}

void ExtremalLedger::merge(const ExtremalLedger& other) {
  for (const auto& [key, entry] : other.min_average_) offer(min_average_, key, entry);
  for (const auto& [key, entry] : other.min_density_) offer(min_density_, key, entry);
}

Json ExtremalLedger::to_json() const {
  Json averages = Json::array();
  for (const auto& [n, entry] : min_average_) {
    Json j;
    j["n"] = n;
    put_entry(j, entry);
    averages.push_back(std::move(j));
  }
  Json densities = Json::array();
  for (const auto& [key, entry] : min_density_) {
    Json j;
    j["n"] = key.first;
    j["kappa"] = key.second;
    put_entry(j, entry);
    densities.push_back(std::move(j));
  }
  Json out;
  out["min_average"] = std::move(averages);
  out["min_density"] = std::move(densities);
  return out;
}

ExtremalLedger ExtremalLedger::from_json(const Json& j) {
  try {
    ExtremalLedger ledger;
    for (const auto& row : j.at("min_average")) {
      ledger.min_average_[row.at("n").get<int>()] = entry_from_json(row);
    }
    for (const auto& row : j.at("min_density")) {
      ledger.min_density_[{row.at("n").get<int>(), row.at("kappa").get<int>()}] =
          entry_from_json(row);
    }
    return ledger;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed ledger: ") + e.what());
  }
}

}  // namespace consets::harness
