#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace frob::cli {

/// One flat output record: string, integer or boolean values in a fixed key
/// order. Text, CSV and JSON are all rendered from the same records.
using Record = nlohmann::ordered_json;

enum class Format { Text, Csv, Json };

/// "key: value" lines; records separated by a blank line.
std::string renderText(const std::vector<Record>& records);
/// Header from the first record's keys, then one row per record.
std::string renderCsv(const std::vector<Record>& records);
/// {"schema": ..., "records": [...]}, one line.
std::string renderJson(std::string_view schema, const std::vector<Record>& records);

/// "2..50" (inclusive, primes only), "2,3,7" (each must be prime), or a
/// mix such as "2..10,13". An optional residue filter keeps p = r mod m.
std::vector<std::uint32_t> parsePrimeSpec(std::string_view spec, std::optional<std::pair<std::int64_t, std::int64_t>> residue = {});

/// Runs one invocation, args excluding the program name. Returns 0 on
/// success, 1 on a computation error, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace frob::cli
