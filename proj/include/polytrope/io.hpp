#pragma once

#include "polytrope/fans.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace polytrope {

struct CorruptCheckpoint : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);
bool file_exists(const std::string& path);
std::string file_hash(const std::string& path); // fnv-64 hex of the bytes

/// Serialized BFS state with an integrity hash; tampering is detected on load.
void save_checkpoint(const std::string& path, int n, EnumMode mode, WinnerRule winner,
                     const BfsState& state);
BfsState load_checkpoint(const std::string& path, int n, EnumMode mode, WinnerRule winner);
bool checkpoint_exists(const std::string& path);

/// Run provenance: command line, configuration, output hashes and counts.
struct RunManifest {
    std::string tool_version;
    std::string command;
    int n = 0;
    std::string mode;
    std::map<std::string, std::string> flags;
    std::uint64_t seed = 0;
    std::string started;
    std::string finished;
    std::map<std::string, std::string> output_hashes; // file name -> fnv hex
    std::map<std::string, long long> counts;
    bool completed = false;

    std::string to_json() const;
    static RunManifest from_json(const std::string& text);
};

void write_records_file(const std::string& path, const std::vector<ConeRecord>& records);
std::vector<ConeRecord> read_records_file(const std::string& path);

std::string iso_timestamp();

} // namespace polytrope
