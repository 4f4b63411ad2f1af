#pragma once

#include "cubiczeta/orbits.hpp"

#include <string>
#include <vector>

namespace cubiczeta {

// Sidecar metadata validating the plain-text orbit cache.
struct EnumerationManifest {
    long long cutoff = 0;
    std::string sign_filter = "both";
    long long count = 0;
    uint64_t checksum = 0; // FNV-1a over the record lines

    std::string to_json() const;
    static EnumerationManifest from_json(const std::string& text);
};

uint64_t fnv1a(uint64_t h, const std::string& line);
inline constexpr uint64_t kFnvOffset = 1469598103934665603ULL;

std::string record_line(const OrbitRecord& rec);
OrbitRecord parse_record_line(const std::string& line);

std::string manifest_path(const std::string& cache_path);

// Writes header, records and the manifest sidecar.
void write_cache(const std::string& path, const std::vector<OrbitRecord>& records,
                 long long cutoff);

struct CacheLoad {
    std::vector<OrbitRecord> records;
    EnumerationManifest manifest;
};

// Reads and validates a cache against its manifest; throws on corruption.
CacheLoad read_cache(const std::string& path);

// Extends an existing cache to a larger cutoff: existing record lines are
// verified against the manifest and preserved byte for byte, new records are
// appended in stream order. Returns the new manifest.
EnumerationManifest extend_cache(const std::string& path,
                                 const std::vector<OrbitRecord>& extension,
                                 long long new_cutoff);

} // namespace cubiczeta
