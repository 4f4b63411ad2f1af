#include "cubiczeta/cache.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace cubiczeta {

std::string EnumerationManifest::to_json() const {
    nlohmann::json j;
    j["format"] = "cubiczeta-orbits v1";
    j["cutoff"] = cutoff;
    j["sign_filter"] = sign_filter;
    j["count"] = count;
    j["checksum"] = checksum;
    return j.dump(2);
}

EnumerationManifest EnumerationManifest::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    if (j.at("format") != "cubiczeta-orbits v1")
        throw std::runtime_error("unrecognized manifest format");
    EnumerationManifest m;
    m.cutoff = j.at("cutoff").get<long long>();
    m.sign_filter = j.at("sign_filter").get<std::string>();
    m.count = j.at("count").get<long long>();
    m.checksum = j.at("checksum").get<uint64_t>();
    return m;
}

uint64_t fnv1a(uint64_t h, const std::string& line) {
    for (unsigned char ch : line) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    h ^= static_cast<unsigned char>('\n');
    h *= 1099511628211ULL;
    return h;
}

std::string record_line(const OrbitRecord& rec) {
    std::ostringstream os;
    os << rec.disc << ',' << rec.stab << ',' << rec.rep.a << ',' << rec.rep.b << ','
       << rec.rep.c << ',' << rec.rep.d << ',' << rec.membership;
    return os.str();
}

OrbitRecord parse_record_line(const std::string& line) {
    OrbitRecord rec;
    long long mask = 0;
    char comma;
    std::istringstream is(line);
    long long stab = 0;
    if (!(is >> rec.disc >> comma >> stab >> comma >> rec.rep.a >> comma >> rec.rep.b >>
          comma >> rec.rep.c >> comma >> rec.rep.d >> comma >> mask))
        throw std::runtime_error("malformed cache line: " + line);
    rec.stab = static_cast<int>(stab);
    rec.membership = static_cast<uint16_t>(mask);
    return rec;
}

std::string manifest_path(const std::string& cache_path) {
    return cache_path + ".manifest.json";
}

namespace {

std::string header_line(long long cutoff) {
    return "cubiczeta-orbits v1 cutoff=" + std::to_string(cutoff);
}

void write_all(const std::string& path, long long cutoff,
               const std::vector<std::string>& lines) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache: " + path);
    out << header_line(cutoff) << '\n';
    for (const auto& l : lines) out << l << '\n';
    out.close();

    uint64_t h = kFnvOffset;
    for (const auto& l : lines) h = fnv1a(h, l);
    EnumerationManifest m;
    m.cutoff = cutoff;
    m.count = static_cast<long long>(lines.size());
    m.checksum = h;
    std::ofstream mout(manifest_path(path), std::ios::trunc);
    if (!mout) throw std::runtime_error("cannot write manifest for " + path);
    mout << m.to_json() << '\n';
}

} // namespace

void write_cache(const std::string& path, const std::vector<OrbitRecord>& records,
                 long long cutoff) {
    std::vector<std::string> lines;
    lines.reserve(records.size());
    for (const auto& r : records) lines.push_back(record_line(r));
    write_all(path, cutoff, lines);
}

CacheLoad read_cache(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read cache: " + path);
    std::ifstream min(manifest_path(path));
    if (!min) throw std::runtime_error("missing manifest for " + path);
    std::stringstream mbuf;
    mbuf << min.rdbuf();
    CacheLoad load;
    load.manifest = EnumerationManifest::from_json(mbuf.str());

    std::string line;
    if (!std::getline(in, line) || line != header_line(load.manifest.cutoff))
        throw std::runtime_error("cache header does not match manifest");
    uint64_t h = kFnvOffset;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        h = fnv1a(h, line);
        load.records.push_back(parse_record_line(line));
    }
    if (static_cast<long long>(load.records.size()) != load.manifest.count)
        throw std::runtime_error("cache record count does not match manifest");
    if (h != load.manifest.checksum) throw std::runtime_error("cache checksum mismatch");
    return load;
}

EnumerationManifest extend_cache(const std::string& path,
                                 const std::vector<OrbitRecord>& extension,
                                 long long new_cutoff) {
    CacheLoad old = read_cache(path);
    if (new_cutoff < old.manifest.cutoff)
        throw std::runtime_error("extension cutoff below the existing cache cutoff");
    std::vector<std::string> lines;
    lines.reserve(old.records.size() + extension.size());
    for (const auto& r : old.records) lines.push_back(record_line(r));
    for (const auto& r : extension) {
        if (std::abs(r.disc) <= old.manifest.cutoff)
            throw std::runtime_error("extension overlaps the verified range");
        lines.push_back(record_line(r));
    }
    write_all(path, new_cutoff, lines);
    std::ifstream min(manifest_path(path));
    std::stringstream mbuf;
    mbuf << min.rdbuf();
    return EnumerationManifest::from_json(mbuf.str());
}

} // namespace cubiczeta
