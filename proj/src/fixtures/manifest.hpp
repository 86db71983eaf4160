#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace saas::fixtures {

enum class FixtureKind { Ontology, Shapes, AasXml, GoldenRdf, GoldenReport, OracleOutput };

FixtureKind fixture_kind_from_string(std::string_view s);
const char* to_string(FixtureKind k);

struct ManifestEntry {
    std::string name;
    FixtureKind kind;
    std::string sha256;  // lowercase hex
    std::string path;    // relative to the fixtures directory
};

struct Manifest {
    std::vector<ManifestEntry> entries;
};

// Line format: name<TAB>kind<TAB>sha-256<TAB>path. '#' lines and blank lines
// are ignored. Throws Error(Io) on malformed lines.
Manifest load_manifest(std::string_view text);
Manifest load_manifest_file(const std::filesystem::path& manifest_path);

struct Mismatch {
    std::string name;
    std::string reason;  // "missing file" or "checksum mismatch ..."
};

// Recomputes checksums against base_dir; empty result means pristine.
std::vector<Mismatch> verify_fixtures(const Manifest& manifest,
                                      const std::filesystem::path& base_dir);

std::string sha256_hex(std::string_view bytes);

std::string read_file(const std::filesystem::path& path);  // throws Error(Io)

}  // namespace saas::fixtures
