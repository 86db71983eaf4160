#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aas/model.hpp"
#include "rdf/graph.hpp"

namespace saas::mapping {

enum class IdentifierPolicy { StrictSkip, MintUnderBase };

struct MappingConfig {
    std::string rami_namespace;  // defaults to the bundled ontology's namespace
    IdentifierPolicy policy = IdentifierPolicy::StrictSkip;
    std::string mint_base;  // MintUnderBase only; must end in '/' or '#'
    bool emit_abstract_notes = false;

    static MappingConfig strict();
    // Throws Error(InvalidArgument) unless base is an IRI ending in '/' or '#'.
    static MappingConfig mint(std::string base);
};

struct Skip {
    std::string path;
    std::string reason;
};

struct MappingReport {
    std::uint64_t emitted_triples = 0;      // distinct triples added to the graph
    std::uint64_t collapsed_duplicates = 0; // suppressed repeat emissions
    std::vector<Skip> skipped_entities;
    std::vector<std::string> warnings;

    // Text summary followed by one machine-readable "SKIP <path> <reason>"
    // line per skip and one "WARN <text>" line per warning.
    std::string render() const;
};

struct MappingResult {
    rdf::Graph graph;
    MappingReport report;
};

// The full environment mapping: union of the per-entity mappings below, no
// blank nodes, deterministic for identical inputs. Per-entity failures are
// recorded as skips and never abort the run.
MappingResult map_environment(const aas::AasEnvironment& env, const MappingConfig& cfg);

// Identifier policy gate: URI identifiers validate as-is; IRDI/Custom are
// skipped under StrictSkip or minted as base + percent-encoded value.
// Returns the IRI term, or nullopt with the reason in *skip_reason.
std::optional<rdf::Term> resolve_identifier(const std::string& value, aas::IdType id_type,
                                            const MappingConfig& cfg, std::string* skip_reason);

// Per-entity mappings. Each returns the raw emission (duplicates possible
// across entities) or nullopt when the entity is skipped; skips and warnings
// land in the report.
std::optional<std::vector<rdf::Triple>> map_shell(const aas::AdministrationShell& shell,
                                                  const MappingConfig& cfg, MappingReport& report,
                                                  const std::string& path);
std::optional<std::vector<rdf::Triple>> map_asset(const aas::Asset& asset,
                                                  const MappingConfig& cfg, MappingReport& report,
                                                  const std::string& path);
std::optional<std::vector<rdf::Triple>> map_submodel(const aas::Submodel& sm,
                                                     const MappingConfig& cfg,
                                                     MappingReport& report,
                                                     const std::string& path);
// Emission with triples already in `already_emitted` suppressed;
// suppressions are counted into report.collapsed_duplicates.
std::optional<std::vector<rdf::Triple>> map_concept_description(
    const aas::ConceptDescription& cd, const MappingConfig& cfg,
    const rdf::Graph& already_emitted, MappingReport& report, const std::string& path);

// Attribute-bag key to predicate local name: camelCase over word boundaries,
// then percent-encoding of anything left outside the safe set.
std::string attribute_local_name(std::string_view key);

}  // namespace saas::mapping
