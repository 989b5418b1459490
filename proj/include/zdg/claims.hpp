#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zdg/catalog.hpp"
#include "zdg/graph.hpp"
#include "zdg/properties.hpp"

namespace zdg {

struct Witness {
    std::string ring;                  // canonical spec text, re-buildable
    std::vector<std::string> elements; // names of the elements involved
    std::string detail;
};

enum class ClaimStatus { pass, counterexample, skipped };

std::string to_string(ClaimStatus s);

struct ClaimResult {
    std::string claim_id;
    ClaimStatus status = ClaimStatus::pass;
    long rings_checked = 0;
    long skipped = 0; // instances filtered out by the claim's hypotheses
    std::optional<Witness> witness;
    std::string note;
    bool vacuous = false; // nothing satisfied the hypotheses
    long elapsed_ms = 0;

    bool same_verdict(const ClaimResult& o) const; // ignores elapsed_ms
};

/// Catalog entry with its ring, both graphs and the extended-graph verdict
/// built once and shared by every claim.
struct RingBundle {
    const CatalogEntry* entry = nullptr;
    FiniteRing ring;
    ZeroDivisorGraph classic;
    ZeroDivisorGraph extended;
    bool differ = false;
    ComplementedVerdict ext_verdict; // full (uniqueness included)
};

/// Lazy bundle cache over one catalog; claims touch only what they filter in.
class ClaimContext {
public:
    ClaimContext(const Catalog& catalog, BuildOptions build);

    const Catalog& catalog() const { return *catalog_; }
    std::size_t size() const { return catalog_->entries.size(); }
    const RingBundle& bundle(std::size_t i);
    const BuildOptions& build_options() const { return build_; }

    /// Build-and-bundle for rings a claim constructs itself (product pairs,
    /// idealizations); not cached.
    RingBundle make_bundle(const RingSpec& spec) const;

private:
    const Catalog* catalog_;
    BuildOptions build_;
    std::vector<std::optional<RingBundle>> bundles_;
};

struct ClaimOutcome {
    long rings_checked = 0;
    long skipped = 0;
    std::optional<Witness> counterexample;
    std::string note;
    bool registered_skip = false; // claim is recorded as out of scope
};

struct Claim {
    std::string id;
    std::string title; // self-contained mathematical statement
    std::function<ClaimOutcome(ClaimContext&)> run;
};

class ClaimRegistry {
public:
    void add(Claim claim);
    const Claim* find(const std::string& id) const;
    std::vector<std::string> ids() const; // sorted
private:
    std::map<std::string, Claim> claims_;
};

/// The built-in battery of structural claims about extended zero-divisor
/// graphs of finite commutative rings.
const ClaimRegistry& default_claims();

ClaimResult verify_claim(const std::string& claim_id, const Catalog& catalog,
                         const ClaimRegistry& registry = default_claims(),
                         const BuildOptions& build = {});

/// Runs the listed claims over one shared context; results sorted by id.
std::vector<ClaimResult> run_claims(const Catalog& catalog, const std::vector<std::string>& ids,
                                    const ClaimRegistry& registry = default_claims(),
                                    const BuildOptions& build = {});

std::vector<ClaimResult> verify_all(const Catalog& catalog,
                                    const ClaimRegistry& registry = default_claims(),
                                    const BuildOptions& build = {});

enum class ReportFormat { json, markdown };

/// JSON: {"recipe": str, "notes": [...], "results": [{"claim", "status",
/// "rings_checked", "skipped", "witness", "elapsed_ms", "vacuous", "note"}]}.
/// Markdown mirrors the same table.
std::string render_report(const std::vector<ClaimResult>& results, ReportFormat format,
                          const std::string& recipe = "");

/// Inverse of render_report(..., json): extracts the results array.
std::vector<ClaimResult> parse_report_json(const std::string& json_text);

} // namespace zdg
