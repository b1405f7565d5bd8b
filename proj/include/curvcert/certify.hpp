#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "curvcert/partitions.hpp"
#include "curvcert/staircase.hpp"
#include "curvcert/textension.hpp"
#include "curvcert/weights.hpp"

namespace curvcert {

inline constexpr const char* kSchemaVersion = "curvcert-1";

/// Names of the recorded checks, in certificate order.
inline const std::vector<std::string>& check_names()
{
    static const std::vector<std::string> names = {
        "staircase-valid", "rl-complete",      "pi-plus-toric",       "pi-plus-complete",
        "weights-verified", "socle-extension", "quotient-round-trip",
    };
    return names;
}

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;

    friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

/// One step of the membership argument and the result that licenses it.
struct Inference {
    std::string claim;
    std::string licence;

    friend bool operator==(const Inference&, const Inference&) = default;
};

/// The fixed chain of inferences every certificate records.
const std::vector<Inference>& inference_chain();

struct CurvilinearCertificate {
    int n = 0;
    std::vector<Exponent> generators;
    Staircase staircase{0, {Exponent{}}};
    PartitionSequence rl;
    TExtension extension;
    WeightVector weights;  // empty values when no witness was found
    std::vector<CheckResult> checks;
    std::vector<Inference> inferences;
    bool conclusion = false;  // member of the curvilinear component
};

/// Runs generators -> staircase -> RL sequence -> T-extension -> weights ->
/// socle check -> quotient round trip. Throws InfiniteColength and other
/// InvalidInput errors; internal failures become failed checks.
CurvilinearCertificate certify_monomial_ideal(const std::vector<Exponent>& gens, int n,
                                              int limit_cap = kDefaultLimitCap);

struct Verdict {
    bool accepted = false;
    std::vector<std::string> reasons;  // empty when accepted
};

/// Recomputes everything from the generators except the LP search; the
/// recorded witness is only substituted.
Verdict verify_certificate(const CurvilinearCertificate& cert, int limit_cap = kDefaultLimitCap);

struct QuotCertificate {
    std::vector<CurvilinearCertificate> components;
};

QuotCertificate certify_quot(const std::vector<std::pair<std::vector<Exponent>, int>>& components,
                             int limit_cap = kDefaultLimitCap);
Verdict verify_quot(const QuotCertificate& cert, int limit_cap = kDefaultLimitCap);

/// Deterministic JSON document (2-space indent, fixed key order).
std::string certificate_to_json(const CurvilinearCertificate& cert);
/// Throws ParseError on malformed text, missing fields or invalid values.
CurvilinearCertificate certificate_from_json(std::string_view text);

}  // namespace curvcert
