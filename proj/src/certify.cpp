#include "curvcert/certify.hpp"

#include <algorithm>
#include <optional>

#include "json.hpp"

#include "curvcert/errors.hpp"

namespace curvcert {

const std::vector<Inference>& inference_chain()
{
    static const std::vector<Inference> chain = {
        {"the extended ideal is T-monomial, being given by the toric sequence pi_plus", "toric-sequence-ideal"},
        {"the weight vector degenerates the test-curve image onto e_{pi_plus}, so the extended ideal lies in the "
         "toric Hilbert scheme",
         "toric-fixed-point-limit"},
        {"the toric Hilbert scheme lies in the curvilinear component", "toric-in-curvilinear"},
        {"the extended ideal is a socle extension of the input ideal, so curvilinear membership descends",
         "socle-extension-descent"},
    };
    return chain;
}

namespace {

CheckResult make_check(const std::string& name, bool passed, std::string detail = {})
{
    return {name, passed, std::move(detail)};
}

std::string first_or(const std::vector<std::string>& v, const std::string& fallback)
{
    return v.empty() ? fallback : v.front();
}

}  // namespace

CurvilinearCertificate certify_monomial_ideal(const std::vector<Exponent>& gens, int n, int limit_cap)
{
    CurvilinearCertificate cert;
    cert.n = n;
    cert.generators = gens;
    cert.staircase = from_generators(gens, n);
    cert.rl = rl_sequence(cert.staircase);
    cert.inferences = inference_chain();

    const auto& names = check_names();
    cert.checks.push_back(make_check(names[0], is_order_ideal(cert.staircase.dim(), cert.staircase.boxes())));
    cert.checks.push_back(make_check(names[1], is_complete(cert.rl)));

    try {
        cert.extension = t_extend(cert.staircase);
    } catch (const Error& e) {
        for (std::size_t i = 2; i < names.size(); ++i)
            cert.checks.push_back(make_check(names[i], false, e.what()));
        return cert;
    }
    const TExtension& ext = cert.extension;
    cert.checks.push_back(make_check(names[2], is_toric(ext.pi_plus)));
    cert.checks.push_back(make_check(names[3], is_complete(ext.pi_plus)));

    if (auto w = weight_certificate(ext.pi_plus)) {
        cert.weights = std::move(*w);
        const bool ok = verify_weights(ext.pi_plus, cert.weights.values, limit_cap);
        cert.checks.push_back(make_check(names[4], ok, ok ? "" : "witness fails re-substitution"));
    } else {
        cert.checks.push_back(make_check(names[4], false, "level system is infeasible"));
    }

    const SocleExtensionCheck socle = verify_socle_extension(ext);
    cert.checks.push_back(make_check(names[5], socle.ok(), first_or(socle.failures, "")));

    try {
        const bool same = quotient_q(ext) == compact(cert.staircase);
        cert.checks.push_back(make_check(names[6], same, same ? "" : "quotient differs from the input staircase"));
    } catch (const SocleCheckFailed& e) {
        cert.checks.push_back(make_check(names[6], false, e.what()));
    }

    cert.conclusion = std::all_of(cert.checks.begin(), cert.checks.end(), [](const CheckResult& c) { return c.passed; });
    return cert;
}

namespace {

constexpr std::size_t kMaxRowReasons = 5;

void compare_extension(const TExtension& got, const TExtension& want, std::vector<std::string>& reasons)
{
    if (!(got.source == want.source))
        reasons.push_back("extension.source differs from the compacted staircase");
    if (got.essential_axes != want.essential_axes)
        reasons.push_back("extension.essential_axes differ");
    if (got.cuboid_dims != want.cuboid_dims)
        reasons.push_back("extension.cuboid_dims differ");
    if (got.beta != want.beta)
        reasons.push_back("extension.beta differs");
    if (got.N != want.N)
        reasons.push_back("extension.N is " + std::to_string(got.N) + ", expected " + std::to_string(want.N));
    if (got.K != want.K)
        reasons.push_back("extension.K is " + std::to_string(got.K) + ", expected " + std::to_string(want.K));
    if (got.pi_plus.size() != want.pi_plus.size()) {
        reasons.push_back("extension.pi_plus has length " + std::to_string(got.pi_plus.size()) + ", expected " +
                          std::to_string(want.pi_plus.size()));
    } else {
        for (std::size_t t = 0; t < got.pi_plus.size(); ++t)
            if (got.pi_plus[t] != want.pi_plus[t])
                reasons.push_back("extension.pi_plus entry " + std::to_string(t + 1) + " is " +
                                  to_string(got.pi_plus[t]) + ", expected " + to_string(want.pi_plus[t]));
    }
    if (!(got.target == want.target))
        reasons.push_back("extension.target differs");
    if (got.embedding != want.embedding)
        reasons.push_back("extension.embedding differs");
    if (got.mon_plus != want.mon_plus)
        reasons.push_back("extension.mon_plus differs");
}

}  // namespace

Verdict verify_certificate(const CurvilinearCertificate& cert, int limit_cap)
{
    Verdict v;
    auto& reasons = v.reasons;

    std::optional<Staircase> staircase;
    try {
        staircase = from_generators(cert.generators, cert.n);
    } catch (const InvalidInput& e) {
        reasons.push_back(std::string("generators: ") + e.what());
        return v;
    }
    if (!(*staircase == cert.staircase))
        reasons.push_back("staircase does not match the generators");
    if (!is_order_ideal(cert.staircase.dim(), cert.staircase.boxes()))
        reasons.push_back("staircase is not an order ideal");

    const PartitionSequence rl = rl_sequence(*staircase);
    if (cert.rl.size() != rl.size()) {
        reasons.push_back("rl has length " + std::to_string(cert.rl.size()) + ", expected " + std::to_string(rl.size()));
    } else {
        for (std::size_t i = 0; i < rl.size(); ++i)
            if (cert.rl[i] != rl[i])
                reasons.push_back("rl entry " + std::to_string(i + 1) + " is " + to_string(cert.rl[i]) +
                                  ", expected " + to_string(rl[i]));
    }
    if (!is_complete(cert.rl))
        reasons.push_back("rl partition set is not complete");

    TExtension ext;
    try {
        ext = t_extend(*staircase);
    } catch (const Error& e) {
        reasons.push_back(std::string("t-extension: ") + e.what());
        return v;
    }
    const TExtension& rec = cert.extension;
    compare_extension(rec, ext, reasons);
    for (std::size_t t = 0; t < rec.pi_plus.size(); ++t)
        if (rec.pi_plus[t].sum() != static_cast<int>(t + 1))
            reasons.push_back("pi_plus entry " + std::to_string(t + 1) + " has sum " +
                              std::to_string(rec.pi_plus[t].sum()) + " (not toric)");
    if (!is_complete(rec.pi_plus))
        reasons.push_back("pi_plus partition set is not complete");

    const Vector& alpha = cert.weights.values;
    if (alpha.size() != ext.pi_plus.size()) {
        reasons.push_back("weights have length " + std::to_string(alpha.size()) + ", expected " +
                          std::to_string(ext.pi_plus.size()));
    } else {
        const LevelSystem sys = level_system(ext.pi_plus);
        const std::vector<std::size_t> bad = violated_rows(sys, alpha);
        for (std::size_t i = 0; i < bad.size() && i < kMaxRowReasons; ++i) {
            const LevelRow& row = sys.rows[bad[i]];
            reasons.push_back("weight row " + std::to_string(bad[i]) + " (level " + std::to_string(row.level) +
                              ", " + to_string(ext.pi_plus[static_cast<std::size_t>(row.level - 1)]) + " against " +
                              to_string(row.competitor) + ") is not strict");
        }
        if (bad.size() > kMaxRowReasons)
            reasons.push_back(std::to_string(bad.size() - kMaxRowReasons) + " further weight rows are not strict");
        const int k = static_cast<int>(ext.pi_plus.size());
        if (bad.empty() && k >= 1 && k <= limit_cap) {
            const TorusLimit lim = torus_limit(k, alpha, limit_cap);
            if (!lim.limit || *lim.limit != ext.pi_plus)
                reasons.push_back("torus limit of the weights is not e_{pi_plus}");
        }
    }

    const SocleExtensionCheck socle = verify_socle_extension(rec);
    for (const auto& f : socle.failures)
        reasons.push_back("socle-extension: " + f);
    if (socle.ok()) {
        try {
            if (!(quotient_q(rec) == compact(*staircase)))
                reasons.push_back("quotient round trip does not return the input staircase");
        } catch (const SocleCheckFailed& e) {
            reasons.push_back(std::string("quotient round trip: ") + e.what());
        }
    }

    const auto& names = check_names();
    if (cert.checks.size() != names.size()) {
        reasons.push_back("expected " + std::to_string(names.size()) + " checks, found " +
                          std::to_string(cert.checks.size()));
    } else {
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (cert.checks[i].name != names[i])
                reasons.push_back("check " + std::to_string(i + 1) + " is named '" + cert.checks[i].name +
                                  "', expected '" + names[i] + "'");
            else if (!cert.checks[i].passed)
                reasons.push_back("check '" + names[i] + "' is recorded as failed");
        }
    }
    if (cert.inferences != inference_chain())
        reasons.push_back("inference chain differs from the licensed chain");
    if (!cert.conclusion)
        reasons.push_back("conclusion is false");

    v.accepted = reasons.empty();
    return v;
}

QuotCertificate certify_quot(const std::vector<std::pair<std::vector<Exponent>, int>>& components, int limit_cap)
{
    QuotCertificate q;
    for (const auto& [gens, n] : components)
        q.components.push_back(certify_monomial_ideal(gens, n, limit_cap));
    return q;
}

Verdict verify_quot(const QuotCertificate& cert, int limit_cap)
{
    Verdict v;
    for (std::size_t i = 0; i < cert.components.size(); ++i) {
        const Verdict part = verify_certificate(cert.components[i], limit_cap);
        for (const auto& r : part.reasons)
            v.reasons.push_back("component " + std::to_string(i + 1) + ": " + r);
    }
    v.accepted = v.reasons.empty();
    return v;
}

namespace {

using Json = nlohmann::ordered_json;

Json staircase_json(const Staircase& y)
{
    return Json{{"dim", y.dim()}, {"boxes", y.boxes()}};
}

Json sequence_json(const PartitionSequence& seq)
{
    Json out = Json::array();
    for (const auto& p : seq)
        out.push_back(to_string(p));
    return out;
}

Staircase staircase_from(const Json& j)
{
    return Staircase(j.at("dim").get<int>(), j.at("boxes").get<std::vector<Exponent>>());
}

PartitionSequence sequence_from(const Json& j)
{
    PartitionSequence seq;
    for (const auto& e : j)
        seq.push_back(parse_partition(e.get<std::string>()));
    return seq;
}

}  // namespace

std::string certificate_to_json(const CurvilinearCertificate& cert)
{
    const TExtension& ext = cert.extension;
    Json weights_values = Json::array();
    for (const auto& q : cert.weights.values)
        weights_values.push_back(to_string(q));
    Json checks = Json::array();
    for (const auto& c : cert.checks)
        checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    Json inferences = Json::array();
    for (const auto& inf : cert.inferences)
        inferences.push_back(Json{{"claim", inf.claim}, {"licence", inf.licence}});

    Json doc{
        {"schema", kSchemaVersion},
        {"input", Json{{"n", cert.n}, {"generators", cert.generators}}},
        {"staircase", staircase_json(cert.staircase)},
        {"rl", sequence_json(cert.rl)},
        {"extension",
         Json{
             {"source", staircase_json(ext.source)},
             {"essential_axes", ext.essential_axes},
             {"cuboid_dims", ext.cuboid_dims},
             {"beta", ext.beta},
             {"N", ext.N},
             {"K", ext.K},
             {"pi_plus", sequence_json(ext.pi_plus)},
             {"target", staircase_json(ext.target)},
             {"embedding", ext.embedding},
             {"mon_plus", ext.mon_plus},
         }},
        {"weights", Json{{"values", weights_values}, {"provenance", cert.weights.provenance}}},
        {"checks", checks},
        {"inferences", inferences},
        {"conclusion", cert.conclusion},
    };
    return doc.dump(2) + "\n";
}

CurvilinearCertificate certificate_from_json(std::string_view text)
{
    try {
        const Json doc = Json::parse(text);
        if (doc.at("schema").get<std::string>() != kSchemaVersion)
            throw ParseError("certificate: unsupported schema '" + doc.at("schema").get<std::string>() + "'");
        CurvilinearCertificate cert;
        cert.n = doc.at("input").at("n").get<int>();
        cert.generators = doc.at("input").at("generators").get<std::vector<Exponent>>();
        cert.staircase = staircase_from(doc.at("staircase"));
        cert.rl = sequence_from(doc.at("rl"));

        const Json& e = doc.at("extension");
        TExtension& ext = cert.extension;
        ext.source = staircase_from(e.at("source"));
        ext.essential_axes = e.at("essential_axes").get<std::vector<int>>();
        ext.cuboid_dims = e.at("cuboid_dims").get<std::vector<int>>();
        ext.beta = e.at("beta").get<std::vector<int>>();
        ext.N = e.at("N").get<int>();
        ext.K = e.at("K").get<int>();
        ext.pi_plus = sequence_from(e.at("pi_plus"));
        ext.target = staircase_from(e.at("target"));
        ext.embedding = e.at("embedding").get<std::vector<std::size_t>>();
        ext.mon_plus = e.at("mon_plus").get<std::vector<Exponent>>();

        for (const auto& q : doc.at("weights").at("values"))
            cert.weights.values.push_back(parse_rational(q.get<std::string>()));
        cert.weights.provenance = doc.at("weights").at("provenance").get<std::string>();
        for (const auto& c : doc.at("checks"))
            cert.checks.push_back(
                {c.at("name").get<std::string>(), c.at("passed").get<bool>(), c.at("detail").get<std::string>()});
        for (const auto& inf : doc.at("inferences"))
            cert.inferences.push_back({inf.at("claim").get<std::string>(), inf.at("licence").get<std::string>()});
        cert.conclusion = doc.at("conclusion").get<bool>();
        return cert;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("certificate: ") + e.what());
    } catch (const ParseError&) {
        throw;
    } catch (const InvalidInput& e) {
        throw ParseError(std::string("certificate: ") + e.what());
    }
}

}  // namespace curvcert
