#include "totbond/jsonio.hpp"

namespace totbond {

using nlohmann::json;

namespace {

std::string kind_name(Kind k) { return k == Kind::Exact ? "exact" : "upper_bound"; }

Kind kind_from(const std::string& s) {
    if (s == "exact") return Kind::Exact;
    if (s == "upper_bound") return Kind::UpperBound;
    throw BadParam("unknown kind '" + s + "'");
}

json opt_to_json(const std::optional<long long>& v) {
    return v ? json(*v) : json(nullptr);
}

std::optional<long long> opt_from_json(const json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<long long>();
}

} // namespace

json to_json(const DominationCertificate& cert) {
    return json{{"gamma_t", cert.gamma_t}, {"witness", cert.witness}};
}

json to_json(const BondageCertificate& cert) {
    json deleted = json::array();
    for (const auto& [u, v] : cert.deleted) deleted.push_back(json::array({u, v}));
    return json{{"k", cert.k},
                {"deleted", deleted},
                {"gamma_before", cert.before.gamma_t},
                {"witness_before", cert.before.witness},
                {"gamma_after", cert.after.gamma_t},
                {"witness_after", cert.after.witness}};
}

BondageCertificate bondage_certificate_from_json(const json& j) {
    BondageCertificate cert;
    cert.k = j.at("k").get<int>();
    std::vector<Edge> del;
    for (const auto& e : j.at("deleted"))
        del.push_back(make_edge(e.at(0).get<int>(), e.at(1).get<int>()));
    cert.deleted = EdgeSet::from_pairs(std::move(del));
    cert.before.gamma_t = j.at("gamma_before").get<int>();
    cert.before.witness = j.at("witness_before").get<std::vector<int>>();
    cert.after.gamma_t = j.at("gamma_after").get<int>();
    cert.after.witness = j.at("witness_after").get<std::vector<int>>();
    return cert;
}

json outcome_to_json(int k, const BondageOutcome& outcome) {
    if (const auto* cert = std::get_if<BondageCertificate>(&outcome)) {
        json j = to_json(*cert);
        j["bondage"] = cert->bondage();
        return j;
    }
    const auto& na = std::get<NotAchievable>(outcome);
    return json{{"k", k}, {"not_achievable", true}, {"max_increase", na.max_increase}};
}

json class_spec_to_json(const ClassSpec& spec) {
    return json{{"family", family_name(spec.family)}, {"n", spec.n}, {"a", spec.a},
                {"b", spec.b},                        {"k", spec.k}, {"m", spec.m}};
}

ClassSpec class_spec_from_json(const json& j) {
    ClassSpec spec;
    spec.family = parse_family(j.at("family").get<std::string>());
    spec.n = j.value("n", -1);
    spec.a = j.value("a", -1);
    spec.b = j.value("b", -1);
    spec.k = j.value("k", -1);
    spec.m = j.value("m", -1);
    return spec;
}

namespace {

json entry_to_json(const SweepEntry& e) {
    json j{{"suite", e.suite},
           {"instance", class_spec_to_json(e.instance)},
           {"theorem", e.theorem},
           {"k", e.k ? json(*e.k) : json(nullptr)},
           {"kind", kind_name(e.kind)},
           {"formula_value", opt_to_json(e.formula_value)},
           {"oracle_value", opt_to_json(e.oracle_value)},
           {"oracle_not_achievable", e.oracle_not_achievable},
           {"status", status_name(e.status)},
           {"skip_reason", e.skip_reason},
           {"note", e.note}};
    j["certificate"] =
        e.certificate_json.empty() ? json(nullptr) : json::parse(e.certificate_json);
    return j;
}

Status status_from(const std::string& s) {
    if (s == "match") return Status::Match;
    if (s == "bound_holds") return Status::BoundHolds;
    if (s == "mismatch") return Status::Mismatch;
    if (s == "skipped") return Status::Skipped;
    throw BadParam("unknown status '" + s + "'");
}

SweepEntry entry_from_json(const json& j) {
    SweepEntry e;
    e.suite = j.at("suite").get<std::string>();
    e.instance = class_spec_from_json(j.at("instance"));
    e.theorem = j.at("theorem").get<std::string>();
    if (j.contains("k") && !j.at("k").is_null()) e.k = j.at("k").get<int>();
    e.kind = kind_from(j.at("kind").get<std::string>());
    e.formula_value = opt_from_json(j, "formula_value");
    e.oracle_value = opt_from_json(j, "oracle_value");
    e.oracle_not_achievable = j.value("oracle_not_achievable", false);
    e.status = status_from(j.at("status").get<std::string>());
    e.skip_reason = j.value("skip_reason", std::string{});
    e.note = j.value("note", std::string{});
    if (j.contains("certificate") && !j.at("certificate").is_null())
        e.certificate_json = j.at("certificate").dump();
    return e;
}

} // namespace

json report_to_json(const SweepReport& report) {
    json entries = json::array();
    json entry_times = json::array();
    for (const auto& e : report.entries) {
        entries.push_back(entry_to_json(e));
        entry_times.push_back(e.wall_time_ms);
    }
    json summary{{"match", report.count(Status::Match)},
                 {"bound_holds", report.count(Status::BoundHolds)},
                 {"mismatch", report.count(Status::Mismatch)},
                 {"skipped", report.count(Status::Skipped)}};
    return json{{"certified", json{{"tool_version", report.tool_version},
                                   {"corpus_hash", report.corpus_hash},
                                   {"summary", summary},
                                   {"entries", entries}}},
                {"timing", json{{"total_wall_ms", report.total_wall_ms},
                                {"entry_wall_ms", entry_times}}}};
}

SweepReport report_from_json(const json& j) {
    SweepReport report;
    const json& cert = j.at("certified");
    report.tool_version = cert.at("tool_version").get<std::string>();
    report.corpus_hash = cert.at("corpus_hash").get<std::string>();
    for (const auto& e : cert.at("entries")) report.entries.push_back(entry_from_json(e));
    if (j.contains("timing")) {
        const json& t = j.at("timing");
        report.total_wall_ms = t.value("total_wall_ms", (std::int64_t)0);
        if (t.contains("entry_wall_ms")) {
            const auto& times = t.at("entry_wall_ms");
            for (std::size_t i = 0; i < times.size() && i < report.entries.size(); ++i)
                report.entries[i].wall_time_ms = times[i].get<std::int64_t>();
        }
    }
    return report;
}

std::string certified_payload(const SweepReport& report) {
    return report_to_json(report).at("certified").dump(2);
}

} // namespace totbond
