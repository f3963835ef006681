#include "spectree/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace spectree {

const char* to_string(Relation r) {
    switch (r) {
        case Relation::Equal: return "==";
        case Relation::AtMost: return "<=";
        case Relation::AtLeast: return ">=";
        case Relation::Below: return "<";
    }
    return "?";
}

double CheckEntry::deviation() const {
    switch (relation) {
        case Relation::Equal: return std::abs(observed - expected);
        case Relation::AtMost: return std::max(0.0, observed - expected);
        case Relation::AtLeast: return std::max(0.0, expected - observed);
        case Relation::Below: return std::max(0.0, observed - expected + tolerance);
    }
    return 0.0;
}

namespace {

bool holds(Relation r, double expected, double observed, double tol) {
    switch (r) {
        case Relation::Equal: return std::abs(observed - expected) <= tol;
        case Relation::AtMost: return observed <= expected + tol;
        case Relation::AtLeast: return observed >= expected - tol;
        case Relation::Below: return observed < expected - tol;
    }
    return false;
}

std::string sig6(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

}  // namespace

CheckEntry& VerificationReport::add(std::string instance, double expected, double observed, double tolerance,
                                    Relation relation, std::string note) {
    CheckEntry e;
    e.instance = std::move(instance);
    e.expected = expected;
    e.observed = observed;
    e.tolerance = tolerance;
    e.relation = relation;
    e.pass = holds(relation, expected, observed, tolerance);
    e.note = std::move(note);
    entries_.push_back(std::move(e));
    return entries_.back();
}

CheckEntry& VerificationReport::add_predicate(std::string instance, bool expected, bool observed, std::string note) {
    return add(std::move(instance), expected ? 1.0 : 0.0, observed ? 1.0 : 0.0, 0.0, Relation::Equal,
               std::move(note));
}

CheckEntry& VerificationReport::add_info(std::string instance, double expected, double observed, double tolerance,
                                         Relation relation, std::string note) {
    auto& e = add(std::move(instance), expected, observed, tolerance, relation, std::move(note));
    e.informational = true;
    return e;
}

void VerificationReport::append(const VerificationReport& other) {
    entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
}

ReportSummary VerificationReport::summary() const {
    ReportSummary s;
    s.total = entries_.size();
    for (const auto& e : entries_) {
        if (e.informational) {
            ++s.informational;
            continue;
        }
        e.pass ? ++s.passed : ++s.failed;
        s.worst_deviation = std::max(s.worst_deviation, e.deviation());
    }
    return s;
}

bool VerificationReport::ok() const { return summary().failed == 0; }

std::string to_json(const VerificationReport& report) {
    nlohmann::ordered_json j;
    j["claim_id"] = report.claim_id();
    auto& items = j["instances"] = nlohmann::ordered_json::array();
    for (const auto& e : report.entries()) {
        nlohmann::ordered_json item;
        item["instance"] = e.instance;
        item["expected"] = e.expected;
        item["observed"] = e.observed;
        item["relation"] = to_string(e.relation);
        item["tolerance"] = e.tolerance;
        item["pass"] = e.pass;
        item["informational"] = e.informational;
        if (!e.note.empty()) item["note"] = e.note;
        items.push_back(std::move(item));
    }
    const auto s = report.summary();
    j["summary"] = {{"total", s.total},
                    {"passed", s.passed},
                    {"failed", s.failed},
                    {"informational", s.informational},
                    {"worst_deviation", s.worst_deviation}};
    return j.dump(2);
}

std::string to_text(const VerificationReport& report) {
    std::size_t width = 8;
    for (const auto& e : report.entries()) width = std::max(width, e.instance.size());

    std::string out = "claim " + report.claim_id() + "\n";
    char line[512];
    for (const auto& e : report.entries()) {
        const char* status = e.informational ? "info" : (e.pass ? "ok" : "FAIL");
        std::snprintf(line, sizeof line, "  %-4s  %-*s  observed %-12s %-2s expected %-12s tol %-8s", status,
                      static_cast<int>(width), e.instance.c_str(), sig6(e.observed).c_str(), to_string(e.relation),
                      sig6(e.expected).c_str(), sig6(e.tolerance).c_str());
        out += line;
        if (!e.note.empty()) out += "  " + e.note;
        out += '\n';
    }
    const auto s = report.summary();
    std::snprintf(line, sizeof line, "%zu checks: %zu passed, %zu failed, %zu informational; worst deviation %s\n",
                  s.total, s.passed, s.failed, s.informational, sig6(s.worst_deviation).c_str());
    out += line;
    return out;
}

}  // namespace spectree
