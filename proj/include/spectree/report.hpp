#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace spectree {

/// How an observed value is compared against the expected one.
enum class Relation {
    Equal,      ///< |observed - expected| <= tolerance
    AtMost,     ///< observed <= expected + tolerance
    AtLeast,    ///< observed >= expected - tolerance
    Below,      ///< observed < expected - tolerance
};

const char* to_string(Relation r);

struct CheckEntry {
    std::string instance;
    double expected = 0.0;
    double observed = 0.0;
    double tolerance = 0.0;
    Relation relation = Relation::Equal;
    bool pass = false;
    /// Reported but excluded from the verdict.
    bool informational = false;
    std::string note;

    /// Distance by which the relation is missed; 0 when it holds exactly.
    double deviation() const;
};

struct ReportSummary {
    std::size_t total = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t informational = 0;
    /// Largest deviation among asserted entries.
    double worst_deviation = 0.0;
};

class VerificationReport {
public:
    explicit VerificationReport(std::string claim_id) : claim_id_(std::move(claim_id)) {}

    const std::string& claim_id() const noexcept { return claim_id_; }
    const std::vector<CheckEntry>& entries() const noexcept { return entries_; }

    CheckEntry& add(std::string instance, double expected, double observed, double tolerance,
                    Relation relation = Relation::Equal, std::string note = {});
    /// Boolean claim: passes iff expected == observed.
    CheckEntry& add_predicate(std::string instance, bool expected, bool observed, std::string note = {});
    CheckEntry& add_info(std::string instance, double expected, double observed, double tolerance,
                         Relation relation = Relation::Equal, std::string note = {});

    void append(const VerificationReport& other);

    ReportSummary summary() const;
    /// No asserted entry failed.
    bool ok() const;

private:
    std::string claim_id_;
    std::vector<CheckEntry> entries_;
};

std::string to_json(const VerificationReport& report);
/// Fixed-width table, six significant digits.
std::string to_text(const VerificationReport& report);

}  // namespace spectree
